#pragma once

// Sparse multivariate polynomials over Rat with integer (possibly negative)
// exponents, used as the coefficient ring for symbolic computations: part
// sizes mu_1..mu_n, the deformation parameter u, and similar. Negative
// exponents make the ring Laurent; exact division requires a true-polynomial
// divisor and is checked term by term.

#include <map>
#include <string>
#include <vector>

#include "hurwitz/errors.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// var name -> exponent; entries are always nonzero.
using Monomial = std::map<std::string, int>;

long monomial_degree(const Monomial& m);
std::string monomial_str(const Monomial& m);

// graded lex: total degree first, then lexicographic on (name, exponent) pairs
bool monomial_less(const Monomial& a, const Monomial& b);

class Poly {
public:
    Poly() = default;
    Poly(const Rat& c) { if (!c.is_zero()) terms_[Monomial{}] = c; } // NOLINT: implicit constant
    Poly(int c) : Poly(Rat(c)) {}                                    // NOLINT
    static Poly var(const std::string& name, int exponent = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_term() const;
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    long degree() const;     // max total degree, 0 for the zero polynomial
    int min_exponent(const std::string& name) const; // 0 if the var is absent

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator-(const Poly& a) { return Poly(Rat(-1)) * a; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    Poly& operator*=(const Rat& c);

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Exact division; throws arithmetic_error (naming the offending monomial)
    // if g does not divide exactly. g must have no negative exponents; *this
    // may be Laurent (the quotient then is too).
    Poly exact_div(const Poly& g) const;

    // Substitute numeric values for a subset of the variables.
    Poly substitute(const std::map<std::string, Rat>& values) const;
    // Substitute polynomials for a subset of the variables (exponents of a
    // substituted variable must be non-negative).
    Poly substitute_poly(const std::map<std::string, Poly>& values) const;

    Rat eval(const std::map<std::string, Rat>& values) const;

    Rat coeff(const Monomial& m) const;

    std::string str() const; // canonical, deterministic term order

private:
    std::map<Monomial, Rat> terms_;
};

Poly poly_pow(const Poly& base, long exp);

} // namespace hurwitz
