#pragma once

// Exact rational scalar. Thin canonicalizing wrapper over GMP's mpq_class:
// every value is kept in lowest terms with positive denominator, so equality
// is structural and text form is canonical ("a/b", or "a" when b == 1).

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "hurwitz/errors.hpp"

namespace hurwitz {

class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}                 // NOLINT: implicit by design
    Rat(long n) : v_(static_cast<long>(n)) {}
    Rat(long long n) { v_ = from_ll(n); }
    Rat(long num, long den) {
        if (den == 0) throw arithmetic_error("Rat: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rat(const mpz_class& n) : v_(n) {}
    Rat(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw arithmetic_error("Rat: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    // Accepts "a" or "a/b" with optional leading '-'; rejects everything else.
    static Rat parse(const std::string& text);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    std::string str() const { return v_.get_str(); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw arithmetic_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
    friend Rat operator-(const Rat& a) { Rat r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    static mpq_class from_ll(long long n) {
        mpz_class z;
        if (n >= 0) {
            z = static_cast<unsigned long>(n);
        } else {
            z = static_cast<unsigned long>(-(n + 1));
            z = -z - 1;
        }
        return mpq_class(z);
    }

    mpq_class v_;
};

Rat rat_pow(const Rat& base, long exp);

mpz_class factorial(long n);
mpz_class binomial(long n, long k);

} // namespace hurwitz
