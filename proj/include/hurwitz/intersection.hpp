#pragma once

// One-part counts with symbolic part sizes, and the operator calculus that
// reassembles them into generating series. The bracket tables are the
// coefficients (d/s!) * h read off the monomial basis; the same numbers are
// rebuilt from the fermionic side by the w-graded raising operators Y_i, the
// ladder of T-variables, the series G (deformation parameter u) and its
// specialization F = G|_{u=0}, and a triangular change of variables between
// the p- and q-coordinate systems. All q-space results are returned as
// power-sum polynomials (PPoly) whose coefficients live in the Laurent ring
// over u; weight caps are enforced by explicit truncation.

#include <map>
#include <vector>

#include "hurwitz/fock.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/poly.hpp"
#include "hurwitz/ppoly.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// Number s of completed-cycle insertions fixed by r*s = 2g - 2 + n + 1.
// Throws precondition_error unless that is a positive integer.
long cycle_count(long r, long g, long n);

// The one-part number h for profile mu_1..mu_n against a single part d =
// sum mu_i, as an exact polynomial in the symbolic variables mu_1..mu_n.
Poly one_part_poly(long r, long g, long n);

// A bracket value keyed by genus, number of insertion points, the index k of
// the auxiliary class, and the weakly decreasing degree vector d_1 >= ... >= d_n.
struct BracketKey {
    long g = 0;
    long n = 0;
    long k = 0;
    std::vector<long> degrees;
    auto operator<=>(const BracketKey&) const = default;
};

struct BracketTable {
    std::map<BracketKey, Rat> values;

    // Insert a row; recording a key twice requires identical values.
    void record(BracketKey key, const Rat& value);
    void merge(const BracketTable& other);
};

// Reads the coefficients of (d/s!) * one_part_poly(r, g, n) off the monomial
// basis: the coefficient of prod mu_i^{d_i} is (-1)^k times the bracket with
// k = (2g + s - sum d_i)/2. Any nonzero coefficient for which k is not an
// integer in [0, g] is a structural failure (consistency_error), as is a
// conflict between two monomials with the same sorted degree vector.
BracketTable extract_brackets(long r, long g, long n);

// ---- w-graded operators on the charge-zero Fock space --------------------

// [w^a] Y_i applied to v. Y_0 is the regularized diagonal family; for i >= 1,
// Y_i multiplies the index-(-i) translation family by zeta(w)^i and a product
// of i shifted w-derivatives, so it raises weight by i and its w-expansion
// starts at order w^i.
FockVec apply_Y_coeff(long i, long a, const FockVec& v);

// w-coefficients 0..wcap of Y_i applied to v.
std::vector<FockVec> apply_Y(long i, const FockVec& v, long wcap);

// The order-w^i coefficient of Y_i (i >= 1) expanded over the translation
// family: returns c_a with [w^i] Y_i = sum_a c_a * [w^a] E_{-i}. The c_a are
// factorial multiples of central factorial numbers; only a = i, i-2, i-4, ...
// appear.
std::map<long, Rat> Y_leading_coefficients(long i);

// ---- transport to power-sum polynomials ----------------------------------

// Fock coefficients with polynomial entries (deformation parameter u).
using PolyFock = std::map<Partition, Poly>;

PPoly<Rat> expand_in_power_sums(const FockVec& state);
PPoly<Poly> expand_in_power_sums(const PolyFock& state);

// ---- the T-ladder and the series G, F -------------------------------------

// T_0 = q_1 and T_{k+1} = (u * [w](diagonal family) + [w](index -1
// translation)) T_k, transported to a q-polynomial. Linear in the q's.
PPoly<Poly> T_variable(long k);

// G = exp([w^{r+1}] sum_{k=0}^{r+1} u^k Y_{r+1-k}(w)/(r+1-k)!) applied to q_1,
// truncated to weight <= wcap and u-degree <= ucap.
PPoly<Poly> G_series(long r, long wcap, long ucap);

// F = G at u = 0, i.e. exp([w^{r+1}] Y_{r+1}(w)/(r+1)!) applied to q_1.
PPoly<Rat> F_series(long r, long wcap);

// ---- triangular change of variables ---------------------------------------

enum class VarDirection {
    to_q, // p_b = sum_{i>=b} u^{-i} (-1)^{i-b} binom(i-1, b-1) q_i
    to_p, // q_j = u^j  sum_{b>=j} binom(b-1, j-1) p_b
};

// Substitute every variable index of f, dropping monomials above the weight
// cap. Input indices are read as p's for to_q and as q's for to_p; the two
// directions compose to the identity under the cap.
PPoly<Poly> change_vars(const PPoly<Poly>& f, VarDirection direction, long wcap);

// Drop monomials of weight above the cap.
PPoly<Poly> truncate_weight(PPoly<Poly> f, long wcap);
// Drop terms whose u-exponent exceeds the cap, coefficient-wise.
PPoly<Poly> truncate_u_degree(const PPoly<Poly>& f, long ucap);

} // namespace hurwitz
