#pragma once

// Cut-and-join operators: the bosonic image of multiplying by a completed
// cycle. The operator of level R is a sum of rules, each multiplying by a
// monomial prod_{a in N} p_a and differentiating by prod_{b in P} d/dp_b with
// sum(N) = sum(P) and coefficient
//
//   [z^R] ( prod_{a in N} zeta(a z) * prod_{b in P} zeta(b z) / zeta(z) )
//         / ( prod_{a in N} a * prod mult_N! * prod mult_P! ).
//
// Only |N| + |P| <= R + 1 can contribute (the series starts at degree
// |N|+|P|-1), so the rule list is finite once the weight is capped.

#include <vector>

#include "hurwitz/ppoly.hpp"

namespace hurwitz {

struct QRule {
    Partition multiply; // N
    Partition derive;   // P
    Rat coeff;
};

// All rules of the level-R operator with sum(N) = sum(P) <= weight_cap.
std::vector<QRule> build_Q(long R, long weight_cap);

PPoly<Rat> apply_Q(const std::vector<QRule>& rules, const PPoly<Rat>& f);

// Coefficients of exp(beta Q) f through beta-order `orders`: element t is
// Q^t f (the t-th derivative at beta = 0), so H(beta) = sum beta^t/t! * [t].
std::vector<PPoly<Rat>> evolve_Q(const std::vector<QRule>& rules, const PPoly<Rat>& start,
                                 long orders);

} // namespace hurwitz
