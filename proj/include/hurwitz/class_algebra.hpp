#pragma once

// Central characters and completed conjugacy classes.
//
// central_char(mu, lambda) is the normalized character of the class of
// permutations of cycle type mu padded with fixed points to |lambda| letters,
// including the count of ways to mark which fixed points belong to mu. These
// functions of lambda form a basis in which the normalized shifted power sums
// prod_i p_{mu_i}(lambda) / mu_i! expand with constant coefficients; the
// expansion is what makes a "completed" class.

#include <map>

#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// binom(n - |mu| + m1, m1) * |C_{mu+1s}| * chi^lambda_{mu+1s} / dim(lambda),
// where n = |lambda| and m1 = multiplicity of 1 in mu. Zero when n < |mu|.
Rat central_char(const Partition& mu, const Partition& lambda);

// Coefficients c_rho in  prod_i p_{mu_i}(lambda)/mu_i! = sum_rho c_rho f_rho(lambda),
// solved size class by size class; the solved identity is then re-checked at
// |lambda| = |mu|+1 and |mu|+2 (throws consistency_error on mismatch).
std::map<Partition, Rat> completed_class(const Partition& mu);

// Single completed cycle: coefficients of p_m(lambda)/m!.
std::map<Partition, Rat> completed_cycle(long m);

// Closed form for the same coefficients:
//   c_rho = (1/|rho|!) [z^m]  zeta(z)^{|rho|-1} prod_i zeta(rho_i z).
std::map<Partition, Rat> completed_cycle_via_series(long m);

// p_m(lambda)/m!, the eigenvalue attached to the completed m-cycle.
Rat completed_cycle_eigenvalue(long m, const Partition& lambda);

} // namespace hurwitz
