#pragma once

// Charge-zero fermionic Fock space, with basis vectors indexed by partitions.
// Operators act through signed moves of occupied half-integer sites (stored
// doubled, as in maya_doubled): the index-r family moves one site down by r
// with amplitude exp(w * midpoint) and a fermionic sign, and its w-expansion
// coefficients are all this library needs. The index-0 family is diagonal
// after removing its singular part: the w^a coefficient acts on v_lambda by
// p_a(lambda)/a!.

#include <map>

#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

using FockVec = std::map<Partition, Rat>;

FockVec fock_basis(const Partition& lambda);
FockVec& fock_add(FockVec& into, const Partition& lambda, const Rat& c);
FockVec fock_scale(FockVec v, const Rat& c);
FockVec fock_sum(const FockVec& a, const FockVec& b);

// [w^a] of the index-r operator, r != 0: site s -> s - 2r (doubled), amplitude
// ((s - r)/2)^a / a!, sign (-1)^(occupied sites strictly between).
FockVec apply_E_coeff(long a, long r, const FockVec& v);

// [w^a] of the regularized index-0 operator: diagonal, eigenvalue p_a(lambda)/a!.
FockVec apply_Etilde0_coeff(long a, const FockVec& v);

// Free boson mode: the w^0 coefficient at index k (k != 0). Lowers the size by k.
FockVec apply_alpha(long k, const FockVec& v);

// Coefficient of the vacuum v_{empty}.
Rat vev(const FockVec& v);

} // namespace hurwitz
