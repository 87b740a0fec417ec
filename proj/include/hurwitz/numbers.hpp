#pragma once

// Double Hurwitz numbers with s completed (r+1)-cycle insertions between
// ramification profiles mu (over 0) and nu (over infinity), |mu| = |nu| = d:
//
//   h = (1 / prod mu_i prod nu_j) sum_{|lambda|=d}
//         chi^lambda_mu (p_{r+1}(lambda)/(r+1)!)^s chi^lambda_nu .
//
// The count is over possibly disconnected covers; the connected number removes
// assemblies of smaller covers by inclusion-exclusion over the component
// containing the first part of mu. Genus enters through
// 2g - 2 + length(mu) + length(nu) = r*s.

#include <optional>

#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// Character-sum evaluation (covers may be disconnected). |mu| must equal |nu|.
Rat h_disconnected(const Partition& mu, const Partition& nu, long r, long s);

// Same number through the operator calculus on Fock space.
Rat h_via_operators(const Partition& mu, const Partition& nu, long r, long s);

// Connected covers only.
Rat h_connected(const Partition& mu, const Partition& nu, long r, long s);

// Closed form when nu has the single part |mu| (such covers are connected):
//   h = (1/(d prod mu_i)) [z_1^{r+1} ... z_s^{r+1}]
//         prod_k zeta(d z_k) * (zeta(mu_1 Z)/zeta(Z)) * prod_{i>=2} zeta(mu_i Z),
// with Z = z_1 + ... + z_s. Requires s >= 1 and mu nonempty.
Rat h_one_part(const Partition& mu, long r, long s);

// g from r*s = 2g - 2 + length(mu) + length(nu); nullopt if that g would be
// negative or fractional (the number is then forced to vanish).
std::optional<long> genus_of(const Partition& mu, const Partition& nu, long r, long s);

// r*s and length(mu) + length(nu) must agree mod 2 for a nonzero number.
bool parity_allows(const Partition& mu, const Partition& nu, long r, long s);

} // namespace hurwitz
