#pragma once

// Irreducible S_n characters by border-strip (ribbon) recursion on the Maya
// encoding, with a process-wide memo. chi(lambda, mu) requires |lambda| == |mu|;
// callers that need the padded extension go through central_char instead.

#include <cstdint>
#include <vector>

#include "hurwitz/partition.hpp"

namespace hurwitz {

// chi^lambda_mu. Ribbon recursion on the largest part of mu; memoized per thread.
long character(const Partition& lambda, const Partition& mu);

// Full character table of S_d. Rows and columns are indexed by partitions_of(d)
// in canonical order: chi[i][j] = chi^{lambda_i}_{mu_j}.
struct CharacterTable {
    long d = 0;
    std::vector<Partition> parts;
    std::vector<std::vector<long>> chi;

    long at(const Partition& lambda, const Partition& mu) const;
    static CharacterTable build(long d);
};

} // namespace hurwitz
