#include "hurwitz/characters.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

// All ways to remove a border strip of length L, as (resulting partition, sign).
// A strip of length L is a move of one occupied Maya site down by 2L; its height
// is 1 + (number of occupied sites strictly between), giving sign (-1)^(height-1).
std::vector<std::pair<Partition, int>> strip_removals(const Partition& lambda, long L) {
    std::vector<std::pair<Partition, int>> out;
    const int rows = static_cast<int>(lambda.length() + L);
    std::vector<int> sites = maya_doubled(lambda, rows); // strictly decreasing
    const int bottom = 1 - 2 * rows; // lowest listed value; everything below is occupied
    for (std::size_t i = 0; i < sites.size(); ++i) {
        const int target = sites[i] - static_cast<int>(2 * L);
        bool occupied = target < bottom;
        int between = 0;
        for (std::size_t j = i + 1; j < sites.size(); ++j) {
            if (sites[j] == target) occupied = true;
            if (sites[j] < sites[i] && sites[j] > target) ++between;
        }
        if (occupied) continue;
        std::vector<int> moved = sites;
        moved[i] = target;
        std::sort(moved.begin(), moved.end(), std::greater<int>());
        out.emplace_back(partition_from_maya(moved), (between % 2 == 0) ? 1 : -1);
    }
    return out;
}

long character_memo(const Partition& lambda, const Partition& mu,
                         std::map<std::pair<Partition, Partition>, long>& memo) {
    if (lambda.empty()) return 1; // mu is empty too (sizes match)
    auto key = std::make_pair(lambda, mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const long L = mu.part(0);
    std::vector<long> rest(mu.parts().begin() + 1, mu.parts().end());
    const Partition mu_rest(std::move(rest));
    long total = 0;
    for (const auto& [smaller, sign] : strip_removals(lambda, L))
        total += sign * character_memo(smaller, mu_rest, memo);
    memo.emplace(std::move(key), total);
    return total;
}

} // namespace

long character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw precondition_error("character: |lambda| != |mu|");
    thread_local std::map<std::pair<Partition, Partition>, long> memo;
    return character_memo(lambda, mu, memo);
}

long CharacterTable::at(const Partition& lambda, const Partition& mu) const {
    auto find = [&](const Partition& p) -> std::size_t {
        auto it = std::lower_bound(parts.begin(), parts.end(), p);
        if (it == parts.end() || *it != p)
            throw precondition_error("CharacterTable::at: partition not of degree " + std::to_string(d));
        return static_cast<std::size_t>(it - parts.begin());
    };
    return chi[find(lambda)][find(mu)];
}

CharacterTable CharacterTable::build(long d) {
    if (d < 0) throw precondition_error("CharacterTable::build: negative degree");
    CharacterTable t;
    t.d = d;
    t.parts = partitions_of(d);
    t.chi.assign(t.parts.size(), std::vector<long>(t.parts.size(), 0));
    for (std::size_t i = 0; i < t.parts.size(); ++i)
        for (std::size_t j = 0; j < t.parts.size(); ++j)
            t.chi[i][j] = character(t.parts[i], t.parts[j]);
    return t;
}

} // namespace hurwitz
