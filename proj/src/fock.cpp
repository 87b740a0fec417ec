#include "hurwitz/fock.hpp"

#include <algorithm>
#include <cstdlib>

#include "hurwitz/errors.hpp"

namespace hurwitz {

FockVec fock_basis(const Partition& lambda) { return FockVec{{lambda, Rat(1)}}; }

FockVec& fock_add(FockVec& into, const Partition& lambda, const Rat& c) {
    if (c.is_zero()) return into;
    auto it = into.find(lambda);
    if (it == into.end()) {
        into.emplace(lambda, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) into.erase(it);
    }
    return into;
}

FockVec fock_scale(FockVec v, const Rat& c) {
    if (c.is_zero()) return {};
    for (auto& [lam, x] : v) x *= c;
    return v;
}

FockVec fock_sum(const FockVec& a, const FockVec& b) {
    FockVec out = a;
    for (auto& [lam, c] : b) fock_add(out, lam, c);
    return out;
}

FockVec apply_E_coeff(long a, long r, const FockVec& v) {
    if (a < 0) throw precondition_error("apply_E_coeff: negative coefficient index");
    if (r == 0) return apply_Etilde0_coeff(a, v);
    const Rat inv_afact = Rat(1) / Rat(factorial(a));
    FockVec out;
    for (const auto& [lam, coeff] : v) {
        const int rows = static_cast<int>(lam.length() + std::labs(r) + 1);
        const std::vector<int> sites = maya_doubled(lam, rows); // strictly decreasing
        const int bottom = 1 - 2 * rows; // everything below is occupied
        for (std::size_t i = 0; i < sites.size(); ++i) {
            const int target = sites[i] - static_cast<int>(2 * r);
            if (target < bottom) continue; // lands in the filled sea
            bool occupied = false;
            int between = 0;
            const int lo = std::min(sites[i], target), hi = std::max(sites[i], target);
            for (int s : sites) {
                if (s == target) occupied = true;
                if (s > lo && s < hi && s != sites[i]) ++between;
            }
            if (occupied) continue;
            std::vector<int> moved = sites;
            moved[i] = target;
            std::sort(moved.begin(), moved.end(), std::greater<int>());
            Rat amp = rat_pow(Rat(sites[i] - r, 2), a) * inv_afact;
            if (between % 2 != 0) amp = -amp;
            fock_add(out, partition_from_maya(moved), coeff * amp);
        }
    }
    return out;
}

FockVec apply_Etilde0_coeff(long a, const FockVec& v) {
    if (a < 0) throw precondition_error("apply_Etilde0_coeff: negative coefficient index");
    const Rat inv_afact = Rat(1) / Rat(factorial(a));
    FockVec out;
    for (const auto& [lam, coeff] : v)
        fock_add(out, lam, coeff * shifted_psum(a, lam) * inv_afact);
    return out;
}

FockVec apply_alpha(long k, const FockVec& v) {
    if (k == 0) throw precondition_error("apply_alpha: k must be nonzero");
    return apply_E_coeff(0, k, v);
}

Rat vev(const FockVec& v) {
    auto it = v.find(Partition{});
    return it == v.end() ? Rat(0) : it->second;
}

} // namespace hurwitz
