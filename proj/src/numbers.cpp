#include "hurwitz/numbers.hpp"

#include <map>
#include <tuple>

#include "hurwitz/characters.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/fock.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

namespace {

void check_profiles(const Partition& mu, const Partition& nu, long r, long s) {
    if (mu.size() != nu.size())
        throw precondition_error("hurwitz number: |mu| != |nu|");
    if (r < 1) throw precondition_error("hurwitz number: r must be >= 1");
    if (s < 0) throw precondition_error("hurwitz number: s must be >= 0");
}

Rat profile_factor(const Partition& mu, const Partition& nu) {
    Rat f(1);
    for (long p : mu.parts()) f *= Rat(p);
    for (long p : nu.parts()) f *= Rat(p);
    return f;
}

} // namespace

Rat h_disconnected(const Partition& mu, const Partition& nu, long r, long s) {
    check_profiles(mu, nu, r, s);
    const long d = mu.size();
    Rat total(0);
    for (const auto& lam : partitions_of(d)) {
        const Rat ev = shifted_psum(r + 1, lam) / Rat(factorial(r + 1));
        total += Rat(character(lam, mu)) * rat_pow(ev, s) * Rat(character(lam, nu));
    }
    return total / profile_factor(mu, nu);
}

Rat h_via_operators(const Partition& mu, const Partition& nu, long r, long s) {
    check_profiles(mu, nu, r, s);
    FockVec v = fock_basis(Partition{});
    for (auto it = mu.parts().rbegin(); it != mu.parts().rend(); ++it)
        v = apply_alpha(-*it, v);
    for (long i = 0; i < s; ++i) v = apply_Etilde0_coeff(r + 1, v);
    for (auto it = nu.parts().rbegin(); it != nu.parts().rend(); ++it)
        v = apply_alpha(*it, v);
    return vev(v) / profile_factor(mu, nu);
}

namespace {

// Sub-profile selections are tracked as index bitmasks; partitions stay small
// (a handful of parts), so 64 bits are plenty.
Partition select_parts(const Partition& p, unsigned long mask) {
    std::vector<long> parts;
    for (std::size_t i = 0; i < p.parts().size(); ++i)
        if (mask & (1ul << i)) parts.push_back(p.part(i));
    return Partition(std::move(parts));
}

using ConnKey = std::tuple<long, std::string, std::string, long>; // (r, mu, nu, s)

Rat h_connected_memo(const Partition& mu, const Partition& nu, long r, long s,
                     std::map<ConnKey, Rat>& memo) {
    if (mu.empty()) return Rat(0); // the empty cover is a unit, not connected
    auto key = std::make_tuple(r, mu.str(), nu.str(), s);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    Rat total = h_disconnected(mu, nu, r, s);
    const std::size_t nmu = mu.parts().size(), nnu = nu.parts().size();
    const unsigned long mu_all = (1ul << nmu) - 1, nu_all = (1ul << nnu) - 1;
    // peel off the component holding the first part of mu, unless it is everything
    for (unsigned long mm = 1; mm <= mu_all; mm += 2) {
        const Partition mu_in = select_parts(mu, mm);
        const Partition mu_out = select_parts(mu, mu_all & ~mm);
        for (unsigned long nm = 0; nm <= nu_all; ++nm) {
            if (mm == mu_all && nm == nu_all) continue;
            const Partition nu_in = select_parts(nu, nm);
            if (nu_in.size() != mu_in.size()) continue;
            const Partition nu_out = select_parts(nu, nu_all & ~nm);
            for (long t = 0; t <= s; ++t) {
                const Rat inner = h_connected_memo(mu_in, nu_in, r, t, memo);
                if (inner.is_zero()) continue;
                const Rat outer = h_disconnected(mu_out, nu_out, r, s - t);
                if (outer.is_zero()) continue;
                total -= Rat(binomial(s, t)) * inner * outer;
            }
        }
    }
    memo.emplace(std::move(key), total);
    return total;
}

} // namespace

Rat h_connected(const Partition& mu, const Partition& nu, long r, long s) {
    check_profiles(mu, nu, r, s);
    if (mu.length() > 62 || nu.length() > 62)
        throw precondition_error("h_connected: too many parts");
    thread_local std::map<ConnKey, Rat> memo;
    return h_connected_memo(mu, nu, r, s, memo);
}

Rat h_one_part(const Partition& mu, long r, long s) {
    if (mu.empty()) throw precondition_error("h_one_part: mu must be nonempty");
    if (r < 1) throw precondition_error("h_one_part: r must be >= 1");
    if (s < 1) throw precondition_error("h_one_part: s must be >= 1");
    const long d = mu.size();
    auto vars = make_z_vars(static_cast<int>(s), static_cast<int>(r + 1));
    std::vector<std::string> all_names = vars->names;

    Series<Rat> prod = Series<Rat>::constant(vars, Rat(1));
    for (const auto& name : all_names) {
        LinForm<Rat> f;
        f.add(name, Rat(d));
        prod *= zeta_series(vars, f);
    }
    LinForm<Rat> zsum; // mu_1 * Z for the ratio, plain Z scaled by mu_i elsewhere
    for (const auto& name : all_names) zsum.add(name, Rat(1));
    prod *= zeta_ratio(vars, Rat(mu.part(0)), zsum);
    for (std::size_t i = 1; i < mu.parts().size(); ++i) {
        LinForm<Rat> f;
        for (const auto& name : all_names) f.add(name, Rat(mu.part(i)));
        prod *= zeta_series(vars, f);
    }
    Rat corner = prod.corner_coeff();
    Rat scale = Rat(d);
    for (long p : mu.parts()) scale *= Rat(p);
    return corner / scale;
}

std::optional<long> genus_of(const Partition& mu, const Partition& nu, long r, long s) {
    const long doubled = r * s + 2 - mu.length() - nu.length();
    if (doubled < 0 || doubled % 2 != 0) return std::nullopt;
    return doubled / 2;
}

bool parity_allows(const Partition& mu, const Partition& nu, long r, long s) {
    return ((r * s) - (mu.length() + nu.length())) % 2 == 0;
}

} // namespace hurwitz
