#include "hurwitz/cutjoin.hpp"

#include <map>

#include "hurwitz/errors.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

namespace {

// [z^R] of prod_{a in N} zeta(a z) * prod_{b in P} zeta(b z) / zeta(z).
Rat rule_kernel_coeff(const Partition& N, const Partition& P, long R) {
    auto vars = make_vars({"z"}, {static_cast<int>(R + 1)});
    auto scaled_z = [](long k) {
        LinForm<Rat> f;
        f.add("z", Rat(k));
        return f;
    };
    Series<Rat> prod = Series<Rat>::constant(vars, Rat(1));
    for (long a : N.parts()) prod = prod * zeta_series(vars, scaled_z(a));
    for (long b : P.parts()) prod = prod * zeta_series(vars, scaled_z(b));
    // The product starts at degree |N|+|P| >= 2, the divisor at degree 1, so
    // the quotient is correct through degree R inside a cap of R + 1.
    Series<Rat> quot = prod.exact_divide(zeta_series(vars, scaled_z(1)));
    Expo e(1, static_cast<int>(R));
    return quot.coeff(e);
}

Rat rule_normalizer(const Partition& N, const Partition& P) {
    Rat denom(1);
    for (long a : N.parts()) denom *= Rat(a);
    for (auto [part, m] : N.multiplicities()) {
        (void)part;
        denom *= Rat(factorial(m));
    }
    for (auto [part, m] : P.multiplicities()) {
        (void)part;
        denom *= Rat(factorial(m));
    }
    return denom;
}

// Apply prod_{b in P} d/dp_b to the single monomial `mono` (falling
// multiplicities), returning the surviving monomial; sets ok = false if any
// derivative kills the term.
Partition derive_monomial(const Partition& mono, const Partition& P, Rat& scale, bool& ok) {
    std::map<long, long> mult;
    for (long part : mono.parts()) mult[part]++;
    for (long b : P.parts()) {
        auto it = mult.find(b);
        if (it == mult.end() || it->second == 0) {
            ok = false;
            return Partition();
        }
        scale *= Rat(it->second);
        it->second--;
    }
    ok = true;
    std::vector<long> rest;
    for (auto [part, m] : mult)
        for (long i = 0; i < m; i++) rest.push_back(part);
    std::sort(rest.begin(), rest.end(), std::greater<long>());
    return Partition(rest);
}

} // namespace

std::vector<QRule> build_Q(long R, long weight_cap) {
    if (R < 1) throw precondition_error("build_Q: level must be >= 1");
    if (weight_cap < 1) throw precondition_error("build_Q: weight cap must be >= 1");
    std::vector<QRule> rules;
    for (long total = 1; total <= weight_cap; total++) {
        auto parts = partitions_of(total);
        for (const auto& N : parts) {
            for (const auto& P : parts) {
                long len = N.length() + P.length();
                if (len > R + 1) continue;              // series starts past z^R
                if ((len - 1) % 2 != R % 2) continue;   // odd/even series
                Rat c = rule_kernel_coeff(N, P, R) / rule_normalizer(N, P);
                if (c == Rat(0)) continue;
                rules.push_back(QRule{N, P, c});
            }
        }
    }
    return rules;
}

PPoly<Rat> apply_Q(const std::vector<QRule>& rules, const PPoly<Rat>& f) {
    PPoly<Rat> out;
    for (const auto& [mono, c] : f.terms()) {
        for (const auto& rule : rules) {
            Rat scale = c * rule.coeff;
            bool ok = false;
            Partition rest = derive_monomial(mono, rule.derive, scale, ok);
            if (!ok) continue;
            out.add_term(merge_partitions(rest, rule.multiply), scale);
        }
    }
    return out;
}

std::vector<PPoly<Rat>> evolve_Q(const std::vector<QRule>& rules, const PPoly<Rat>& start,
                                 long orders) {
    if (orders < 0) throw precondition_error("evolve_Q: orders must be >= 0");
    std::vector<PPoly<Rat>> out;
    out.push_back(start);
    for (long t = 1; t <= orders; t++) out.push_back(apply_Q(rules, out.back()));
    return out;
}

} // namespace hurwitz
