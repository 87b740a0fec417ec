#include "hurwitz/intersection.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "hurwitz/errors.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

namespace {

std::string mu_name(long i) { return "mu_" + std::to_string(i); }

// Coefficients in x of prod_{k=0}^{i-1} (x + k - (i-1)/2): the shifts run
// symmetrically from -(i-1)/2 to (i-1)/2, so the polynomial is even or odd.
std::vector<Rat> central_shift_coeffs(long i) {
    std::vector<Rat> c{Rat(1)};
    for (long k = 0; k < i; ++k) {
        const Rat shift(mpz_class(2 * k - i + 1), mpz_class(2));
        std::vector<Rat> next(c.size() + 1, Rat(0));
        for (std::size_t t = 0; t < c.size(); ++t) {
            next[t + 1] += c[t];
            next[t] += c[t] * shift;
        }
        c = std::move(next);
    }
    return c;
}

// [w^j] zeta(w)^e for j = 0..cap.
std::vector<Rat> zeta_power_coeffs(long e, long cap) {
    std::vector<Rat> base(static_cast<std::size_t>(cap) + 1, Rat(0));
    for (long j = 1; j <= cap; j += 2) base[static_cast<std::size_t>(j)] = zeta_term_coeff(j);
    std::vector<Rat> out(static_cast<std::size_t>(cap) + 1, Rat(0));
    out[0] = Rat(1);
    for (long rep = 0; rep < e; ++rep) {
        std::vector<Rat> next(out.size(), Rat(0));
        for (std::size_t a = 0; a < out.size(); ++a) {
            if (out[a].is_zero()) continue;
            for (std::size_t b = 0; a + b < next.size(); ++b) {
                if (base[b].is_zero()) continue;
                next[a + b] += out[a] * base[b];
            }
        }
        out = std::move(next);
    }
    return out;
}

Poly truncate_u_poly(const Poly& p, long ucap) {
    Poly out(Rat(0));
    for (const auto& [mono, c] : p.terms()) {
        const auto it = mono.find("u");
        const long e = it == mono.end() ? 0 : it->second;
        if (e > ucap) continue;
        Poly term(c);
        for (const auto& [v, ex] : mono) term *= Poly::var(v, ex);
        out += term;
    }
    return out;
}

} // namespace

long cycle_count(long r, long g, long n) {
    if (r < 1) throw precondition_error("cycle_count: r must be >= 1");
    if (g < 0) throw precondition_error("cycle_count: genus must be >= 0");
    if (n < 1) throw precondition_error("cycle_count: n must be >= 1");
    const long num = 2 * g - 2 + n + 1;
    if (num <= 0 || num % r != 0)
        throw precondition_error("cycle_count: 2g-2+n+1 = " + std::to_string(num) +
                                 " is not a positive multiple of r = " + std::to_string(r));
    return num / r;
}

Poly one_part_poly(long r, long g, long n) {
    const long s = cycle_count(r, g, n);
    auto vars = make_z_vars(static_cast<int>(s), static_cast<int>(r + 1));

    std::vector<Poly> mu;
    Poly d(Rat(0));
    for (long i = 1; i <= n; ++i) {
        mu.push_back(Poly::var(mu_name(i)));
        d += mu.back();
    }

    Series<Poly> prod = Series<Poly>::constant(vars, Poly(Rat(1)));
    for (const auto& name : vars->names) {
        LinForm<Poly> f;
        f.add(name, d);
        prod *= zeta_series(vars, f);
    }
    LinForm<Poly> zsum;
    for (const auto& name : vars->names) zsum.add(name, Poly(Rat(1)));
    prod *= zeta_ratio(vars, mu[0], zsum);
    for (long i = 1; i < n; ++i) {
        LinForm<Poly> f;
        for (const auto& name : vars->names) f.add(name, mu[static_cast<std::size_t>(i)]);
        prod *= zeta_series(vars, f);
    }

    Poly scale = d;
    for (const Poly& m : mu) scale *= m;
    return prod.corner_coeff().exact_div(scale);
}

void BracketTable::record(BracketKey key, const Rat& value) {
    std::sort(key.degrees.rbegin(), key.degrees.rend());
    auto [it, inserted] = values.emplace(std::move(key), value);
    if (!inserted && !(it->second == value))
        throw consistency_error("bracket table: conflicting values recorded for one degree vector");
}

void BracketTable::merge(const BracketTable& other) {
    for (const auto& [key, value] : other.values) record(key, value);
}

BracketTable extract_brackets(long r, long g, long n) {
    const long s = cycle_count(r, g, n);
    Poly d(Rat(0));
    for (long i = 1; i <= n; ++i) d += Poly::var(mu_name(i));
    Poly scaled = one_part_poly(r, g, n) * d;
    scaled *= Rat(mpz_class(1), factorial(s));

    const long dim_over_r = 2 * g + s;
    BracketTable table;
    for (const auto& [mono, c] : scaled.terms()) {
        std::vector<long> degs(static_cast<std::size_t>(n), 0);
        long total = 0;
        for (const auto& [var, e] : mono) {
            if (var.rfind("mu_", 0) != 0)
                throw consistency_error("bracket extraction: unexpected variable " + var);
            const long idx = std::stol(var.substr(3));
            if (idx < 1 || idx > n)
                throw consistency_error("bracket extraction: variable index out of range in " + var);
            degs[static_cast<std::size_t>(idx - 1)] = e;
            total += e;
        }
        const long twok = dim_over_r - total;
        if (twok < 0 || twok % 2 != 0 || twok / 2 > g)
            throw consistency_error("bracket extraction: nonzero coefficient violates the dimension "
                                    "constraint at " + monomial_str(mono));
        const long k = twok / 2;
        Rat value = c;
        if (k % 2 != 0) value *= Rat(-1);
        table.record(BracketKey{g, n, k, std::move(degs)}, value);
    }
    return table;
}

FockVec apply_Y_coeff(long i, long a, const FockVec& v) {
    if (i < 0) throw precondition_error("apply_Y_coeff: operator index must be >= 0");
    if (a < 0) throw precondition_error("apply_Y_coeff: series order must be >= 0");
    if (i == 0) return apply_Etilde0_coeff(a, v);
    FockVec out;
    if (a < i) return out; // the zeta(w)^i prefactor starts at w^i
    const std::vector<Rat> zp = zeta_power_coeffs(i, a);
    const std::vector<Rat> amp = central_shift_coeffs(i);

    // Entry-wise the operator acts as zeta(w)^i * P(kappa) * e^{kappa w} where
    // kappa is the midpoint of the move and P = central_shift_coeffs. Collect
    // the total scalar in front of each order of the translation family.
    std::map<long, Rat> weights;
    for (long c = 0; c + i <= a; ++c) {
        const Rat& zj = zp[static_cast<std::size_t>(a - c)];
        if (zj.is_zero()) continue;
        for (long t = 0; t < static_cast<long>(amp.size()); ++t) {
            if (amp[static_cast<std::size_t>(t)].is_zero()) continue;
            const long m = t + c;
            weights[m] += zj * amp[static_cast<std::size_t>(t)] *
                          Rat(factorial(m)) / Rat(factorial(c));
        }
    }
    for (const auto& [m, wgt] : weights) {
        if (wgt.is_zero()) continue;
        for (const auto& [lam, c] : apply_E_coeff(m, -i, v)) fock_add(out, lam, c * wgt);
    }
    return out;
}

std::vector<FockVec> apply_Y(long i, const FockVec& v, long wcap) {
    if (wcap < 0) throw precondition_error("apply_Y: w cap must be >= 0");
    std::vector<FockVec> out;
    out.reserve(static_cast<std::size_t>(wcap) + 1);
    for (long a = 0; a <= wcap; ++a) {
        FockVec coeff = apply_Y_coeff(i, a, v);
        if (i >= 1 && a < i && !coeff.empty())
            throw consistency_error("apply_Y: nonzero coefficient below the leading order");
        out.push_back(std::move(coeff));
    }
    return out;
}

std::map<long, Rat> Y_leading_coefficients(long i) {
    if (i < 1) throw precondition_error("Y_leading_coefficients: index must be >= 1");
    const std::vector<Rat> amp = central_shift_coeffs(i);
    std::map<long, Rat> out;
    for (long a = 0; a < static_cast<long>(amp.size()); ++a) {
        const Rat& c = amp[static_cast<std::size_t>(a)];
        if (!c.is_zero()) out[a] = c * Rat(factorial(a));
    }
    return out;
}

PPoly<Rat> expand_in_power_sums(const FockVec& state) {
    PPoly<Rat> out;
    for (const auto& [lam, c] : state) {
        if (c.is_zero()) continue;
        PPoly<Rat> s = schur_in_p(lam);
        s *= c;
        out += s;
    }
    return out;
}

PPoly<Poly> expand_in_power_sums(const PolyFock& state) {
    PPoly<Poly> out;
    for (const auto& [lam, c] : state) {
        if (c.is_zero()) continue;
        const PPoly<Rat> schur = schur_in_p(lam);
        for (const auto& [mono, sc] : schur.terms()) {
            Poly pc = c;
            pc *= sc;
            out.add_term(mono, std::move(pc));
        }
    }
    return out;
}

PPoly<Poly> T_variable(long k) {
    if (k < 0) throw precondition_error("T_variable: index must be >= 0");
    PolyFock state{{Partition({1}), Poly(Rat(1))}};
    const Poly u = Poly::var("u");
    for (long step = 0; step < k; ++step) {
        PolyFock next;
        for (const auto& [lam, c] : state) {
            Poly diag = c * u;
            diag *= Rat(lam.size());
            if (!diag.is_zero()) next[lam] += diag;
            for (const auto& [dst, ampl] : apply_E_coeff(1, -1, fock_basis(lam))) {
                Poly mc = c;
                mc *= ampl;
                next[dst] += mc;
            }
        }
        state.clear();
        for (auto& [lam, c] : next)
            if (!c.is_zero()) state.emplace(lam, std::move(c));
    }
    return expand_in_power_sums(state);
}

PPoly<Poly> G_series(long r, long wcap, long ucap) {
    if (r < 1) throw precondition_error("G_series: r must be >= 1");
    if (wcap < 1) throw precondition_error("G_series: weight cap must be >= 1");
    if (ucap < 0) throw precondition_error("G_series: u cap must be >= 0");
    const long R = r + 1;

    std::map<std::pair<long, Partition>, FockVec> cache;
    const auto y_image = [&](long i, const Partition& lam) -> const FockVec& {
        const auto key = std::make_pair(i, lam);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, apply_Y_coeff(i, R, fock_basis(lam))).first;
        return it->second;
    };

    PolyFock total{{Partition({1}), Poly(Rat(1))}};
    PolyFock term = total;
    for (long t = 1; !term.empty(); ++t) {
        PolyFock next;
        for (const auto& [lam, c] : term) {
            for (long k = 0; k <= R; ++k) {
                const long i = R - k; // Y_i raises weight by i and carries u^k
                if (lam.size() + i > wcap) continue;
                Poly uc = c;
                if (k > 0) uc *= Poly::var("u", static_cast<int>(k));
                uc = truncate_u_poly(uc, ucap);
                uc *= Rat(mpz_class(1), factorial(i));
                if (uc.is_zero()) continue;
                for (const auto& [dst, ampl] : y_image(i, lam)) {
                    Poly add = uc;
                    add *= ampl;
                    next[dst] += add;
                }
            }
        }
        term.clear();
        for (auto& [lam, c] : next) {
            c *= Rat(mpz_class(1), mpz_class(t));
            if (!c.is_zero()) term.emplace(lam, std::move(c));
        }
        for (const auto& [lam, c] : term) total[lam] += c;
    }

    PolyFock cleaned;
    for (auto& [lam, c] : total)
        if (!c.is_zero()) cleaned.emplace(lam, std::move(c));
    return expand_in_power_sums(cleaned);
}

PPoly<Rat> F_series(long r, long wcap) {
    if (r < 1) throw precondition_error("F_series: r must be >= 1");
    if (wcap < 1) throw precondition_error("F_series: weight cap must be >= 1");
    const long R = r + 1;
    const Rat step_scale = Rat(mpz_class(1), factorial(R));

    FockVec total = fock_basis(Partition({1}));
    FockVec term = total;
    for (long t = 1; !term.empty(); ++t) {
        FockVec filtered;
        for (const auto& [lam, c] : term)
            if (lam.size() + R <= wcap) filtered.emplace(lam, c);
        FockVec next = apply_Y_coeff(R, R, filtered);
        term.clear();
        for (auto& [lam, c] : next) {
            const Rat sc = c * step_scale / Rat(mpz_class(t));
            if (!sc.is_zero()) term.emplace(lam, sc);
        }
        for (const auto& [lam, c] : term) fock_add(total, lam, c);
    }

    FockVec cleaned;
    for (const auto& [lam, c] : total)
        if (!c.is_zero()) cleaned.emplace(lam, c);
    return expand_in_power_sums(cleaned);
}

PPoly<Poly> change_vars(const PPoly<Poly>& f, VarDirection direction, long wcap) {
    if (wcap < 1) throw precondition_error("change_vars: weight cap must be >= 1");

    std::vector<PPoly<Poly>> image(static_cast<std::size_t>(wcap) + 1);
    for (long b = 1; b <= wcap; ++b) {
        PPoly<Poly> img;
        if (direction == VarDirection::to_q) {
            for (long i = b; i <= wcap; ++i) {
                Poly coeff = Poly::var("u", static_cast<int>(-i));
                Rat c(binomial(i - 1, b - 1));
                if ((i - b) % 2 != 0) c *= Rat(-1);
                coeff *= c;
                img.add_term(Partition({i}), std::move(coeff));
            }
        } else {
            for (long j = b; j <= wcap; ++j) {
                Poly coeff = Poly::var("u", static_cast<int>(b));
                coeff *= Rat(binomial(j - 1, b - 1));
                img.add_term(Partition({j}), std::move(coeff));
            }
        }
        image[static_cast<std::size_t>(b)] = std::move(img);
    }

    PPoly<Poly> out;
    for (const auto& [mono, c] : f.terms()) {
        if (mono.size() > wcap) continue;
        PPoly<Poly> prod = PPoly<Poly>::constant(c);
        for (long part : mono.parts()) {
            if (part > wcap) {
                prod = PPoly<Poly>();
                break;
            }
            prod *= image[static_cast<std::size_t>(part)];
            prod = truncate_weight(std::move(prod), wcap);
        }
        out += prod;
    }
    return out;
}

PPoly<Poly> truncate_weight(PPoly<Poly> f, long wcap) {
    PPoly<Poly> out;
    for (const auto& [mono, c] : f.terms())
        if (mono.size() <= wcap) out.add_term(mono, c);
    return out;
}

PPoly<Poly> truncate_u_degree(const PPoly<Poly>& f, long ucap) {
    PPoly<Poly> out;
    for (const auto& [mono, c] : f.terms()) {
        Poly t = truncate_u_poly(c, ucap);
        if (!t.is_zero()) out.add_term(mono, std::move(t));
    }
    return out;
}

} // namespace hurwitz
