#include "hurwitz/patterns.hpp"

#include <cstdint>
#include <vector>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

// One operator symbol: index subsets into the parts of mu (I), the parts of
// nu (J), and the z-variables (K). Energy is mu_I - nu_J. `pending` marks an
// original middle operator that has not yet entered any commutator (such an
// operator annihilates the vacuum, so a branch that strands one contributes
// nothing). `folded` marks a zero-energy merge whose terminal denominator has
// already been cancelled into its creation factor; if it commutes again, the
// cancellation is undone with a compensating factor.
struct Sym {
    std::uint32_t I = 0;
    std::uint32_t J = 0;
    std::uint32_t K = 0;
    std::uint8_t flags = 0; // bit 0: pending, bit 1: folded

    bool pending() const { return flags & 1; }
    bool folded() const { return flags & 2; }
};

using Word = std::vector<Sym>;
using Key = std::vector<std::uint32_t>;

Key word_key(const Word& w) {
    Key k;
    k.reserve(w.size() * 4);
    for (const Sym& s : w) {
        k.push_back(s.I);
        k.push_back(s.J);
        k.push_back(s.K);
        k.push_back(s.flags);
    }
    return k;
}

class Engine {
public:
    Engine(const Partition& mu, const Partition& nu, long s, long cap_per_var)
        : mu_(mu.parts()), nu_(nu.parts()), s_(s) {
        if (mu.size() != nu.size())
            throw precondition_error("pattern_vev: profiles must have equal size");
        if (s < 0) throw precondition_error("pattern_vev: negative branch count");
        if (cap_per_var < 0) throw precondition_error("pattern_vev: negative cap");
        if (mu_.size() > 31 || nu_.size() > 31 || s > 31)
            throw precondition_error("pattern_vev: profile or branch count too long");
        vars_ = make_z_vars(static_cast<int>(s), static_cast<int>(cap_per_var));
        zero_ = Series<Rat>(vars_);
    }

    VarsPtr vars() const { return vars_; }

    // map: component count -> (factor-product sum, structural pattern count)
    using Result = std::map<int, std::pair<Series<Rat>, long>>;

    Result run() {
        Word start;
        for (std::size_t i = 0; i < mu_.size(); i++)
            start.push_back(Sym{std::uint32_t(1) << i, 0, 0, 0});
        for (long k = 0; k < s_; k++)
            start.push_back(Sym{0, 0, std::uint32_t(1) << k, 1});
        for (std::size_t j = 0; j < nu_.size(); j++)
            start.push_back(Sym{0, std::uint32_t(1) << j, 0, 0});
        return eval(start);
    }

private:
    std::vector<long> mu_, nu_;
    long s_;
    VarsPtr vars_;
    Series<Rat> zero_;
    std::map<Key, Result> memo_;

    long energy(const Sym& sym) const {
        long e = 0;
        for (std::size_t i = 0; i < mu_.size(); i++)
            if (sym.I & (std::uint32_t(1) << i)) e += mu_[i];
        for (std::size_t j = 0; j < nu_.size(); j++)
            if (sym.J & (std::uint32_t(1) << j)) e -= nu_[j];
        return e;
    }

    LinForm<Rat> k_form(std::uint32_t K, const Rat& scale) const {
        LinForm<Rat> f;
        for (long k = 0; k < s_; k++)
            if (K & (std::uint32_t(1) << k)) f.add(vars_->names[static_cast<std::size_t>(k)], scale);
        return f;
    }

    static void accumulate(Result& acc, int extra_components, const Series<Rat>& factor,
                           bool unit_factor, long count_scale, const Result& sub,
                           const Series<Rat>& zero) {
        for (const auto& [blocks, val] : sub) {
            auto it = acc.find(blocks + extra_components);
            if (it == acc.end())
                it = acc.emplace(blocks + extra_components, std::make_pair(zero, 0L)).first;
            it->second.first += unit_factor ? val.first : val.first * factor;
            it->second.second += val.second * count_scale;
        }
    }

    const Result& eval(const Word& w) {
        Key key = word_key(w);
        auto found = memo_.find(key);
        if (found != memo_.end()) return found->second;

        Result acc;
        std::size_t t0 = w.size();
        for (std::size_t t = 0; t < w.size(); t++)
            if (energy(w[t]) < 0) {
                t0 = t;
                break;
            }

        if (t0 == w.size()) {
            // No negative energy left; the total energy of a word is always
            // zero, so every operator is at zero energy. Stranded middles
            // annihilate the vacuum; otherwise each remaining operator is one
            // component block whose denominator was folded at creation.
            bool dead = false;
            for (const Sym& sym : w) {
                if (sym.pending()) dead = true;
                else if (!sym.folded())
                    throw consistency_error("pattern engine: unfolded terminal block");
            }
            if (!dead)
                acc.emplace(static_cast<int>(w.size()),
                            std::make_pair(Series<Rat>::constant(vars_, Rat(1)), 1L));
        } else if (t0 == 0) {
            // negative energy against the covacuum: zero
        } else {
            const Sym L = w[t0 - 1];
            const Sym R = w[t0];
            const long eL = energy(L);
            const long eR = energy(R);

            Word pass = w;
            std::swap(pass[t0 - 1], pass[t0]);
            accumulate(acc, 0, zero_, true, 1, eval(pass), zero_);

            if (L.K == 0 && R.K == 0) {
                if (eL + eR == 0) {
                    // commutator of two z-free operators of opposite energy:
                    // the scalar eL, closing one component
                    Word rest = w;
                    rest.erase(rest.begin() + static_cast<long>(t0) - 1,
                               rest.begin() + static_cast<long>(t0) + 1);
                    Series<Rat> factor = Series<Rat>::constant(vars_, Rat(eL));
                    accumulate(acc, 1, factor, false, 1, eval(rest), zero_);
                }
                // otherwise the factor is zeta(0) = 0: dead branch
            } else {
                Sym merged;
                merged.I = L.I | R.I;
                merged.J = L.J | R.J;
                merged.K = L.K | R.K;
                Series<Rat> factor = zero_;
                if (eL + eR == 0) {
                    // The determinant form collapses to eL * z_{K merged}; fold
                    // the terminal denominator of this future block in now.
                    merged.flags |= 2;
                    factor = zeta_ratio(vars_, Rat(eL), k_form(merged.K, Rat(1)));
                } else {
                    LinForm<Rat> det = k_form(R.K, Rat(eL));
                    for (auto& [name, c] : k_form(L.K, Rat(-eR)).coef) det.add(name, c);
                    factor = zeta_series(vars_, det);
                }
                if (L.folded()) factor = factor * zeta_series(vars_, k_form(L.K, Rat(1)));
                if (R.folded()) factor = factor * zeta_series(vars_, k_form(R.K, Rat(1)));
                Word cw = w;
                cw[t0 - 1] = merged;
                cw.erase(cw.begin() + static_cast<long>(t0));
                accumulate(acc, 0, factor, false, 1, eval(cw), zero_);
            }
        }

        // prune zero-series entries but keep structural counts honest
        for (auto it = acc.begin(); it != acc.end();) {
            if (it->second.first.is_zero() && it->second.second == 0) it = acc.erase(it);
            else ++it;
        }
        return memo_.emplace(std::move(key), std::move(acc)).first->second;
    }
};

} // namespace

Series<Rat> PatternSum::total() const {
    Series<Rat> out(vars);
    for (const auto& [blocks, ser] : by_components) out += ser;
    return out;
}

Series<Rat> PatternSum::connected() const {
    auto it = by_components.find(1);
    return it == by_components.end() ? Series<Rat>(vars) : it->second;
}

long PatternSum::count_total() const {
    long n = 0;
    for (const auto& [blocks, c] : pattern_counts) n += c;
    return n;
}

long PatternSum::count_connected() const {
    auto it = pattern_counts.find(1);
    return it == pattern_counts.end() ? 0 : it->second;
}

PatternSum pattern_vev(const Partition& mu, const Partition& nu, long s, long cap_per_var) {
    Engine engine(mu, nu, s, cap_per_var);
    auto result = engine.run();
    PatternSum out;
    out.vars = engine.vars();
    for (auto& [blocks, val] : result) {
        out.by_components.emplace(blocks, std::move(val.first));
        if (val.second != 0) out.pattern_counts.emplace(blocks, val.second);
    }
    return out;
}

Series<Rat> mixed_cycle_series(const Partition& mu, const Partition& nu, long s,
                               long cap_per_var) {
    PatternSum ps = pattern_vev(mu, nu, s, cap_per_var);
    Series<Rat> out = ps.total();
    Rat norm(1);
    for (long part : mu.parts()) norm *= Rat(part);
    for (long part : nu.parts()) norm *= Rat(part);
    out *= Rat(1) / norm;
    return out;
}

namespace {

Rat corner_of(const Series<Rat>& ser, const Partition& mu, const Partition& nu) {
    Rat norm(1);
    for (long part : mu.parts()) norm *= Rat(part);
    for (long part : nu.parts()) norm *= Rat(part);
    return ser.corner_coeff() / norm;
}

} // namespace

Rat hurwitz_patterns(const Partition& mu, const Partition& nu, long r, long s) {
    if (r < 1) throw precondition_error("hurwitz_patterns: level must be >= 1");
    PatternSum ps = pattern_vev(mu, nu, s, r + 1);
    return corner_of(ps.total(), mu, nu);
}

Rat connected_patterns(const Partition& mu, const Partition& nu, long r, long s) {
    if (r < 1) throw precondition_error("connected_patterns: level must be >= 1");
    PatternSum ps = pattern_vev(mu, nu, s, r + 1);
    return corner_of(ps.connected(), mu, nu);
}

} // namespace hurwitz
