#pragma once

// Truncated multivariate power series over an exact coefficient ring (Rat or
// Poly). A series object carries a shared variable context: an ordered list of
// variable names with a per-variable exponent cap, inclusive. Every operation
// truncates to the cap box, so products never leave it.
//
// zeta(x) = e^{x/2} - e^{-x/2} = sum_{k odd} x^k / (2^{k-1} k!) is the odd
// building block; zeta_ratio(n, L) is the genuine power series zeta(nL)/zeta(L)
// computed by an exact univariate recurrence (constant term n), which also
// works when n lives in a polynomial coefficient ring.

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "hurwitz/errors.hpp"
#include "hurwitz/poly.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// --- coefficient-ring adapters ----------------------------------------------

inline bool coeff_is_zero(const Rat& r) { return r.is_zero(); }
inline bool coeff_is_zero(const Poly& p) { return p.is_zero(); }

inline Rat coeff_div(const Rat& a, const Rat& b) { return a / b; }
inline Poly coeff_div(const Poly& a, const Poly& b) { return a.exact_div(b); }

template <class R> R coeff_from_rat(const Rat& c);
template <> inline Rat coeff_from_rat<Rat>(const Rat& c) { return c; }
template <> inline Poly coeff_from_rat<Poly>(const Rat& c) { return Poly(c); }

// --- variable context ---------------------------------------------------------

struct SeriesVars {
    std::vector<std::string> names;
    std::vector<int> caps; // inclusive max exponent per variable

    std::size_t index_of(const std::string& name) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return i;
        throw precondition_error("SeriesVars: unknown variable " + name);
    }
    long cap_total() const { return std::accumulate(caps.begin(), caps.end(), 0L); }
};

using VarsPtr = std::shared_ptr<const SeriesVars>;

inline VarsPtr make_vars(std::vector<std::string> names, std::vector<int> caps) {
    if (names.size() != caps.size())
        throw precondition_error("make_vars: names/caps size mismatch");
    for (int c : caps)
        if (c < 0) throw precondition_error("make_vars: negative cap");
    auto v = std::make_shared<SeriesVars>();
    v->names = std::move(names);
    v->caps = std::move(caps);
    return v;
}

// z1..zs, uniform cap
inline VarsPtr make_z_vars(int s, int cap) {
    std::vector<std::string> names;
    for (int k = 1; k <= s; ++k) names.push_back("z" + std::to_string(k));
    return make_vars(std::move(names), std::vector<int>(static_cast<std::size_t>(s), cap));
}

using Expo = std::vector<int>;

inline long expo_degree(const Expo& e) { return std::accumulate(e.begin(), e.end(), 0L); }

// graded lex; used for the low-end division order
inline bool expo_graded_less(const Expo& a, const Expo& b) {
    const long da = expo_degree(a), db = expo_degree(b);
    if (da != db) return da < db;
    return a < b;
}

inline std::string expo_str(const Expo& e, const SeriesVars& vars) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars.names[i];
        if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

// --- linear forms --------------------------------------------------------------

// sum of coeff * variable; the argument fed to zeta.
template <class R> struct LinForm {
    std::map<std::string, R> coef;

    LinForm& add(const std::string& var, R c) {
        auto it = coef.find(var);
        if (it == coef.end()) {
            if (!coeff_is_zero(c)) coef.emplace(var, std::move(c));
        } else {
            it->second += c;
            if (coeff_is_zero(it->second)) coef.erase(it);
        }
        return *this;
    }
    bool is_zero() const { return coef.empty(); }
};

// z_K = sum_{k in K} z_k, with unit coefficients
template <class R> LinForm<R> z_subset_form(const std::vector<std::string>& zvars) {
    LinForm<R> f;
    for (const auto& v : zvars) f.add(v, coeff_from_rat<R>(Rat(1)));
    return f;
}

// --- series ---------------------------------------------------------------------

template <class R> class Series {
public:
    Series() = default;
    explicit Series(VarsPtr vars) : vars_(std::move(vars)) {}

    static Series constant(VarsPtr vars, R c) {
        Series s(std::move(vars));
        if (!coeff_is_zero(c)) s.terms_[Expo(s.vars_->names.size(), 0)] = std::move(c);
        return s;
    }
    static Series from_linform(VarsPtr vars, const LinForm<R>& f) {
        Series s(std::move(vars));
        for (auto& [name, c] : f.coef) {
            Expo e(s.vars_->names.size(), 0);
            const std::size_t i = s.vars_->index_of(name);
            if (s.vars_->caps[i] < 1) continue; // truncated away
            e[i] = 1;
            s.terms_[std::move(e)] = c;
        }
        return s;
    }

    const VarsPtr& vars() const { return vars_; }
    const std::map<Expo, R>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    R coeff(const Expo& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? coeff_from_rat<R>(Rat(0)) : it->second;
    }
    // coefficient of the monomial with every variable at its cap
    R corner_coeff() const {
        Expo e(vars_->caps.begin(), vars_->caps.end());
        return coeff(e);
    }

    void add_term(Expo e, R c) {
        check_box(e);
        if (coeff_is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), std::move(c));
        } else {
            it->second += c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    Series& operator+=(const Series& o) {
        require_same(o);
        for (auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Series& operator-=(const Series& o) {
        require_same(o);
        for (auto& [e, c] : o.terms_) {
            R neg = c;
            neg *= Rat(-1);
            add_term(e, std::move(neg));
        }
        return *this;
    }
    friend Series operator+(Series a, const Series& b) { a += b; return a; }
    friend Series operator-(Series a, const Series& b) { a -= b; return a; }

    friend Series operator*(const Series& a, const Series& b) {
        a.require_same(b);
        Series out(a.vars_);
        const auto& caps = a.vars_->caps;
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) {
                Expo e(ea.size());
                bool fits = true;
                for (std::size_t i = 0; i < e.size(); ++i) {
                    e[i] = ea[i] + eb[i];
                    if (e[i] > caps[i]) { fits = false; break; }
                }
                if (!fits) continue;
                R c = ca;
                c *= cb;
                out.add_term(std::move(e), std::move(c));
            }
        return out;
    }
    Series& operator*=(const Series& o) { *this = *this * o; return *this; }
    Series& operator*=(const Rat& c) {
        if (c.is_zero()) { terms_.clear(); return *this; }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }
    Series& scale(const R& c) {
        if (coeff_is_zero(c)) { terms_.clear(); return *this; }
        std::map<Expo, R> out;
        for (auto& [e, v] : terms_) {
            R nv = v;
            nv *= c;
            if (!coeff_is_zero(nv)) out.emplace(e, std::move(nv));
        }
        terms_ = std::move(out);
        return *this;
    }

    friend bool operator==(const Series& a, const Series& b) {
        a.require_same(b);
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    // Exact division within the cap box, working upward from the lowest
    // graded-lex monomial of g. Quotient coefficients for which the dividend
    // box carries no information are only produced consistently with the given
    // data; pad caps by the lowest degree of g when those matter.
    Series exact_divide(const Series& g) const {
        require_same(g);
        if (g.terms_.empty()) throw arithmetic_error("Series::exact_divide: division by zero");
        auto lowest = [](const std::map<Expo, R>& m) {
            auto best = m.begin();
            for (auto it = std::next(m.begin()); it != m.end(); ++it)
                if (expo_graded_less(it->first, best->first)) best = it;
            return best;
        };
        const auto glo = lowest(g.terms_);
        Series q(vars_);
        Series r = *this;
        while (!r.terms_.empty()) {
            const auto rlo = lowest(r.terms_);
            Expo diff(rlo->first.size());
            for (std::size_t i = 0; i < diff.size(); ++i) {
                diff[i] = rlo->first[i] - glo->first[i];
                if (diff[i] < 0)
                    throw arithmetic_error("Series::exact_divide: inexact at monomial " +
                                           expo_str(rlo->first, *vars_));
            }
            Series t(vars_);
            t.terms_[diff] = coeff_div(rlo->second, glo->second);
            q += t;
            r -= t * g;
        }
        return q;
    }

    // multiplicative inverse; requires an invertible constant term
    Series invert() const {
        auto it = terms_.find(Expo(vars_->names.size(), 0));
        if (it == terms_.end())
            throw arithmetic_error("Series::invert: no constant term");
        return constant(vars_, coeff_from_rat<R>(Rat(1))).exact_divide(*this);
    }

    Series set_var_zero(const std::string& name) const {
        const std::size_t i = vars_->index_of(name);
        Series out(vars_);
        for (auto& [e, c] : terms_)
            if (e[i] == 0) out.terms_.emplace(e, c);
        return out;
    }

    // Reinterpret in a larger context; every variable here must exist there,
    // with caps at least as large.
    Series embed_into(const VarsPtr& big) const {
        Series out(big);
        for (auto& [e, c] : terms_) {
            Expo ne(big->names.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                const std::size_t j = big->index_of(vars_->names[i]);
                if (big->caps[j] < e[i])
                    throw precondition_error("Series::embed_into: cap too small for " + big->names[j]);
                ne[j] = e[i];
            }
            out.add_term(std::move(ne), c);
        }
        return out;
    }

    template <class F> auto transform_coeffs(F&& f) const {
        using S = decltype(f(std::declval<const R&>()));
        Series<S> out(vars_);
        for (auto& [e, c] : terms_) {
            S nc = f(c);
            if (!coeff_is_zero(nc)) out.add_term(e, std::move(nc));
        }
        return out;
    }

    std::string str() const;

private:
    template <class S> friend class Series;

    void require_same(const Series& o) const {
        if (vars_ == o.vars_) return;
        if (vars_ && o.vars_ && vars_->names == o.vars_->names && vars_->caps == o.vars_->caps) return;
        throw precondition_error("Series: mixed variable contexts");
    }
    void check_box(const Expo& e) const {
        if (e.size() != vars_->names.size())
            throw precondition_error("Series: exponent arity mismatch");
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] < 0 || e[i] > vars_->caps[i])
                throw precondition_error("Series: exponent outside cap box");
    }

    VarsPtr vars_;
    std::map<Expo, R> terms_;
};

template <class R> std::string Series<R>::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto& [e, c] : terms_) {
        if (!s.empty()) s += " + ";
        std::string cs;
        if constexpr (std::is_same_v<R, Rat>) cs = c.str();
        else cs = "(" + c.str() + ")";
        s += cs + "*" + expo_str(e, *vars_);
    }
    return s;
}

// --- zeta ------------------------------------------------------------------------

// 1 / (2^{k-1} k!)
inline Rat zeta_term_coeff(long k) { return Rat(mpz_class(1), mpz_class(1) << (k - 1)) / Rat(factorial(k)); }

// zeta(L) as a truncated series: sum over odd k of L^k / (2^{k-1} k!).
template <class R> Series<R> zeta_series(const VarsPtr& vars, const LinForm<R>& L) {
    Series<R> lin = Series<R>::from_linform(vars, L);
    Series<R> out(vars);
    if (lin.is_zero()) return out; // zeta(0) = 0
    Series<R> sq = lin * lin;
    Series<R> pw = lin;
    const long maxdeg = vars->cap_total();
    for (long k = 1; k <= maxdeg && !pw.is_zero(); k += 2) {
        Series<R> term = pw;
        term *= zeta_term_coeff(k);
        out += term;
        pw *= sq;
    }
    return out;
}

// Coefficients q_0, q_2, ... of zeta(n t)/zeta(t) as a univariate series in t,
// through degree maxdeg. Works for symbolic n; q_0 = n.
template <class R> std::vector<R> zeta_ratio_coeffs(const R& n, long maxdeg) {
    std::vector<R> q(static_cast<std::size_t>(std::max(0L, maxdeg)) + 1, coeff_from_rat<R>(Rat(0)));
    if (q.empty()) return q;
    // b_j = [t^j] zeta(t) (odd j); a_j = n^j b_j = [t^j] zeta(n t)
    std::vector<Rat> b(static_cast<std::size_t>(maxdeg) + 2, Rat(0));
    for (long j = 1; j <= maxdeg + 1; j += 2) b[static_cast<std::size_t>(j)] = zeta_term_coeff(j);
    R npow = n; // n^j for current odd j
    const R n2 = n * n;
    for (long j = 1; j <= maxdeg + 1; j += 2) {
        R rhs = npow;
        rhs *= b[static_cast<std::size_t>(j)];
        for (long i = j - 3; i >= 0; i -= 2) {
            R sub = q[static_cast<std::size_t>(i)];
            sub *= b[static_cast<std::size_t>(j - i)];
            rhs -= sub;
        }
        q[static_cast<std::size_t>(j - 1)] = std::move(rhs); // divides by b_1 = 1
        npow *= n2;
    }
    return q;
}

// zeta(n L)/zeta(L) substituted at a linear form; even series with constant term n.
template <class R> Series<R> zeta_ratio(const VarsPtr& vars, const R& n, const LinForm<R>& L) {
    Series<R> lin = Series<R>::from_linform(vars, L);
    const long maxdeg = vars->cap_total();
    auto q = zeta_ratio_coeffs<R>(n, maxdeg);
    Series<R> out = Series<R>::constant(vars, q[0]);
    if (lin.is_zero()) return out;
    Series<R> sq = lin * lin;
    Series<R> pw = sq;
    for (long i = 2; i <= maxdeg && !pw.is_zero(); i += 2) {
        Series<R> term = pw;
        term.scale(q[static_cast<std::size_t>(i)]);
        out += term;
        pw *= sq;
    }
    return out;
}

} // namespace hurwitz
