#include "hurwitz/poly.hpp"

#include <algorithm>

namespace hurwitz {

long monomial_degree(const Monomial& m) {
    long d = 0;
    for (auto& [v, e] : m) d += e;
    return d;
}

std::string monomial_str(const Monomial& m) {
    if (m.empty()) return "1";
    std::string s;
    for (auto& [v, e] : m) {
        if (!s.empty()) s += "*";
        s += v;
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

// Graded lex on exponent vectors (alphabetically earlier variables dominate).
// A missing variable means exponent zero; comparing the underlying maps
// directly would misorder monomials with different support and is not
// compatible with multiplication, which the division loop relies on.
bool monomial_less(const Monomial& a, const Monomial& b) {
    const long da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da < db;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        int ea = 0, eb = 0;
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            ea = ia->second;
            ++ia;
        } else if (ia == a.end() || ib->first < ia->first) {
            eb = ib->second;
            ++ib;
        } else {
            ea = ia->second;
            eb = ib->second;
            ++ia;
            ++ib;
        }
        if (ea != eb) return ea < eb;
    }
    return false;
}

Poly Poly::var(const std::string& name, int exponent) {
    Poly p;
    if (exponent == 0) return Poly(Rat(1));
    p.terms_[Monomial{{name, exponent}}] = Rat(1);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rat Poly::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rat(0) : it->second;
}

long Poly::degree() const {
    long d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
    return d;
}

int Poly::min_exponent(const std::string& name) const {
    int lo = 0;
    for (auto& [m, c] : terms_) {
        auto it = m.find(name);
        if (it != m.end()) lo = std::min(lo, it->second);
    }
    return lo;
}

Poly& Poly::operator+=(const Poly& o) {
    for (auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, -c);
        } else {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

namespace {
Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (auto& [v, e] : b) {
        int& slot = m[v];
        slot += e;
        if (slot == 0) m.erase(v);
    }
    return m;
}
} // namespace

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (auto& [ma, ca] : a.terms_)
        for (auto& [mb, cb] : b.terms_) {
            Monomial m = mono_mul(ma, mb);
            auto it = out.terms_.find(m);
            if (it == out.terms_.end()) {
                Rat c = ca * cb;
                if (!c.is_zero()) out.terms_.emplace(std::move(m), std::move(c));
            } else {
                it->second += ca * cb;
                if (it->second.is_zero()) out.terms_.erase(it);
            }
        }
    return out;
}

Poly& Poly::operator*=(const Rat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Poly Poly::exact_div(const Poly& g) const {
    if (g.is_zero()) throw arithmetic_error("Poly::exact_div: division by zero");
    // Laurent dividend: clear negative exponents, divide, shift back.
    Monomial shift;
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m)
            if (e < 0) {
                int& s = shift[v];
                s = std::max(s, -e);
            }
    for (auto& [m, c] : g.terms_)
        for (auto& [v, e] : m)
            if (e < 0) throw precondition_error("Poly::exact_div: Laurent divisor not supported");

    Poly f = *this;
    if (!shift.empty()) {
        Poly sm;
        sm.terms_[shift] = Rat(1);
        f = f * sm;
    }

    // leading term of g under graded lex
    auto leading = [](const Poly& p) {
        auto best = p.terms_.begin();
        for (auto it = std::next(p.terms_.begin()); it != p.terms_.end(); ++it)
            if (monomial_less(best->first, it->first)) best = it;
        return best;
    };
    const auto glt = leading(g);

    Poly q;
    while (!f.terms_.empty()) {
        const auto flt = leading(f);
        // monomial divisibility: every exponent of glt present with enough multiplicity
        Monomial ratio = flt->first;
        bool ok = true;
        for (auto& [v, e] : glt->first) {
            auto it = ratio.find(v);
            const int have = (it == ratio.end()) ? 0 : it->second;
            if (have < e) { ok = false; break; }
            if (have == e) ratio.erase(v);
            else it->second = have - e;
        }
        if (!ok)
            throw arithmetic_error("Poly::exact_div: inexact at monomial " + monomial_str(flt->first));
        Poly t;
        t.terms_[ratio] = flt->second / glt->second;
        q += t;
        f -= t * g;
    }

    if (!shift.empty()) {
        Monomial unshift;
        for (auto& [v, e] : shift) unshift[v] = -e;
        Poly um;
        um.terms_[unshift] = Rat(1);
        q = q * um;
    }
    return q;
}

Poly Poly::substitute(const std::map<std::string, Rat>& values) const {
    Poly out;
    for (auto& [m, c] : terms_) {
        Rat scale = c;
        Monomial rest;
        for (auto& [v, e] : m) {
            auto it = values.find(v);
            if (it == values.end()) rest[v] = e;
            else scale *= rat_pow(it->second, e);
        }
        Poly t;
        t.terms_[rest] = scale;
        out += t;
    }
    return out;
}

Poly Poly::substitute_poly(const std::map<std::string, Poly>& values) const {
    Poly out;
    for (auto& [m, c] : terms_) {
        Poly term(c);
        for (auto& [v, e] : m) {
            auto it = values.find(v);
            if (it == values.end()) {
                term *= Poly::var(v, e);
            } else {
                if (e < 0)
                    throw precondition_error("Poly::substitute_poly: negative exponent on substituted var " + v);
                term *= poly_pow(it->second, e);
            }
        }
        out += term;
    }
    return out;
}

Rat Poly::eval(const std::map<std::string, Rat>& values) const {
    Rat total(0);
    for (auto& [m, c] : terms_) {
        Rat t = c;
        for (auto& [v, e] : m) {
            auto it = values.find(v);
            if (it == values.end())
                throw precondition_error("Poly::eval: missing value for " + v);
            t *= rat_pow(it->second, e);
        }
        total += t;
    }
    return total;
}

Rat Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto& [m, c] : terms_) {
        if (!s.empty()) s += " + ";
        if (m.empty()) {
            s += c.str();
        } else if (c.is_one()) {
            s += monomial_str(m);
        } else {
            s += c.str() + "*" + monomial_str(m);
        }
    }
    return s;
}

Poly poly_pow(const Poly& base, long exp) {
    if (exp < 0) throw precondition_error("poly_pow: negative exponent");
    Poly acc(Rat(1)), b = base;
    while (exp > 0) {
        if (exp & 1) acc *= b;
        b = b * b;
        exp >>= 1;
    }
    return acc;
}

} // namespace hurwitz
