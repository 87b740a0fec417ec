#pragma once

// Polynomials in the power-sum variables p_1, p_2, ... over an exact ring.
// A monomial prod_k p_{mu_k} is stored as the partition mu of its indices, so
// symmetric-function bookkeeping (multiplicities, derivatives) falls out of
// the Partition API.

#include <map>

#include "hurwitz/partition.hpp"
#include "hurwitz/poly.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

template <class R> class PPoly {
public:
    PPoly() = default;
    static PPoly constant(R c) {
        PPoly p;
        p.add_term(Partition{}, std::move(c));
        return p;
    }
    static PPoly p(long k) { // the variable p_k
        PPoly out;
        out.add_term(Partition({k}), coeff_from_rat<R>(Rat(1)));
        return out;
    }

    const std::map<Partition, R>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Partition mono, R c) {
        if (coeff_is_zero(c)) return;
        auto it = terms_.find(mono);
        if (it == terms_.end()) {
            terms_.emplace(std::move(mono), std::move(c));
        } else {
            it->second += c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    PPoly& operator+=(const PPoly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    PPoly& operator-=(const PPoly& o) {
        for (auto& [m, c] : o.terms_) {
            R neg = c;
            neg *= Rat(-1);
            add_term(m, std::move(neg));
        }
        return *this;
    }
    friend PPoly operator+(PPoly a, const PPoly& b) { a += b; return a; }
    friend PPoly operator-(PPoly a, const PPoly& b) { a -= b; return a; }

    friend PPoly operator*(const PPoly& a, const PPoly& b) {
        PPoly out;
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) {
                R c = ca;
                c *= cb;
                out.add_term(merge_partitions(ma, mb), std::move(c));
            }
        return out;
    }
    PPoly& operator*=(const PPoly& o) { *this = *this * o; return *this; }
    PPoly& scale(const R& c) {
        std::map<Partition, R> out;
        for (auto& [m, v] : terms_) {
            R nv = v;
            nv *= c;
            if (!coeff_is_zero(nv)) out.emplace(m, std::move(nv));
        }
        terms_ = std::move(out);
        return *this;
    }
    PPoly& operator*=(const Rat& c) {
        if (c.is_zero()) { terms_.clear(); return *this; }
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }

    friend bool operator==(const PPoly& a, const PPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const PPoly& a, const PPoly& b) { return !(a == b); }

    // d/dp_b
    PPoly derivative(long b) const {
        PPoly out;
        for (auto& [m, c] : terms_) {
            const long mult = m.mult(b);
            if (mult == 0) continue;
            R nc = c;
            nc *= Rat(mult);
            out.add_term(m.without_part(b), std::move(nc));
        }
        return out;
    }

    // total degree in the weighting deg p_k = k
    long weight() const {
        long w = 0;
        for (auto& [m, c] : terms_) w = std::max(w, m.size());
        return w;
    }

    // substitute p_k -> values(k); R must multiply into S
    template <class S> S eval_p(const std::map<long, S>& values, const S& one) const {
        S out = one;
        out *= Rat(0);
        for (auto& [m, c] : terms_) {
            S term = one;
            for (long k : m.parts()) {
                auto it = values.find(k);
                if (it == values.end()) throw precondition_error("PPoly::eval_p: no value for index " + std::to_string(k));
                term *= it->second;
            }
            term.scale(c);
            out += term;
        }
        return out;
    }

private:
    std::map<Partition, R> terms_;
};

// Schur polynomial expanded over power sums: sum_mu chi^lambda_mu / z_mu * p_mu.
PPoly<Rat> schur_in_p(const Partition& lambda);

} // namespace hurwitz
