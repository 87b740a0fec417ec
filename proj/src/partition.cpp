#include "hurwitz/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw precondition_error("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw precondition_error("Partition: parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::parse(const std::string& text) {
    std::vector<long> parts;
    if (text.empty()) return Partition{};
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw precondition_error("Partition::parse: empty part in '" + text + "'");
        std::size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(tok, &pos);
        } catch (const std::exception&) {
            throw precondition_error("Partition::parse: bad part '" + tok + "'");
        }
        if (pos != tok.size()) throw precondition_error("Partition::parse: bad part '" + tok + "'");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

long Partition::mult(long k) const {
    return static_cast<long>(std::count(parts_.begin(), parts_.end(), k));
}

std::map<long, long> Partition::multiplicities() const {
    std::map<long, long> m;
    for (long p : parts_) ++m[p];
    return m;
}

Partition Partition::with_part(long k) const {
    if (k <= 0) throw precondition_error("Partition::with_part: part must be positive");
    std::vector<long> ps = parts_;
    auto it = std::lower_bound(ps.begin(), ps.end(), k, std::greater<long>());
    ps.insert(it, k);
    return Partition(std::move(ps));
}

Partition Partition::with_ones(long count) const {
    if (count < 0) throw precondition_error("Partition::with_ones: negative count");
    std::vector<long> ps = parts_;
    ps.insert(ps.end(), static_cast<std::size_t>(count), 1);
    return Partition(std::move(ps));
}

Partition Partition::without_part(long k) const {
    std::vector<long> ps = parts_;
    auto it = std::find(ps.begin(), ps.end(), k);
    if (it == ps.end()) throw precondition_error("Partition::without_part: no part " + std::to_string(k));
    ps.erase(it);
    return Partition(std::move(ps));
}

Partition merge_partitions(const Partition& a, const Partition& b) {
    std::vector<long> ps;
    ps.reserve(a.parts().size() + b.parts().size());
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
               std::back_inserter(ps), std::greater<long>());
    return Partition(std::move(ps));
}

std::string Partition::str() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::vector<Partition> partitions_of(long n) {
    if (n < 0) throw precondition_error("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<long> cur;
    // descending-lex generation: largest first part first
    auto rec = [&](auto&& self, long remaining, long maxpart) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (long p = std::min(remaining, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

mpz_class z_factor(const Partition& mu) {
    mpz_class z = 1;
    for (auto [k, m] : mu.multiplicities()) {
        mpz_class kk(k);
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), kk.get_mpz_t(), static_cast<unsigned long>(m));
        z *= pw * factorial(m);
    }
    return z;
}

mpz_class class_size(const Partition& mu) { return factorial(mu.size()) / z_factor(mu); }

mpz_class dimension(const Partition& lambda) {
    const auto& ps = lambda.parts();
    const long rows = lambda.length();
    if (rows == 0) return 1;
    // hook(i,j) = (lambda_i - j) + (colheight_j - i) + 1
    std::vector<long> col(static_cast<std::size_t>(ps[0]) + 1, 0);
    for (long i = 0; i < rows; ++i)
        for (long j = 1; j <= ps[static_cast<std::size_t>(i)]; ++j) ++col[static_cast<std::size_t>(j)];
    mpz_class hooks = 1;
    for (long i = 1; i <= rows; ++i)
        for (long j = 1; j <= ps[static_cast<std::size_t>(i - 1)]; ++j)
            hooks *= (ps[static_cast<std::size_t>(i - 1)] - j) + (col[static_cast<std::size_t>(j)] - i) + 1;
    return factorial(lambda.size()) / hooks;
}

Rat shifted_psum(long k, const Partition& lambda) {
    if (k < 0) throw precondition_error("shifted_psum: negative exponent");
    Rat total(0);
    const auto& ps = lambda.parts();
    for (long i = 1; i <= lambda.length(); ++i) {
        const long li = ps[static_cast<std::size_t>(i - 1)];
        total += rat_pow(Rat(2 * li - 2 * i + 1, 2), k) - rat_pow(Rat(1 - 2 * i, 2), k);
    }
    return total;
}

std::vector<int> maya_doubled(const Partition& lambda, int rows) {
    if (rows < lambda.length())
        throw precondition_error("maya_doubled: window smaller than partition length");
    std::vector<int> sites;
    sites.reserve(static_cast<std::size_t>(rows));
    const auto& ps = lambda.parts();
    for (int k = 1; k <= rows; ++k) {
        const long lk = (k <= lambda.length()) ? ps[static_cast<std::size_t>(k - 1)] : 0;
        sites.push_back(static_cast<int>(2 * lk - 2 * k + 1));
    }
    return sites;
}

Partition partition_from_maya(const std::vector<int>& sites) {
    std::vector<long> parts;
    for (std::size_t idx = 0; idx < sites.size(); ++idx) {
        if (idx > 0 && sites[idx] >= sites[idx - 1])
            throw precondition_error("partition_from_maya: sites not strictly decreasing");
        const long k = static_cast<long>(idx) + 1;
        const long twice_lk = sites[idx] - 1 + 2 * k; // 2*lambda_k
        if (twice_lk % 2 != 0 || twice_lk < 0)
            throw precondition_error("partition_from_maya: invalid site values");
        const long lk = twice_lk / 2;
        if (lk > 0) parts.push_back(lk);
    }
    return Partition(std::move(parts));
}

} // namespace hurwitz
