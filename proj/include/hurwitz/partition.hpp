#pragma once

// Integer partitions and the handful of S_n facts everything else consumes:
// canonical ordering, conjugacy-class sizes, hook-length dimensions, and the
// shifted Maya encoding shared by the character recursion and the operator
// calculus (a partition is stored once, as its weakly decreasing parts).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

class Partition {
public:
    Partition() = default;
    // parts must be weakly decreasing and strictly positive.
    explicit Partition(std::vector<long> parts);
    Partition(std::initializer_list<long> parts)
        : Partition(std::vector<long>(parts)) {}

    static Partition parse(const std::string& text); // "3,1,1"; "" is the empty partition

    const std::vector<long>& parts() const { return parts_; }
    long size() const { return size_; }                       // |lambda|
    long length() const { return static_cast<long>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    long part(std::size_t i) const { return parts_[i]; }      // 0-based

    // multiplicity of k among the parts
    long mult(long k) const;
    std::map<long, long> multiplicities() const;

    Partition with_part(long k) const;        // insert one part, keeps ordering
    Partition with_ones(long count) const;    // pad with `count` extra 1s
    Partition without_part(long k) const;     // remove one copy of k (must be present)

    std::string str() const;                  // canonical text form "3,1,1"

    // Canonical order: by |lambda|, then reverse-lexicographic on the parts,
    // so for fixed size (n) comes first and (1^n) last.
    friend bool operator<(const Partition& a, const Partition& b) {
        if (a.size_ != b.size_) return a.size_ < b.size_;
        return b.parts_ < a.parts_; // lex-descending within a size class
    }
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

private:
    std::vector<long> parts_;
    long size_ = 0;
};

// All partitions of n in canonical order ((n) first, (1^n) last). n >= 0.
std::vector<Partition> partitions_of(long n);

// Multiset union of the parts.
Partition merge_partitions(const Partition& a, const Partition& b);

// z_mu = prod_k k^{m_k} m_k!; |C_mu| = |mu|! / z_mu.
mpz_class z_factor(const Partition& mu);
mpz_class class_size(const Partition& mu);

// dim(lambda) via the hook length formula.
mpz_class dimension(const Partition& lambda);

// Shifted power sum  p_k(lambda) = sum_i [(lambda_i - i + 1/2)^k - (-i + 1/2)^k].
// Exact; denominators are powers of 2.
Rat shifted_psum(long k, const Partition& lambda);

// --- shifted (Maya) encoding -------------------------------------------------
//
// The descending sequence c_k = lambda_k - k + 1/2 determines lambda; we store
// doubled values 2*c_k (odd integers) to stay integral. Sites below the listed
// window are all occupied.

// Doubled occupied sites for rows 1..rows (rows >= length of lambda).
std::vector<int> maya_doubled(const Partition& lambda, int rows);

// Inverse of maya_doubled: `sites` must be strictly decreasing doubled values
// for rows 1..rows with non-negative implied parts.
Partition partition_from_maya(const std::vector<int>& sites);

} // namespace hurwitz
