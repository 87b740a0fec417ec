#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/characters.hpp"
#include "hurwitz/cutjoin.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/intersection.hpp"
#include "hurwitz/numbers.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/poly.hpp"

using namespace hurwitz;

namespace {

Poly MU(int i) { return Poly::var("mu_" + std::to_string(i)); }

Partition desc(std::vector<long> parts) {
    std::sort(parts.rbegin(), parts.rend());
    return Partition(parts);
}

PPoly<Poly> lift(const PPoly<Rat>& f) {
    PPoly<Poly> out;
    for (const auto& [mono, c] : f.terms()) out.add_term(mono, Poly(c));
    return out;
}

// Rebuild (d/s!) * h from a bracket table by symmetrizing every row over the
// distinct arrangements of its degree vector.
Poly rebuild_scaled_poly(const BracketTable& table, long n) {
    Poly out(Rat(0));
    for (const auto& [key, val] : table.values) {
        std::vector<long> degs = key.degrees;
        std::sort(degs.begin(), degs.end());
        do {
            Poly mono(Rat(1));
            for (long i = 0; i < n; ++i)
                if (degs[static_cast<std::size_t>(i)] > 0)
                    mono *= Poly::var("mu_" + std::to_string(i + 1),
                                      static_cast<int>(degs[static_cast<std::size_t>(i)]));
            Rat c = val;
            if (key.k % 2 != 0) c *= Rat(-1);
            mono *= c;
            out += mono;
        } while (std::next_permutation(degs.begin(), degs.end()));
    }
    return out;
}

// All brackets of the given r reachable under the caps: the row filter keeps
// W = sum(d_i + 1) <= wcap + (ucap - 2k) because each T_d can trade weight
// for u-powers all the way down to q_1 u^d.
template <class Visit> void for_each_bracket_row(long r, long wcap, long ucap, Visit visit) {
    for (long g = 0; g <= 6; ++g) {
        for (long n = 1; n <= 8; ++n) {
            const long num = 2 * g - 2 + n + 1;
            if (num <= 0 || num % r != 0) continue;
            const long m = num / r;
            if (2 * g + m + n > wcap + ucap) continue;
            for (const auto& [key, val] : extract_brackets(r, g, n).values) {
                if (2 * key.k > ucap) continue;
                long W = n;
                for (long d : key.degrees) W += d;
                if (W > wcap + ucap - 2 * key.k) continue;
                visit(key, val);
            }
        }
    }
}

// F from the bracket tables: sum of <tau_{d_1}..tau_{d_n}> prod d_i! q_{d_i+1}
// over multiplicity factorials, plus the one-point degree-zero seed row.
PPoly<Rat> expected_F(long r, long wcap) {
    PPoly<Rat> out = PPoly<Rat>::p(1);
    for_each_bracket_row(r, wcap, 0, [&](const BracketKey& key, const Rat& val) {
        if (key.k != 0) return;
        std::vector<long> parts;
        Rat coeff = val;
        for (long d : key.degrees) {
            parts.push_back(d + 1);
            coeff *= Rat(factorial(d));
        }
        for (std::size_t i = 0; i < key.degrees.size();) {
            std::size_t j = i;
            while (j < key.degrees.size() && key.degrees[j] == key.degrees[i]) ++j;
            coeff /= Rat(factorial(static_cast<long>(j - i)));
            i = j;
        }
        out.add_term(Partition(parts), coeff);
    });
    return out;
}

// G from the bracket tables: (-1)^k u^{2k} <...> prod T_{d_i} / multiplicities.
PPoly<Poly> expected_G(long r, long wcap, long ucap) {
    std::map<long, PPoly<Poly>> tcache;
    const auto tvar = [&](long d) -> const PPoly<Poly>& {
        auto it = tcache.find(d);
        if (it == tcache.end()) it = tcache.emplace(d, T_variable(d)).first;
        return it->second;
    };
    PPoly<Poly> out;
    out.add_term(Partition({1}), Poly(Rat(1)));
    for_each_bracket_row(r, wcap, ucap, [&](const BracketKey& key, const Rat& val) {
        Rat scalar = val;
        if (key.k % 2 != 0) scalar *= Rat(-1);
        for (std::size_t i = 0; i < key.degrees.size();) {
            std::size_t j = i;
            while (j < key.degrees.size() && key.degrees[j] == key.degrees[i]) ++j;
            scalar /= Rat(factorial(static_cast<long>(j - i)));
            i = j;
        }
        Poly coeff = key.k > 0 ? Poly::var("u", static_cast<int>(2 * key.k)) : Poly(Rat(1));
        coeff *= scalar;
        PPoly<Poly> term = PPoly<Poly>::constant(coeff);
        for (long d : key.degrees) {
            term *= tvar(d);
            term = truncate_weight(std::move(term), wcap);
        }
        out += truncate_u_degree(term, ucap);
    });
    return truncate_u_degree(truncate_weight(std::move(out), wcap), ucap);
}

FockVec pruned(FockVec v) {
    FockVec out;
    for (const auto& [lam, c] : v)
        if (!c.is_zero()) out.emplace(lam, c);
    return out;
}

std::vector<Partition> partitions_up_to(long wmax) {
    std::vector<Partition> out;
    for (long w = 0; w <= wmax; ++w)
        for (const Partition& lam : partitions_of(w)) out.push_back(lam);
    return out;
}

} // namespace

TEST_CASE("one-part polynomials expand the closed form symbolically") {
    CHECK(one_part_poly(1, 0, 2) == Poly(Rat(1)));

    Poly expected_211 = MU(1) * MU(1);
    expected_211 *= Rat(mpz_class(1), mpz_class(12));
    expected_211 -= Poly(Rat(mpz_class(1), mpz_class(24)));
    CHECK(one_part_poly(2, 1, 1) == expected_211);
    CHECK(one_part_poly(2, 1, 1).eval({{"mu_1", Rat(2)}}) == Rat(mpz_class(7), mpz_class(24)));

    Poly expected_111 = MU(1) * MU(1) * MU(1) - MU(1);
    expected_111 *= Rat(mpz_class(1), mpz_class(12));
    CHECK(one_part_poly(1, 1, 1) == expected_111);

    // Against the per-point evaluator on small positive profiles.
    const std::vector<std::array<long, 3>> grid = {
        {1, 0, 2}, {1, 0, 3}, {1, 1, 1}, {1, 1, 2}, {2, 1, 1}, {2, 0, 3}, {3, 1, 2}};
    const std::vector<std::vector<long>> points = {{1}, {2}, {5}, {1, 1}, {3, 1}, {4, 2},
                                                   {2, 2}, {1, 1, 1}, {3, 2, 1}, {5, 1, 2}};
    for (const auto& [r, g, n] : grid) {
        const long s = cycle_count(r, g, n);
        const Poly h = one_part_poly(r, g, n);

        // Degree parity matches (r+1)s - n throughout.
        const long D = (r + 1) * s - n;
        for (const auto& [mono, c] : h.terms())
            CHECK((monomial_degree(mono) - D) % 2 == 0);

        for (const auto& pt : points) {
            if (static_cast<long>(pt.size()) != n) continue;
            std::map<std::string, Rat> vals;
            for (long i = 0; i < n; ++i)
                vals["mu_" + std::to_string(i + 1)] = Rat(pt[static_cast<std::size_t>(i)]);
            CHECK(h.eval(vals) == h_one_part(desc(pt), r, s));
        }
    }

    // Symmetric in the parts: swapping values leaves the evaluation fixed.
    const Poly h12 = one_part_poly(1, 1, 2);
    CHECK(h12.eval({{"mu_1", Rat(5)}, {"mu_2", Rat(2)}}) ==
          h12.eval({{"mu_1", Rat(2)}, {"mu_2", Rat(5)}}));

    // One worked value against the full character engine.
    CHECK(h12.eval({{"mu_1", Rat(2)}, {"mu_2", Rat(1)}}) ==
          h_via_operators(Partition({2, 1}), Partition({3}), 1, 3));

    CHECK_THROWS_AS(one_part_poly(1, 0, 1), precondition_error); // zero insertions
    CHECK_THROWS_AS(one_part_poly(2, 0, 2), precondition_error); // non-integer count
    CHECK_THROWS_AS(one_part_poly(0, 0, 2), precondition_error);
    CHECK_THROWS_AS(cycle_count(1, -1, 2), precondition_error);
}

TEST_CASE("bracket extraction reads coefficients off the dimension constraint") {
    // r=1, g=0, n=2: (d/1!) * 1 = mu_1 + mu_2, a single degree-(1,0) row.
    {
        const BracketTable t = extract_brackets(1, 0, 2);
        REQUIRE(t.values.size() == 1);
        const auto& [key, val] = *t.values.begin();
        CHECK(key == BracketKey{0, 2, 0, {1, 0}});
        CHECK(val == Rat(1));
    }
    // r=1, g=1, n=1: (d/2!)(d^3-d)/12 = (mu^4 - mu^2)/24.
    {
        const BracketTable t = extract_brackets(1, 1, 1);
        REQUIRE(t.values.size() == 2);
        CHECK(t.values.at(BracketKey{1, 1, 0, {4}}) == Rat(mpz_class(1), mpz_class(24)));
        CHECK(t.values.at(BracketKey{1, 1, 1, {2}}) == Rat(mpz_class(1), mpz_class(24)));
    }
    // r=2, g=1, n=1: (d/1!)(2mu^2-1)/24 = (2mu^3 - mu)/24.
    {
        const BracketTable t = extract_brackets(2, 1, 1);
        REQUIRE(t.values.size() == 2);
        CHECK(t.values.at(BracketKey{1, 1, 0, {3}}) == Rat(mpz_class(1), mpz_class(12)));
        CHECK(t.values.at(BracketKey{1, 1, 1, {1}}) == Rat(mpz_class(1), mpz_class(24)));
    }
    // r=1, g=0, n=3: (d/2!)(2d) = d^2.
    {
        const BracketTable t = extract_brackets(1, 0, 3);
        REQUIRE(t.values.size() == 2);
        CHECK(t.values.at(BracketKey{0, 3, 0, {2, 0, 0}}) == Rat(1));
        CHECK(t.values.at(BracketKey{0, 3, 0, {1, 1, 0}}) == Rat(2));
    }

    // Round trip: symmetrizing the rows rebuilds (d/s!) * h exactly.
    const std::vector<std::array<long, 3>> grid = {
        {1, 0, 2}, {1, 0, 3}, {1, 1, 1}, {1, 1, 2}, {2, 1, 1}, {2, 0, 3}, {1, 2, 1}};
    for (const auto& [r, g, n] : grid) {
        const long s = cycle_count(r, g, n);
        Poly d(Rat(0));
        for (long i = 1; i <= n; ++i) d += MU(static_cast<int>(i));
        Poly scaled = one_part_poly(r, g, n) * d;
        scaled *= Rat(mpz_class(1), factorial(s));
        const BracketTable t = extract_brackets(r, g, n);
        CHECK(rebuild_scaled_poly(t, n) == scaled);
        // Every stored row satisfies the dimension constraint.
        for (const auto& [key, val] : t.values) {
            long total = 0;
            for (long deg : key.degrees) total += deg;
            CHECK(2 * g * (r + 1) + n - 1 == (2 * key.k + total) * r);
            CHECK(std::is_sorted(key.degrees.rbegin(), key.degrees.rend()));
        }
    }

    // Conflicting duplicate rows are rejected.
    BracketTable t;
    t.record(BracketKey{0, 2, 0, {1, 0}}, Rat(1));
    t.record(BracketKey{0, 2, 0, {0, 1}}, Rat(1)); // same sorted key, same value: fine
    CHECK(t.values.size() == 1);
    CHECK_THROWS_AS(t.record(BracketKey{0, 2, 0, {1, 0}}, Rat(2)), consistency_error);

    CHECK_THROWS_AS(extract_brackets(1, 0, 1), precondition_error);
}

TEST_CASE("T variables climb the raising ladder") {
    const Poly u = Poly::var("u");

    PPoly<Poly> t0;
    t0.add_term(Partition({1}), Poly(Rat(1)));
    CHECK(T_variable(0) == t0);

    PPoly<Poly> t1;
    t1.add_term(Partition({1}), u);
    t1.add_term(Partition({2}), Poly(Rat(1)));
    CHECK(T_variable(1) == t1);

    PPoly<Poly> t2;
    t2.add_term(Partition({1}), u * u);
    t2.add_term(Partition({2}), u * Poly(Rat(3)));
    t2.add_term(Partition({3}), Poly(Rat(2)));
    CHECK(T_variable(2) == t2);

    // At u = 0 the ladder leaves d! q_{d+1}.
    const PPoly<Poly> t3 = T_variable(3);
    PPoly<Poly> t3_top;
    for (const auto& [mono, c] : t3.terms()) {
        PPoly<Poly> single;
        single.add_term(mono, c);
        t3_top += truncate_u_degree(single, 0);
    }
    PPoly<Poly> expected_top;
    expected_top.add_term(Partition({4}), Poly(Rat(6)));
    CHECK(t3_top == expected_top);

    CHECK_THROWS_AS(T_variable(-1), precondition_error);
}

TEST_CASE("Y operators are w-graded with central factorial leading terms") {
    // Vanishing below the leading order, on a few states.
    for (long i = 1; i <= 4; ++i) {
        for (const Partition& lam : {Partition{}, Partition({1}), Partition({2, 1})}) {
            const auto coeffs = apply_Y(i, fock_basis(lam), 8);
            for (long a = 0; a < i; ++a)
                CHECK(pruned(coeffs[static_cast<std::size_t>(a)]).empty());
        }
    }

    // Leading coefficients expand over the translation family with central
    // factorial numbers: rebuilt here from the defining symmetric products.
    const std::vector<std::vector<long>> odd_rows = {{1}, {1, 1}, {1, 5, 4}, {1, 14, 49, 36}};
    const std::vector<std::vector<long>> even_rows = {{1}, {1, 10, 9}, {1, 35, 259, 225}};
    for (long i = 1; i <= 7; ++i) {
        const auto lead = Y_leading_coefficients(i);
        for (const auto& [a, c] : lead) CHECK((i - a) % 2 == 0); // parity pattern
        CHECK(lead.at(i) == Rat(factorial(i)));                  // top term a = i
        if (i % 2 == 1) {
            const auto& row = odd_rows[static_cast<std::size_t>((i - 1) / 2)];
            for (std::size_t t = 0; t < row.size(); ++t) {
                const long a = i - 2 * static_cast<long>(t);
                Rat expect = Rat(row[t]) * Rat(factorial(a));
                if (t % 2 == 1) expect *= Rat(-1);
                CHECK(lead.at(a) == expect);
            }
        } else {
            const auto& row = even_rows[static_cast<std::size_t>(i / 2 - 1)];
            for (std::size_t t = 0; t < row.size(); ++t) {
                const long a = i - 2 * static_cast<long>(t);
                Rat expect = Rat(row[t]) * Rat(factorial(a)) / Rat(1L << (2 * t));
                if (t % 2 == 1) expect *= Rat(-1);
                CHECK(lead.at(a) == expect);
            }
        }
    }

    CHECK_THROWS_AS(Y_leading_coefficients(0), precondition_error);
    CHECK_THROWS_AS(apply_Y_coeff(-1, 0, FockVec{}), precondition_error);
}

TEST_CASE("commuting with the first raising step climbs the Y ladder") {
    const long wcap = 8;
    for (long i = 0; i <= 3; ++i) {
        for (const Partition& lam : partitions_up_to(6)) {
            const FockVec v = fock_basis(lam);
            const FockVec ev = apply_E_coeff(1, -1, v);
            const auto y_ev = apply_Y(i, ev, wcap);
            const auto y_v = apply_Y(i, v, wcap);
            const auto rhs = apply_Y(i + 1, v, wcap);
            for (long a = 0; a <= wcap; ++a) {
                FockVec lhs = y_ev[static_cast<std::size_t>(a)];
                for (const auto& [dst, c] : apply_E_coeff(1, -1, y_v[static_cast<std::size_t>(a)]))
                    fock_add(lhs, dst, c * Rat(-1));
                CHECK(pruned(lhs) == pruned(rhs[static_cast<std::size_t>(a)]));
            }
        }
    }
}

TEST_CASE("the series rebuild their bracket tables") {
    // F: weight-graded match, both cycle widths.
    CHECK(F_series(1, 5) == expected_F(1, 5));
    CHECK(F_series(1, 7) == expected_F(1, 7));
    CHECK(F_series(2, 5) == expected_F(2, 5));

    // G: the deformation direction, including all u-for-weight trades.
    const PPoly<Poly> g1 = G_series(1, 5, 4);
    CHECK(g1 == expected_G(1, 5, 4));
    const PPoly<Poly> g2 = G_series(2, 4, 3);
    CHECK(g2 == expected_G(2, 4, 3));

    // Setting u = 0 recovers F.
    CHECK(truncate_u_degree(g1, 0) == lift(F_series(1, 5)));
    CHECK(truncate_u_degree(g2, 0) == lift(F_series(2, 4)));

    // The u^2 layer is populated (the k = 1 rows have somewhere to land).
    CHECK(truncate_u_degree(g1, 2) != truncate_u_degree(g1, 1));

    CHECK_THROWS_AS(G_series(0, 4, 2), precondition_error);
    CHECK_THROWS_AS(F_series(1, 0), precondition_error);
}

TEST_CASE("the operator flow equals the transported evolution") {
    for (const auto& [r, wcap, ucap] : std::vector<std::array<long, 3>>{{1, 5, 4}, {2, 4, 3}}) {
        const long R = r + 1;
        const auto rules = build_Q(R, wcap);
        PPoly<Rat> seed;
        for (long i = 1; i <= wcap; ++i) seed += PPoly<Rat>::p(i);
        const long tmax = (ucap - 1 + wcap) / R;
        const auto flow = evolve_Q(rules, seed, tmax);

        PPoly<Poly> H;
        for (long t = 0; t <= tmax; ++t) {
            Poly sc = t > 0 ? Poly::var("u", static_cast<int>(R * t)) : Poly(Rat(1));
            sc *= Rat(mpz_class(1), factorial(t));
            for (const auto& [mono, c] : flow[static_cast<std::size_t>(t)].terms()) {
                Poly pc = sc;
                pc *= c;
                H.add_term(mono, std::move(pc));
            }
        }

        PPoly<Poly> Hq = change_vars(H, VarDirection::to_q, wcap);
        Hq.scale(Poly::var("u"));
        Hq = truncate_u_degree(truncate_weight(std::move(Hq), wcap), ucap);

        // All negative powers of u cancel in the final series.
        for (const auto& [mono, c] : Hq.terms()) CHECK(c.min_exponent("u") >= 0);

        CHECK(Hq == G_series(r, wcap, ucap));
    }
}

TEST_CASE("the triangular change of variables inverts exactly under the cap") {
    const long wcap = 4;
    const Poly u = Poly::var("u");

    // Image of p_1: q_1/u - q_2/u^2 + q_3/u^3 - q_4/u^4.
    PPoly<Poly> p1;
    p1.add_term(Partition({1}), Poly(Rat(1)));
    PPoly<Poly> expected_p1;
    for (long i = 1; i <= wcap; ++i) {
        Poly c = Poly::var("u", static_cast<int>(-i));
        if ((i - 1) % 2 != 0) c *= Rat(-1);
        expected_p1.add_term(Partition({i}), std::move(c));
    }
    CHECK(change_vars(p1, VarDirection::to_q, wcap) == expected_p1);

    // Coefficient of q_3 in the image of p_2 is -2/u^3.
    PPoly<Poly> p2;
    p2.add_term(Partition({2}), Poly(Rat(1)));
    const PPoly<Poly> img2 = change_vars(p2, VarDirection::to_q, wcap);
    Poly expected_c = Poly::var("u", -3);
    expected_c *= Rat(-2);
    CHECK(img2.terms().at(Partition({3})) == expected_c);

    // Inverse image of q_1 is u times the sum of all p's under the cap.
    const PPoly<Poly> q1_back = change_vars(p1, VarDirection::to_p, wcap);
    PPoly<Poly> expected_back;
    for (long b = 1; b <= wcap; ++b) expected_back.add_term(Partition({b}), u);
    CHECK(q1_back == expected_back);

    // Round trips fix a mixed polynomial with u-dependent coefficients.
    PPoly<Poly> f = PPoly<Poly>::constant(Poly(Rat(7)));
    f.add_term(Partition({2, 1}), Poly(Rat(3)));
    f.add_term(Partition({3}), u * u - Poly(Rat(2)));
    CHECK(change_vars(change_vars(f, VarDirection::to_q, wcap), VarDirection::to_p, wcap) == f);
    CHECK(change_vars(change_vars(f, VarDirection::to_p, wcap), VarDirection::to_q, wcap) == f);

    // Monomials above the weight cap are dropped.
    PPoly<Poly> heavy;
    heavy.add_term(Partition({5}), Poly(Rat(1)));
    CHECK(change_vars(heavy, VarDirection::to_q, wcap).is_zero());

    CHECK_THROWS_AS(change_vars(f, VarDirection::to_q, 0), precondition_error);
}

// ---------------------------------------------------------------------------
// Quadratic exchange relations for the power-sum coefficients of F, with the
// relation set discovered from exact minors of random matrices.

namespace {

struct Lcg {
    std::uint64_t s;
    explicit Lcg(std::uint64_t seed) : s(seed) {}
    long small() { // deterministic entries in [-9, 9]
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<long>((s >> 33) % 19) - 9;
    }
};

Rat exact_det(std::vector<std::vector<Rat>> m) {
    const std::size_t k = m.size();
    Rat out(1);
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        while (piv < k && m[piv][col].is_zero()) ++piv;
        if (piv == k) return Rat(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            out *= Rat(-1);
        }
        out *= m[col][col];
        const Rat inv = Rat(1) / m[col][col];
        for (std::size_t j = col; j < k; ++j) m[col][j] *= inv;
        for (std::size_t row = col + 1; row < k; ++row) {
            if (m[row][col].is_zero()) continue;
            const Rat f = m[row][col];
            for (std::size_t j = col; j < k; ++j) m[row][j] -= f * m[col][j];
        }
    }
    return out;
}

// Determinant in the columns lambda_i - i + K of a K-row matrix.
Rat partition_minor(const Partition& lam, const std::vector<std::vector<Rat>>& A, long K) {
    std::vector<std::vector<Rat>> sub;
    for (long i = 1; i <= K; ++i) {
        const long part = i <= lam.length() ? lam.part(static_cast<std::size_t>(i - 1)) : 0;
        const long col = part - i + K;
        std::vector<Rat> row;
        for (long rr = 0; rr < K; ++rr)
            row.push_back(A[static_cast<std::size_t>(rr)][static_cast<std::size_t>(col)]);
        sub.push_back(std::move(row));
    }
    return exact_det(std::move(sub));
}

std::vector<std::vector<Rat>> random_matrix(Lcg& rng, long rows, long cols) {
    std::vector<std::vector<Rat>> A(static_cast<std::size_t>(rows));
    for (auto& row : A) {
        row.reserve(static_cast<std::size_t>(cols));
        for (long j = 0; j < cols; ++j) row.emplace_back(rng.small());
    }
    return A;
}

// Basis of the nullspace {x : rows * x = 0} via exact row reduction.
std::vector<std::vector<Rat>> nullspace(std::vector<std::vector<Rat>> rows, std::size_t ncols) {
    std::vector<long> pivot_of_col(ncols, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        const Rat inv = Rat(1) / rows[rank][col];
        for (std::size_t j = col; j < ncols; ++j) rows[rank][j] *= inv;
        for (std::size_t r2 = 0; r2 < rows.size(); ++r2) {
            if (r2 == rank || rows[r2][col].is_zero()) continue;
            const Rat f = rows[r2][col];
            for (std::size_t j = col; j < ncols; ++j) rows[r2][j] -= f * rows[rank][j];
        }
        pivot_of_col[col] = static_cast<long>(rank);
        ++rank;
    }
    std::vector<std::vector<Rat>> basis;
    for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
        if (pivot_of_col[free_col] >= 0) continue;
        std::vector<Rat> v(ncols, Rat(0));
        v[free_col] = Rat(1);
        for (std::size_t col = 0; col < ncols; ++col) {
            if (pivot_of_col[col] < 0) continue;
            v[col] = rows[static_cast<std::size_t>(pivot_of_col[col])][free_col] * Rat(-1);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::map<Partition, Rat> schur_coefficients(const PPoly<Rat>& f, long wmax) {
    std::map<Partition, Rat> out;
    for (long w = 0; w <= wmax; ++w) {
        for (const Partition& lam : partitions_of(w)) {
            Rat a(0);
            for (const Partition& mu : partitions_of(w)) {
                const auto it = f.terms().find(mu);
                if (it != f.terms().end()) a += Rat(character(lam, mu)) * it->second;
            }
            out[lam] = a;
        }
    }
    return out;
}

} // namespace

TEST_CASE("power-sum coefficients of F solve the quadratic exchange relations") {
    const long wmax = 6;
    const long K = 6, M = 13;
    const std::vector<Partition> all_parts = partitions_up_to(wmax);

    // Pairs (lambda <= mu) of total weight W, for each W.
    std::vector<std::vector<std::pair<Partition, Partition>>> pairs_by_weight(
        static_cast<std::size_t>(wmax) + 1);
    for (const Partition& a : all_parts)
        for (const Partition& b : all_parts) {
            if (a.size() + b.size() > wmax) continue;
            if (b < a) continue;
            pairs_by_weight[static_cast<std::size_t>(a.size() + b.size())].emplace_back(a, b);
        }

    Lcg rng(0x5eed5eedULL);
    const auto sample_minors = [&] {
        const auto A = random_matrix(rng, K, M);
        std::map<Partition, Rat> m;
        for (const Partition& lam : all_parts) m[lam] = partition_minor(lam, A, K);
        return m;
    };

    std::vector<std::pair<std::vector<std::pair<Partition, Partition>>, std::vector<Rat>>>
        relations; // (pair list of that weight, coefficient vector)
    for (long W = 2; W <= wmax; ++W) {
        const auto& pairs = pairs_by_weight[static_cast<std::size_t>(W)];
        const std::size_t ncols = pairs.size();
        std::vector<std::vector<Rat>> samples;
        for (std::size_t rep = 0; rep < 3 * ncols + 5; ++rep) {
            const auto m = sample_minors();
            std::vector<Rat> row;
            row.reserve(ncols);
            for (const auto& [a, b] : pairs) row.push_back(m.at(a) * m.at(b));
            samples.push_back(std::move(row));
        }
        for (auto& rel : nullspace(std::move(samples), ncols)) {
            // Each discovered relation must hold on fresh sample points.
            for (int rep = 0; rep < 6; ++rep) {
                const auto m = sample_minors();
                Rat acc(0);
                for (std::size_t j = 0; j < ncols; ++j)
                    acc += rel[j] * m.at(pairs[j].first) * m.at(pairs[j].second);
                REQUIRE(acc == Rat(0));
            }
            relations.emplace_back(pairs, std::move(rel));
        }
    }
    CHECK(relations.size() >= 1);

    const auto eval_relations = [&](const std::map<Partition, Rat>& a) {
        std::size_t violated = 0;
        for (const auto& [pairs, rel] : relations) {
            Rat acc(0);
            for (std::size_t j = 0; j < pairs.size(); ++j)
                acc += rel[j] * a.at(pairs[j].first) * a.at(pairs[j].second);
            if (!acc.is_zero()) ++violated;
        }
        return violated;
    };

    // The relation set has teeth: some unit perturbation of the coefficients
    // of F breaks at least one relation.
    const std::map<Partition, Rat> coeffs = schur_coefficients(F_series(1, wmax), wmax);
    bool teeth = false;
    for (const Partition& lam : all_parts) {
        std::map<Partition, Rat> perturbed = coeffs;
        perturbed[lam] += Rat(1);
        if (eval_relations(perturbed) > 0) {
            teeth = true;
            break;
        }
    }
    CHECK(teeth);

    // And F itself satisfies every relation.
    CHECK(eval_relations(coeffs) == 0);
}
