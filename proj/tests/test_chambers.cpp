#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <utility>
#include <vector>

#include "hurwitz/chambers.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/numbers.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/patterns.hpp"
#include "hurwitz/poly.hpp"

using namespace hurwitz;

namespace {

Poly X(int i) { return Poly::var("x" + std::to_string(i)); }
Poly Y(int j) { return Poly::var("y" + std::to_string(j)); }

Partition desc(std::vector<long> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<long>());
    return Partition(parts);
}

// Brute-force canonical wall list: every non-empty proper pair, folded under
// complementation onto the representative whose x-side contains 1.
std::set<std::pair<std::set<int>, std::set<int>>> wall_oracle(int m, int n) {
    std::set<std::pair<std::set<int>, std::set<int>>> canon;
    for (unsigned im = 1; im + 1 < (1u << m); ++im) {
        for (unsigned jm = 1; jm + 1 < (1u << n); ++jm) {
            std::set<int> I, J, Ic, Jc;
            for (int b = 0; b < m; ++b) ((im >> b) & 1u ? I : Ic).insert(b + 1);
            for (int b = 0; b < n; ++b) ((jm >> b) & 1u ? J : Jc).insert(b + 1);
            if (I.count(1))
                canon.emplace(I, J);
            else
                canon.emplace(Ic, Jc);
        }
    }
    return canon;
}

} // namespace

TEST_CASE("canonical walls: trivial cases and enumeration oracle") {
    CHECK(walls(1, 1).empty());
    CHECK(walls(1, 5).empty());
    CHECK(walls(2, 1).empty());
    CHECK(walls(4, 1).empty());

    const auto w22 = walls(2, 2);
    REQUIRE(w22.size() == 2);
    CHECK(w22[0] == Wall{{1}, {1}});
    CHECK(w22[1] == Wall{{1}, {2}});
    CHECK(w22[0].str() == "x{1} - y{1}");

    for (int m = 1; m <= 4; ++m) {
        for (int n = 1; n <= 4; ++n) {
            const auto ws = walls(m, n);
            const auto oracle = wall_oracle(m, n);
            REQUIRE(ws.size() == oracle.size());
            std::set<std::pair<std::set<int>, std::set<int>>> seen;
            for (const auto& w : ws) {
                REQUIRE(!w.I.empty());
                CHECK(w.I.front() == 1); // canonical side contains index 1
                CHECK(w.I.size() < static_cast<std::size_t>(m));
                CHECK(!w.J.empty());
                CHECK(w.J.size() < static_cast<std::size_t>(n));
                seen.emplace(std::set<int>(w.I.begin(), w.I.end()),
                             std::set<int>(w.J.begin(), w.J.end()));
            }
            CHECK(seen == oracle); // no duplicates, exactly the canonical set
        }
    }
}

TEST_CASE("wall values and sign vectors of points") {
    const Wall w11{{1}, {1}}, w12{{1}, {2}};
    CHECK(wall_value(w11, {3, 1}, {2, 2}) == 1);
    CHECK(wall_value(w12, {3, 1}, {2, 2}) == 1);
    CHECK(wall_value(w11, {3, 3}, {4, 2}) == -1);

    const auto c = chamber_of({3, 1}, {2, 2});
    REQUIRE(c.has_value());
    CHECK(c->m == 2);
    CHECK(c->n == 2);
    CHECK(c->signs == std::vector<int>{1, 1});

    CHECK(!chamber_of({2, 2}, {2, 2}).has_value()); // on x1 = y1
    CHECK(!chamber_of({3, 1}, {3, 1}).has_value()); // on x1 = y1

    const auto a = chamber_of({5, 1}, {4, 2});
    const auto b = chamber_of({7, 1}, {6, 2});
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(*a == *b); // same sign vector, same chamber

    // one-part sides have no walls: a single global chamber
    const auto g = chamber_of({4, 2, 1}, {7});
    REQUIRE(g.has_value());
    CHECK(g->signs.empty());

    CHECK_THROWS_AS((void)chamber_of({2, 1}, {1, 1}), precondition_error); // unbalanced
    CHECK_THROWS_AS((void)chamber_of({0, 3}, {2, 1}), precondition_error); // non-positive
    CHECK_THROWS_AS((void)chamber_of({}, {1}), precondition_error);
}

TEST_CASE("chamber point enumeration is deterministic, interior, and fails on empty chambers") {
    const auto c = chamber_of({3, 1}, {2, 2});
    REQUIRE(c.has_value());
    const auto pts = chamber_points(*c, 12);
    REQUIRE(pts.size() == 12);
    CHECK(pts[0] == LatticePoint{{3, 1}, {2, 2}}); // smallest total, first in order
    std::set<std::pair<std::vector<long>, std::vector<long>>> uniq;
    for (const auto& p : pts) {
        const auto cp = chamber_of(p.x, p.y);
        REQUIRE(cp.has_value());
        CHECK(*cp == *c);
        uniq.emplace(p.x, p.y);
    }
    CHECK(uniq.size() == pts.size());

    // contradictory signs: x1 < y1 but x1 > y1 + y2 is impossible
    Chamber impossible;
    impossible.m = 2;
    impossible.n = 3;
    impossible.signs = {-1, 1, 1, 1, 1, 1};
    REQUIRE(walls(2, 3).size() == 6);
    REQUIRE(walls(2, 3)[0] == Wall{{1}, {1}});
    REQUIRE(walls(2, 3)[2] == Wall{{1}, {1, 2}});
    CHECK_THROWS_AS((void)chamber_points(impossible, 1, 30), precondition_error);

    Chamber bad = *c;
    bad.signs = {1}; // wrong arity
    CHECK_THROWS_AS((void)chamber_points(bad, 1), precondition_error);
}

TEST_CASE("degree-one fits on the four two-by-two chambers") {
    // (r+1)s+1-m-n = 1, genus 0: each chamber carries a linear polynomial
    const ChamberFit fpp = fit_polynomial(1, 2, {5, 1}, {3, 3}); // signs (+,+)
    CHECK(fpp.degree_bound == 1);
    CHECK(fpp.parity_allowed);
    CHECK(fpp.genus == 0);
    CHECK(fpp.poly == Poly(Rat(2)) * X(1));
    REQUIRE(fpp.components.size() == 1);
    CHECK(fpp.components.count(1) == 1);
    CHECK(fpp.holdout_count >= 3);

    const ChamberFit fmp = fit_polynomial(1, 2, {3, 3}, {4, 2}); // signs (-,+)
    CHECK(fmp.poly == Poly(Rat(2)) * Y(1));

    const ChamberFit fpm = fit_polynomial(1, 2, {3, 3}, {2, 4}); // signs (+,-)
    const ChamberFit fmm = fit_polynomial(1, 2, {1, 5}, {3, 3}); // signs (-,-)
    for (const ChamberFit* f : {&fpp, &fmp, &fpm, &fmm}) {
        CHECK(f->poly.degree() == 1);
        const auto rep = structure_check(*f, {f->samples.begin(), f->samples.begin() + 5});
        CHECK(rep.ok());
        CHECK(rep.observed_degrees == std::vector<long>{1});
    }

    // fits reproduce the character-sum engine at fresh interior points
    for (const ChamberFit* f : {&fpp, &fmp, &fpm, &fmm}) {
        const auto fresh = chamber_points(f->chamber, f->samples.size() + 3);
        for (std::size_t i = f->samples.size(); i < fresh.size(); ++i) {
            const auto& p = fresh[i];
            CHECK(eval_fit(*f, p.x, p.y) == h_via_operators(desc(p.x), desc(p.y), 1, 2));
        }
    }
}

TEST_CASE("fit preconditions and the witness overload") {
    const Chamber c22 = *chamber_of({3, 1}, {2, 2});
    CHECK_THROWS_AS((void)fit_polynomial(0, 2, c22), precondition_error);  // r too small
    CHECK_THROWS_AS((void)fit_polynomial(1, -1, c22), precondition_error); // negative s
    CHECK_THROWS_AS((void)fit_polynomial(1, 1, c22), precondition_error);  // degree bound -1
    CHECK_THROWS_AS((void)fit_polynomial(1, 2, {2, 2}, {2, 2}), precondition_error); // on wall
}

TEST_CASE("parity-forbidden data fits to the zero polynomial") {
    // r s odd while m + n is even: every value vanishes
    const ChamberFit f = fit_polynomial(1, 3, {5, 1}, {3, 3});
    CHECK(f.degree_bound == 3);
    CHECK(!f.parity_allowed);
    CHECK(f.genus == -1);
    CHECK(f.poly.is_zero());
    CHECK(f.components.empty());
    const auto rep = structure_check(f, {f.samples.begin(), f.samples.begin() + 3});
    CHECK(rep.ok());
    CHECK(rep.observed_degrees.empty());
}

TEST_CASE("global polynomial for one-part profiles on both sides") {
    // no walls: a single chamber covers everything; degrees {3, 1}
    const ChamberFit f = fit_polynomial(1, 2, {2}, {2});
    CHECK(f.degree_bound == 3);
    CHECK(f.genus == 1);
    Poly expected = poly_pow(X(1), 3) - X(1);
    expected *= Rat(1, 12);
    CHECK(f.poly == expected); // (x1^3 - x1)/12
    CHECK(eval_fit(f, {2}, {2}) == Rat(1, 2));
    for (long d = 2; d <= 9; ++d) {
        CHECK(eval_fit(f, {d}, {d}) == h_one_part(Partition({d}), 1, 2));
    }
    CHECK(eval_fit(f, {5}, {5}) == h_via_operators(Partition({5}), Partition({5}), 1, 2));
    const auto rep = structure_check(f, chamber_points(f.chamber, 5));
    CHECK(rep.ok());
    CHECK(rep.observed_degrees == std::vector<long>{3, 1});
}

TEST_CASE("global polynomial for a one-part y-side matches the closed form") {
    // m=2, n=1, three movable branch points: degrees {4, 2}
    const ChamberFit f = fit_polynomial(1, 3, {2, 1}, {3});
    CHECK(f.chamber.signs.empty());
    CHECK(f.degree_bound == 4);
    CHECK(f.genus == 1);
    REQUIRE(f.components.size() == 2);
    CHECK(f.components.count(4) == 1);
    CHECK(f.components.count(2) == 1);
    const auto rep = structure_check(f, {f.samples.begin(), f.samples.begin() + 5});
    CHECK(rep.ok());
    CHECK(rep.observed_degrees == std::vector<long>{4, 2});

    const auto fresh = chamber_points(f.chamber, f.samples.size() + 4);
    for (std::size_t i = f.samples.size(); i < fresh.size(); ++i) {
        const auto& p = fresh[i];
        const Rat v = eval_fit(f, p.x, p.y);
        CHECK(v == h_one_part(desc(p.x), 1, 3));
    }
    CHECK(eval_fit(f, {4, 3}, {7}) == h_via_operators(desc({4, 3}), Partition({7}), 1, 3));
}

TEST_CASE("four-point fits with four movable branch points: degrees, parity, signs") {
    // degree bound 5, genus 1: exactly the degrees {5, 3}, odd throughout,
    // top piece positive and next piece negative on the chamber
    const ChamberFit fpp = fit_polynomial(1, 4, {5, 1}, {3, 3});
    CHECK(fpp.degree_bound == 5);
    CHECK(fpp.genus == 1);
    CHECK(fpp.holdout_count >= 14);
    REQUIRE(fpp.components.size() == 2);
    CHECK(fpp.components.count(5) == 1);
    CHECK(fpp.components.count(3) == 1);

    // the lower piece collapses to a clean closed form on this chamber
    Poly lower = Poly(Rat(-1)) * X(1) * poly_pow(X(1) + X(2), 2);
    CHECK(fpp.components.at(3) == lower);

    const auto rep = structure_check(fpp, {fpp.samples.begin(), fpp.samples.begin() + 5});
    CHECK(rep.ok());
    CHECK(rep.observed_degrees == std::vector<long>{5, 3});

    const ChamberFit fmp = fit_polynomial(1, 4, {3, 3}, {4, 2});
    REQUIRE(fmp.components.size() == 2);
    const auto rep2 = structure_check(fmp, {fmp.samples.begin(), fmp.samples.begin() + 5});
    CHECK(rep2.ok());
    CHECK(rep2.observed_degrees == std::vector<long>{5, 3});

    // the two fits genuinely differ (piecewise, not globally polynomial)
    CHECK(fpp.poly != fmp.poly);

    // fresh points, one checked against the character engine directly
    const auto fresh = chamber_points(fpp.chamber, fpp.samples.size() + 2);
    for (std::size_t i = fpp.samples.size(); i < fresh.size(); ++i) {
        const auto& p = fresh[i];
        CHECK(eval_fit(fpp, p.x, p.y) == hurwitz_patterns(desc(p.x), desc(p.y), 1, 4));
    }
    CHECK(eval_fit(fpp, {3, 1}, {2, 2}) ==
          h_via_operators(Partition({3, 1}), Partition({2, 2}), 1, 4));

    // structure_check rejects points from a different chamber
    CHECK_THROWS_AS((void)structure_check(fpp, {LatticePoint{{3, 3}, {4, 2}}}),
                    precondition_error);
}

TEST_CASE("structure holds with a second cycle width") {
    // r=2, s=2: degree bound 3, genus 1, degrees {3, 1}
    const ChamberFit f = fit_polynomial(2, 2, {5, 1}, {3, 3});
    CHECK(f.degree_bound == 3);
    CHECK(f.genus == 1);
    REQUIRE(f.components.size() == 2);
    const auto rep = structure_check(f, {f.samples.begin(), f.samples.begin() + 5});
    CHECK(rep.ok());
    CHECK(rep.observed_degrees == std::vector<long>{3, 1});
    const auto fresh = chamber_points(f.chamber, f.samples.size() + 2);
    const auto& p = fresh.back();
    CHECK(eval_fit(f, p.x, p.y) == h_via_operators(desc(p.x), desc(p.y), 2, 2));
}

TEST_CASE("crossing difference matches the closed form on the first wall") {
    const Wall w11{{1}, {1}};
    const Chamber cpp = *chamber_of({5, 1}, {3, 3}); // x1 > y1 side
    const Chamber cmp = *chamber_of({3, 3}, {4, 2}); // x1 < y1 side

    const auto rep = check_wall_crossing(1, 2, w11, cpp, cmp, 8);
    CHECK(rep.matched);
    CHECK(rep.points_checked == 8);
    CHECK(rep.detail.empty());
    CHECK(rep.difference == Poly(Rat(2)) * X(1) - Poly(Rat(2)) * Y(1));
    CHECK(rep.difference.degree() <= 1);

    // swapping the chambers negates the difference and still matches
    const auto swapped = check_wall_crossing(1, 2, w11, cmp, cpp, 6);
    CHECK(swapped.matched);
    CHECK(swapped.difference == Poly(Rat(2)) * Y(1) - Poly(Rat(2)) * X(1));

    // frozen closed-form value at one point
    CHECK(wall_crossing_rhs(1, 2, w11, LatticePoint{{5, 1}, {3, 3}}) == Rat(4));
}

TEST_CASE("crossing difference on the second wall and other cycle widths") {
    const Wall w12{{1}, {2}};
    const Chamber cpp = *chamber_of({5, 1}, {3, 3});
    const Chamber cpm = *chamber_of({3, 3}, {2, 4});
    CHECK(check_wall_crossing(1, 2, w12, cpp, cpm, 6).matched);

    const Wall w11{{1}, {1}};
    const Chamber cmp = *chamber_of({3, 3}, {4, 2});
    CHECK(check_wall_crossing(2, 1, w11, cpp, cmp, 6).matched); // constants, width 3
    const auto r22 = check_wall_crossing(2, 2, w11, cpp, cmp, 6);
    CHECK(r22.matched);
    CHECK(r22.difference.degree() <= 3);
}

TEST_CASE("crossing preconditions") {
    const Wall w11{{1}, {1}};
    const Chamber cpp = *chamber_of({5, 1}, {3, 3});
    const Chamber cmp = *chamber_of({3, 3}, {4, 2});
    const Chamber cmm = *chamber_of({1, 5}, {3, 3});

    // negative or zero wall value at the evaluation point
    CHECK_THROWS_AS((void)wall_crossing_rhs(1, 2, w11, LatticePoint{{3, 3}, {4, 2}}),
                    precondition_error);
    CHECK_THROWS_AS((void)wall_crossing_rhs(1, 2, w11, LatticePoint{{2, 2}, {2, 2}}),
                    precondition_error);
    CHECK_THROWS_AS((void)wall_crossing_rhs(0, 2, w11, LatticePoint{{5, 1}, {3, 3}}),
                    precondition_error);
    CHECK_THROWS_AS(
        (void)wall_crossing_rhs(1, 2, Wall{{}, {1}}, LatticePoint{{5, 1}, {3, 3}}),
        precondition_error);
    CHECK_THROWS_AS(
        (void)wall_crossing_rhs(1, 2, Wall{{1, 2}, {1}}, LatticePoint{{5, 1}, {3, 3}}),
        precondition_error); // x-side must stay proper

    // chambers must differ at exactly the crossed wall
    CHECK_THROWS_AS((void)check_wall_crossing(1, 2, w11, cpp, cmm, 6), precondition_error);
    CHECK_THROWS_AS((void)check_wall_crossing(1, 2, w11, cpp, cpp, 6), precondition_error);
    // wall must be canonical for chamber bookkeeping
    CHECK_THROWS_AS((void)check_wall_crossing(1, 2, Wall{{2}, {1}}, cpp, cmp, 6),
                    precondition_error);
}
