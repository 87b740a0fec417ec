#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <vector>

#include "hurwitz/chambers.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/patterns.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

namespace {

void check_wall_shape(const Wall& w, int m, int n) {
    auto check_side = [](const std::vector<int>& idx, int size, const char* side) {
        if (idx.empty() || idx.size() >= static_cast<std::size_t>(size))
            throw precondition_error(std::string("wall: ") + side +
                                     "-side index set must be non-empty and proper");
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (idx[i] < 1 || idx[i] > size)
                throw precondition_error(std::string("wall: ") + side + "-index out of range");
            if (i && idx[i] <= idx[i - 1])
                throw precondition_error(std::string("wall: ") + side +
                                         "-indices must be strictly increasing");
        }
    };
    check_side(w.I, m, "x");
    check_side(w.J, n, "y");
}

// split v into (selected, complement) by 1-based indices
std::pair<std::vector<long>, std::vector<long>> split_by(const std::vector<long>& v,
                                                         const std::vector<int>& idx) {
    std::vector<bool> in(v.size(), false);
    for (int i : idx) in[static_cast<std::size_t>(i - 1)] = true;
    std::vector<long> sel, rest;
    for (std::size_t i = 0; i < v.size(); ++i) (in[i] ? sel : rest).push_back(v[i]);
    return {sel, rest};
}

Partition sorted_partition(std::vector<long> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<long>());
    return Partition(parts);
}

// Re-index a series over its own z_1..z_k into the s-variable box, sending
// its i-th variable to slot slots[i] (0-based).
Series<Rat> embed_slots(const Series<Rat>& small, const std::vector<std::size_t>& slots,
                        const VarsPtr& big) {
    Series<Rat> out(big);
    const std::size_t width = big->names.size();
    for (const auto& [e, c] : small.terms()) {
        Expo big_e(width, 0);
        for (std::size_t i = 0; i < e.size(); ++i) big_e[slots[i]] = e[i];
        out.add_term(big_e, c);
    }
    return out;
}

std::string lattice_point_str(const LatticePoint& pt) {
    std::ostringstream os;
    os << "x=(";
    for (std::size_t i = 0; i < pt.x.size(); ++i) os << (i ? "," : "") << pt.x[i];
    os << "), y=(";
    for (std::size_t j = 0; j < pt.y.size(); ++j) os << (j ? "," : "") << pt.y[j];
    os << ")";
    return os.str();
}

void each_composition(long total, int len, std::vector<long>& cur,
                      const std::function<void(const std::vector<long>&)>& emit) {
    if (len == 1) {
        if (total >= 1) {
            cur.push_back(total);
            emit(cur);
            cur.pop_back();
        }
        return;
    }
    for (long first = 1; first <= total - (len - 1); ++first) {
        cur.push_back(first);
        each_composition(total - first, len - 1, cur, emit);
        cur.pop_back();
    }
}

// Balanced lattice points on the positive side of the wall, smallest totals
// first.
std::vector<LatticePoint> wall_side_points(const Wall& w, int m, int n, std::size_t count) {
    std::vector<LatticePoint> pts;
    for (long total = std::max(m, n); pts.size() < count && total <= 400; ++total) {
        std::vector<long> xs;
        each_composition(total, m, xs, [&](const std::vector<long>& x) {
            std::vector<long> ys;
            each_composition(total, n, ys, [&](const std::vector<long>& y) {
                if (pts.size() < count && wall_value(w, x, y) >= 1)
                    pts.push_back(LatticePoint{x, y});
            });
        });
    }
    if (pts.size() < count)
        throw precondition_error("check_wall_crossing: not enough sample points");
    return pts;
}

} // namespace

Rat wall_crossing_rhs(long r, long s, const Wall& w, const LatticePoint& pt) {
    if (r < 1) throw precondition_error("wall_crossing_rhs: r must be >= 1");
    if (s < 0) throw precondition_error("wall_crossing_rhs: s must be >= 0");
    if (s > 20) throw precondition_error("wall_crossing_rhs: s too large for subset enumeration");
    const int m = static_cast<int>(pt.x.size());
    const int n = static_cast<int>(pt.y.size());
    check_wall_shape(w, m, n);
    const long delta = wall_value(w, pt.x, pt.y);
    if (delta < 1)
        throw precondition_error("wall_crossing_rhs: point must satisfy x_I - y_J >= 1");

    auto [x_in, x_out] = split_by(pt.x, w.I);
    auto [y_in, y_out] = split_by(pt.y, w.J);
    std::vector<long> y_in_d = y_in;
    y_in_d.push_back(delta);
    std::vector<long> x_out_d = x_out;
    x_out_d.push_back(delta);
    const Partition mu_a = sorted_partition(x_in);
    const Partition nu_a = sorted_partition(y_in_d);
    const Partition mu_b = sorted_partition(x_out_d);
    const Partition nu_b = sorted_partition(y_out);

    const long cap = r + 1;
    const VarsPtr vars = make_z_vars(static_cast<int>(s), static_cast<int>(cap));
    const Rat dr(delta);

    // Mixed-level series of the two sub-profiles, by middle-slot count.
    std::vector<std::optional<Series<Rat>>> sub_a(static_cast<std::size_t>(s) + 1);
    std::vector<std::optional<Series<Rat>>> sub_b(static_cast<std::size_t>(s) + 1);
    auto sub_series = [&](std::vector<std::optional<Series<Rat>>>& cache, const Partition& mu,
                          const Partition& nu, std::size_t k) -> const Series<Rat>& {
        if (!cache[k]) cache[k] = mixed_cycle_series(mu, nu, static_cast<long>(k), cap);
        return *cache[k];
    };

    const Series<Rat> full_ratio = zeta_ratio(vars, dr, z_subset_form<Rat>(vars->names));

    Rat total(0);
    const unsigned long mask_end = 1ul << s;
    for (unsigned long mask = 0; mask < mask_end; ++mask) {
        std::vector<std::size_t> slots_a, slots_b;
        std::vector<std::string> names_a, names_b;
        for (std::size_t k = 0; k < static_cast<std::size_t>(s); ++k) {
            if (mask & (1ul << k)) {
                slots_a.push_back(k);
                names_a.push_back(vars->names[k]);
            } else {
                slots_b.push_back(k);
                names_b.push_back(vars->names[k]);
            }
        }
        const Series<Rat>& ha = sub_series(sub_a, mu_a, nu_a, slots_a.size());
        if (ha.is_zero()) continue;
        const Series<Rat>& hb = sub_series(sub_b, mu_b, nu_b, slots_b.size());
        if (hb.is_zero()) continue;

        Series<Rat> term = embed_slots(ha, slots_a, vars) * embed_slots(hb, slots_b, vars);
        term = term * full_ratio;
        term = term.exact_divide(zeta_ratio(vars, dr, z_subset_form<Rat>(names_a)));
        term = term.exact_divide(zeta_ratio(vars, dr, z_subset_form<Rat>(names_b)));
        term.scale(dr * dr);
        total += term.corner_coeff();
    }
    return total;
}

WallCrossReport check_wall_crossing(long r, long s, const Wall& w, const Chamber& c1,
                                    const Chamber& c2, std::size_t num_points) {
    if (c1.m != c2.m || c1.n != c2.n)
        throw precondition_error("check_wall_crossing: chambers live in different spaces");
    const int m = c1.m, n = c1.n;
    check_wall_shape(w, m, n);
    const auto all_walls = walls(m, n);
    std::size_t widx = all_walls.size();
    for (std::size_t i = 0; i < all_walls.size(); ++i)
        if (all_walls[i] == w) {
            widx = i;
            break;
        }
    if (widx == all_walls.size())
        throw precondition_error("check_wall_crossing: wall is not in canonical form");
    if (c1.signs.size() != all_walls.size() || c2.signs.size() != all_walls.size())
        throw precondition_error("check_wall_crossing: chamber sign vectors malformed");
    for (std::size_t i = 0; i < all_walls.size(); ++i) {
        if (i == widx) {
            if (c1.signs[i] == c2.signs[i])
                throw precondition_error(
                    "check_wall_crossing: chambers agree at the crossed wall");
        } else if (c1.signs[i] != c2.signs[i]) {
            throw precondition_error(
                "check_wall_crossing: chambers differ away from the crossed wall");
        }
    }

    const ChamberFit fit1 = fit_polynomial(r, s, c1);
    const ChamberFit fit2 = fit_polynomial(r, s, c2);

    WallCrossReport rep;
    rep.wall = w;
    rep.difference = fit1.poly - fit2.poly;
    // The closed form is stated for delta = x_I - y_J >= 1 and gives
    // fit(side with x_I > y_J) - fit(side with x_I < y_J).
    const int orientation = c1.signs[widx] == 1 ? 1 : -1;

    rep.matched = true;
    const std::vector<LatticePoint> pts = wall_side_points(w, m, n, num_points);
    for (const auto& pt : pts) {
        const Rat lhs = eval_free_poly(rep.difference, m, n, pt.x, pt.y);
        Rat rhs = wall_crossing_rhs(r, s, w, pt);
        if (orientation < 0) rhs = Rat(0) - rhs;
        ++rep.points_checked;
        if (!(lhs == rhs)) {
            rep.matched = false;
            if (rep.detail.empty())
                rep.detail = "difference and closed form disagree at " + lattice_point_str(pt);
        }
    }
    return rep;
}

} // namespace hurwitz
