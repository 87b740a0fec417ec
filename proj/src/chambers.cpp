#include "hurwitz/chambers.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <utility>

#include "hurwitz/errors.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/patterns.hpp"

namespace hurwitz {

namespace {

void check_lattice_point(const std::vector<long>& x, const std::vector<long>& y) {
    if (x.empty() || y.empty())
        throw precondition_error("lattice point: both sides need at least one part");
    long sx = 0, sy = 0;
    for (long v : x) {
        if (v < 1) throw precondition_error("lattice point: parts must be positive");
        sx += v;
    }
    for (long v : y) {
        if (v < 1) throw precondition_error("lattice point: parts must be positive");
        sy += v;
    }
    if (sx != sy) throw precondition_error("lattice point: totals differ");
}

std::string index_set_str(const std::vector<int>& idx) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) os << ',';
        os << idx[i];
    }
    os << '}';
    return os.str();
}

void check_chamber(const Chamber& c) {
    if (c.m < 1 || c.n < 1) throw precondition_error("chamber: m, n must be >= 1");
    const auto ws = walls(c.m, c.n);
    if (c.signs.size() != ws.size())
        throw precondition_error("chamber: sign count does not match the wall count");
    for (int s : c.signs)
        if (s != 1 && s != -1) throw precondition_error("chamber: signs must be +1 or -1");
}

// Ordered positive integer tuples of a given length and total, lexicographic.
void for_each_composition(long total, int len, std::vector<long>& cur,
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
        for_each_composition(total - first, len - 1, cur, emit);
        cur.pop_back();
    }
}

// Balanced points in increasing total size, then lexicographic; visit returns
// true to stop the scan.
void scan_balanced_points(int m, int n, long size_limit,
                          const std::function<bool(const std::vector<long>&,
                                                   const std::vector<long>&)>& visit) {
    bool stop = false;
    for (long total = std::max(m, n); !stop && total <= size_limit; ++total) {
        std::vector<long> xs;
        for_each_composition(total, m, xs, [&](const std::vector<long>& x) {
            if (stop) return;
            std::vector<long> ys;
            for_each_composition(total, n, ys, [&](const std::vector<long>& y) {
                if (!stop && visit(x, y)) stop = true;
            });
        });
    }
}

constexpr long kDefaultSizeLimit = 400;

// Exponent tuples over `nvars` variables with total degree <= bound,
// deterministic order.
std::vector<std::vector<int>> exponents_up_to(std::size_t nvars, long bound) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(nvars, 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t pos, long rem) {
        if (pos == nvars) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= rem; ++e) {
            cur[pos] = e;
            rec(pos + 1, rem - e);
        }
        cur[pos] = 0;
    };
    rec(0, bound);
    return out;
}

// Incremental exact row reduction kept in reduced echelon form. Rows carry a
// trailing right-hand side; a dependent row is reported (not checked against
// its right-hand side here -- dependent points are validated against the
// solved polynomial, which names a witness).
class ExactRref {
public:
    explicit ExactRref(std::size_t cols) : cols_(cols) {}

    std::size_t rank() const { return rows_.size(); }

    // true if the row extended the rank
    bool add(std::vector<Rat> row) {
        if (row.size() != cols_ + 1)
            throw precondition_error("row solver: wrong row length");
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rat f = row[pivot_[i]];
            if (f.is_zero()) continue;
            for (std::size_t c = 0; c <= cols_; ++c) row[c] -= f * rows_[i][c];
        }
        std::size_t p = cols_;
        for (std::size_t c = 0; c < cols_; ++c)
            if (!row[c].is_zero()) {
                p = c;
                break;
            }
        if (p == cols_) return false;
        const Rat inv = row[p];
        for (std::size_t c = p; c <= cols_; ++c) row[c] = row[c] / inv;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rat f = rows_[i][p];
            if (f.is_zero()) continue;
            for (std::size_t c = p; c <= cols_; ++c) rows_[i][c] -= f * row[c];
        }
        rows_.push_back(std::move(row));
        pivot_.push_back(p);
        return true;
    }

    // Requires full rank; in reduced echelon form the solution reads off the
    // right-hand sides.
    std::vector<Rat> solve() const {
        if (rank() != cols_)
            throw consistency_error("row solver: solve called before reaching full rank");
        std::vector<Rat> sol(cols_, Rat(0));
        for (std::size_t i = 0; i < rows_.size(); ++i) sol[pivot_[i]] = rows_[i][cols_];
        return sol;
    }

private:
    std::size_t cols_;
    std::vector<std::vector<Rat>> rows_;
    std::vector<std::size_t> pivot_;
};

std::vector<std::string> free_variables(int m, int n) {
    std::vector<std::string> fv;
    for (int i = 1; i <= m; ++i) fv.push_back("x" + std::to_string(i));
    for (int j = 1; j <= n - 1; ++j) fv.push_back("y" + std::to_string(j));
    return fv;
}

// Values of the free coordinates at a point.
std::vector<Rat> free_values(int m, int n, const std::vector<long>& x,
                             const std::vector<long>& y) {
    std::vector<Rat> vals;
    vals.reserve(static_cast<std::size_t>(m + n - 1));
    for (int i = 0; i < m; ++i) vals.emplace_back(x[static_cast<std::size_t>(i)]);
    for (int j = 0; j + 1 < n; ++j) vals.emplace_back(y[static_cast<std::size_t>(j)]);
    return vals;
}

std::vector<Rat> monomial_row(const std::vector<std::vector<int>>& basis,
                              const std::vector<Rat>& vals, long bound) {
    // powers[v][e] = vals[v]^e
    std::vector<std::vector<Rat>> powers(vals.size());
    for (std::size_t v = 0; v < vals.size(); ++v) {
        powers[v].assign(static_cast<std::size_t>(bound) + 1, Rat(1));
        for (long e = 1; e <= bound; ++e)
            powers[v][static_cast<std::size_t>(e)] =
                powers[v][static_cast<std::size_t>(e - 1)] * vals[v];
    }
    std::vector<Rat> row;
    row.reserve(basis.size() + 1);
    for (const auto& exps : basis) {
        Rat prod(1);
        for (std::size_t v = 0; v < exps.size(); ++v)
            if (exps[v] > 0) prod *= powers[v][static_cast<std::size_t>(exps[v])];
        row.push_back(prod);
    }
    return row;
}

std::string point_str(const std::vector<long>& x, const std::vector<long>& y) {
    std::ostringstream os;
    os << "x=(";
    for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
    os << "), y=(";
    for (std::size_t j = 0; j < y.size(); ++j) os << (j ? "," : "") << y[j];
    os << ")";
    return os.str();
}

Partition sorted_partition(std::vector<long> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<long>());
    return Partition(parts);
}

} // namespace

std::string Wall::str() const { return "x" + index_set_str(I) + " - y" + index_set_str(J); }

std::vector<Wall> walls(int m, int n) {
    if (m < 1 || n < 1) throw precondition_error("walls: m, n must be >= 1");
    std::vector<Wall> out;
    // Masks over {2..m} extend the mandatory index 1; I must stay proper, so
    // the extension never covers all of {2..m} unless m itself is 1 (then no
    // proper non-empty subsets exist at all).
    const unsigned imask_limit = m >= 1 ? (1u << (m - 1)) : 0u;
    const unsigned jmask_limit = 1u << n;
    for (unsigned imask = 0; imask + 1 < imask_limit; ++imask) {
        std::vector<int> I{1};
        for (int b = 0; b < m - 1; ++b)
            if (imask & (1u << b)) I.push_back(b + 2);
        for (unsigned jmask = 1; jmask + 1 < jmask_limit; ++jmask) {
            std::vector<int> J;
            for (int b = 0; b < n; ++b)
                if (jmask & (1u << b)) J.push_back(b + 1);
            out.push_back(Wall{I, J});
        }
    }
    return out;
}

long wall_value(const Wall& w, const std::vector<long>& x, const std::vector<long>& y) {
    long v = 0;
    for (int i : w.I) {
        if (i < 1 || static_cast<std::size_t>(i) > x.size())
            throw precondition_error("wall_value: x-index out of range");
        v += x[static_cast<std::size_t>(i - 1)];
    }
    for (int j : w.J) {
        if (j < 1 || static_cast<std::size_t>(j) > y.size())
            throw precondition_error("wall_value: y-index out of range");
        v -= y[static_cast<std::size_t>(j - 1)];
    }
    return v;
}

std::optional<Chamber> chamber_of(const std::vector<long>& x, const std::vector<long>& y) {
    check_lattice_point(x, y);
    Chamber c;
    c.m = static_cast<int>(x.size());
    c.n = static_cast<int>(y.size());
    for (const Wall& w : walls(c.m, c.n)) {
        const long v = wall_value(w, x, y);
        if (v == 0) return std::nullopt;
        c.signs.push_back(v > 0 ? 1 : -1);
    }
    return c;
}

std::vector<LatticePoint> chamber_points(const Chamber& c, std::size_t count,
                                         long size_limit) {
    check_chamber(c);
    if (size_limit <= 0) size_limit = kDefaultSizeLimit;
    std::vector<LatticePoint> out;
    scan_balanced_points(c.m, c.n, size_limit,
                         [&](const std::vector<long>& x, const std::vector<long>& y) {
                             const auto ch = chamber_of(x, y);
                             if (ch && *ch == c) out.push_back(LatticePoint{x, y});
                             return out.size() >= count;
                         });
    if (out.size() < count)
        throw precondition_error(
            "chamber_points: search exhausted; chamber is unrealizable or too thin");
    return out;
}

ChamberFit fit_polynomial(long r, long s, const Chamber& chamber) {
    check_chamber(chamber);
    if (r < 1) throw precondition_error("fit_polynomial: r must be >= 1");
    if (s < 0) throw precondition_error("fit_polynomial: s must be >= 0");
    const int m = chamber.m, n = chamber.n;
    const long bound = (r + 1) * s + 1 - m - n;
    if (bound < 0)
        throw precondition_error("fit_polynomial: degree bound (r+1)s+1-m-n is negative");

    ChamberFit fit;
    fit.r = r;
    fit.s = s;
    fit.chamber = chamber;
    fit.degree_bound = bound;
    fit.parity_allowed = ((r * s) % 2) == ((m + n) % 2);
    fit.genus = fit.parity_allowed ? (r * s - m - n + 2) / 2 : -1;

    const std::vector<std::string> fv = free_variables(m, n);
    const std::vector<std::vector<int>> basis = exponents_up_to(fv.size(), bound);
    const std::size_t holdout_quota = std::max<std::size_t>(3, (basis.size() + 3) / 4);

    ExactRref solver(basis.size());
    std::vector<LatticePoint> training;
    std::vector<std::pair<LatticePoint, Rat>> holdout;
    scan_balanced_points(
        m, n, kDefaultSizeLimit,
        [&](const std::vector<long>& x, const std::vector<long>& y) {
            const auto ch = chamber_of(x, y);
            if (!ch || !(*ch == chamber)) return false;
            const Rat value =
                hurwitz_patterns(sorted_partition(x), sorted_partition(y), r, s);
            if (solver.rank() < basis.size()) {
                std::vector<Rat> row = monomial_row(basis, free_values(m, n, x, y), bound);
                row.push_back(value);
                if (solver.add(std::move(row))) {
                    training.push_back(LatticePoint{x, y});
                    return false;
                }
            }
            holdout.emplace_back(LatticePoint{x, y}, value);
            return solver.rank() == basis.size() && holdout.size() >= holdout_quota;
        });
    if (solver.rank() < basis.size() || holdout.size() < holdout_quota)
        throw precondition_error(
            "fit_polynomial: not enough interior lattice points in the chamber");

    const std::vector<Rat> coeffs = solver.solve();
    Poly poly;
    for (std::size_t b = 0; b < basis.size(); ++b) {
        if (coeffs[b].is_zero()) continue;
        Monomial mono;
        for (std::size_t v = 0; v < fv.size(); ++v)
            if (basis[b][v] != 0) mono[fv[v]] = basis[b][v];
        Poly term = Poly(coeffs[b]);
        for (const auto& [name, e] : mono) term *= Poly::var(name, e);
        poly += term;
    }
    fit.poly = poly;
    for (const auto& [mono, c] : poly.terms()) {
        Poly piece;
        piece += Poly(c);
        for (const auto& [name, e] : mono) piece *= Poly::var(name, e);
        fit.components[monomial_degree(mono)] += piece;
    }

    for (const auto& [pt, value] : holdout) {
        const Rat fitted = eval_free_poly(poly, m, n, pt.x, pt.y);
        if (!(fitted == value))
            throw consistency_error("fit_polynomial: held-out point disagrees at " +
                                    point_str(pt.x, pt.y));
    }

    fit.samples = std::move(training);
    for (const auto& hv : holdout) fit.samples.push_back(hv.first);
    fit.holdout_count = holdout.size();
    return fit;
}

ChamberFit fit_polynomial(long r, long s, const std::vector<long>& x,
                          const std::vector<long>& y) {
    const auto ch = chamber_of(x, y);
    if (!ch)
        throw precondition_error("fit_polynomial: witness point lies on a wall at " +
                                 point_str(x, y));
    return fit_polynomial(r, s, *ch);
}

Rat eval_free_poly(const Poly& p, int m, int n, const std::vector<long>& x,
                   const std::vector<long>& y) {
    if (static_cast<int>(x.size()) != m || static_cast<int>(y.size()) != n)
        throw precondition_error("eval_free_poly: point shape does not match m, n");
    std::map<std::string, Rat> vals;
    for (int i = 1; i <= m; ++i) vals["x" + std::to_string(i)] = Rat(x[static_cast<std::size_t>(i - 1)]);
    for (int j = 1; j <= n - 1; ++j) vals["y" + std::to_string(j)] = Rat(y[static_cast<std::size_t>(j - 1)]);
    return p.eval(vals);
}

Rat eval_fit(const ChamberFit& fit, const std::vector<long>& x, const std::vector<long>& y) {
    check_lattice_point(x, y);
    return eval_free_poly(fit.poly, fit.chamber.m, fit.chamber.n, x, y);
}

StructureReport structure_check(const ChamberFit& fit,
                                const std::vector<LatticePoint>& points) {
    StructureReport rep;
    rep.degrees_ok = rep.parity_ok = rep.signs_ok = true;
    const long bound = fit.degree_bound;

    std::set<long> allowed;
    if (fit.parity_allowed)
        for (long k = 0; k <= fit.genus; ++k) allowed.insert(bound - 2 * k);

    auto note = [&](const std::string& msg) {
        if (rep.detail.empty()) rep.detail = msg;
    };

    for (const auto& [deg, piece] : fit.components) {
        rep.observed_degrees.push_back(deg);
        if (!allowed.count(deg)) {
            rep.degrees_ok = false;
            note("unexpected homogeneous degree " + std::to_string(deg));
        }
        if (((deg - bound) % 2 + 2) % 2 != 0) {
            rep.parity_ok = false;
            note("degree " + std::to_string(deg) + " breaks the uniform parity");
        }
    }
    std::sort(rep.observed_degrees.rbegin(), rep.observed_degrees.rend());

    for (const auto& pt : points) {
        const auto ch = chamber_of(pt.x, pt.y);
        if (!ch || !(*ch == fit.chamber))
            throw precondition_error("structure_check: point not interior to the chamber at " +
                                     point_str(pt.x, pt.y));
        for (const auto& [deg, piece] : fit.components) {
            if (!allowed.count(deg)) continue; // already reported above
            const long k = (bound - deg) / 2;
            const Rat v = eval_free_poly(piece, fit.chamber.m, fit.chamber.n, pt.x, pt.y);
            const bool good = (k % 2 == 0) ? v.sign() > 0 : v.sign() < 0;
            if (!good) {
                rep.signs_ok = false;
                note("degree " + std::to_string(deg) + " piece has the wrong sign at " +
                     point_str(pt.x, pt.y));
            }
        }
    }
    return rep;
}

} // namespace hurwitz
