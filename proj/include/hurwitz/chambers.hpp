#pragma once

// Piecewise polynomial structure of the branched-cover counts in the part
// sizes. The balanced space carries the resonance hyperplanes x_I = y_J; on
// each open chamber the count is a single polynomial, recovered here by exact
// interpolation at lattice points with held-out validation. The module also
// checks the degree/parity/sign shape of the chamber polynomials and the
// closed-form difference across a single wall.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/poly.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// A balanced lattice point: ordered tuples of positive integers with equal
// sums. Coordinate order matters (it names the axes); the fitted value itself
// is symmetric under permuting parts.
struct LatticePoint {
    std::vector<long> x, y;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// The hyperplane sum_{i in I} x_i = sum_{j in J} y_j, for non-empty proper
// index subsets (1-based, sorted ascending). (I, J) and (I^c, J^c) cut the
// same hyperplane out of the balanced space, so the canonical representative
// keeps 1 in I.
struct Wall {
    std::vector<int> I, J;
    friend bool operator==(const Wall&, const Wall&) = default;
    std::string str() const;
};

// All canonical walls for m x-parts and n y-parts, deterministically ordered.
// Empty when m = 1 or n = 1: one-part counts are globally polynomial.
std::vector<Wall> walls(int m, int n);

// x_I - y_J at a point (no balance check; callers validate points).
long wall_value(const Wall& w, const std::vector<long>& x, const std::vector<long>& y);

// An open chamber of the arrangement: one sign per canonical wall, aligned
// with the order of walls(m, n).
struct Chamber {
    int m = 0, n = 0;
    std::vector<int> signs; // each +1 or -1
    friend bool operator==(const Chamber&, const Chamber&) = default;
};

// Sign vector of a point strictly off every wall; nullopt when some wall
// vanishes at the point. Throws precondition_error on unbalanced or
// non-positive input.
std::optional<Chamber> chamber_of(const std::vector<long>& x, const std::vector<long>& y);

// The first `count` lattice points interior to the chamber, enumerated by
// increasing total size and then lexicographically (deterministic). Throws
// precondition_error if the search exhausts totals up to size_limit
// (default 400) first -- the chamber is unrealizable or too thin.
std::vector<LatticePoint> chamber_points(const Chamber& c, std::size_t count,
                                         long size_limit = 0);

// An exact polynomial fit of the cover count on one chamber, written in the
// free coordinates x1..xm, y1..y{n-1}; the last y-coordinate is eliminated
// through the balance relation, a homogeneous substitution that preserves
// total degree, so the homogeneous pieces below are the intrinsic ones.
struct ChamberFit {
    long r = 0, s = 0;
    Chamber chamber;
    Poly poly;                       // the full fitted polynomial
    std::map<long, Poly> components; // nonzero homogeneous pieces by degree
    long degree_bound = 0;           // (r+1)s + 1 - m - n
    bool parity_allowed = false;     // rs == m + n (mod 2); the count vanishes otherwise
    long genus = -1;                 // (rs - m - n + 2)/2 when parity_allowed
    std::vector<LatticePoint> samples; // training points, then held-out points
    std::size_t holdout_count = 0;     // trailing entries of samples held out
};

// Interpolates the degree-<=D polynomial through chamber lattice points
// (D = (r+1)s+1-m-n; requires D >= 0, r >= 1, s >= 0), then re-checks it on
// ~20% held-out points. Sampling failure raises precondition_error; a
// held-out or dependent-row mismatch raises consistency_error naming the
// witness point. The witness-point overload derives the chamber first and
// requires an off-wall witness.
ChamberFit fit_polynomial(long r, long s, const Chamber& chamber);
ChamberFit fit_polynomial(long r, long s, const std::vector<long>& x,
                          const std::vector<long>& y);

// Evaluate a fit (or one of its homogeneous pieces) at a lattice point. The
// polynomial extends everywhere, but it matches cover counts only on its own
// chamber.
Rat eval_fit(const ChamberFit& fit, const std::vector<long>& x, const std::vector<long>& y);
Rat eval_free_poly(const Poly& p, int m, int n, const std::vector<long>& x,
                   const std::vector<long>& y);

// Shape report for a chamber fit: nonzero homogeneous degrees must lie in
// {D - 2k : 0 <= k <= genus}, all of D's parity, and the degree-(D-2k) piece
// must take sign (-1)^k (strictly) at every supplied in-chamber point. A
// parity-forbidden or negative-genus fit passes exactly when it is zero.
struct StructureReport {
    bool degrees_ok = false;
    bool parity_ok = false;
    bool signs_ok = false;
    std::vector<long> observed_degrees; // descending
    std::string detail;                 // first violation, empty when clean
    bool ok() const { return degrees_ok && parity_ok && signs_ok; }
};
StructureReport structure_check(const ChamberFit& fit,
                                const std::vector<LatticePoint>& points);

// Closed-form value of the crossing difference for one wall at a balanced
// point with x_I - y_J = delta >= 1: the z-corner (every exponent r+1) of
//   sum over splittings K of the s middle slots of
//     delta^2 * zr(delta, z_[s]) / (zr(delta, z_K) zr(delta, z_Kc))
//       * subseries(x_I | y_J + {delta}; K) * subseries(x_Ic + {delta} | y_Jc; Kc)
// where zr(n, L) = zeta(nL)/zeta(L) and the subseries are the mixed-level
// series of the indicated sub-profiles in the indicated slot variables.
Rat wall_crossing_rhs(long r, long s, const Wall& w, const LatticePoint& pt);

// Fits the two chambers (which must differ exactly at `w`), forms
// fit(c1) - fit(c2), and compares it with the closed form above, oriented so
// that the chamber with x_I > y_J is the minuend, at `num_points` balanced
// lattice points with x_I > y_J. The difference polynomial and the witness of
// any mismatch are reported.
struct WallCrossReport {
    Wall wall;
    Poly difference; // fit(c1) - fit(c2) in free coordinates
    std::size_t points_checked = 0;
    bool matched = false;
    std::string detail; // first mismatch, empty when clean
};
WallCrossReport check_wall_crossing(long r, long s, const Wall& w, const Chamber& c1,
                                    const Chamber& c2, std::size_t num_points);

} // namespace hurwitz
