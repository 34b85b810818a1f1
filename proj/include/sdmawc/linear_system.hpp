#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "geometry.hpp"

namespace sdmawc {

/// Region family a LinearConstraintSystem came from; lets the projection
/// pick the matching closed form.
enum class RegionFamily { Generic, Scheme1, Scheme2, Degraded };

/// List of half-spaces a.x <= b over a named coordinate list. Strict rows
/// keep a marker but are projected under closure semantics.
struct LinearConstraintSystem {
    struct Row {
        std::vector<double> a;
        double b = 0.0;
        bool strict = false;
    };

    std::vector<std::string> coords;
    std::vector<Row> rows;
    RegionFamily family = RegionFamily::Generic;
    /// Named scalar bounds (A1, B1, K, ...) stashed by region_system so the
    /// family closed forms can be evaluated without re-deriving them.
    std::map<std::string, double> named_bounds;
    bool infeasible = false;  // set when a row is detected unsatisfiable

    int coord_index(const std::string& name) const {
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (coords[i] == name) return static_cast<int>(i);
        throw std::invalid_argument("unknown coordinate: " + name);
    }

    void add(std::vector<std::pair<std::string, double>> terms, double bound,
             bool strict = false) {
        Row row;
        row.a.assign(coords.size(), 0.0);
        for (const auto& [name, coef] : terms) row.a[coord_index(name)] += coef;
        row.b = bound;
        row.strict = strict;
        rows.push_back(std::move(row));
    }
};

namespace fm_detail {

inline constexpr double kCoefTol = 1e-12;
inline constexpr double kFeasTol = 1e-9;

inline void normalize_row(LinearConstraintSystem::Row& r) {
    double m = 0.0;
    for (double c : r.a) m = std::max(m, std::abs(c));
    m = std::max(m, std::abs(r.b));
    if (m > 0.0) {
        for (double& c : r.a) c /= m;
        r.b /= m;
    }
}

inline bool row_trivial(const LinearConstraintSystem::Row& r) {
    for (double c : r.a)
        if (std::abs(c) > kCoefTol) return false;
    return r.b >= -kFeasTol;
}

inline bool row_infeasible(const LinearConstraintSystem::Row& r) {
    for (double c : r.a)
        if (std::abs(c) > kCoefTol) return false;
    return r.b < -kFeasTol;
}

inline bool rows_equal(const LinearConstraintSystem::Row& x,
                       const LinearConstraintSystem::Row& y) {
    if (std::abs(x.b - y.b) > 1e-9) return false;
    for (std::size_t i = 0; i < x.a.size(); ++i)
        if (std::abs(x.a[i] - y.a[i]) > 1e-9) return false;
    return true;
}

}  // namespace fm_detail

/// One Fourier-Motzkin step: eliminate the coordinate at `idx`.
inline LinearConstraintSystem fm_eliminate(const LinearConstraintSystem& sys, int idx) {
    using namespace fm_detail;
    LinearConstraintSystem out;
    out.family = sys.family;
    out.named_bounds = sys.named_bounds;
    out.infeasible = sys.infeasible;
    for (std::size_t i = 0; i < sys.coords.size(); ++i)
        if (static_cast<int>(i) != idx) out.coords.push_back(sys.coords[i]);

    auto drop_coord = [&](const LinearConstraintSystem::Row& r) {
        LinearConstraintSystem::Row nr;
        nr.b = r.b;
        nr.strict = false;
        for (std::size_t i = 0; i < r.a.size(); ++i)
            if (static_cast<int>(i) != idx) nr.a.push_back(r.a[i]);
        return nr;
    };

    std::vector<LinearConstraintSystem::Row> pos, neg;
    for (const auto& r : sys.rows) {
        const double c = r.a[static_cast<std::size_t>(idx)];
        if (c > kCoefTol)
            pos.push_back(r);
        else if (c < -kCoefTol)
            neg.push_back(r);
        else
            out.rows.push_back(drop_coord(r));
    }
    for (const auto& p : pos)
        for (const auto& n : neg) {
            const double cp = p.a[static_cast<std::size_t>(idx)];
            const double cn = -n.a[static_cast<std::size_t>(idx)];
            LinearConstraintSystem::Row combo;
            combo.b = cn * p.b + cp * n.b;
            combo.strict = false;
            for (std::size_t i = 0; i < p.a.size(); ++i)
                if (static_cast<int>(i) != idx) combo.a.push_back(cn * p.a[i] + cp * n.a[i]);
            out.rows.push_back(std::move(combo));
        }

    // prune
    std::vector<LinearConstraintSystem::Row> pruned;
    for (auto& r : out.rows) {
        normalize_row(r);
        if (row_infeasible(r)) {
            out.infeasible = true;
            continue;
        }
        if (row_trivial(r)) continue;
        bool dup = false;
        for (const auto& q : pruned)
            if (rows_equal(q, r)) {
                dup = true;
                break;
            }
        if (!dup) pruned.push_back(std::move(r));
    }
    out.rows = std::move(pruned);
    return out;
}

/// Eliminate every coordinate not in `keep` (in reverse declaration order).
inline LinearConstraintSystem fm_project(LinearConstraintSystem sys,
                                         const std::vector<std::string>& keep) {
    for (;;) {
        int victim = -1;
        for (std::size_t i = sys.coords.size(); i-- > 0;) {
            if (std::find(keep.begin(), keep.end(), sys.coords[i]) == keep.end()) {
                victim = static_cast<int>(i);
                break;
            }
        }
        if (victim < 0) break;
        sys = fm_eliminate(sys, victim);
    }
    return sys;
}

/// Turn a fully projected two-coordinate system into a polygon clipped to
/// the nonnegative quadrant.
inline RatePolygon system_to_polygon(const LinearConstraintSystem& sys, std::string axis_x,
                                     std::string axis_y) {
    if (sys.infeasible) return RatePolygon();
    if (sys.coords.size() != 2)
        throw std::invalid_argument("system_to_polygon: expected exactly two coordinates");
    const int ix = sys.coord_index(axis_x);
    const int iy = sys.coord_index(axis_y);
    std::vector<HalfPlane> planes;
    planes.reserve(sys.rows.size());
    for (const auto& r : sys.rows)
        planes.push_back({r.a[static_cast<std::size_t>(ix)], r.a[static_cast<std::size_t>(iy)],
                          r.b, r.strict});
    return RatePolygon::from_halfplanes(planes, std::move(axis_x), std::move(axis_y));
}

/// Feasibility of a point under the system with slack `tol`
/// (closure semantics on strict rows).
inline bool system_satisfied(const LinearConstraintSystem& sys, const std::vector<double>& x,
                             double tol = 1e-9) {
    if (sys.infeasible) return false;
    for (const auto& r : sys.rows) {
        double lhs = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) lhs += r.a[i] * x[i];
        if (lhs > r.b + tol) return false;
    }
    return true;
}

}  // namespace sdmawc
