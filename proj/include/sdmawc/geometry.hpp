#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "errors.hpp"

namespace sdmawc {

struct RatePoint {
    double x = 0.0, y = 0.0;
};

/// Half-plane a*x + b*y <= c. `strict` records "<" provenance; all geometry
/// is done on the closure.
struct HalfPlane {
    double a = 0.0, b = 0.0, c = 0.0;
    bool strict = false;
};

inline double cross(const RatePoint& o, const RatePoint& p, const RatePoint& q) {
    return (p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x);
}

inline double point_distance(const RatePoint& p, const RatePoint& q) {
    return std::hypot(p.x - q.x, p.y - q.y);
}

namespace geom_detail {

inline constexpr double kVertexMergeTol = 1e-9;
inline constexpr double kCollinearTol = 1e-9;
// All regions are bounded by their rate constraints; the clip box only
// exists to seed the intersection.
inline constexpr double kClipBound = 64.0;

inline bool lex_less(const RatePoint& p, const RatePoint& q) {
    if (p.x != q.x) return p.x < q.x;
    return p.y < q.y;
}

inline std::vector<RatePoint> clip_by_halfplane(const std::vector<RatePoint>& poly,
                                                const HalfPlane& h) {
    std::vector<RatePoint> out;
    const std::size_t n = poly.size();
    if (n == 0) return out;
    auto val = [&](const RatePoint& p) { return h.a * p.x + h.b * p.y - h.c; };
    for (std::size_t i = 0; i < n; ++i) {
        const RatePoint& cur = poly[i];
        const RatePoint& nxt = poly[(i + 1) % n];
        const double vc = val(cur), vn = val(nxt);
        if (vc <= 1e-12) out.push_back(cur);
        if ((vc < -1e-12 && vn > 1e-12) || (vc > 1e-12 && vn < -1e-12)) {
            const double t = vc / (vc - vn);
            out.push_back({cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y)});
        }
    }
    return out;
}

inline std::vector<RatePoint> dedupe_ring(std::vector<RatePoint> pts) {
    std::vector<RatePoint> out;
    for (const auto& p : pts) {
        if (out.empty() || point_distance(out.back(), p) > kVertexMergeTol) out.push_back(p);
    }
    while (out.size() > 1 && point_distance(out.front(), out.back()) <= kVertexMergeTol)
        out.pop_back();
    return out;
}

}  // namespace geom_detail

/// Convex polygon in the rate plane: CCW vertex ring starting at the
/// lexicographically smallest vertex, plus the supporting half-planes.
/// May be empty, a point, or a segment.
class RatePolygon {
   public:
    RatePolygon() = default;

    static RatePolygon from_vertices(std::vector<RatePoint> ring,
                                     std::vector<HalfPlane> supports = {},
                                     std::string axis_x = "R1", std::string axis_y = "R2") {
        RatePolygon poly;
        poly.vertices_ = canonicalize(std::move(ring));
        poly.halfplanes_ = std::move(supports);
        poly.axis_x_ = std::move(axis_x);
        poly.axis_y_ = std::move(axis_y);
        return poly;
    }

    /// Intersection of the half-planes with the nonnegative quadrant.
    /// Throws InternalError if the intersection is unbounded.
    static RatePolygon from_halfplanes(const std::vector<HalfPlane>& planes,
                                       std::string axis_x = "R1", std::string axis_y = "R2") {
        using namespace geom_detail;
        std::vector<RatePoint> ring = {{0.0, 0.0},
                                       {double(kClipBound), 0.0},
                                       {double(kClipBound), double(kClipBound)},
                                       {0.0, double(kClipBound)}};
        std::vector<HalfPlane> all = planes;
        all.push_back({-1.0, 0.0, 0.0, false});  // x >= 0
        all.push_back({0.0, -1.0, 0.0, false});  // y >= 0
        for (const auto& h : all) {
            ring = clip_by_halfplane(ring, h);
            if (ring.empty()) break;
        }
        for (const auto& p : ring)
            if (p.x > kClipBound - 1.0 || p.y > kClipBound - 1.0)
                throw InternalError("projection unbounded: polygon reaches the clip box");
        RatePolygon poly;
        poly.vertices_ = canonicalize(std::move(ring));
        for (const auto& h : planes)
            if (poly.is_supporting(h)) poly.halfplanes_.push_back(h);
        poly.axis_x_ = std::move(axis_x);
        poly.axis_y_ = std::move(axis_y);
        return poly;
    }

    const std::vector<RatePoint>& vertices() const { return vertices_; }
    const std::vector<HalfPlane>& halfplanes() const { return halfplanes_; }
    const std::string& axis_x() const { return axis_x_; }
    const std::string& axis_y() const { return axis_y_; }
    void set_axes(std::string x, std::string y) {
        axis_x_ = std::move(x);
        axis_y_ = std::move(y);
    }

    bool empty() const { return vertices_.empty(); }

    bool contains(const RatePoint& p, double tol = 1e-9) const {
        if (vertices_.empty()) return false;
        if (vertices_.size() == 1) return point_distance(vertices_[0], p) <= tol;
        if (vertices_.size() == 2)
            return distance_to_segment(p, vertices_[0], vertices_[1]) <= tol;
        const std::size_t n = vertices_.size();
        for (std::size_t i = 0; i < n; ++i) {
            const RatePoint& a = vertices_[i];
            const RatePoint& b = vertices_[(i + 1) % n];
            const double len = point_distance(a, b);
            if (len <= geom_detail::kVertexMergeTol) continue;
            if (cross(a, b, p) < -tol * len) return false;
        }
        return true;
    }

    /// Euclidean distance from p to the polygon (0 if inside).
    double distance(const RatePoint& p) const {
        if (vertices_.empty()) return std::numeric_limits<double>::infinity();
        if (vertices_.size() == 1) return point_distance(vertices_[0], p);
        if (contains(p, 0.0)) return 0.0;
        double best = std::numeric_limits<double>::infinity();
        const std::size_t n = vertices_.size();
        for (std::size_t i = 0; i < n; ++i)
            best = std::min(best,
                            distance_to_segment(p, vertices_[i], vertices_[(i + 1) % n]));
        return best;
    }

    /// True if every vertex of `other` lies inside this polygon
    /// (with slack `tol`).
    bool contains_polygon(const RatePolygon& other, double tol = 1e-9) const {
        for (const auto& v : other.vertices_)
            if (!contains(v, tol)) return false;
        return true;
    }

    /// Points along the boundary (vertices plus interpolated edge samples),
    /// used by the Hausdorff cross-checks.
    std::vector<RatePoint> boundary_samples(double max_spacing) const {
        std::vector<RatePoint> out = vertices_;
        const std::size_t n = vertices_.size();
        if (n < 2) return out;
        const std::size_t wrap = (n == 2) ? 1 : n;
        for (std::size_t i = 0; i < wrap; ++i) {
            const RatePoint& a = vertices_[i];
            const RatePoint& b = vertices_[(i + 1) % n];
            const double len = point_distance(a, b);
            const int steps = static_cast<int>(std::ceil(len / max_spacing));
            for (int k = 1; k < steps; ++k) {
                const double t = double(k) / steps;
                out.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
            }
        }
        return out;
    }

    double max_x() const {
        double m = 0.0;
        for (const auto& v : vertices_) m = std::max(m, v.x);
        return m;
    }
    double max_y() const {
        double m = 0.0;
        for (const auto& v : vertices_) m = std::max(m, v.y);
        return m;
    }

    static double distance_to_segment(const RatePoint& p, const RatePoint& a,
                                      const RatePoint& b) {
        const double dx = b.x - a.x, dy = b.y - a.y;
        const double len2 = dx * dx + dy * dy;
        if (len2 == 0.0) return point_distance(p, a);
        double t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
        t = std::clamp(t, 0.0, 1.0);
        return point_distance(p, {a.x + t * dx, a.y + t * dy});
    }

   private:
    bool is_supporting(const HalfPlane& h, double tol = 1e-9) const {
        for (const auto& v : vertices_) {
            const double norm = std::max(1.0, std::hypot(h.a, h.b));
            if (std::abs(h.a * v.x + h.b * v.y - h.c) <= tol * norm) return true;
        }
        return false;
    }

    /// CCW order, lexicographically smallest vertex first, duplicates and
    /// collinear vertices removed.
    static std::vector<RatePoint> canonicalize(std::vector<RatePoint> ring) {
        using namespace geom_detail;
        ring = dedupe_ring(std::move(ring));
        if (ring.size() < 3) {
            std::sort(ring.begin(), ring.end(), lex_less);
            ring = dedupe_ring(std::move(ring));
            return ring;
        }
        // orientation
        double area2 = 0.0;
        for (std::size_t i = 0; i < ring.size(); ++i) {
            const auto& a = ring[i];
            const auto& b = ring[(i + 1) % ring.size()];
            area2 += a.x * b.y - b.x * a.y;
        }
        if (area2 < 0.0) std::reverse(ring.begin(), ring.end());
        // drop collinear vertices
        std::vector<RatePoint> slim;
        const std::size_t n = ring.size();
        for (std::size_t i = 0; i < n; ++i) {
            const RatePoint& prev = ring[(i + n - 1) % n];
            const RatePoint& cur = ring[i];
            const RatePoint& next = ring[(i + 1) % n];
            const double scale =
                std::max(1.0, std::max(point_distance(prev, cur), point_distance(cur, next)));
            if (std::abs(cross(prev, cur, next)) > kCollinearTol * scale) slim.push_back(cur);
        }
        if (slim.size() < 3) {
            // degenerate after collinearity removal: keep the extreme points
            auto [mn, mx] = std::minmax_element(ring.begin(), ring.end(), lex_less);
            std::vector<RatePoint> seg = {*mn};
            if (point_distance(*mn, *mx) > kVertexMergeTol) seg.push_back(*mx);
            return seg;
        }
        auto start = std::min_element(slim.begin(), slim.end(), lex_less);
        std::rotate(slim.begin(), start, slim.end());
        return slim;
    }

    std::vector<RatePoint> vertices_;
    std::vector<HalfPlane> halfplanes_;
    std::string axis_x_ = "R1";
    std::string axis_y_ = "R2";
};

/// Minimal convex polygon containing all points (monotone chain);
/// collinear points on hull edges are removed.
inline RatePolygon convex_hull_2d(std::vector<RatePoint> pts, std::string axis_x = "R1",
                                  std::string axis_y = "R2") {
    if (pts.empty()) throw std::invalid_argument("convex_hull_2d: empty input");
    std::sort(pts.begin(), pts.end(), geom_detail::lex_less);
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const RatePoint& a, const RatePoint& b) {
                              return point_distance(a, b) <= geom_detail::kVertexMergeTol;
                          }),
              pts.end());
    if (pts.size() <= 2)
        return RatePolygon::from_vertices(std::move(pts), {}, std::move(axis_x),
                                          std::move(axis_y));
    std::vector<RatePoint> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {  // lower
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= geom_detail::kCollinearTol * 1e-3)
            --k;
        hull[k++] = p;
    }
    const std::size_t lower = k + 1;
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {  // upper
        while (k >= lower &&
               cross(hull[k - 2], hull[k - 1], *it) <= geom_detail::kCollinearTol * 1e-3)
            --k;
        hull[k++] = *it;
    }
    hull.resize(k - 1);
    return RatePolygon::from_vertices(std::move(hull), {}, std::move(axis_x), std::move(axis_y));
}

}  // namespace sdmawc
