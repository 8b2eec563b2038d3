#include "reldiam/geometry.hpp"

#include <algorithm>
#include <limits>

namespace reldiam {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

Tolerance& tolerance() {
    static Tolerance t;
    return t;
}

void set_tolerance(const Tolerance& t) {
    if (t.eps_geom <= 0.0 || t.eps_area <= 0.0)
        throw GeometryError("tolerances must be strictly positive");
    tolerance() = t;
}

BoundaryPiece BoundaryPiece::segment(const Vec2& a, const Vec2& b) {
    if (distance(a, b) <= tolerance().eps_geom)
        throw GeometryError("segment endpoints must be distinct");
    BoundaryPiece p;
    p.kind = PieceKind::Segment;
    p.a = a;
    p.b = b;
    return p;
}

BoundaryPiece BoundaryPiece::arc(const Vec2& a, const Vec2& b, const Vec2& center, double radius,
                                 bool ccw) {
    if (radius <= 0.0) throw GeometryError("arc radius must be positive");
    const double eps = std::max(tolerance().eps_geom, 1e-12 * radius);
    if (std::abs(distance(a, center) - radius) > 1e3 * eps ||
        std::abs(distance(b, center) - radius) > 1e3 * eps)
        throw GeometryError("arc endpoints must lie on the circle of (center, radius)");
    if (distance(a, b) <= tolerance().eps_geom)
        throw GeometryError("zero-length arc");
    BoundaryPiece p;
    p.kind = PieceKind::Arc;
    p.a = a;
    p.b = b;
    p.center = center;
    p.radius = radius;
    p.ccw = ccw;
    return p;
}

double BoundaryPiece::start_angle() const { return std::atan2(a.y - center.y, a.x - center.x); }

double BoundaryPiece::sweep_angle() const {
    if (kind != PieceKind::Arc) return 0.0;
    const double t0 = start_angle();
    const double t1 = std::atan2(b.y - center.y, b.x - center.x);
    double sweep = t1 - t0;
    if (ccw) {
        while (sweep <= 0.0) sweep += kTwoPi;
    } else {
        while (sweep >= 0.0) sweep -= kTwoPi;
    }
    return sweep;
}

double BoundaryPiece::length() const {
    if (kind == PieceKind::Segment) return distance(a, b);
    return radius * std::abs(sweep_angle());
}

Vec2 BoundaryPiece::point_at(double t) const {
    if (kind == PieceKind::Segment) return a + (b - a) * t;
    const double ang = start_angle() + t * sweep_angle();
    return center + radius * unit_dir(ang);
}

BoundaryPiece BoundaryPiece::reversed() const {
    BoundaryPiece p = *this;
    std::swap(p.a, p.b);
    if (kind == PieceKind::Arc) p.ccw = !ccw;
    return p;
}

double polygon_signed_area(const std::vector<Vec2>& poly) {
    double s = 0.0;
    const size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) s += cross(poly[i], poly[(i + 1) % n]);
    return 0.5 * s;
}

Vec2 polygon_centroid(const std::vector<Vec2>& poly) {
    double a = 0.0;
    Vec2 c;
    const size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const double w = cross(poly[i], poly[(i + 1) % n]);
        a += w;
        c = c + (poly[i] + poly[(i + 1) % n]) * w;
    }
    if (std::abs(a) < 1e-300) return poly.empty() ? Vec2{} : poly[0];
    return c / (3.0 * a);
}

ConvexPolygon::ConvexPolygon(std::vector<Vec2> verts) : vertices(std::move(verts)) {
    const double eps = tolerance().eps_geom;
    // Dedup consecutive
    std::vector<Vec2> v;
    for (const auto& p : vertices) {
        if (v.empty() || distance(v.back(), p) > eps) v.push_back(p);
    }
    while (v.size() > 1 && distance(v.front(), v.back()) <= eps) v.pop_back();
    if (v.size() < 3) throw GeometryError("convex polygon needs at least 3 distinct vertices");
    const size_t n = v.size();
    for (size_t i = 0; i < n; ++i) {
        const Vec2& a = v[i];
        const Vec2& b = v[(i + 1) % n];
        const Vec2& c = v[(i + 2) % n];
        if (cross(b - a, c - b) <= eps * eps)
            throw GeometryError("polygon not strictly convex / not ccw");
    }
    vertices = std::move(v);
}

double ConvexPolygon::area() const { return polygon_signed_area(vertices); }

bool ConvexPolygon::contains(const Vec2& p, double eps) const {
    const size_t n = vertices.size();
    for (size_t i = 0; i < n; ++i) {
        const Vec2& a = vertices[i];
        const Vec2& b = vertices[(i + 1) % n];
        const Vec2 e = b - a;
        if (cross(e, p - a) < -eps * e.norm()) return false;
    }
    return true;
}

std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
    std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }),
              pts.end());
    const size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<Vec2> hull(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    const size_t lower = k + 1;
    for (size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

double polygon_diameter(const ConvexPolygon& poly) {
    const auto& v = poly.vertices;
    const size_t n = v.size();
    if (n < 3) throw GeometryError("degenerate polygon");
    // Rotating calipers over antipodal pairs.
    double best = 0.0;
    size_t j = 1;
    auto area2 = [&](size_t i, size_t k, size_t m) {
        return std::abs(cross(v[k] - v[i], v[m] - v[i]));
    };
    for (size_t i = 0; i < n; ++i) {
        const size_t i1 = (i + 1) % n;
        while (area2(i, i1, (j + 1) % n) > area2(i, i1, j)) j = (j + 1) % n;
        best = std::max(best, distance2(v[i], v[j]));
        best = std::max(best, distance2(v[i1], v[j]));
    }
    return std::sqrt(best);
}

double point_set_diameter(const std::vector<Vec2>& pts) {
    if (pts.empty()) throw GeometryError("point_set_diameter: empty point set");
    auto hull = convex_hull(pts);
    if (hull.size() == 1) return 0.0;
    if (hull.size() == 2) return distance(hull[0], hull[1]);
    ConvexPolygon poly;
    poly.vertices = std::move(hull);  // hull output already strictly convex ccw
    return polygon_diameter(poly);
}

std::vector<Vec2> clip_halfplane(const std::vector<Vec2>& poly, const Vec2& point,
                                 const Vec2& inward_normal) {
    std::vector<Vec2> out;
    const size_t n = poly.size();
    if (n == 0) return out;
    out.reserve(n + 1);
    for (size_t i = 0; i < n; ++i) {
        const Vec2& cur = poly[i];
        const Vec2& nxt = poly[(i + 1) % n];
        const double dc = dot(cur - point, inward_normal);
        const double dn = dot(nxt - point, inward_normal);
        if (dc >= 0.0) out.push_back(cur);
        if ((dc > 0.0 && dn < 0.0) || (dc < 0.0 && dn > 0.0)) {
            const double t = dc / (dc - dn);
            out.push_back(cur + (nxt - cur) * t);
        }
    }
    return out;
}

std::vector<Vec2> clip_convex(const std::vector<Vec2>& subject, const std::vector<Vec2>& clip) {
    std::vector<Vec2> out = subject;
    const size_t n = clip.size();
    for (size_t i = 0; i < n && !out.empty(); ++i) {
        const Vec2& a = clip[i];
        const Vec2& b = clip[(i + 1) % n];
        const Vec2 e = b - a;
        const Vec2 inward{-e.y, e.x};  // clip is ccw
        out = clip_halfplane(out, a, inward);
    }
    if (out.size() < 3 || std::abs(polygon_signed_area(out)) < tolerance().eps_area) return {};
    return out;
}

Polyline discretize_arc(const BoundaryPiece& arc, double max_sagitta) {
    if (max_sagitta <= 0.0) throw GeometryError("max_sagitta must be positive");
    if (arc.kind != PieceKind::Arc) return {arc.a, arc.b};
    const double sweep = std::abs(arc.sweep_angle());
    // sagitta of a chord spanning angle t: r (1 - cos(t/2))
    const double s = std::min(max_sagitta, arc.radius);
    const double max_chord_angle = 2.0 * std::acos(std::max(-1.0, 1.0 - s / arc.radius));
    size_t n = 1;
    if (max_chord_angle > 0.0)
        n = static_cast<size_t>(std::ceil(sweep / max_chord_angle));
    n = std::max<size_t>(n, 1);
    Polyline out;
    out.reserve(n + 1);
    out.push_back(arc.a);
    for (size_t i = 1; i < n; ++i)
        out.push_back(arc.point_at(static_cast<double>(i) / static_cast<double>(n)));
    out.push_back(arc.b);
    return out;
}

bool segments_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
    auto sgn = [](double x) { return (x > 0.0) - (x < 0.0); };
    const int d1 = sgn(cross(b - a, c - a));
    const int d2 = sgn(cross(b - a, d - a));
    const int d3 = sgn(cross(d - c, a - c));
    const int d4 = sgn(cross(d - c, b - c));
    if (d1 * d2 < 0 && d3 * d4 < 0) return true;
    auto on_seg = [](const Vec2& p, const Vec2& q, const Vec2& r) {
        return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) &&
               std::min(p.y, q.y) <= r.y && r.y <= std::max(p.y, q.y);
    };
    if (d1 == 0 && on_seg(a, b, c)) return true;
    if (d2 == 0 && on_seg(a, b, d)) return true;
    if (d3 == 0 && on_seg(c, d, a)) return true;
    if (d4 == 0 && on_seg(c, d, b)) return true;
    return false;
}

bool polylines_cross(const Polyline& p, const Polyline& q, bool skip_shared_start) {
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        for (size_t j = 0; j + 1 < q.size(); ++j) {
            if (skip_shared_start && i == 0 && j == 0) {
                // Both first segments emanate from the shared start point:
                // they intersect at that point by construction. Check for
                // overlap beyond it.
                const Vec2 u = p[1] - p[0];
                const Vec2 v = q[1] - q[0];
                if (std::abs(cross(u, v)) <= tolerance().eps_geom * u.norm() * v.norm() &&
                    dot(u, v) > 0.0)
                    return true;  // collinear same-direction spokes overlap
                continue;
            }
            if (segments_intersect(p[i], p[i + 1], q[j], q[j + 1])) return true;
        }
    }
    return false;
}

}  // namespace reldiam
