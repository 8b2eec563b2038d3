#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace reldiam {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }

    double norm2() const { return x * x + y * y; }
    double norm() const { return std::sqrt(norm2()); }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }
inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double distance(const Vec2& a, const Vec2& b) { return (a - b).norm(); }
inline double distance2(const Vec2& a, const Vec2& b) { return (a - b).norm2(); }
inline Vec2 rotate(const Vec2& v, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
}
inline Vec2 rotate_about(const Vec2& v, const Vec2& pivot, double angle) {
    return pivot + rotate(v - pivot, angle);
}
inline Vec2 unit_dir(double angle) { return {std::cos(angle), std::sin(angle)}; }

/// Global absolute tolerances (length / area units). Profile assumes
/// unit-scale bodies; override via set_tolerance or the REL_DIAM_EPS
/// environment variable handled by the CLI.
struct Tolerance {
    double eps_geom = 1e-9;
    double eps_area = 1e-9;
};

Tolerance& tolerance();
void set_tolerance(const Tolerance& t);

class GeometryError : public std::runtime_error {
  public:
    explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

enum class PieceKind { Segment, Arc };

/// One piece of a boundary loop, traversed a -> b. Arcs sweep about
/// `center` with `radius`; `ccw` gives the sweep direction of the
/// traversal. Body boundaries are always ccw; region loops may traverse
/// an arc clockwise (e.g. the inner rim of an annular sector).
struct BoundaryPiece {
    PieceKind kind = PieceKind::Segment;
    Vec2 a, b;
    Vec2 center;
    double radius = 0.0;
    bool ccw = true;

    static BoundaryPiece segment(const Vec2& a, const Vec2& b);
    static BoundaryPiece arc(const Vec2& a, const Vec2& b, const Vec2& center, double radius,
                             bool ccw = true);

    /// Signed sweep angle of an arc (positive ccw), in (0, 2*pi).
    double sweep_angle() const;
    double start_angle() const;
    double length() const;
    /// Point at parameter t in [0,1] along the traversal.
    Vec2 point_at(double t) const;
    BoundaryPiece reversed() const;
};

using Polyline = std::vector<Vec2>;

/// Strictly convex ccw polygon. Constructor validates the invariants.
struct ConvexPolygon {
    std::vector<Vec2> vertices;

    ConvexPolygon() = default;
    explicit ConvexPolygon(std::vector<Vec2> verts);

    double area() const;
    bool contains(const Vec2& p, double eps = 0.0) const;
};

double polygon_signed_area(const std::vector<Vec2>& poly);
Vec2 polygon_centroid(const std::vector<Vec2>& poly);

/// Monotone-chain convex hull, ccw, no duplicate/collinear vertices.
std::vector<Vec2> convex_hull(std::vector<Vec2> pts);

/// Diameter of a strictly convex polygon by rotating calipers.
/// Tie-breaking: first antipodal pair in scan order.
double polygon_diameter(const ConvexPolygon& poly);

/// Diameter of an arbitrary nonempty point set (hull + calipers).
double point_set_diameter(const std::vector<Vec2>& pts);

/// Intersection of two convex polygons (Sutherland-Hodgman). Returns an
/// empty polygon when the intersection area is below eps_area.
std::vector<Vec2> clip_convex(const std::vector<Vec2>& subject, const std::vector<Vec2>& clip);

std::vector<Vec2> clip_halfplane(const std::vector<Vec2>& poly, const Vec2& point, const Vec2& inward_normal);

/// Chord polyline along an arc with every chord's sagitta <= max_sagitta.
/// Endpoints are preserved exactly; interior vertices lie on the circle.
Polyline discretize_arc(const BoundaryPiece& arc, double max_sagitta);

bool segments_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d);

/// Proper (interior) intersections between two polylines; endpoints
/// shared by construction can be excluded via skip_shared_endpoints.
bool polylines_cross(const Polyline& p, const Polyline& q, bool skip_shared_start);

}  // namespace reldiam
