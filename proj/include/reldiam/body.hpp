#pragma once

#include "reldiam/geometry.hpp"

namespace reldiam {

/// Planar convex body bounded by a ccw loop of segments and circular
/// arcs. `center` is the rotational symmetry center and `symmetry_order`
/// the order k of the symmetry group (discs are capped at 360).
struct ConvexBody {
    std::vector<BoundaryPiece> pieces;
    Vec2 center;
    int symmetry_order = 1;
};

struct BodyMetrics {
    double area = 0.0;
    double perimeter = 0.0;
    double inradius = 0.0;
    double circumradius = 0.0;
    double diameter = 0.0;
    double width = 0.0;
};

/// Regular k-gon with the given circumradius; first vertex at angle
/// `phase` (default: topmost vertex).
ConvexBody make_regular_kgon(int k, double circumradius, const Vec2& center = {},
                             double phase = 1.5707963267948966);

/// Disc as four ccw quarter arcs.
ConvexBody make_disc(double radius, const Vec2& center = {});

/// Reuleaux polygon of constant width `width` on an odd number of
/// vertices.
ConvexBody make_reuleaux(int k, double width, const Vec2& center = {});

/// Intersection of the disc B(center, circle_radius) with the regular
/// k-gon of the given apothem (inradius), edges normal to the vertex
/// directions of phase + i*2*pi/k. Degenerates to the disc or the
/// polygon when one contains the other.
ConvexBody make_circle_kgon_intersection(int k, double circle_radius, double apothem,
                                         const Vec2& center = {},
                                         double phase = 1.5707963267948966);

/// Scale the body by `s` about its center.
ConvexBody scaled(const ConvexBody& body, double s);

/// Exact area (shoelace over endpoints plus circular-segment
/// corrections), exact perimeter, analytic in/circumradius, and the
/// diameter/width of the body.
BodyMetrics metrics(const ConvexBody& body);

double body_area(const ConvexBody& body);
double body_perimeter(const ConvexBody& body);
double body_diameter(const ConvexBody& body);

/// Farthest boundary point from the center (analytic per piece).
double body_circumradius(const ConvexBody& body);

/// Inradius: nearest boundary distance from the center when
/// symmetry_order >= 2 (exact by concavity + orbit averaging),
/// otherwise a concave maximization of the boundary distance.
double body_inradius(const ConvexBody& body);

/// Signed area enclosed by a closed loop of pieces (shoelace over the
/// endpoints plus circular-segment corrections). Positive for ccw loops.
double piece_loop_area(const std::vector<BoundaryPiece>& loop);

double piece_loop_perimeter(const std::vector<BoundaryPiece>& loop);

/// Exact diameter of the union of the pieces: the farthest pair is
/// either endpoint/endpoint, endpoint/arc antipode, the line-of-centers
/// pair of two arcs, or a diametrical pair when two arcs share a circle.
/// All candidates are enumerated in closed form, so the result carries
/// only rounding error. Optional out-params receive the witness pair.
double piece_set_diameter(const std::vector<BoundaryPiece>& pieces, Vec2* wp = nullptr,
                          Vec2* wq = nullptr);

/// Loop closure, ccw orientation, convexity at the sampled scale.
void validate_body(const ConvexBody& body);

/// True when rotating the boundary by 2*pi/k about body.center maps it
/// onto itself within eps.
bool verify_symmetry(const ConvexBody& body, int k, double eps);

/// Unsigned distance from p to the boundary loop.
double distance_to_boundary(const ConvexBody& body, const Vec2& p);

/// Containment with outward tolerance eps. Assumes every arc sweeps at
/// most pi, which all constructors guarantee.
bool body_contains(const ConvexBody& body, const Vec2& p, double eps = 0.0);

/// Boundary sample points: all piece endpoints plus arc chains with the
/// given sagitta bound.
std::vector<Vec2> boundary_points(const ConvexBody& body, double max_sagitta);

/// Position on the boundary loop: piece index plus parameter in [0,1].
struct BoundaryLocation {
    size_t piece = 0;
    double t = 0.0;
};

/// Nearest boundary location to p (p is expected to lie on or very near
/// the boundary).
BoundaryLocation locate_on_boundary(const ConvexBody& body, const Vec2& p);

Vec2 boundary_point(const ConvexBody& body, const BoundaryLocation& loc);

/// Sub-piece of a piece between parameters t0 < t1.
BoundaryPiece sub_piece(const BoundaryPiece& piece, double t0, double t1);

/// Ccw run of boundary pieces from one location to another (wraps past
/// the loop seam; trims partial pieces exactly).
std::vector<BoundaryPiece> boundary_path(const ConvexBody& body, const BoundaryLocation& from,
                                         const BoundaryLocation& to);

/// Area centroid of a convex piece loop (polygon centroid plus
/// circular-segment corrections).
Vec2 piece_loop_centroid(const std::vector<BoundaryPiece>& loop);

/// Clip a convex ccw piece loop by the half-plane
/// dot(x - point, inward_normal) >= 0. Segment/arc crossings are solved
/// in closed form and the cut is closed with a chord. Returns an empty
/// loop when nothing survives.
std::vector<BoundaryPiece> clip_loop_halfplane(const std::vector<BoundaryPiece>& loop,
                                               const Vec2& point, const Vec2& inward_normal);

}  // namespace reldiam
