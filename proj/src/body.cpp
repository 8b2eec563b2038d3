#include "reldiam/body.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace reldiam {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kTwoPi = 2.0 * kPi;

double normalize_angle(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    return a;
}

/// Ccw angular interval [start, start + width] of an arc piece,
/// regardless of its traversal direction.
struct ArcInterval {
    double start = 0.0;
    double width = 0.0;
};

ArcInterval arc_interval(const BoundaryPiece& p) {
    const double sweep = p.sweep_angle();
    if (sweep >= 0.0) return {normalize_angle(p.start_angle()), sweep};
    return {normalize_angle(p.start_angle() + sweep), -sweep};
}

bool interval_contains(const ArcInterval& iv, double angle, double tol) {
    const double d = normalize_angle(angle - iv.start);
    return d <= iv.width + tol || d >= kTwoPi - tol;
}

/// Some angle phi with phi in iv1 and phi + pi in iv2, if one exists.
bool antipodal_overlap(const ArcInterval& iv1, const ArcInterval& iv2, double* phi) {
    const double c = normalize_angle(iv2.start - kPi - iv1.start);
    if (c <= iv1.width) {
        *phi = iv1.start + c;
        return true;
    }
    if (c + iv2.width >= kTwoPi) {
        *phi = iv1.start;
        return true;
    }
    return false;
}

double point_piece_distance(const BoundaryPiece& piece, const Vec2& p, double* t_out) {
    if (piece.kind == PieceKind::Segment) {
        const Vec2 e = piece.b - piece.a;
        double t = dot(p - piece.a, e) / e.norm2();
        t = std::clamp(t, 0.0, 1.0);
        if (t_out) *t_out = t;
        return distance(p, piece.a + e * t);
    }
    const Vec2 d = p - piece.center;
    const double dn = d.norm();
    const double sweep = piece.sweep_angle();
    if (dn < 1e-14) {
        if (t_out) *t_out = 0.5;
        return piece.radius;
    }
    const double ang = std::atan2(d.y, d.x);
    // Parameter of ang along the traversal.
    double rel = normalize_angle(sweep >= 0.0 ? ang - piece.start_angle()
                                              : piece.start_angle() - ang);
    if (rel <= std::abs(sweep)) {
        if (t_out) *t_out = rel / std::abs(sweep);
        return std::abs(dn - piece.radius);
    }
    const double da = distance(p, piece.a);
    const double db = distance(p, piece.b);
    if (t_out) *t_out = da <= db ? 0.0 : 1.0;
    return std::min(da, db);
}

}  // namespace

ConvexBody make_regular_kgon(int k, double circumradius, const Vec2& center, double phase) {
    if (k < 3) throw GeometryError("regular k-gon needs k >= 3");
    if (circumradius <= 0.0) throw GeometryError("circumradius must be positive");
    ConvexBody body;
    body.center = center;
    body.symmetry_order = k;
    std::vector<Vec2> v(k);
    for (int i = 0; i < k; ++i)
        v[i] = center + circumradius * unit_dir(phase + kTwoPi * i / k);
    for (int i = 0; i < k; ++i)
        body.pieces.push_back(BoundaryPiece::segment(v[i], v[(i + 1) % k]));
    return body;
}

ConvexBody make_disc(double radius, const Vec2& center) {
    if (radius <= 0.0) throw GeometryError("disc radius must be positive");
    ConvexBody body;
    body.center = center;
    body.symmetry_order = 360;
    std::array<Vec2, 4> v = {center + Vec2{radius, 0.0}, center + Vec2{0.0, radius},
                             center - Vec2{radius, 0.0}, center - Vec2{0.0, radius}};
    for (int i = 0; i < 4; ++i)
        body.pieces.push_back(BoundaryPiece::arc(v[i], v[(i + 1) % 4], center, radius, true));
    return body;
}

ConvexBody make_reuleaux(int k, double width, const Vec2& center) {
    if (k < 3 || k % 2 == 0) throw GeometryError("Reuleaux polygon needs odd k >= 3");
    if (width <= 0.0) throw GeometryError("width must be positive");
    const double R = width / (2.0 * std::cos(kPi / (2.0 * k)));
    ConvexBody body;
    body.center = center;
    body.symmetry_order = k;
    std::vector<Vec2> v(k);
    for (int i = 0; i < k; ++i)
        v[i] = center + R * unit_dir(kPi / 2.0 + kTwoPi * i / k);
    const int opp = (k + 1) / 2;
    for (int i = 0; i < k; ++i)
        body.pieces.push_back(
            BoundaryPiece::arc(v[i], v[(i + 1) % k], v[(i + opp) % k], width, true));
    return body;
}

ConvexBody make_circle_kgon_intersection(int k, double circle_radius, double apothem,
                                         const Vec2& center, double phase) {
    if (k < 3) throw GeometryError("k-gon needs k >= 3");
    if (circle_radius <= 0.0 || apothem <= 0.0)
        throw GeometryError("radii must be positive");
    const double eps = tolerance().eps_geom;
    if (apothem >= circle_radius - eps) return make_disc(circle_radius, center);
    const double poly_R = apothem / std::cos(kPi / k);
    if (poly_R <= circle_radius + eps)
        return make_regular_kgon(k, poly_R, center, phase);
    // Mixed boundary: one chord segment per polygon edge, one arc per
    // clipped vertex. Edge i is normal to the mid-edge direction
    // phase + (i + 1/2) * 2*pi/k (vertices sit in the phase directions).
    const double h = std::sqrt(circle_radius * circle_radius - apothem * apothem);
    ConvexBody body;
    body.center = center;
    body.symmetry_order = k;
    std::vector<Vec2> seg_a(k), seg_b(k);
    for (int i = 0; i < k; ++i) {
        const double mid = phase + kTwoPi * (i + 0.5) / k;
        const Vec2 n = unit_dir(mid);
        const Vec2 t = {-n.y, n.x};
        const Vec2 m = center + apothem * n;
        seg_a[i] = m - h * t;
        seg_b[i] = m + h * t;
    }
    for (int i = 0; i < k; ++i) {
        body.pieces.push_back(BoundaryPiece::segment(seg_a[i], seg_b[i]));
        body.pieces.push_back(
            BoundaryPiece::arc(seg_b[i], seg_a[(i + 1) % k], center, circle_radius, true));
    }
    return body;
}

ConvexBody scaled(const ConvexBody& body, double s) {
    if (s <= 0.0) throw GeometryError("scale factor must be positive");
    ConvexBody out = body;
    for (auto& p : out.pieces) {
        p.a = body.center + (p.a - body.center) * s;
        p.b = body.center + (p.b - body.center) * s;
        if (p.kind == PieceKind::Arc) {
            p.center = body.center + (p.center - body.center) * s;
            p.radius *= s;
        }
    }
    return out;
}

double piece_loop_area(const std::vector<BoundaryPiece>& loop) {
    double s = 0.0;
    for (const auto& p : loop) {
        s += 0.5 * cross(p.a, p.b);
        if (p.kind == PieceKind::Arc) {
            const double sweep = p.sweep_angle();
            const double th = std::abs(sweep);
            const double segment = 0.5 * p.radius * p.radius * (th - std::sin(th));
            s += sweep >= 0.0 ? segment : -segment;
        }
    }
    return s;
}

double piece_loop_perimeter(const std::vector<BoundaryPiece>& loop) {
    double s = 0.0;
    for (const auto& p : loop) s += p.length();
    return s;
}

double piece_set_diameter(const std::vector<BoundaryPiece>& pieces, Vec2* wp, Vec2* wq) {
    if (pieces.empty()) throw GeometryError("piece_set_diameter: empty piece set");
    const double tol = 1e-12;
    double best = -1.0;
    Vec2 bp, bq;
    auto consider = [&](const Vec2& p, const Vec2& q) {
        const double d2 = distance2(p, q);
        if (d2 > best) {
            best = d2;
            bp = p;
            bq = q;
        }
    };
    std::vector<Vec2> pts;
    std::vector<const BoundaryPiece*> arcs;
    for (const auto& p : pieces) {
        pts.push_back(p.a);
        pts.push_back(p.b);
        if (p.kind == PieceKind::Arc) arcs.push_back(&p);
    }
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) consider(pts[i], pts[j]);
    // Point against arc: the far antipode c - r*(p-c)/|p-c|, when the
    // arc's sweep covers it.
    for (const auto* arc : arcs) {
        const ArcInterval iv = arc_interval(*arc);
        for (const auto& p : pts) {
            const Vec2 d = arc->center - p;
            const double dn = d.norm();
            if (dn < tol) continue;
            const double ang = std::atan2(d.y, d.x);
            if (interval_contains(iv, ang, tol))
                consider(p, arc->center + arc->radius * (d / dn));
        }
    }
    // Arc against arc.
    for (size_t i = 0; i < arcs.size(); ++i) {
        const ArcInterval ivi = arc_interval(*arcs[i]);
        for (size_t j = i; j < arcs.size(); ++j) {
            const ArcInterval ivj = arc_interval(*arcs[j]);
            const Vec2 dc = arcs[j]->center - arcs[i]->center;
            const double dn = dc.norm();
            const bool same_circle =
                dn < tol && std::abs(arcs[i]->radius - arcs[j]->radius) < tol;
            if (same_circle) {
                // Diametrical pair on a shared circle.
                double phi = 0.0;
                if (antipodal_overlap(ivi, ivj, &phi)) {
                    const Vec2 u = unit_dir(phi);
                    consider(arcs[i]->center + arcs[i]->radius * u,
                             arcs[i]->center - arcs[i]->radius * u);
                }
                continue;
            }
            if (dn < tol && std::abs(arcs[i]->radius - arcs[j]->radius) >= tol) {
                // Concentric, different radii: the farthest pair sits at
                // opposite ends of any shared diameter direction, at
                // distance r_i + r_j.
                double phi = 0.0;
                if (antipodal_overlap(ivi, ivj, &phi)) {
                    const Vec2 u = unit_dir(phi);
                    consider(arcs[i]->center + arcs[i]->radius * u,
                             arcs[j]->center - arcs[j]->radius * u);
                }
                continue;
            }
            if (i == j || dn < tol) continue;
            const Vec2 u = dc / dn;
            const double ai = std::atan2(-u.y, -u.x);
            const double aj = std::atan2(u.y, u.x);
            if (interval_contains(ivi, ai, tol) && interval_contains(ivj, aj, tol))
                consider(arcs[i]->center - arcs[i]->radius * u,
                         arcs[j]->center + arcs[j]->radius * u);
        }
    }
    if (wp) *wp = bp;
    if (wq) *wq = bq;
    return std::sqrt(best);
}

double body_area(const ConvexBody& body) { return piece_loop_area(body.pieces); }

double body_perimeter(const ConvexBody& body) { return piece_loop_perimeter(body.pieces); }

double body_diameter(const ConvexBody& body) { return piece_set_diameter(body.pieces); }

double distance_to_boundary(const ConvexBody& body, const Vec2& p) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& piece : body.pieces)
        best = std::min(best, point_piece_distance(piece, p, nullptr));
    return best;
}

bool body_contains(const ConvexBody& body, const Vec2& p, double eps) {
    for (const auto& piece : body.pieces) {
        const Vec2 e = piece.b - piece.a;
        const bool inner_chord = cross(e, p - piece.a) >= -eps * e.norm();
        if (piece.kind == PieceKind::Segment) {
            if (!inner_chord) return false;
        } else {
            if (!inner_chord && distance(p, piece.center) > piece.radius + eps) return false;
        }
    }
    return true;
}

double body_circumradius(const ConvexBody& body) {
    double cmax = 0.0;
    for (const auto& p : body.pieces) {
        cmax = std::max(cmax, std::max(distance(p.a, body.center), distance(p.b, body.center)));
        if (p.kind == PieceKind::Arc) {
            const Vec2 d = p.center - body.center;
            const double dn = d.norm();
            if (dn < 1e-14) {
                cmax = std::max(cmax, p.radius);
            } else {
                const double ang = std::atan2(d.y, d.x);
                if (interval_contains(arc_interval(p), ang, 1e-12))
                    cmax = std::max(cmax, dn + p.radius);
            }
        }
    }
    return cmax;
}

double body_inradius(const ConvexBody& body) {
    if (body.symmetry_order >= 2) return distance_to_boundary(body, body.center);
    Vec2 x = body.center;
    double f = distance_to_boundary(body, x);
    double step = std::max(body_circumradius(body), 1.0) * 0.25;
    while (step > 1e-12) {
        bool improved = false;
        for (const Vec2& d : {Vec2{1, 0}, Vec2{-1, 0}, Vec2{0, 1}, Vec2{0, -1}, Vec2{1, 1},
                              Vec2{-1, 1}, Vec2{1, -1}, Vec2{-1, -1}}) {
            const Vec2 y = x + step * d;
            if (!body_contains(body, y, 0.0)) continue;
            const double fy = distance_to_boundary(body, y);
            if (fy > f) {
                x = y;
                f = fy;
                improved = true;
            }
        }
        if (!improved) step *= 0.5;
    }
    return f;
}

BodyMetrics metrics(const ConvexBody& body) {
    BodyMetrics m;
    m.area = body_area(body);
    m.perimeter = body_perimeter(body);
    m.diameter = body_diameter(body);
    m.circumradius = body_circumradius(body);
    m.inradius = body_inradius(body);
    // Minimal width via support-function sampling.
    auto support = [&](const Vec2& u) {
        double h = -std::numeric_limits<double>::infinity();
        for (const auto& p : body.pieces) {
            h = std::max(h, std::max(dot(p.a, u), dot(p.b, u)));
            if (p.kind == PieceKind::Arc &&
                interval_contains(arc_interval(p), std::atan2(u.y, u.x), 1e-12))
                h = std::max(h, dot(p.center, u) + p.radius);
        }
        return h;
    };
    double wmin = std::numeric_limits<double>::infinity();
    const int n = 3600;
    for (int i = 0; i < n; ++i) {
        const Vec2 u = unit_dir(kPi * i / n);
        wmin = std::min(wmin, support(u) + support(-1.0 * u));
    }
    m.width = wmin;
    return m;
}

void validate_body(const ConvexBody& body) {
    const double eps = tolerance().eps_geom;
    const size_t n = body.pieces.size();
    if (n == 0) throw GeometryError("body has no boundary pieces");
    for (size_t i = 0; i < n; ++i) {
        const Vec2& b = body.pieces[i].b;
        const Vec2& a = body.pieces[(i + 1) % n].a;
        if (distance(a, b) > 1e3 * eps)
            throw GeometryError("boundary loop is not closed");
        if (body.pieces[i].kind == PieceKind::Arc && !body.pieces[i].ccw)
            throw GeometryError("body boundary must traverse arcs ccw");
        if (body.pieces[i].kind == PieceKind::Arc &&
            body.pieces[i].sweep_angle() > kPi + 1e-9)
            throw GeometryError("arc sweep must not exceed pi");
    }
    if (piece_loop_area(body.pieces) <= eps)
        throw GeometryError("boundary loop must be ccw with positive area");
    // Convexity at the sampled scale.
    std::vector<Vec2> pts = boundary_points(body, 1e-4);
    const size_t m = pts.size();
    for (size_t i = 0; i < m; ++i) {
        const Vec2& p0 = pts[i];
        const Vec2& p1 = pts[(i + 1) % m];
        const Vec2& p2 = pts[(i + 2) % m];
        if (cross(p1 - p0, p2 - p1) < -1e3 * eps)
            throw GeometryError("boundary is not convex");
    }
}

bool verify_symmetry(const ConvexBody& body, int k, double eps) {
    if (k < 1) return false;
    const double step = kTwoPi / k;
    for (const auto& piece : body.pieces) {
        for (double t : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            const Vec2 q = rotate_about(piece.point_at(t), body.center, step);
            if (distance_to_boundary(body, q) > eps) return false;
        }
    }
    return true;
}

std::vector<Vec2> boundary_points(const ConvexBody& body, double max_sagitta) {
    std::vector<Vec2> out;
    for (const auto& piece : body.pieces) {
        Polyline chain = discretize_arc(piece, max_sagitta);
        chain.pop_back();  // piece.b is the next piece's a
        out.insert(out.end(), chain.begin(), chain.end());
    }
    return out;
}

BoundaryLocation locate_on_boundary(const ConvexBody& body, const Vec2& p) {
    BoundaryLocation best;
    double best_d = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < body.pieces.size(); ++i) {
        double t = 0.0;
        const double d = point_piece_distance(body.pieces[i], p, &t);
        if (d < best_d) {
            best_d = d;
            best = {i, t};
        }
    }
    return best;
}

Vec2 boundary_point(const ConvexBody& body, const BoundaryLocation& loc) {
    return body.pieces.at(loc.piece).point_at(loc.t);
}

BoundaryPiece sub_piece(const BoundaryPiece& piece, double t0, double t1) {
    if (!(t0 < t1)) throw GeometryError("sub_piece needs t0 < t1");
    const Vec2 a = t0 <= 0.0 ? piece.a : piece.point_at(t0);
    const Vec2 b = t1 >= 1.0 ? piece.b : piece.point_at(t1);
    if (piece.kind == PieceKind::Segment) return BoundaryPiece::segment(a, b);
    return BoundaryPiece::arc(a, b, piece.center, piece.radius, piece.ccw);
}

std::vector<BoundaryPiece> boundary_path(const ConvexBody& body, const BoundaryLocation& from,
                                         const BoundaryLocation& to) {
    const double tsnap = 1e-12;
    const size_t n = body.pieces.size();
    std::vector<BoundaryPiece> out;
    if (from.piece == to.piece && from.t < to.t - tsnap) {
        out.push_back(sub_piece(body.pieces[from.piece], from.t, to.t));
        return out;
    }
    if (from.piece == to.piece && std::abs(from.t - to.t) <= tsnap) return out;
    if (from.t < 1.0 - tsnap)
        out.push_back(sub_piece(body.pieces[from.piece], from.t, 1.0));
    for (size_t i = (from.piece + 1) % n; i != to.piece; i = (i + 1) % n)
        out.push_back(body.pieces[i]);
    if (to.t > tsnap) out.push_back(sub_piece(body.pieces[to.piece], 0.0, to.t));
    return out;
}

Vec2 piece_loop_centroid(const std::vector<BoundaryPiece>& loop) {
    double area = 0.0;
    Vec2 moment;
    for (const auto& p : loop) {
        const double w = cross(p.a, p.b);
        area += 0.5 * w;
        moment = moment + (p.a + p.b) * (w / 6.0);
        if (p.kind == PieceKind::Arc) {
            const double sweep = p.sweep_angle();
            const double th = std::abs(sweep);
            const double seg_area = 0.5 * p.radius * p.radius * (th - std::sin(th));
            if (seg_area <= 0.0) continue;
            // Centroid of the circular segment along the mid-sweep ray.
            const double s3 = std::sin(0.5 * th);
            const double dist = 4.0 * p.radius * s3 * s3 * s3 / (3.0 * (th - std::sin(th)));
            const Vec2 mid = p.point_at(0.5);
            const Vec2 u = (mid - p.center) / distance(mid, p.center);
            const Vec2 cseg = p.center + dist * u;
            const double sign = sweep >= 0.0 ? 1.0 : -1.0;
            area += sign * seg_area;
            moment = moment + cseg * (sign * seg_area);
        }
    }
    if (std::abs(area) < 1e-300) throw GeometryError("degenerate loop in centroid");
    return moment / area;
}

std::vector<BoundaryPiece> clip_loop_halfplane(const std::vector<BoundaryPiece>& loop,
                                               const Vec2& point, const Vec2& inward_normal) {
    const double nn = inward_normal.norm();
    if (nn <= 0.0) throw GeometryError("zero clip normal");
    const Vec2 n = inward_normal / nn;
    const double tol = 1e-12;
    auto f = [&](const Vec2& x) { return dot(x - point, n); };

    // Split every piece at its line crossings, then keep the inside run.
    struct Sub {
        BoundaryPiece piece;
        bool inside;
    };
    std::vector<Sub> subs;
    for (const auto& p : loop) {
        std::vector<double> cuts = {0.0, 1.0};
        if (p.kind == PieceKind::Segment) {
            const double fa = f(p.a);
            const double fb = f(p.b);
            if ((fa > tol && fb < -tol) || (fa < -tol && fb > tol))
                cuts.push_back(fa / (fa - fb));
        } else {
            const double g = f(p.center);
            if (std::abs(g) < p.radius) {
                const double psi = std::atan2(n.y, n.x);
                const double da = std::acos(std::clamp(-g / p.radius, -1.0, 1.0));
                const double sweep = p.sweep_angle();
                for (double ang : {psi + da, psi - da}) {
                    // Parameter along the traversal.
                    double rel = std::fmod(ang - p.start_angle(), kTwoPi);
                    if (sweep >= 0.0) {
                        while (rel < 0.0) rel += kTwoPi;
                    } else {
                        while (rel > 0.0) rel -= kTwoPi;
                    }
                    const double t = rel / sweep;
                    if (t > 1e-9 && t < 1.0 - 1e-9) cuts.push_back(t);
                }
            }
        }
        std::sort(cuts.begin(), cuts.end());
        for (size_t i = 0; i + 1 < cuts.size(); ++i) {
            if (cuts[i + 1] - cuts[i] < 1e-9) continue;
            BoundaryPiece sp = sub_piece(p, cuts[i], cuts[i + 1]);
            if (sp.length() < tol) continue;
            const bool inside = f(sp.point_at(0.5)) >= -tol;
            subs.push_back({std::move(sp), inside});
        }
    }
    if (subs.empty()) return {};
    bool any_in = false, any_out = false;
    for (const auto& s : subs) (s.inside ? any_in : any_out) = true;
    if (!any_in) return {};
    if (!any_out) return loop;
    // Rotate so the inside run is contiguous, starting right after an
    // outside sub-piece (convex loop: exactly one inside run).
    size_t start = 0;
    for (size_t i = 0; i < subs.size(); ++i) {
        if (subs[i].inside && !subs[(i + subs.size() - 1) % subs.size()].inside) {
            start = i;
            break;
        }
    }
    std::vector<BoundaryPiece> out;
    for (size_t i = 0; i < subs.size(); ++i) {
        const Sub& s = subs[(start + i) % subs.size()];
        if (!s.inside) break;
        out.push_back(s.piece);
    }
    // Close with the chord along the clip line.
    const Vec2 tail = out.back().b;
    const Vec2 head = out.front().a;
    if (distance(tail, head) > tol) out.push_back(BoundaryPiece::segment(tail, head));
    if (piece_loop_area(out) <= tolerance().eps_area) return {};
    return out;
}

}  // namespace reldiam
