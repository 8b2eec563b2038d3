#include "reldiam/subdivision.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace reldiam {

namespace {

std::vector<BoundaryPiece> polyline_pieces(const Polyline& poly, bool reversed) {
    std::vector<BoundaryPiece> out;
    const size_t n = poly.size();
    for (size_t i = 0; i + 1 < n; ++i) {
        const Vec2& a = reversed ? poly[n - 1 - i] : poly[i];
        const Vec2& b = reversed ? poly[n - 2 - i] : poly[i + 1];
        if (distance(a, b) > tolerance().eps_geom)
            out.push_back(BoundaryPiece::segment(a, b));
    }
    return out;
}

double boundary_position(const ConvexBody& body, const BoundaryLocation& loc) {
    double s = 0.0;
    for (size_t i = 0; i < loc.piece; ++i) s += body.pieces[i].length();
    return s + loc.t * body.pieces[loc.piece].length();
}

bool point_in_polygon(const std::vector<Vec2>& poly, const Vec2& p) {
    bool inside = false;
    const size_t n = poly.size();
    for (size_t i = 0, j = n - 1; i < n; j = i++) {
        const Vec2& a = poly[j];
        const Vec2& b = poly[i];
        if ((b.y > p.y) != (a.y > p.y) &&
            p.x < (a.x - b.x) * (p.y - b.y) / (a.y - b.y) + b.x)
            inside = !inside;
    }
    return inside;
}

double distance_to_polygon_boundary(const std::vector<Vec2>& poly, const Vec2& p) {
    double best = std::numeric_limits<double>::infinity();
    const size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const Vec2& a = poly[i];
        const Vec2& b = poly[(i + 1) % n];
        const Vec2 e = b - a;
        const double l2 = e.norm2();
        const double t = l2 > 0.0 ? std::clamp(dot(p - a, e) / l2, 0.0, 1.0) : 0.0;
        best = std::min(best, distance(p, a + e * t));
    }
    return best;
}

/// Ear-clipping triangulation of a simple polygon (either orientation).
std::vector<std::array<Vec2, 3>> triangulate(std::vector<Vec2> poly) {
    std::vector<std::array<Vec2, 3>> tris;
    if (polygon_signed_area(poly) < 0.0) std::reverse(poly.begin(), poly.end());
    // Drop duplicate neighbours.
    std::vector<Vec2> v;
    for (const auto& p : poly)
        if (v.empty() || distance(v.back(), p) > 1e-14) v.push_back(p);
    while (v.size() > 1 && distance(v.front(), v.back()) <= 1e-14) v.pop_back();
    size_t guard = 0;
    while (v.size() > 3 && guard < v.size() * v.size() + 16) {
        ++guard;
        bool clipped = false;
        const size_t n = v.size();
        for (size_t i = 0; i < n; ++i) {
            const Vec2& a = v[(i + n - 1) % n];
            const Vec2& b = v[i];
            const Vec2& c = v[(i + 1) % n];
            const double turn = cross(b - a, c - b);
            if (turn <= 0.0) continue;
            bool ear = true;
            for (size_t j = 0; j < n && ear; ++j) {
                if (j == i || j == (i + n - 1) % n || j == (i + 1) % n) continue;
                const Vec2& p = v[j];
                if (cross(b - a, p - a) > 0.0 && cross(c - b, p - b) > 0.0 &&
                    cross(a - c, p - c) > 0.0)
                    ear = false;
            }
            if (!ear) continue;
            tris.push_back({a, b, c});
            v.erase(v.begin() + static_cast<long>(i));
            clipped = true;
            break;
        }
        if (!clipped) break;  // degenerate leftovers; ignore slivers
    }
    if (v.size() == 3) tris.push_back({v[0], v[1], v[2]});
    return tris;
}

struct BBox {
    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -std::numeric_limits<double>::infinity();
    double ymin = std::numeric_limits<double>::infinity();
    double ymax = -std::numeric_limits<double>::infinity();

    void add(const Vec2& p) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    bool overlaps(const BBox& o) const {
        return xmin <= o.xmax && o.xmin <= xmax && ymin <= o.ymax && o.ymin <= ymax;
    }
};

BBox bbox_of(const std::array<Vec2, 3>& t) {
    BBox b;
    for (const auto& p : t) b.add(p);
    return b;
}

double polygon_overlap_area(const std::vector<Vec2>& p, const std::vector<Vec2>& q) {
    const auto tp = triangulate(p);
    const auto tq = triangulate(q);
    std::vector<BBox> bq(tq.size());
    for (size_t j = 0; j < tq.size(); ++j) bq[j] = bbox_of(tq[j]);
    double area = 0.0;
    for (const auto& ti : tp) {
        const BBox bi = bbox_of(ti);
        const std::vector<Vec2> tri_i(ti.begin(), ti.end());
        for (size_t j = 0; j < tq.size(); ++j) {
            if (!bi.overlaps(bq[j])) continue;
            const std::vector<Vec2> tri_j(tq[j].begin(), tq[j].end());
            const auto inter = clip_convex(tri_i, tri_j);
            if (inter.size() >= 3) area += std::abs(polygon_signed_area(inter));
        }
    }
    return area;
}

}  // namespace

std::vector<Vec2> region_polygon(const std::vector<BoundaryPiece>& region, double max_sagitta) {
    std::vector<Vec2> out;
    for (const auto& piece : region) {
        Polyline chain = discretize_arc(piece, max_sagitta);
        chain.pop_back();
        out.insert(out.end(), chain.begin(), chain.end());
    }
    return out;
}

KSubdivision regions_of_partition(const KPartition& partition) {
    const auto& body = partition.body;
    const int k = partition.k();
    if (k < 2) throw GeometryError("partition needs at least 2 curves");
    std::vector<BoundaryLocation> locs(k);
    std::vector<double> pos(k);
    for (int i = 0; i < k; ++i) {
        if (partition.curves[i].size() < 2)
            throw GeometryError("partition curve needs at least 2 vertices");
        locs[i] = locate_on_boundary(body, partition.curves[i].back());
        pos[i] = boundary_position(body, locs[i]);
    }
    std::vector<int> order(k);
    for (int i = 0; i < k; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return pos[a] < pos[b]; });

    KSubdivision out;
    out.body = body;
    for (int s = 0; s < k; ++s) {
        const int i = order[s];
        const int j = order[(s + 1) % k];
        std::vector<BoundaryPiece> loop = polyline_pieces(partition.curves[i], false);
        auto wall = boundary_path(body, locs[i], locs[j]);
        loop.insert(loop.end(), wall.begin(), wall.end());
        auto back = polyline_pieces(partition.curves[j], true);
        loop.insert(loop.end(), back.begin(), back.end());
        out.regions.push_back(std::move(loop));
    }
    return out;
}

DiameterWitness max_relative_diameter(const KSubdivision& subdivision) {
    DiameterWitness w;
    w.value = -1.0;
    for (size_t i = 0; i < subdivision.regions.size(); ++i) {
        Vec2 p, q;
        const double d = piece_set_diameter(subdivision.regions[i], &p, &q);
        if (d > w.value) {
            w.value = d;
            w.p = p;
            w.q = q;
            w.region = static_cast<int>(i);
        }
    }
    return w;
}

DiameterWitness max_relative_diameter(const KPartition& partition) {
    return max_relative_diameter(regions_of_partition(partition));
}

ValidationReport validate_partition(const KPartition& partition) {
    ValidationReport rep;
    const auto& body = partition.body;
    const double eps = tolerance().eps_geom;
    if (partition.k() < 2) {
        rep.fail("partition needs at least 2 curves");
        return rep;
    }
    if (!body_contains(body, partition.common_point, 0.0) ||
        distance_to_boundary(body, partition.common_point) <= eps)
        rep.fail("common point is not strictly interior");
    for (int i = 0; i < partition.k(); ++i) {
        const auto& c = partition.curves[i];
        const std::string tag = "curve " + std::to_string(i);
        if (c.size() < 2) {
            rep.fail(tag + " has fewer than 2 vertices");
            continue;
        }
        if (distance(c.front(), partition.common_point) > eps)
            rep.fail(tag + " does not start at the common point");
        if (distance_to_boundary(body, c.back()) > 1e-6)
            rep.fail(tag + " does not end on the boundary");
        for (size_t v = 0; v + 1 < c.size(); ++v) {
            if (distance(c[v], c[v + 1]) <= eps) rep.fail(tag + " has a zero-length edge");
            if (v > 0 && (!body_contains(body, c[v], 0.0) ||
                          distance_to_boundary(body, c[v]) <= eps))
                rep.fail(tag + " leaves the interior");
        }
        // Self-intersection among non-adjacent edges.
        for (size_t a = 0; a + 1 < c.size(); ++a)
            for (size_t b = a + 2; b + 1 < c.size(); ++b)
                if (segments_intersect(c[a], c[a + 1], c[b], c[b + 1]))
                    rep.fail(tag + " self-intersects");
    }
    for (int i = 0; i < partition.k(); ++i)
        for (int j = i + 1; j < partition.k(); ++j)
            if (polylines_cross(partition.curves[i], partition.curves[j], true))
                rep.fail("curves " + std::to_string(i) + " and " + std::to_string(j) +
                         " cross");
    return rep;
}

ValidationReport validate_subdivision(const KSubdivision& subdivision) {
    ValidationReport rep;
    const auto& body = subdivision.body;
    const double eps = tolerance().eps_geom;
    const double eps_area = tolerance().eps_area;
    const int k = subdivision.k();
    if (k < 1) {
        rep.fail("subdivision has no regions");
        return rep;
    }
    double total = 0.0;
    const double sagitta = 1e-4;
    std::vector<std::vector<Vec2>> polys(k);
    std::vector<BBox> boxes(k);
    std::vector<double> perims(k);
    for (int i = 0; i < k; ++i) {
        const auto& loop = subdivision.regions[i];
        const std::string tag = "region " + std::to_string(i);
        if (loop.empty()) {
            rep.fail(tag + " is empty");
            continue;
        }
        for (size_t p = 0; p < loop.size(); ++p) {
            const Vec2& b = loop[p].b;
            const Vec2& a = loop[(p + 1) % loop.size()].a;
            if (distance(a, b) > 1e3 * eps) {
                rep.fail(tag + " loop is not closed");
                break;
            }
        }
        const double area = piece_loop_area(loop);
        if (area <= eps_area) rep.fail(tag + " has non-positive area");
        total += area;
        polys[i] = region_polygon(loop, sagitta);
        perims[i] = piece_loop_perimeter(loop);
        for (const auto& p : polys[i]) boxes[i].add(p);
    }
    if (!rep.ok) return rep;
    const double body_a = body_area(body);
    if (std::abs(total - body_a) > k * eps_area)
        rep.fail("region areas do not sum to the body area");
    // Pairwise interior overlap, at the discretization scale.
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (!boxes[i].overlaps(boxes[j])) continue;
            const double ov = polygon_overlap_area(polys[i], polys[j]);
            const double tol = 4.0 * sagitta * (perims[i] + perims[j]) + 1e-9;
            if (ov > tol)
                rep.fail("regions " + std::to_string(i) + " and " + std::to_string(j) +
                         " overlap (area " + std::to_string(ov) + ")");
        }
    }
    // Sampled coverage.
    BBox bb;
    for (const auto& piece : body.pieces) {
        bb.add(piece.a);
        bb.add(piece.b);
        if (piece.kind == PieceKind::Arc) {
            bb.add(piece.center + Vec2{piece.radius, 0});
            bb.add(piece.center - Vec2{piece.radius, 0});
            bb.add(piece.center + Vec2{0, piece.radius});
            bb.add(piece.center - Vec2{0, piece.radius});
        }
    }
    const int grid = 24;
    int missed = 0;
    for (int gy = 0; gy < grid && missed == 0; ++gy) {
        for (int gx = 0; gx < grid; ++gx) {
            const Vec2 p{bb.xmin + (bb.xmax - bb.xmin) * (gx + 0.5) / grid,
                         bb.ymin + (bb.ymax - bb.ymin) * (gy + 0.5) / grid};
            if (!body_contains(body, p, 0.0)) continue;
            if (distance_to_boundary(body, p) < 4.0 * sagitta) continue;
            bool covered = false;
            for (int i = 0; i < k && !covered; ++i)
                covered = point_in_polygon(polys[i], p) ||
                          distance_to_polygon_boundary(polys[i], p) < 4.0 * sagitta;
            if (!covered) {
                rep.fail("interior sample point not covered by any region");
                ++missed;
                break;
            }
        }
    }
    return rep;
}

}  // namespace reldiam
