#include "reldiam/optimizer.hpp"

#include "reldiam/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

namespace reldiam {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kTwoPi = 2.0 * kPi;

struct Objective {
    double first = 0.0;   // d_M
    double second = 0.0;  // second-largest region diameter

    bool operator<(const Objective& o) const {
        if (first != o.first) return first < o.first;
        return second < o.second;
    }
};

Objective evaluate(const KSubdivision& sub) {
    Objective obj;
    double d1 = -1.0, d2 = -1.0;
    for (const auto& region : sub.regions) {
        const double d = piece_set_diameter(region);
        if (d > d1) {
            d2 = d1;
            d1 = d;
        } else if (d > d2) {
            d2 = d;
        }
    }
    obj.first = d1;
    obj.second = std::max(d2, 0.0);
    return obj;
}

/// Voronoi cells of the sites clipped to the body; empty optional when
/// some cell degenerates.
std::optional<KSubdivision> voronoi_subdivision(const ConvexBody& body,
                                                const std::vector<Vec2>& sites) {
    KSubdivision sub;
    sub.body = body;
    const int k = static_cast<int>(sites.size());
    for (int i = 0; i < k; ++i) {
        std::vector<BoundaryPiece> cell = body.pieces;
        for (int j = 0; j < k && !cell.empty(); ++j) {
            if (j == i) continue;
            const Vec2 n = sites[i] - sites[j];
            if (n.norm2() < 1e-20) return std::nullopt;
            cell = clip_loop_halfplane(cell, 0.5 * (sites[i] + sites[j]), n);
        }
        if (cell.empty() || piece_loop_area(cell) <= 1e-12) return std::nullopt;
        sub.regions.push_back(std::move(cell));
    }
    return sub;
}

double applicable_lower_bound(const ConvexBody& body, int k, bool subdivision_regime) {
    double lb = std::max(bound_isodiametric(body, k),
                         bound_hexagonal_lower(body, k).rigorous_root);
    const bool standard_applies = !subdivision_regime || k <= 6;
    if (standard_applies && k >= 3 && verify_symmetry(body, k, 1e-7))
        lb = std::max(lb, bound_standard(body, k));
    return lb;
}

struct RestartOutcome {
    Objective obj{1e300, 1e300};
    KSubdivision sub;
    std::vector<std::pair<int, double>> trace;
    std::optional<KPartition> partition;
    bool valid = false;
};

/// Boundary hit of the ray from `from` in direction `dir`.
Vec2 ray_hit(const ConvexBody& body, const Vec2& from, double angle) {
    const Vec2 dir = unit_dir(angle);
    double lo = 0.0, hi = 4.0 * body_circumradius(body) + 1.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (body_contains(body, from + mid * dir, 0.0))
            lo = mid;
        else
            hi = mid;
    }
    return from + lo * dir;
}

RestartOutcome run_partition_restart(const ConvexBody& body, int k, const SearchConfig& cfg,
                                     int restart) {
    std::mt19937_64 rng(cfg.seed * 1000003ULL + restart);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const double rin = body_inradius(body);

    struct State {
        Vec2 c;
        std::vector<double> angles;
        std::vector<double> offsets;  // perpendicular mid-vertex offsets
    };
    auto build = [&](const State& st) -> std::optional<KPartition> {
        KPartition part;
        part.body = body;
        part.common_point = st.c;
        for (int i = 0; i < k; ++i) {
            const Vec2 anchor = ray_hit(body, st.c, st.angles[i]);
            const Vec2 e = anchor - st.c;
            if (e.norm() < 1e-9) return std::nullopt;
            if (st.offsets[i] != 0.0) {
                const Vec2 n = Vec2{-e.y, e.x} / e.norm();
                part.curves.push_back({st.c, st.c + 0.5 * e + st.offsets[i] * n, anchor});
            } else {
                part.curves.push_back({st.c, anchor});
            }
        }
        if (!validate_partition(part).ok) return std::nullopt;
        return part;
    };

    State st;
    st.offsets.assign(k, 0.0);
    if (restart == 0 && verify_symmetry(body, k, 1e-7)) {
        KPartition std_part = standard_partition(body, k);
        st.c = body.center;
        for (const auto& c : std_part.curves) {
            const Vec2 e = c.back() - body.center;
            st.angles.push_back(std::atan2(e.y, e.x));
        }
    } else {
        for (int tries = 0;; ++tries) {
            st.c = body.center + 0.3 * rin * Vec2{gauss(rng), gauss(rng)};
            if (body_contains(body, st.c, 0.0) &&
                distance_to_boundary(body, st.c) > 0.1 * rin)
                break;
            if (tries > 100) {
                st.c = body.center;
                break;
            }
        }
        const double phase = u01(rng) * kTwoPi;
        for (int i = 0; i < k; ++i)
            st.angles.push_back(phase + kTwoPi * i / k + 0.3 * gauss(rng) / k);
    }

    RestartOutcome out;
    auto cur_part = build(st);
    if (!cur_part) return out;
    Objective cur = evaluate(regions_of_partition(*cur_part));
    out.obj = cur;
    out.partition = *cur_part;
    out.sub = regions_of_partition(*cur_part);
    out.trace.emplace_back(0, cur.first);
    out.valid = true;

    double temp = cfg.t0;
    for (int it = 1; it <= cfg.iterations; ++it) {
        State cand = st;
        const double pick = u01(rng);
        if (pick < 0.25) {
            cand.c = st.c + cfg.move_scale * rin * Vec2{gauss(rng), gauss(rng)};
        } else if (pick < 0.65) {
            cand.angles[static_cast<size_t>(u01(rng) * k) % k] +=
                cfg.move_scale * gauss(rng);
        } else {
            cand.offsets[static_cast<size_t>(u01(rng) * k) % k] +=
                cfg.move_scale * rin * 0.3 * gauss(rng);
        }
        auto part = build(cand);
        temp *= cfg.cooling;
        if (!part) continue;
        const Objective obj = evaluate(regions_of_partition(*part));
        const bool accept =
            obj < cur ||
            (cfg.anneal && u01(rng) < std::exp(-(obj.first - cur.first) / std::max(temp, 1e-12)));
        if (!accept) continue;
        st = cand;
        cur = obj;
        if (obj < out.obj) {
            out.obj = obj;
            out.partition = *part;
            out.sub = regions_of_partition(*part);
            out.trace.emplace_back(it, obj.first);
        }
    }
    return out;
}

RestartOutcome run_subdivision_restart(const ConvexBody& body, int k, const SearchConfig& cfg,
                                       int restart) {
    std::mt19937_64 rng(cfg.seed * 7777777ULL + restart);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const double rin = body_inradius(body);

    std::vector<Vec2> sites;
    const int mode = restart % 4;
    if (mode == 0) {
        // Ring of k sites: reproduces the standard-partition layout.
        for (int i = 0; i < k; ++i)
            sites.push_back(body.center + 0.5 * rin * unit_dir(kTwoPi * i / k));
    } else if (mode == 1 && k >= 4) {
        sites.push_back(body.center);
        for (int i = 0; i + 1 < k; ++i)
            sites.push_back(body.center + 0.6 * rin * unit_dir(kTwoPi * i / (k - 1)));
    } else if (mode == 3 && k >= 5) {
        // Hexagonal-lattice seed: sites at the hex cell centroids.
        try {
            const auto hex = hex_subdivision(body, k);
            for (const auto& region : hex.subdivision.regions)
                sites.push_back(piece_loop_centroid(region));
        } catch (const GeometryError&) {
            sites.clear();
        }
    }
    if (static_cast<int>(sites.size()) != k) {
        sites.clear();
        for (int i = 0; i < k; ++i) {
            Vec2 p;
            do {
                p = body.center +
                    body_circumradius(body) * Vec2{2.0 * u01(rng) - 1.0, 2.0 * u01(rng) - 1.0};
            } while (!body_contains(body, p, 0.0) ||
                     distance_to_boundary(body, p) < 0.02 * rin);
            sites.push_back(p);
        }
    }

    RestartOutcome out;
    auto cur_sub = voronoi_subdivision(body, sites);
    if (!cur_sub) return out;
    Objective cur = evaluate(*cur_sub);
    out.obj = cur;
    out.sub = *cur_sub;
    out.trace.emplace_back(0, cur.first);
    out.valid = true;

    double temp = cfg.t0;
    for (int it = 1; it <= cfg.iterations; ++it) {
        std::vector<Vec2> cand = sites;
        const int idx = static_cast<int>(u01(rng) * k) % k;
        cand[idx] = sites[idx] + cfg.move_scale * rin * Vec2{gauss(rng), gauss(rng)};
        temp *= cfg.cooling;
        if (!body_contains(body, cand[idx], 0.0)) continue;
        auto sub = voronoi_subdivision(body, cand);
        if (!sub) continue;
        const Objective obj = evaluate(*sub);
        const bool accept =
            obj < cur ||
            (cfg.anneal && u01(rng) < std::exp(-(obj.first - cur.first) / std::max(temp, 1e-12)));
        if (!accept) continue;
        sites = cand;
        cur = obj;
        if (obj < out.obj) {
            out.obj = obj;
            out.sub = *sub;
            out.trace.emplace_back(it, obj.first);
        }
    }
    return out;
}

template <typename Runner>
SearchResult run_restarts(const ConvexBody& body, int k, const SearchConfig& cfg,
                          bool subdivision_regime, Runner runner) {
    if (cfg.iterations <= 0 || cfg.move_scale <= 0.0 || cfg.restarts <= 0 ||
        (cfg.anneal && (cfg.cooling <= 0.0 || cfg.cooling >= 1.0)))
        throw GeometryError("invalid search configuration");
    std::vector<RestartOutcome> outcomes(cfg.restarts);
    std::vector<std::thread> threads;
    threads.reserve(cfg.restarts);
    for (int r = 0; r < cfg.restarts; ++r)
        threads.emplace_back([&, r] { outcomes[r] = runner(r); });
    for (auto& t : threads) t.join();
    int best = -1;
    for (int r = 0; r < cfg.restarts; ++r) {
        if (!outcomes[r].valid) continue;
        if (best < 0 || outcomes[r].obj < outcomes[best].obj) best = r;
    }
    if (best < 0) throw GeometryError("search produced no valid candidate");
    SearchResult res;
    res.best = std::move(outcomes[best].sub);
    res.best_value = outcomes[best].obj.first;
    res.second_value = outcomes[best].obj.second;
    res.trace = std::move(outcomes[best].trace);
    res.best_partition = std::move(outcomes[best].partition);
    res.bounds_gap = res.best_value - applicable_lower_bound(body, k, subdivision_regime);
    const auto report = validate_subdivision(res.best);
    if (!report.ok) throw GeometryError("search incumbent failed validation: " +
                                        report.errors.front());
    return res;
}

}  // namespace

SearchResult optimize_partition(const ConvexBody& body, int k, const SearchConfig& cfg) {
    if (k < 3) throw GeometryError("optimize_partition needs k >= 3");
    return run_restarts(body, k, cfg, false,
                        [&](int r) { return run_partition_restart(body, k, cfg, r); });
}

SearchResult optimize_subdivision(const ConvexBody& body, int k, const SearchConfig& cfg) {
    if (k < 3) throw GeometryError("optimize_subdivision needs k >= 3");
    return run_restarts(body, k, cfg, true,
                        [&](int r) { return run_subdivision_restart(body, k, cfg, r); });
}

}  // namespace reldiam
