#pragma once

#include "reldiam/subdivision.hpp"

#include <cstdint>

namespace reldiam {

/// Standard k-partition: k straight inradius segments from the center,
/// 2*pi/k apart, anchored at nearest-boundary directions.
KPartition standard_partition(const ConvexBody& body, int k);

/// max{R, 2 r sin(pi/k)} from the body metrics.
double d_M_standard_formula(const ConvexBody& body, int k);

/// Intersection of the unit circle with the regular k-gon of inradius
/// 1/(2 sin(pi/k)); both diameter terms tie at 1.
ConvexBody optimal_body(int k);

/// Dilation-invariant quotient d_M(P_k)^2 / area.
double quotient(const ConvexBody& body, int k);

/// 7-subdivision of the regular heptagon (R = 1, topmost vertex) from
/// eleven segments meeting in threes at five inner points at distance
/// rho from the center. Two of the seven boundary endpoints sit on the
/// bottom edge at a fixed fraction of its length; the other five are
/// heptagon vertices.
KSubdivision heptagon_counterexample(double rho);

struct HeptagonSearchResult {
    double rho = 0.0;
    double d_M = 0.0;
    KSubdivision subdivision;
    std::vector<std::pair<double, double>> trace;  // (rho, d_M) probes
};

/// Golden-section minimization of d_M(heptagon_counterexample(rho)).
HeptagonSearchResult search_heptagon();

/// 8-subdivision of the unit disc: inner disc of radius 0.43 plus seven
/// congruent annular sectors.
KSubdivision circle8_counterexample();

/// Bend the straight spokes of a partition by a perpendicular interior
/// vertex displacement of the given magnitude, keeping d_M within 1e-6;
/// retries with sign flips and shrinking magnitude, then fails.
KPartition perturb_partition(const KPartition& partition, double magnitude,
                             std::uint64_t seed);

struct HexSubdivisionResult {
    KSubdivision subdivision;
    double d_k = 0.0;
    int lattice_cells = 0;  // nonempty clipped cells before splitting
};

/// Hexagonal-lattice k-subdivision: cells of diameter d_k (positive root
/// of (k 3*sqrt(3)/8 - pi) d^2 - P d - A = 0) clipped to the body, then
/// chord-split until exactly k regions. Requires k >= 5.
HexSubdivisionResult hex_subdivision(const ConvexBody& body, int k);

/// Seeded random valid k-partition (random interior common point,
/// random distinct anchors, straight or bent spokes).
KPartition random_partition(const ConvexBody& body, int k, std::uint64_t seed);

/// Seeded random valid k-subdivision (Voronoi cells of k random interior
/// sites, clipped to the body exactly).
KSubdivision random_subdivision(const ConvexBody& body, int k, std::uint64_t seed);

}  // namespace reldiam
