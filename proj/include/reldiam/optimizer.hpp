#pragma once

#include "reldiam/constructions.hpp"

#include <cstdint>
#include <optional>

namespace reldiam {

struct SearchConfig {
    std::uint64_t seed = 0;
    int iterations = 2000;
    double move_scale = 0.1;
    int restarts = 4;
    bool anneal = false;
    double t0 = 0.05;
    double cooling = 0.995;
};

struct SearchResult {
    KSubdivision best;
    double best_value = 0.0;
    double second_value = 0.0;  // second-largest region diameter at the optimum
    std::vector<std::pair<int, double>> trace;  // (iteration, incumbent) of best restart
    double bounds_gap = 0.0;  // best_value - max applicable lower bound
    std::optional<KPartition> best_partition;  // set by optimize_partition
};

/// Local search over (common point, anchor angles, spoke mid-vertices)
/// minimizing d_M among k-partitions.
SearchResult optimize_partition(const ConvexBody& body, int k, const SearchConfig& cfg);

/// Local search over Voronoi-site subdivisions, seeded from the standard
/// partition layout, center-plus-ring layouts, random sites, and (for
/// k >= 5) the hexagonal construction.
SearchResult optimize_subdivision(const ConvexBody& body, int k, const SearchConfig& cfg);

}  // namespace reldiam
