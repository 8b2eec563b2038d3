#pragma once

#include "reldiam/body.hpp"

namespace reldiam {

/// k-partition: k simple curves from a common interior point to the
/// boundary, pairwise non-crossing. Curves are stored as polylines whose
/// first vertex is the common point.
struct KPartition {
    ConvexBody body;
    Vec2 common_point;
    std::vector<Polyline> curves;

    int k() const { return static_cast<int>(curves.size()); }
};

/// k-subdivision: k closed regions covering the body with disjoint
/// interiors. Each region is a closed loop of pieces; loops may traverse
/// body arcs clockwise when an arc bounds a region from outside.
struct KSubdivision {
    ConvexBody body;
    std::vector<std::vector<BoundaryPiece>> regions;

    int k() const { return static_cast<int>(regions.size()); }
};

struct DiameterWitness {
    double value = 0.0;
    Vec2 p, q;
    int region = -1;
};

/// The k regions cut out by the partition curves, ordered ccw by the
/// boundary endpoint of the leading curve.
KSubdivision regions_of_partition(const KPartition& partition);

/// Maximum relative diameter: the largest region diameter. Exact up to
/// rounding (closed-form farthest-pair candidates per region).
DiameterWitness max_relative_diameter(const KSubdivision& subdivision);
DiameterWitness max_relative_diameter(const KPartition& partition);

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> errors;

    void fail(std::string msg) {
        ok = false;
        errors.push_back(std::move(msg));
    }
};

/// Structural checks for a partition: interior common point, curves end
/// on the boundary, stay inside, and do not cross.
ValidationReport validate_partition(const KPartition& partition);

/// Structural checks for a subdivision: closed loops, positive areas,
/// areas summing to the body area within k * eps_area, pairwise interior
/// overlap below tolerance, and sampled coverage.
ValidationReport validate_subdivision(const KSubdivision& subdivision);

/// Region loop as a sampled polygon (arc chains bounded by max_sagitta).
std::vector<Vec2> region_polygon(const std::vector<BoundaryPiece>& region, double max_sagitta);

}  // namespace reldiam
