#pragma once

#include "reldiam/body.hpp"

#include <map>
#include <string>

namespace reldiam {

/// m_j: maximal area of a j-gon with unit diameter, j in 3..9, plus the
/// pi/4 cap used for j >= 10.
struct PolygonAreaTable {
    std::map<int, double> m;
    double cap = 0.0;  // pi/4
};

PolygonAreaTable m_table();

struct LpSolution {
    double value = 0.0;
    std::map<std::string, double> argmax;  // "f3".."f9", "ftilde"
};

/// Maximize sum f_j m_j (+ ftilde * pi/4) subject to sum f = k and
/// sum j f_j + 10 ftilde <= 6k, f >= 0, by basic-solution enumeration.
LpSolution lp_packing_constant(int k);

/// Isodiametric lower bound sqrt(A/k) * sqrt(4/pi).
double bound_isodiametric(const ConvexBody& body, int k);

struct HexBound {
    double main_term = 0.0;      // sqrt(A/k) / sqrt(0.688452)
    double rigorous_root = 0.0;  // positive root of 0.688452 k d^2 + P d - A = 0
};

HexBound bound_hexagonal_lower(const ConvexBody& body, int k);

/// max{R, 2 r sin(pi/k)}: lower bound for partitions (all k >= 3) and
/// for subdivisions when k <= 6.
double bound_standard(const ConvexBody& body, int k);

struct BoundEntry {
    double value = 0.0;
    bool lower = true;
    std::string applies_to;  // "partition", "subdivision", "subdivision k<=6", ...
};

struct BoundReport {
    std::string body_id;
    int k = 0;
    std::map<std::string, BoundEntry> bounds;
};

BoundReport bound_report(const ConvexBody& body, int k, const std::string& body_id = "body");

}  // namespace reldiam
