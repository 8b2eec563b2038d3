#pragma once

#include "reldiam/subdivision.hpp"

#include <string>

namespace reldiam {

/// SVG 1.1 document, 800x800 viewBox with a 5% margin, y axis flipped
/// at emission. One <path> element per region (or one for the body).
std::string svg_body(const ConvexBody& body);
std::string svg_partition(const KPartition& partition);
std::string svg_subdivision(const KSubdivision& subdivision);

}  // namespace reldiam
