#pragma once

#include "reldiam/bounds.hpp"
#include "reldiam/optimizer.hpp"
#include "reldiam/subdivision.hpp"

#include <string>

namespace reldiam {

/// Wire formats (lossless double round-trip):
///   body        {"pieces":[...],"center":[x,y],"symmetry_order":k}
///   piece       {"kind":"segment","a":[x,y],"b":[x,y]}
///               {"kind":"arc","a":..,"b":..,"center":..,"radius":..}
///               (arcs carry "ccw":false when a region traverses them
///                clockwise; bodies always omit it)
///   partition   {"body":<body>,"common_point":[x,y],"curves":[[[x,y]...]...]}
///   subdivision {"body":<body>,"regions":[[<piece>...]...]}
std::string body_to_json(const ConvexBody& body);
ConvexBody body_from_json(const std::string& text);

std::string partition_to_json(const KPartition& partition);
KPartition partition_from_json(const std::string& text);

std::string subdivision_to_json(const KSubdivision& subdivision);
KSubdivision subdivision_from_json(const std::string& text);

std::string witness_to_json(const DiameterWitness& witness);
std::string bound_report_to_json(const BoundReport& report);
std::string bound_report_to_markdown(const BoundReport& report);
std::string search_result_to_json(const SearchResult& result);

}  // namespace reldiam
