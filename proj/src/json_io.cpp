#include "reldiam/json_io.hpp"

#include <json.hpp>

namespace reldiam {

namespace {

using nlohmann::json;

json point_json(const Vec2& p) { return json::array({p.x, p.y}); }

Vec2 point_from(const json& j) {
    if (!j.is_array() || j.size() != 2) throw GeometryError("point must be [x, y]");
    return {j[0].get<double>(), j[1].get<double>()};
}

json piece_json(const BoundaryPiece& p) {
    json j;
    j["kind"] = p.kind == PieceKind::Segment ? "segment" : "arc";
    j["a"] = point_json(p.a);
    j["b"] = point_json(p.b);
    if (p.kind == PieceKind::Arc) {
        j["center"] = point_json(p.center);
        j["radius"] = p.radius;
        if (!p.ccw) j["ccw"] = false;
    }
    return j;
}

BoundaryPiece piece_from(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    const Vec2 a = point_from(j.at("a"));
    const Vec2 b = point_from(j.at("b"));
    if (kind == "segment") return BoundaryPiece::segment(a, b);
    if (kind != "arc") throw GeometryError("unknown piece kind: " + kind);
    return BoundaryPiece::arc(a, b, point_from(j.at("center")), j.at("radius").get<double>(),
                              j.value("ccw", true));
}

json body_json(const ConvexBody& body) {
    json j;
    j["pieces"] = json::array();
    for (const auto& p : body.pieces) j["pieces"].push_back(piece_json(p));
    j["center"] = point_json(body.center);
    j["symmetry_order"] = body.symmetry_order;
    return j;
}

ConvexBody body_from(const json& j) {
    ConvexBody body;
    for (const auto& p : j.at("pieces")) body.pieces.push_back(piece_from(p));
    body.center = point_from(j.at("center"));
    body.symmetry_order = j.at("symmetry_order").get<int>();
    validate_body(body);
    return body;
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw GeometryError("malformed JSON input");
    return j;
}

}  // namespace

std::string body_to_json(const ConvexBody& body) { return body_json(body).dump(2); }

ConvexBody body_from_json(const std::string& text) { return body_from(parse(text)); }

std::string partition_to_json(const KPartition& partition) {
    json j;
    j["body"] = body_json(partition.body);
    j["common_point"] = point_json(partition.common_point);
    j["curves"] = json::array();
    for (const auto& curve : partition.curves) {
        json c = json::array();
        for (const auto& v : curve) c.push_back(point_json(v));
        j["curves"].push_back(std::move(c));
    }
    return j.dump(2);
}

KPartition partition_from_json(const std::string& text) {
    const json j = parse(text);
    KPartition part;
    part.body = body_from(j.at("body"));
    part.common_point = point_from(j.at("common_point"));
    for (const auto& c : j.at("curves")) {
        Polyline curve;
        for (const auto& v : c) curve.push_back(point_from(v));
        if (curve.size() < 2) throw GeometryError("curve needs at least 2 vertices");
        part.curves.push_back(std::move(curve));
    }
    return part;
}

std::string subdivision_to_json(const KSubdivision& subdivision) {
    json j;
    j["body"] = body_json(subdivision.body);
    j["regions"] = json::array();
    for (const auto& region : subdivision.regions) {
        json r = json::array();
        for (const auto& p : region) r.push_back(piece_json(p));
        j["regions"].push_back(std::move(r));
    }
    return j.dump(2);
}

KSubdivision subdivision_from_json(const std::string& text) {
    const json j = parse(text);
    KSubdivision sub;
    sub.body = body_from(j.at("body"));
    for (const auto& r : j.at("regions")) {
        std::vector<BoundaryPiece> region;
        for (const auto& p : r) region.push_back(piece_from(p));
        if (region.empty()) throw GeometryError("empty region loop");
        sub.regions.push_back(std::move(region));
    }
    return sub;
}

std::string witness_to_json(const DiameterWitness& witness) {
    json j;
    j["value"] = witness.value;
    j["region"] = witness.region;
    j["p"] = point_json(witness.p);
    j["q"] = point_json(witness.q);
    return j.dump(2);
}

std::string bound_report_to_json(const BoundReport& report) {
    json j;
    j["body"] = report.body_id;
    j["k"] = report.k;
    j["bounds"] = json::object();
    for (const auto& [name, entry] : report.bounds) {
        j["bounds"][name] = {{"value", entry.value},
                             {"kind", entry.lower ? "lower" : "upper"},
                             {"applies_to", entry.applies_to}};
    }
    return j.dump(2);
}

std::string bound_report_to_markdown(const BoundReport& report) {
    std::string md = "| bound | value | kind | applies to |\n|---|---|---|---|\n";
    char buf[64];
    for (const auto& [name, entry] : report.bounds) {
        std::snprintf(buf, sizeof buf, "%.12g", entry.value);
        md += "| " + name + " | " + buf + " | " + (entry.lower ? "lower" : "upper") +
              " | " + entry.applies_to + " |\n";
    }
    return md;
}

std::string search_result_to_json(const SearchResult& result) {
    json j;
    j["best_value"] = result.best_value;
    j["second_value"] = result.second_value;
    j["bounds_gap"] = result.bounds_gap;
    j["trace"] = json::array();
    for (const auto& [it, v] : result.trace) j["trace"].push_back(json::array({it, v}));
    j["best"] = parse(subdivision_to_json(result.best));
    if (result.best_partition)
        j["best_partition"] = parse(partition_to_json(*result.best_partition));
    return j.dump(2);
}

}  // namespace reldiam
