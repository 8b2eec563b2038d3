#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reldiam/constructions.hpp"
#include "reldiam/json_io.hpp"
#include "reldiam/svg.hpp"

#include <json.hpp>

#include <cmath>
#include <string>

using namespace reldiam;
using nlohmann::json;

TEST_CASE("body round-trip is lossless") {
    for (const auto& body :
         {make_disc(1.0), make_regular_kgon(7, 1.0), make_reuleaux(5, 1.0),
          make_circle_kgon_intersection(8, 1.0, 0.9)}) {
        const std::string text = body_to_json(body);
        const ConvexBody back = body_from_json(text);
        REQUIRE(back.pieces.size() == body.pieces.size());
        CHECK(back.symmetry_order == body.symmetry_order);
        for (std::size_t i = 0; i < body.pieces.size(); ++i) {
            // Bit-exact: shortest-round-trip serialization.
            CHECK(back.pieces[i].a.x == body.pieces[i].a.x);
            CHECK(back.pieces[i].a.y == body.pieces[i].a.y);
            CHECK(back.pieces[i].b.x == body.pieces[i].b.x);
            CHECK(back.pieces[i].b.y == body.pieces[i].b.y);
            CHECK(back.pieces[i].radius == body.pieces[i].radius);
            CHECK(back.pieces[i].ccw == body.pieces[i].ccw);
        }
        // Emit is deterministic.
        CHECK(body_to_json(back) == text);
    }
}

TEST_CASE("wire format shape matches the schemas") {
    const json doc = json::parse(body_to_json(make_disc(1.0)));
    REQUIRE(doc.contains("pieces"));
    REQUIRE(doc.contains("center"));
    REQUIRE(doc.contains("symmetry_order"));
    CHECK(doc["center"].size() == 2);
    for (const auto& piece : doc["pieces"]) {
        CHECK(piece["kind"] == "arc");
        CHECK(piece.contains("a"));
        CHECK(piece.contains("b"));
        CHECK(piece.contains("center"));
        CHECK(piece.contains("radius"));
        CHECK_FALSE(piece.contains("ccw"));  // body arcs are always ccw
    }
}

TEST_CASE("partition round-trip") {
    const auto part = standard_partition(make_regular_kgon(5, 1.0), 5);
    const auto back = partition_from_json(partition_to_json(part));
    REQUIRE(back.k() == 5);
    CHECK(back.common_point.x == part.common_point.x);
    CHECK(back.common_point.y == part.common_point.y);
    for (int i = 0; i < 5; ++i) {
        REQUIRE(back.curves[i].size() == part.curves[i].size());
        for (std::size_t j = 0; j < part.curves[i].size(); ++j) {
            CHECK(back.curves[i][j].x == part.curves[i][j].x);
            CHECK(back.curves[i][j].y == part.curves[i][j].y);
        }
    }
    CHECK(max_relative_diameter(back).value ==
          max_relative_diameter(part).value);
}

TEST_CASE("subdivision round-trip preserves cw arcs") {
    const auto sub = circle8_counterexample();
    const std::string text = subdivision_to_json(sub);
    const json doc = json::parse(text);
    bool saw_cw = false;
    for (const auto& region : doc["regions"])
        for (const auto& piece : region)
            if (piece.value("ccw", true) == false) saw_cw = true;
    CHECK(saw_cw);  // sectors traverse the inner rim clockwise
    const auto back = subdivision_from_json(text);
    REQUIRE(back.k() == 8);
    CHECK(max_relative_diameter(back).value ==
          max_relative_diameter(sub).value);
    CHECK(validate_subdivision(back).ok);
}

TEST_CASE("invalid documents are rejected") {
    CHECK_THROWS(body_from_json("not json"));
    CHECK_THROWS(body_from_json("{}"));
    CHECK_THROWS(body_from_json(
        R"({"pieces":[{"kind":"segment","a":[0,0],"b":[1,0]}],"center":[0,0],"symmetry_order":1})"));
    CHECK_THROWS(partition_from_json(R"({"curves":[]})"));
    CHECK_THROWS(subdivision_from_json(R"({"body":{}})"));
}

TEST_CASE("witness serialization carries value, points, and region") {
    const auto w = max_relative_diameter(standard_partition(make_disc(1.0), 4));
    const json doc = json::parse(witness_to_json(w));
    CHECK(doc["value"].get<double>() == w.value);
    CHECK(doc["region"].get<int>() == w.region);
    CHECK(doc["p"].size() == 2);
    CHECK(doc["q"].size() == 2);
}

TEST_CASE("bound report serialization") {
    const auto report = bound_report(make_disc(1.0), 4, "disc");
    const json doc = json::parse(bound_report_to_json(report));
    CHECK(doc["k"] == 4);
    CHECK(doc["body"] == "disc");
    REQUIRE(doc.contains("bounds"));
    CHECK(doc["bounds"].contains("standard"));
    const std::string md = bound_report_to_markdown(report);
    CHECK(md.find("standard") != std::string::npos);
    CHECK(md.find("1.41421356237") != std::string::npos);  // 12 digits
}

TEST_CASE("SVG output: one path per region, well-formed envelope") {
    const auto sub = regions_of_partition(standard_partition(make_disc(1.0), 6));
    const std::string svg = svg_subdivision(sub);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("viewBox=\"0 0 800 800\"") != std::string::npos);
    std::size_t paths = 0, pos = 0;
    while ((pos = svg.find("<path", pos)) != std::string::npos) {
        ++paths;
        pos += 5;
    }
    CHECK(paths == 6);
    CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("SVG body and partition rendering") {
    CHECK(svg_body(make_reuleaux(3, 1.0)).find("A ") != std::string::npos);
    const auto part = standard_partition(make_regular_kgon(4, 1.0), 4);
    const std::string svg = svg_partition(part);
    CHECK(svg.find("stroke=\"#c03030\"") != std::string::npos);  // red curves
    std::size_t paths = 0, pos = 0;
    while ((pos = svg.find("<path", pos)) != std::string::npos) {
        ++paths;
        pos += 5;
    }
    CHECK(paths == 5);  // body outline + 4 curves
}
