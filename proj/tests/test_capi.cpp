#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reldiam/reldiam.h"

#include <cmath>
#include <cstring>
#include <string>

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    rd_string_free(s);
    return out;
}

double json_number(const std::string& doc, const std::string& key) {
    const auto pos = doc.find("\"" + key + "\":");
    REQUIRE(pos != std::string::npos);
    return std::strtod(doc.c_str() + pos + key.size() + 3, nullptr);
}

}  // namespace

TEST_CASE("make body, metrics, round trip") {
    rd_body* disc = nullptr;
    REQUIRE(rd_body_make("disc", 0, 1.0, &disc) == RD_OK);
    char* metrics = nullptr;
    REQUIRE(rd_body_metrics(disc, &metrics) == RD_OK);
    const std::string m = take(metrics);
    CHECK(std::abs(json_number(m, "area") - 3.14159265358979) <= 1e-9);
    CHECK(json_number(m, "inradius") == 1.0);

    char* text = nullptr;
    REQUIRE(rd_body_to_json(disc, &text) == RD_OK);
    const std::string body_json = take(text);
    rd_body* back = nullptr;
    REQUIRE(rd_body_from_json(body_json.c_str(), &back) == RD_OK);
    char* text2 = nullptr;
    REQUIRE(rd_body_to_json(back, &text2) == RD_OK);
    CHECK(take(text2) == body_json);
    rd_body_free(back);
    rd_body_free(disc);
}

TEST_CASE("standard partition and evaluation") {
    rd_body* disc = nullptr;
    REQUIRE(rd_body_make("disc", 0, 1.0, &disc) == RD_OK);
    rd_partition* part = nullptr;
    REQUIRE(rd_standard_partition(disc, 4, &part) == RD_OK);

    int ok = 0;
    char* errors = nullptr;
    REQUIRE(rd_partition_validate(part, &ok, &errors) == RD_OK);
    CHECK(ok == 1);
    CHECK(take(errors) == "[]");

    char* witness = nullptr;
    REQUIRE(rd_partition_eval(part, &witness) == RD_OK);
    CHECK(std::abs(json_number(take(witness), "value") - std::sqrt(2.0)) <= 1e-12);

    rd_subdivision* sub = nullptr;
    REQUIRE(rd_partition_to_subdivision(part, &sub) == RD_OK);
    REQUIRE(rd_subdivision_validate(sub, &ok, nullptr) == RD_OK);
    CHECK(ok == 1);
    rd_subdivision_free(sub);
    rd_partition_free(part);
    rd_body_free(disc);
}

TEST_CASE("error paths: null arguments and malformed input") {
    CHECK(rd_body_from_json(nullptr, nullptr) == RD_EINVAL);
    rd_body* b = nullptr;
    CHECK(rd_body_from_json("not json", &b) == RD_EINVAL);
    CHECK(std::strlen(rd_last_error()) > 0);
    CHECK(rd_body_make("nonsense", 0, 1.0, &b) == RD_EINVAL);
    CHECK(rd_body_make("reuleaux", 4, 1.0, &b) == RD_EINVAL);  // even k
    rd_body* disc = nullptr;
    REQUIRE(rd_body_make("disc", 0, 1.0, &disc) == RD_OK);
    rd_subdivision* s = nullptr;
    CHECK(rd_hex_subdivision(disc, 3, &s, nullptr) == RD_EINVAL);  // k too small
    rd_body_free(disc);
}

TEST_CASE("counterexamples through the C API") {
    rd_subdivision* s = nullptr;
    REQUIRE(rd_circle8_counterexample(&s) == RD_OK);
    char* witness = nullptr;
    REQUIRE(rd_subdivision_eval(s, &witness) == RD_OK);
    const double dm = json_number(take(witness), "value");
    CHECK(dm >= 0.86);
    CHECK(dm <= 0.87);
    rd_subdivision_free(s);

    rd_subdivision* h = nullptr;
    REQUIRE(rd_heptagon_counterexample(0.0175, &h) == RD_OK);
    int ok = 0;
    REQUIRE(rd_subdivision_validate(h, &ok, nullptr) == RD_OK);
    CHECK(ok == 1);
    rd_subdivision_free(h);
}

TEST_CASE("bounds report and LP through the C API") {
    rd_body* disc = nullptr;
    REQUIRE(rd_body_make("disc", 0, 1.0, &disc) == RD_OK);
    char* report = nullptr;
    REQUIRE(rd_bounds_report(disc, 4, "json", &report) == RD_OK);
    const std::string doc = take(report);
    CHECK(doc.find("standard") != std::string::npos);
    CHECK(rd_bounds_report(disc, 4, "yaml", &report) == RD_EINVAL);
    rd_body_free(disc);

    char* lp = nullptr;
    REQUIRE(rd_lp_packing(100, &lp) == RD_OK);
    CHECK(std::abs(json_number(take(lp), "value") - 68.84515) <= 1e-4);
}

TEST_CASE("search and render through the C API") {
    rd_body* disc = nullptr;
    REQUIRE(rd_body_make("disc", 0, 1.0, &disc) == RD_OK);
    char* report = nullptr;
    rd_subdivision* best = nullptr;
    REQUIRE(rd_search(disc, 3, "partition",
                      R"({"seed":7,"iterations":150,"restarts":2})", &report,
                      &best) == RD_OK);
    const double v = json_number(take(report), "best_value");
    CHECK(v >= 2.0 * std::sin(3.14159265358979 / 3) - 1e-9);
    char* svg = nullptr;
    REQUIRE(rd_render_subdivision(best, &svg) == RD_OK);
    CHECK(take(svg).find("<svg") != std::string::npos);
    rd_subdivision_free(best);
    CHECK(rd_search(disc, 3, "bogus", nullptr, &report, nullptr) == RD_EINVAL);
    rd_body_free(disc);
}

TEST_CASE("repro names are exposed") {
    char* names = nullptr;
    REQUIRE(rd_repro_names(&names) == RD_OK);
    const std::string n = take(names);
    CHECK(n.find("lemma-dm") != std::string::npos);
    CHECK(n.find("hex-asymptotics") != std::string::npos);
    int pass = 0;
    CHECK(rd_repro_run("nope", ".", &pass) == RD_EINVAL);
}
