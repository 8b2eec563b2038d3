#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reldiam/constructions.hpp"
#include "reldiam/subdivision.hpp"
#include "test_util.hpp"

#include <cmath>

using namespace reldiam;
using namespace reldiam_test;

namespace {
constexpr double kPi = 3.1415926535897932384626433832795;

KPartition translated(const KPartition& p, const Vec2& t) {
    KPartition out = p;
    out.body.center = out.body.center + t;
    for (auto& pc : out.body.pieces) {
        pc.a = pc.a + t;
        pc.b = pc.b + t;
        pc.center = pc.center + t;
    }
    out.common_point = out.common_point + t;
    for (auto& curve : out.curves)
        for (auto& v : curve) v = v + t;
    return out;
}
}  // namespace

TEST_CASE("standard partition of the disc: regions, areas, validity") {
    const auto body = make_disc(1.0);
    for (int k : {3, 4, 6, 8}) {
        const auto part = standard_partition(body, k);
        REQUIRE(part.k() == k);
        CHECK(validate_partition(part).ok);
        const auto sub = regions_of_partition(part);
        REQUIRE(sub.k() == k);
        CHECK(validate_subdivision(sub).ok);
        for (const auto& region : sub.regions)
            CHECK(piece_loop_area(region) == doctest::Approx(kPi / k).epsilon(1e-9));
    }
}

TEST_CASE("disc standard partition diameters are exact") {
    const auto body = make_disc(1.0);
    for (int k = 3; k <= 12; ++k) {
        const double expected = k <= 6 ? 2.0 * std::sin(kPi / k) : 1.0;
        const auto w = max_relative_diameter(standard_partition(body, k));
        CHECK(std::abs(w.value - expected) <= 1e-12);
        CHECK(distance(w.p, w.q) == doctest::Approx(w.value).epsilon(1e-15));
    }
}

TEST_CASE("regular k-gon standard partitions give d_M = R") {
    for (int k = 3; k <= 20; ++k) {
        const auto body = make_regular_kgon(k, 1.0);
        const auto w = max_relative_diameter(standard_partition(body, k));
        CHECK(std::abs(w.value - 1.0) <= 1e-12);
    }
}

TEST_CASE("max_relative_diameter matches dense sampling on regions") {
    const auto body = make_circle_kgon_intersection(7, 1.0, 0.92);
    const auto sub = regions_of_partition(standard_partition(body, 7));
    for (const auto& region : sub.regions) {
        const double exact = piece_set_diameter(region);
        const double sampled = sampled_loop_diameter(region);
        CHECK(exact >= sampled - 1e-12);
        CHECK(exact <= sampled + 1e-4);
    }
}

TEST_CASE("d_M is invariant under translation and scales linearly") {
    const auto body = make_regular_kgon(5, 1.0);
    const auto part = standard_partition(body, 5);
    const double d0 = max_relative_diameter(part).value;
    const double dt =
        max_relative_diameter(translated(part, {3.25, -1.5})).value;
    CHECK(dt == doctest::Approx(d0).epsilon(1e-12));
    const auto big = standard_partition(scaled(body, 4.0), 5);
    CHECK(max_relative_diameter(big).value == doctest::Approx(4.0 * d0).epsilon(1e-9));
}

TEST_CASE("validate_partition rejects crossing curves") {
    const auto body = make_disc(1.0);
    KPartition bad;
    bad.body = body;
    bad.common_point = {0, 0};
    bad.curves = {{{0, 0}, {0.5, 0.5}, {1, 0}},  // bends across the next spoke
                  {{0, 0}, {std::sqrt(0.5), std::sqrt(0.5)}},
                  {{0, 0}, {-1, 0}}};
    CHECK_FALSE(validate_partition(bad).ok);
}

TEST_CASE("validate_partition rejects an exterior common point") {
    const auto body = make_disc(1.0);
    KPartition bad;
    bad.body = body;
    bad.common_point = {2, 0};
    bad.curves = {{{2, 0}, {1, 0}}, {{2, 0}, {0, 1}}, {{2, 0}, {0, -1}}};
    CHECK_FALSE(validate_partition(bad).ok);
}

TEST_CASE("validate_partition rejects curves not reaching the boundary") {
    const auto body = make_disc(1.0);
    KPartition bad;
    bad.body = body;
    bad.common_point = {0, 0};
    bad.curves = {{{0, 0}, {0.5, 0}}, {{0, 0}, {0, 1}}, {{0, 0}, {-1, 0}}};
    CHECK_FALSE(validate_partition(bad).ok);
}

TEST_CASE("validate_subdivision rejects overlapping regions") {
    const auto body = make_disc(1.0);
    KSubdivision bad;
    bad.body = body;
    // Two half-discs plus a duplicate of one of them: overlap and
    // area excess.
    const auto upper = clip_loop_halfplane(body.pieces, {0, 0}, {0, 1});
    const auto lower = clip_loop_halfplane(body.pieces, {0, 0}, {0, -1});
    bad.regions = {upper, lower, upper};
    CHECK_FALSE(validate_subdivision(bad).ok);
}

TEST_CASE("validate_subdivision rejects missing coverage") {
    const auto body = make_disc(1.0);
    KSubdivision bad;
    bad.body = body;
    const auto upper = clip_loop_halfplane(body.pieces, {0, 0.5}, {0, 1});
    const auto lower = clip_loop_halfplane(body.pieces, {0, -0.5}, {0, -1});
    bad.regions = {upper, lower};  // the middle band is uncovered
    CHECK_FALSE(validate_subdivision(bad).ok);
}

TEST_CASE("halfplane-cut subdivisions of the hexagon validate") {
    const auto body = make_regular_kgon(6, 1.0);
    const auto left = clip_loop_halfplane(body.pieces, {0, 0}, {-1, 0});
    const auto right = clip_loop_halfplane(body.pieces, {0, 0}, {1, 0});
    KSubdivision sub;
    sub.body = body;
    sub.regions = {left, right};
    CHECK(validate_subdivision(sub).ok);
    CHECK(piece_loop_area(left) == doctest::Approx(body_area(body) / 2).epsilon(1e-12));
}

TEST_CASE("region_polygon approximates region area") {
    const auto body = make_disc(1.0);
    const auto sub = regions_of_partition(standard_partition(body, 4));
    for (const auto& region : sub.regions) {
        const auto poly = region_polygon(region, 1e-4);
        CHECK(std::abs(polygon_signed_area(poly) - kPi / 4) <= 1e-3);
    }
}
