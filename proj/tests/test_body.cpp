#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reldiam/body.hpp"
#include "test_util.hpp"

#include <cmath>

using namespace reldiam;
using namespace reldiam_test;

namespace {
constexpr double kPi = 3.1415926535897932384626433832795;
}

TEST_CASE("disc metrics are exact") {
    const auto m = metrics(make_disc(1.0));
    CHECK(m.area == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(m.perimeter == doctest::Approx(2 * kPi).epsilon(1e-12));
    CHECK(m.inradius == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(m.circumradius == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(m.diameter == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(m.width == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("regular k-gon inradius r = R cos(pi/k) for k = 3..64") {
    for (int k = 3; k <= 64; ++k) {
        const auto body = make_regular_kgon(k, 1.0);
        CHECK(body_inradius(body) ==
              doctest::Approx(std::cos(kPi / k)).epsilon(1e-12));
        CHECK(body_circumradius(body) == doctest::Approx(1.0).epsilon(1e-12));
        const double area = body_area(body);
        CHECK(area == doctest::Approx(0.5 * k * std::sin(2 * kPi / k)).epsilon(1e-12));
        // Diameter: 2R for even k, 2R cos(pi/(2k)) for odd k.
        const double expected_d =
            k % 2 == 0 ? 2.0 : 2.0 * std::cos(kPi / (2.0 * k));
        CHECK(body_diameter(body) == doctest::Approx(expected_d).epsilon(1e-12));
    }
}

TEST_CASE("Reuleaux polygons: constant width, perimeter pi*w, r + R = w") {
    for (int k : {3, 5, 7, 9}) {
        const double w = 1.0;
        const auto body = make_reuleaux(k, w);
        const auto m = metrics(body);
        CHECK(m.perimeter == doctest::Approx(kPi * w).epsilon(1e-9));
        CHECK(m.diameter == doctest::Approx(w).epsilon(1e-9));
        CHECK(m.width == doctest::Approx(w).epsilon(1e-6));
        CHECK(m.inradius + m.circumradius == doctest::Approx(w).epsilon(1e-9));
    }
    // Blaschke-Lebesgue area for the Reuleaux triangle.
    CHECK(body_area(make_reuleaux(3, 1.0)) ==
          doctest::Approx(0.5 * (kPi - std::sqrt(3.0))).epsilon(1e-12));
}

TEST_CASE("exact area agrees with a quasi-Monte-Carlo oracle") {
    // Arc-bounded bodies where the shoelace + circular-segment formula is
    // the quantity under test.
    const auto check_body = [](const ConvexBody& body, double tol, std::uint64_t n) {
        CHECK(std::abs(body_area(body) - qmc_area(body, n)) <= tol);
    };
    check_body(make_disc(1.0), 1e-3, 1000000);
    check_body(make_reuleaux(3, 1.0), 1e-3, 1000000);
    check_body(make_circle_kgon_intersection(7, 1.0, 0.7), 1e-3, 1000000);
}

TEST_CASE("circle/k-gon intersection degenerates correctly") {
    // Apothem beyond the circle: the disc.
    const auto disc_like = make_circle_kgon_intersection(5, 1.0, 1.5);
    CHECK(body_area(disc_like) == doctest::Approx(kPi).epsilon(1e-12));
    // Circumradius of the polygon inside the circle: the polygon.
    const double a = 0.3;
    const auto poly_like = make_circle_kgon_intersection(5, 1.0, a);
    const double R = a / std::cos(kPi / 5);
    CHECK(body_area(poly_like) ==
          doctest::Approx(0.5 * 5 * R * R * std::sin(2 * kPi / 5)).epsilon(1e-12));
    // Proper intersection: area strictly between both.
    const auto mixed = make_circle_kgon_intersection(7, 1.0, 0.9);
    CHECK(body_area(mixed) < kPi);
    CHECK(verify_symmetry(mixed, 7, 1e-9));
}

TEST_CASE("symmetry verification: orders and divisors") {
    const auto hex = make_regular_kgon(6, 1.0);
    CHECK(verify_symmetry(hex, 6, 1e-9));
    CHECK(verify_symmetry(hex, 3, 1e-9));
    CHECK(verify_symmetry(hex, 2, 1e-9));
    CHECK_FALSE(verify_symmetry(hex, 4, 1e-9));
    CHECK_FALSE(verify_symmetry(hex, 5, 1e-9));
    const auto reuleaux = make_reuleaux(5, 1.0);
    CHECK(verify_symmetry(reuleaux, 5, 1e-9));
    CHECK_FALSE(verify_symmetry(reuleaux, 2, 1e-9));
}

TEST_CASE("containment and boundary distance") {
    const auto body = make_reuleaux(3, 1.0);
    CHECK(body_contains(body, {0, 0}));
    CHECK_FALSE(body_contains(body, {1, 1}));
    const double r = body_inradius(body);
    CHECK(distance_to_boundary(body, {0, 0}) == doctest::Approx(r).epsilon(1e-9));
    // Boundary points are contained with tolerance, excluded without.
    for (const auto& p : boundary_points(body, 1e-3))
        CHECK(body_contains(body, p, 1e-6));
}

TEST_CASE("piece_set_diameter is exact versus dense sampling") {
    // Bodies whose true diameters are known analytically.
    CHECK(piece_set_diameter(make_disc(1.0).pieces) ==
          doctest::Approx(2.0).epsilon(1e-15));
    CHECK(piece_set_diameter(make_reuleaux(5, 1.0).pieces) ==
          doctest::Approx(1.0).epsilon(1e-15));
    // Mixed segment/arc loops: sampling gives a lower bound within the
    // discretization error; the exact value may exceed it only slightly.
    const auto mixed = make_circle_kgon_intersection(7, 1.0, 0.9);
    const double exact = piece_set_diameter(mixed.pieces);
    const double sampled = sampled_loop_diameter(mixed.pieces);
    CHECK(exact >= sampled - 1e-12);
    CHECK(exact <= sampled + 1e-4);
}

TEST_CASE("diameter witness points realize the diameter") {
    const auto body = make_circle_kgon_intersection(9, 1.0, 0.95);
    Vec2 p, q;
    const double d = piece_set_diameter(body.pieces, &p, &q);
    CHECK(distance(p, q) == doctest::Approx(d).epsilon(1e-15));
}

TEST_CASE("scaling is exact on metrics") {
    const auto body = make_circle_kgon_intersection(7, 1.0, 0.9);
    const double s = 2.75;
    const auto big = scaled(body, s);
    CHECK(body_area(big) == doctest::Approx(s * s * body_area(body)).epsilon(1e-12));
    CHECK(body_perimeter(big) ==
          doctest::Approx(s * body_perimeter(body)).epsilon(1e-12));
    CHECK(body_diameter(big) == doctest::Approx(s * body_diameter(body)).epsilon(1e-12));
}

TEST_CASE("validate_body rejects broken loops") {
    ConvexBody bad;
    bad.pieces = {BoundaryPiece::segment({0, 0}, {1, 0}),
                  BoundaryPiece::segment({1, 0}, {1, 1})};  // not closed
    bad.symmetry_order = 1;
    CHECK_THROWS_AS(validate_body(bad), GeometryError);
    ConvexBody cw;  // clockwise triangle
    cw.pieces = {BoundaryPiece::segment({0, 0}, {0, 1}),
                 BoundaryPiece::segment({0, 1}, {1, 0}),
                 BoundaryPiece::segment({1, 0}, {0, 0})};
    cw.symmetry_order = 1;
    CHECK_THROWS_AS(validate_body(cw), GeometryError);
}

TEST_CASE("boundary_path wraps the seam and preserves arc geometry") {
    const auto body = make_disc(1.0);
    // From angle 45 deg (piece 0) back around to angle -45 deg (piece 3).
    const Vec2 from_pt = unit_dir(kPi / 4), to_pt = unit_dir(-kPi / 4);
    const auto from = locate_on_boundary(body, from_pt);
    const auto to = locate_on_boundary(body, to_pt);
    const auto path = boundary_path(body, from, to);
    REQUIRE_FALSE(path.empty());
    CHECK(distance(path.front().a, from_pt) <= 1e-12);
    CHECK(distance(path.back().b, to_pt) <= 1e-12);
    double len = 0.0;
    for (const auto& pc : path) len += pc.length();
    CHECK(len == doctest::Approx(1.5 * kPi).epsilon(1e-9));  // 270 degrees
}

TEST_CASE("clip_loop_halfplane: exact semicircle area") {
    const auto disc = make_disc(1.0);
    const auto half = clip_loop_halfplane(disc.pieces, {0, 0}, {0, 1});
    REQUIRE_FALSE(half.empty());
    CHECK(piece_loop_area(half) == doctest::Approx(kPi / 2).epsilon(1e-12));
    // Complementary halves tile the disc.
    const auto other = clip_loop_halfplane(disc.pieces, {0, 0}, {0, -1});
    CHECK(piece_loop_area(half) + piece_loop_area(other) ==
          doctest::Approx(kPi).epsilon(1e-12));
    // Off-center chord: circular-segment area formula.
    const double h = 0.4;
    const auto cap = clip_loop_halfplane(disc.pieces, {0, h}, {0, 1});
    const double theta = 2 * std::acos(h);
    CHECK(piece_loop_area(cap) ==
          doctest::Approx(0.5 * (theta - std::sin(theta))).epsilon(1e-12));
}

TEST_CASE("piece_loop_centroid: half-disc centroid at 4r/(3 pi)") {
    const auto half = clip_loop_halfplane(make_disc(1.0).pieces, {0, 0}, {0, 1});
    const Vec2 c = piece_loop_centroid(half);
    CHECK(c.x == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(c.y == doctest::Approx(4.0 / (3.0 * kPi)).epsilon(1e-9));
}
