#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reldiam/bounds.hpp"
#include "reldiam/optimizer.hpp"

#include <cmath>

using namespace reldiam;

namespace {
constexpr double kPi = 3.1415926535897932384626433832795;

SearchConfig quick_config(std::uint64_t seed) {
    SearchConfig cfg;
    cfg.seed = seed;
    cfg.iterations = 400;
    cfg.restarts = 4;
    return cfg;
}
}  // namespace

TEST_CASE("partition search on the disc never beats the proven optimum") {
    const auto disc = make_disc(1.0);
    for (int k : {3, 4, 5}) {
        const auto res = optimize_partition(disc, k, quick_config(11));
        const double opt = 2.0 * std::sin(kPi / k);
        CHECK(res.best_value >= opt - 1e-9);      // theorem floor
        CHECK(res.best_value <= opt + 1e-3);      // and the search finds it
        CHECK(res.bounds_gap >= -1e-9);
        REQUIRE(res.best_partition.has_value());
        CHECK(validate_partition(*res.best_partition).ok);
    }
}

TEST_CASE("partition search result is a valid subdivision with matching value") {
    const auto body = make_regular_kgon(6, 1.0);
    const auto res = optimize_partition(body, 6, quick_config(5));
    CHECK(validate_subdivision(res.best).ok);
    CHECK(max_relative_diameter(res.best).value ==
          doctest::Approx(res.best_value).epsilon(1e-9));
    CHECK(res.second_value <= res.best_value + 1e-12);
}

TEST_CASE("subdivision search beats the standard partition where possible") {
    const auto disc = make_disc(1.0);
    // k = 8: the standard partition gives 1, the ring construction ~0.87.
    auto cfg = quick_config(3);
    cfg.iterations = 800;
    const auto res = optimize_subdivision(disc, 8, cfg);
    CHECK(validate_subdivision(res.best).ok);
    CHECK(res.best_value < 1.0);
    CHECK(res.best_value <= 0.95);
    CHECK(res.best_value >= bound_isodiametric(disc, 8) - 1e-9);
}

TEST_CASE("subdivision search at small k respects the theorem floor") {
    const auto disc = make_disc(1.0);
    for (int k : {3, 4}) {
        const auto res = optimize_subdivision(disc, k, quick_config(21));
        CHECK(res.best_value >= 2.0 * std::sin(kPi / k) - 1e-9);
        CHECK(validate_subdivision(res.best).ok);
    }
}

TEST_CASE("search is deterministic for a fixed seed") {
    const auto body = make_regular_kgon(5, 1.0);
    const auto a = optimize_partition(body, 5, quick_config(123));
    const auto b = optimize_partition(body, 5, quick_config(123));
    CHECK(a.best_value == b.best_value);
    CHECK(a.trace.size() == b.trace.size());
}

TEST_CASE("trace is monotone non-increasing in the incumbent") {
    const auto res =
        optimize_partition(make_disc(1.0), 4, quick_config(9));
    for (std::size_t i = 1; i < res.trace.size(); ++i)
        CHECK(res.trace[i].second <= res.trace[i - 1].second + 1e-12);
}

TEST_CASE("config validation") {
    SearchConfig bad;
    bad.iterations = -1;
    CHECK_THROWS_AS(optimize_partition(make_disc(1.0), 4, bad), GeometryError);
    SearchConfig bad2;
    bad2.restarts = 0;
    CHECK_THROWS_AS(optimize_subdivision(make_disc(1.0), 4, bad2), GeometryError);
}
