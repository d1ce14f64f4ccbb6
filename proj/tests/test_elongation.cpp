#include "doctest.h"

#include <random>
#include <stdexcept>

#include "dubins/elongation.hpp"
#include "dubins/rdp.hpp"
#include "dubins/region.hpp"

using namespace dubins;

namespace {

Point random_r3_right(std::mt19937_64& rng, double rho) {
    std::uniform_real_distribution<double> x(0.0, 2.0 * rho);
    std::uniform_real_distribution<double> y(0.0, 3.0 * rho);
    for (;;) {
        const Point p{x(rng), y(rng)};
        if (p.x > 1e-3 * rho && in_r3_interior(p, rho, 1e-3)) {
            return p;
        }
    }
}

} // namespace

TEST_CASE("both LR paths reach the point") {
    const ElongationPair e = elongation({0, 2}, 1);
    CHECK(distance(terminal_configuration(e.minus_path).position(), Point{0, 2}) < 1e-9);
    CHECK(distance(terminal_configuration(e.plus_path).position(), Point{0, 2}) < 1e-9);
    CHECK(e.l_minus < e.l_plus);
    CHECK(e.alpha_minus <= e.xi);
    CHECK(e.xi <= e.alpha_plus);
}

TEST_CASE("ordering F < L- < L+ inside R3") {
    std::mt19937_64 rng(41);
    for (double rho : {1.0, 0.4}) {
        for (int i = 0; i < 500; ++i) {
            const Point p = random_r3_right(rng, rho);
            const ElongationPair e = elongation(p, rho);
            CHECK(rdp_length(p, rho) < e.l_minus);
            CHECK(e.l_minus < e.l_plus);
            CHECK(e.alpha_minus <= e.xi + 1e-12);
            CHECK(e.xi <= e.alpha_plus + 1e-12);
            for (const DubinsPath* path : {&e.minus_path, &e.plus_path}) {
                REQUIRE(path->segments().size() == 2);
                CHECK(path->segments()[0].kind == SegmentKind::LeftArc);
                CHECK(path->segments()[1].kind == SegmentKind::RightArc);
                CHECK(distance(terminal_configuration(*path).position(), p) < 1e-9 * rho);
            }
        }
    }
}

TEST_CASE("coincident tangent circles on the outer boundary") {
    const double a = 1.1;
    const Point p = left_center(1) + 3.0 * Point{std::cos(a), std::sin(a)};
    const ElongationPair e = elongation(p, 1);
    CHECK(e.degenerate);
    CHECK(e.l_minus == e.l_plus);
}

TEST_CASE("outside R3 is rejected") {
    CHECK_THROWS_AS(elongation({5, 5}, 1), std::domain_error);
    CHECK_THROWS_AS(elongation({-0.5, 2}, 1), std::domain_error);
    CHECK_THROWS_AS(elongation({0.5, -1}, 1), std::domain_error);
    CHECK_NOTHROW(elongation_any_side({-0.5, 2}, 1));
}

TEST_CASE("mirrored points give equal bounds") {
    const ElongationPair a = elongation({0.7, 1.9}, 1);
    const ElongationPair b = elongation_any_side({-0.7, 1.9}, 1);
    CHECK(a.l_minus == doctest::Approx(b.l_minus));
    CHECK(a.l_plus == doctest::Approx(b.l_plus));
    CHECK(distance(terminal_configuration(b.plus_path).position(), Point{-0.7, 1.9}) < 1e-9);
}

TEST_CASE("feasible lengths in R3") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 200; ++i) {
        const Point p = random_r3_right(rng, 1);
        const ElongationPair e = elongation(p, 1);
        const double f = rdp_length(p, 1);
        CHECK(feasible_length(p, 1, f));
        CHECK_FALSE(feasible_length(p, 1, 0.5 * (e.l_minus + e.l_plus)));
        CHECK(feasible_length(p, 1, e.l_plus));
        CHECK(feasible_length(p, 1, e.l_minus));
        CHECK_FALSE(feasible_length(p, 1, f - 1e-6));
        CHECK(feasible_length(mirror(p), 1, e.l_plus + 1.0));
    }
}

TEST_CASE("feasible lengths elsewhere only need L >= F") {
    const Point p{4, -3};
    const double f = rdp_length(p, 1);
    CHECK(feasible_length(p, 1, f));
    CHECK(feasible_length(p, 1, f + 0.37));
    CHECK_FALSE(feasible_length(p, 1, f - 0.01));
}

TEST_CASE("bounds move continuously") {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> dir(0.0, kTwoPi);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const Point p = random_r3_right(rng, 1);
        const double a = dir(rng);
        const double delta = 1e-6;
        const Point q = p + delta * Point{std::cos(a), std::sin(a)};
        const ElongationPair e = elongation(p, 1);
        const ElongationPair g = elongation(q, 1);
        worst = std::max({worst, std::abs(e.l_minus - g.l_minus) / delta, std::abs(e.l_plus - g.l_plus) / delta});
    }
    CHECK(worst < 1e3);
}
