#include "doctest.h"

#include <random>
#include <stdexcept>

#include "dubins/frame.hpp"
#include "dubins/geometry.hpp"

using namespace dubins;

namespace {

Point lr_terminal_formula(double u, double w, double rho) {
    return {-rho + 2 * rho * std::cos(u) + rho * std::cos(u + kPi - w),
            2 * rho * std::sin(u) + rho * std::sin(u + kPi - w)};
}

} // namespace

TEST_CASE("normalize_angle wraps into [0, 2pi)") {
    CHECK(normalize_angle(0.0) == 0.0);
    CHECK(normalize_angle(kTwoPi) == doctest::Approx(0.0));
    CHECK(normalize_angle(-kHalfPi) == doctest::Approx(1.5 * kPi));
    CHECK(normalize_angle(5 * kPi) == doctest::Approx(kPi));
    CHECK(normalize_angle(-1e-17) < kTwoPi);
}

TEST_CASE("straight line") {
    const DubinsPath path(Configuration::origin(), {Segment(SegmentKind::Line, 5.0)}, 1.0);
    const Configuration end = terminal_configuration(path);
    CHECK(end.x() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(end.y() == doctest::Approx(5.0));
    CHECK(end.theta() == doctest::Approx(kHalfPi));
}

TEST_CASE("half turn to the left") {
    const DubinsPath path(Configuration::origin(), {Segment(SegmentKind::LeftArc, kPi)}, 1.0);
    const Configuration end = terminal_configuration(path);
    CHECK(end.x() == doctest::Approx(-2.0));
    CHECK(std::abs(end.y()) < 1e-12);
    CHECK(end.theta() == doctest::Approx(1.5 * kPi));
}

TEST_CASE("LR terminal matches the two-circle formula") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ang(0.0, kTwoPi);
    for (double rho : {0.5, 1.0, 2.5}) {
        for (int i = 0; i < 200; ++i) {
            const double u = ang(rng);
            const double w = ang(rng);
            const DubinsPath path(Configuration::origin(),
                                  {Segment(SegmentKind::LeftArc, u), Segment(SegmentKind::RightArc, w)}, rho);
            const Point got = terminal_configuration(path).position();
            const Point want = lr_terminal_formula(u, w, rho);
            CHECK(distance(got, want) < 1e-12 * rho * 10);
        }
    }
}

TEST_CASE("target position") {
    const TargetMotion a({5, 2}, {0.55, -0.55});
    CHECK(a.position(18.45).x == doctest::Approx(15.1475));
    CHECK(a.position(18.45).y == doctest::Approx(-8.1475));
    const TargetMotion b({1.2, 0}, {-0.1, -0.1});
    CHECK(b.position(5.43).x == doctest::Approx(0.657));
    CHECK(b.position(5.43).y == doctest::Approx(-0.543));
    CHECK(a.position(0.0) == Point{5, 2});
    CHECK_THROWS_AS((void)a.position(-1.0), std::domain_error);
}

TEST_CASE("target speed must stay below the pursuer's") {
    CHECK_THROWS_AS(TargetMotion({0, 0}, {1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(TargetMotion({0, 0}, {0.8, 0.7}), std::invalid_argument);
    CHECK_NOTHROW(TargetMotion({0, 0}, {0.0, 0.999}));
}

TEST_CASE("segment validation") {
    CHECK_THROWS(Segment(SegmentKind::Line, -1.0));
    CHECK_THROWS(Segment(SegmentKind::LeftArc, 7.0));
    CHECK_THROWS(DubinsPath(Configuration::origin(),
                            {Segment(SegmentKind::LeftArc, 1), Segment(SegmentKind::Line, 1),
                             Segment(SegmentKind::RightArc, 1)},
                            1.0));
}

TEST_CASE("zero segments drop and equal neighbours merge") {
    const DubinsPath a(Configuration::origin(), {Segment(SegmentKind::RightArc, 0.0), Segment(SegmentKind::Line, 3.0)},
                       1.0);
    CHECK(a.segments().size() == 1);
    const DubinsPath b(Configuration::origin(),
                       {Segment(SegmentKind::LeftArc, 0.5), Segment(SegmentKind::LeftArc, 0.25)}, 1.0);
    REQUIRE(b.segments().size() == 1);
    CHECK(b.segments()[0].magnitude == doctest::Approx(0.75));
}

TEST_CASE("rollout composes segment by segment") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ang(0.0, kTwoPi);
    std::uniform_real_distribution<double> len(0.0, 5.0);
    for (int i = 0; i < 100; ++i) {
        const Segment s1(SegmentKind::RightArc, ang(rng));
        const Segment s2(SegmentKind::Line, len(rng));
        const double rho = 1.3;
        const DubinsPath whole(Configuration::origin(), {s1, s2}, rho);
        const Configuration mid = advance(Configuration::origin(), s1, rho);
        const Configuration end = advance(mid, s2, rho);
        const Configuration got = terminal_configuration(whole);
        CHECK(distance(got.position(), end.position()) < 1e-12);
    }
}

TEST_CASE("sampled trajectory ends at the closed-form terminal") {
    const double rho = 2.0;
    const DubinsPath path(Configuration::origin(),
                          {Segment(SegmentKind::LeftArc, 2.2), Segment(SegmentKind::RightArc, 4.1)}, rho);
    const Rollout r = rollout(path, rho / 100.0);
    REQUIRE(!r.samples.empty());
    CHECK(r.samples.front().t == 0.0);
    CHECK(r.samples.back().t == doctest::Approx(path.length()));
    CHECK(std::hypot(r.samples.back().x - r.terminal.x(), r.samples.back().y - r.terminal.y()) < 1e-9 * rho);
    for (std::size_t i = 1; i < r.samples.size(); ++i) {
        const auto& a = r.samples[i - 1];
        const auto& b = r.samples[i];
        CHECK(std::abs(a.u) <= 1);
        // Heading never changes faster than 1 / rho.
        const double dtheta = std::remainder(b.theta - a.theta, kTwoPi);
        CHECK(std::abs(dtheta) <= (b.t - a.t) / rho + 1e-12);
    }
    CHECK(r.samples.front().u == 1);
    CHECK(r.samples.back().u == -1);
    CHECK_THROWS(rollout(path, 0.0));
}

TEST_CASE("mirroring a path mirrors its terminal") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ang(0.0, kTwoPi);
    for (int i = 0; i < 50; ++i) {
        const DubinsPath path(Configuration::origin(),
                              {Segment(SegmentKind::LeftArc, ang(rng)), Segment(SegmentKind::Line, 2.0)}, 1.0);
        const Point a = terminal_configuration(path).position();
        const Point b = terminal_configuration(path.mirrored()).position();
        CHECK(distance(mirror(a), b) < 1e-12);
    }
}

TEST_CASE("frame round trip") {
    const Frame f(Configuration(3.0, -1.0, 0.3), 2.0);
    const Point w{4.5, 2.25};
    CHECK(distance(f.to_world(f.to_canonical(w)), w) < 1e-12);
    CHECK(distance(f.to_canonical(Point{3.0, -1.0}), Point{0, 0}) < 1e-12);
    // The start heading maps onto +y.
    const Point ahead = f.to_canonical(Point{3.0 + std::cos(0.3), -1.0 + std::sin(0.3)});
    CHECK(ahead.x == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(ahead.y == doctest::Approx(1.0));
    const Point v = f.velocity_to_canonical({1.0, 0.0});
    CHECK(norm(v) == doctest::Approx(0.5));
    CHECK(f.to_world(Configuration::origin()).theta() == doctest::Approx(0.3));
    CHECK_THROWS(Frame(Configuration::origin(), 0.0));
}
