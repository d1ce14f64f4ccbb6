#include "doctest.h"

#include <random>
#include <stdexcept>

#include "dubins/coefficients.hpp"
#include "dubins/drift.hpp"
#include "dubins/elongation.hpp"
#include "dubins/intercept.hpp"
#include "dubins/oracle.hpp"
#include "dubins/rdp.hpp"

using namespace dubins;

namespace {

const double kS3 = std::sqrt(3.0);

TargetMotion case_a() { return {{5, 2}, {0.55, -0.55}}; }
TargetMotion case_b() { return {{1.2, 0}, {-0.1, -0.1}}; }
TargetMotion case_c() { return {{-3, 0.8}, {0.15, 0}}; }
TargetMotion case_d() { return {{-(kS3 + 1) / 2, kS3 / 2}, {kS3 / (4 * kPi), 0}}; }

TargetMotion random_instance(std::mt19937_64& rng, double vmax = 0.8) {
    std::uniform_real_distribution<double> coord(-6, 6);
    std::uniform_real_distribution<double> ang(0, kTwoPi);
    std::uniform_real_distribution<double> speed(0, vmax);
    const Point p{coord(rng), coord(rng)};
    const double s = speed(rng);
    const double a = ang(rng);
    return {p, {s * std::cos(a), s * std::sin(a)}};
}

} // namespace

TEST_CASE("CS coefficients") {
    const CsCoefficients c = cs_coefficients(case_a(), 1);
    CHECK(c.A3 == doctest::Approx(0.55));
    CHECK(c.A4 == doctest::Approx(0.55));
    CHECK(c.a1 == 1.0);
    REQUIRE(c.a2.has_value());
    CHECK(*c.a2 == doctest::Approx(-5 / 0.55));
    CHECK(gcs_value(c, 0.0) == doctest::Approx(c.A2 + c.A5));
    CHECK(gcs_value(c, kPi) == doctest::Approx(-c.A2 - kPi * c.A3 + c.A5));

    // x0 = y0 = 0: a2 vanishes and A5 = a1 v_y + rho.
    const CsCoefficients z = cs_coefficients(TargetMotion({0, 0}, {0.3, -0.2}), 1);
    CHECK(*z.a2 == 0.0);
    CHECK(z.A5 == doctest::Approx(z.a1 * -0.2 + 1.0));

    const CsCoefficients v0 = cs_coefficients(TargetMotion({1, 2}, {0.0, 0.4}), 1);
    CHECK_FALSE(v0.a2.has_value());
    CHECK(v0.A3 == 0.0);
}

TEST_CASE("CS root reproduces the RS path of case A") {
    const CsCoefficients c = cs_coefficients(case_a(), 1);
    const auto rs = solve_rs_family(case_a(), 1);
    REQUIRE(!rs.empty());
    const double alpha = rs.front().path.segments().front().magnitude;
    CHECK(std::abs(gcs_value(c, alpha)) < 1e-8);
}

TEST_CASE("target on the x axis moving along it") {
    const TargetMotion m({4, 0}, {0.3, 0});
    const CsCoefficients c = cs_coefficients(m, 1);
    CHECK(c.A4 == 0.0);
    const InterceptSolution s = solve_mtip(m, 1);
    CHECK(std::abs(s.t_m - mtip_oracle(m, 1)) < 2e-3);
}

TEST_CASE("CC coefficients") {
    const CcCoefficients c = cc_coefficients(case_b(), 1);
    CHECK(c.b(1) == doctest::Approx(c.Ca * c.Ca));
    CHECK(c.b(1) >= 0.0);
    CHECK(c.b(6) == doctest::Approx(8 * (1 + 1.2)));
    CHECK(c.b(7) == 0.0);
    CHECK(c.b(8) == doctest::Approx(-0.8));
    CHECK_THROWS_AS(cc_coefficients(TargetMotion({1, 1}, {0, 0}), 1), std::invalid_argument);
}

TEST_CASE("G_cc chain derivatives match finite differences") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> eta(0.1, 4 * kPi - 0.1);
    for (int i = 0; i < 20; ++i) {
        const CcCoefficients c = cc_coefficients(random_instance(rng), 1);
        const auto chain = gcc_chain(c);
        REQUIRE(chain.size() == 5);
        for (int k = 0; k < 4; ++k) {
            const double e = eta(rng);
            const double h = 1e-6;
            const double fd = (chain[k](e + h) - chain[k](e - h)) / (2 * h);
            const double an = chain[k + 1](e);
            CHECK(std::abs(an - fd) <= 1e-6 * std::max(1.0, std::abs(an)));
        }
        const CsForm g4 = gcc_fourth_derivative_form(c);
        CHECK(g4.value(1.3) == doctest::Approx(chain[4](1.3)));
    }
}

TEST_CASE("case A") {
    const InterceptSolution s = solve_mtip(case_a(), 1);
    CHECK(s.t_m == doctest::Approx(18.45).epsilon(0.01 / 18.45));
    CHECK(s.candidate.family == Family::RS);
    CHECK(s.candidate.terminal.x == doctest::Approx(15.15).epsilon(0.01 / 15.15));
    CHECK(s.candidate.terminal.y == doctest::Approx(-8.15).epsilon(0.01 / 8.15));
    CHECK(s.candidate.region.tag == RegionTag::R1);
    CHECK(s.t_m == doctest::Approx(rdp_length(s.candidate.terminal, 1)));
}

TEST_CASE("case B") {
    const InterceptSolution s = solve_mtip(case_b(), 1);
    CHECK(s.t_m == doctest::Approx(5.43).epsilon(0.01 / 5.43));
    CHECK(s.candidate.family == Family::LR);
    CHECK(s.candidate.region.tag == RegionTag::R2);
    CHECK(s.candidate.terminal.x == doctest::Approx(0.66).epsilon(0.01 / 0.66));
    CHECK(s.candidate.terminal.y == doctest::Approx(-0.54).epsilon(0.01 / 0.54));
    const auto cc = solve_cc_family(case_b(), 1);
    REQUIRE(!cc.empty());
    CHECK(cc.front().t == doctest::Approx(s.t_m));
}

TEST_CASE("case C agrees with the oracle") {
    const InterceptSolution s = solve_mtip(case_c(), 1);
    CHECK(std::abs(s.t_m - mtip_oracle(case_c(), 1)) < 2e-3);
    CHECK(s.t_m == doctest::Approx(3.1167).epsilon(1e-4));
    CHECK(s.candidate.family == Family::LS);
    CHECK(s.candidate.mirrored);
    CHECK(s.candidate.terminal.y == doctest::Approx(0.8));
    // The target crosses both upper half circles, so F[E(t)] jumps along the way.
    double prev = rdp_length(case_c().position(0), 1);
    int jumps = 0;
    for (int k = 1; k <= 40000; ++k) {
        const double f = rdp_length(case_c().position(k * 1e-3), 1);
        jumps += std::abs(f - prev) > 0.5;
        prev = f;
    }
    CHECK(jumps >= 2);
}

TEST_CASE("case D follows the L+ bound") {
    const InterceptSolution s = solve_mtip(case_d(), 1);
    CHECK(canonical_family(s.candidate) == Family::LplusR);
    CHECK(s.candidate.family == Family::RplusL);
    const ElongationPair e = elongation_any_side(s.candidate.terminal, 1);
    CHECK(std::abs(e.l_plus - s.t_m) < 1e-8);
    CHECK(std::abs(s.t_m - rdp_length(s.candidate.terminal, 1)) > 1.0);
    CHECK(rdp_length(s.candidate.terminal, 1) == doctest::Approx(kPi / 3));
    CHECK(solve_rdp(s.candidate.terminal, 1).family == Family::L);
    CHECK(std::abs(s.t_m - mtip_oracle(case_d(), 1)) < 0.01);
}

TEST_CASE("nearly stationary target straight ahead") {
    const InterceptSolution s = solve_mtip(TargetMotion({0, 5}, {1e-3, 0}), 1);
    CHECK(s.t_m == doctest::Approx(5.0).epsilon(1e-2));
    const InterceptSolution still = solve_mtip(TargetMotion({0, 5}, {0, 0}), 1);
    CHECK(still.t_m == doctest::Approx(5.0));
    CHECK(still.candidate.family == Family::S);
}

TEST_CASE("random instances: validity, laws and mirror invariance") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 200; ++i) {
        const TargetMotion m = random_instance(rng);
        const InterceptSolution s = solve_mtip(m, 1);
        const Candidate& c = s.candidate;
        CHECK(std::abs(c.path.length() - s.t_m) < 1e-8);
        CHECK(distance(terminal_configuration(c.path).position(), m.position(s.t_m)) < 1e-8);
        CHECK(s.checks.lower_bound);
        CHECK(s.checks.region_law);
        CHECK(in_sufficient_family(c.path));
        const InterceptSolution r = solve_mtip(m.mirrored(), 1);
        CHECK(r.t_m == s.t_m);
        CHECK(r.candidate.family == mirror(c.family));
    }
}

TEST_CASE("non-unit turning radius") {
    std::mt19937_64 rng(78);
    for (int i = 0; i < 20; ++i) {
        const TargetMotion m = random_instance(rng, 0.6);
        const double rho = 0.3 + 0.2 * i;
        const InterceptSolution s = solve_mtip(m, rho);
        CHECK(distance(terminal_configuration(s.candidate.path).position(), m.position(s.t_m)) < 1e-8 * rho);
        CHECK(std::abs(s.t_m - mtip_oracle(m, rho)) < 2e-3);
    }
}

TEST_CASE("invalid radius") {
    CHECK_THROWS_AS(solve_mtip(case_a(), 0.0), std::invalid_argument);
}

TEST_CASE("drift in still air") {
    const DriftSolution d = solve_drift({0, 5}, {0, 0}, 1);
    CHECK(d.solution.t_m == doctest::Approx(5.0));
    CHECK(d.solution.candidate.family == Family::S);
}

TEST_CASE("drift ground track reaches the terminal") {
    const DriftSolution d = solve_drift({3, 3}, {0.3, 0}, 1);
    CHECK(distance(d.ground_endpoint, Point{3, 3}) < 1e-8);
    REQUIRE(!d.ground_track.empty());
    CHECK(std::hypot(d.ground_track.back().x - 3, d.ground_track.back().y - 3) < 1e-8);
    CHECK(d.solution.candidate.path.segments().size() <= 2);
    const InterceptSolution m = solve_mtip(TargetMotion({3, 3}, {-0.3, 0}), 1);
    CHECK(d.solution.t_m == m.t_m);
    CHECK_THROWS(solve_drift({1, 1}, {1.0, 0.2}, 1));
}
