#include "doctest.h"

#include <random>
#include <stdexcept>

#include "dubins/oracle.hpp"

using namespace dubins;

TEST_CASE("default horizon") {
    const TargetMotion m({3, 4}, {0.5, 0});
    const OracleConfig cfg = default_oracle_config(m, 1);
    CHECK(cfg.t_max == doctest::Approx(4 * (5 / 0.5 + kTwoPi)));
    CHECK(cfg.grid_step == 1e-3);
    CHECK(cfg.refine_iters == 30);
}

TEST_CASE("golden cases within a hundredth") {
    CHECK(mtip_oracle(TargetMotion({5, 2}, {0.55, -0.55}), 1) == doctest::Approx(18.45).epsilon(0.01 / 18.45));
    CHECK(mtip_oracle(TargetMotion({1.2, 0}, {-0.1, -0.1}), 1) == doctest::Approx(5.43).epsilon(0.01 / 5.43));
}

TEST_CASE("stationary target") {
    CHECK(mtip_oracle(TargetMotion({0, 5}, {0, 0}), 1) == doctest::Approx(5.0).epsilon(1e-8));
}

TEST_CASE("serial and parallel scans agree") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> coord(-4, 4);
    for (int i = 0; i < 10; ++i) {
        const TargetMotion m({coord(rng), coord(rng)}, {0.1 * (i % 5), -0.05 * (i % 3)});
        const OracleConfig cfg = default_oracle_config(m, 1);
        CHECK(mtip_oracle(m, 1, cfg) == mtip_oracle_parallel(m, 1, cfg));
    }
}

TEST_CASE("horizon exhaustion and bad configs") {
    OracleConfig cfg;
    cfg.t_max = 1e-3;
    cfg.grid_step = 1e-3;
    CHECK_THROWS_AS(mtip_oracle(TargetMotion({1e6, 0}, {0.9, 0}), 1, cfg), std::runtime_error);
    cfg.grid_step = 0;
    CHECK_THROWS_AS(mtip_oracle(TargetMotion({1, 0}, {0, 0}), 1, cfg), std::invalid_argument);
}

TEST_CASE("rdp oracle") {
    CHECK(rdp_oracle({0, 5}, 1) == doctest::Approx(5.0).epsilon(1e-3));
    CHECK(rdp_oracle({0, 0}, 1) == 0.0);
    CHECK(rdp_oracle({2, 0}, 1) == doctest::Approx(kPi).epsilon(1e-3));
}
