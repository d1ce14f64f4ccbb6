#pragma once
// Brute-force references for tests and audits. Slow by design.

#include <vector>

#include "dubins/geometry.hpp"
#include "dubins/roots.hpp"

namespace dubins {

struct OracleConfig {
    double t_max{0.0};
    double grid_step{1e-3};
    int refine_iters{30};
};

/// t_max = 4 (|p0| / (1 - |v|) + 2 pi rho), step 1e-3, 30 refinements.
[[nodiscard]] OracleConfig default_oracle_config(const TargetMotion& m, double rho);

/// Shortest two-segment path length to p found by sweeping the first-arc angle
/// on a grid and solving the second piece by bisection on its closure residual.
[[nodiscard]] double rdp_oracle(Point p, double rho, int grid = 4096);

/// First t on the time grid where some Dubins path of length t reaches E(t),
/// refined by bisection inside the bracketing cell. A cell whose ends are both
/// infeasible is still searched where t - F[E(t)] turns nonnegative, which
/// catches R3 windows [F, L-] narrower than the grid step. The horizon doubles
/// up to 8 times before std::runtime_error is thrown.
[[nodiscard]] double mtip_oracle(const TargetMotion& m, double rho, const OracleConfig& cfg);
[[nodiscard]] double mtip_oracle(const TargetMotion& m, double rho);

/// Same scan, with grid cells evaluated in OpenMP waves. Identical result.
[[nodiscard]] double mtip_oracle_parallel(const TargetMotion& m, double rho, const OracleConfig& cfg);

/// Sign changes over n uniform samples (n >= 1000), each polished by bisection,
/// plus samples where |f| is below 1e-13 of the largest sampled |f| and the
/// sign does not flip against a neighbour.
[[nodiscard]] std::vector<double> dense_zero_scan(const roots::SmoothFn& f, int n);

} // namespace dubins
