#pragma once
/**
 * @file   intercept.hpp
 * @brief  Minimum-time intercept of a constant-velocity target.
 *
 * Candidates come from the zeros of G_cs (R_a S_d paths) and G_cc (L_u R_w
 * paths), on the instance and on its mirror image across the y axis, which
 * covers L S and R L. Every zero is turned back into a path and kept only if
 * the rollout meets the target at the same time. The earliest one wins.
 */

#include <optional>
#include <stdexcept>
#include <vector>

#include "dubins/family.hpp"
#include "dubins/geometry.hpp"
#include "dubins/region.hpp"

namespace dubins {

class SolverError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Candidate {
    double t{0.0};
    Family family{Family::Null};
    DubinsPath path;
    Point terminal;
    Region region;
    /// Found on the mirrored instance and reflected back.
    bool mirrored{false};
    /// |rollout terminal - E(t)|.
    double residual{0.0};
};

/// The family as seen from the side where the first arc is a left turn
/// (e.g. R+L found on the mirrored instance reads as L+R).
[[nodiscard]] Family canonical_family(const Candidate& c) noexcept;

/// Fixed-point laws checked on the selected candidate.
struct TheoremCheck {
    double f_terminal{0.0};
    std::optional<double> l_minus;
    std::optional<double> l_plus;
    /// Terminal away from the closure of R3, where t must equal F.
    bool interior_r1_r2{false};
    bool lower_bound{false};
    bool region_law{false};
};

struct InterceptSolution {
    double t_m{0.0};
    Candidate candidate;
    std::vector<Candidate> all_candidates;
    TheoremCheck checks;
};

/// Intercepts along R_a S_d paths (a in [0, 2pi]) of the instance as given.
[[nodiscard]] std::vector<Candidate> solve_rs_family(const TargetMotion& m, double rho);

/// Intercepts along L_u R_w paths (u + w <= 4pi) of the instance as given.
/// Empty for a stationary target.
[[nodiscard]] std::vector<Candidate> solve_cc_family(const TargetMotion& m, double rho);

/// Selection preference: earlier time, then fewer segments,
/// then RS < LS < LR < RL, then unmirrored.
[[nodiscard]] bool candidate_before(const Candidate& a, const Candidate& b) noexcept;

/// Throws std::invalid_argument for rho <= 0 and SolverError if nothing validates.
[[nodiscard]] InterceptSolution solve_mtip(const TargetMotion& m, double rho);

[[nodiscard]] TheoremCheck check_theorems(const Candidate& c, double rho);

} // namespace dubins
