#include "dubins/drift.hpp"

namespace dubins {

TargetMotion drift_as_target(Point terminal, Point wind) { return {terminal, -1.0 * wind}; }

DriftSolution solve_drift(Point terminal, Point wind, double rho, double sample_dt) {
    DriftSolution out;
    out.solution = solve_mtip(drift_as_target(terminal, wind), rho);
    const double dt = sample_dt > 0.0 ? sample_dt : rho / 100.0;
    const DubinsPath& path = out.solution.candidate.path;
    out.ground_track = rollout(path, dt).samples;
    for (TrajectorySample& s : out.ground_track) {
        s.x += wind.x * s.t;
        s.y += wind.y * s.t;
    }
    const Point air_end = terminal_configuration(path).position();
    out.ground_endpoint = air_end + out.solution.t_m * wind;
    return out;
}

} // namespace dubins
