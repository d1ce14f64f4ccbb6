#pragma once
// Instance and solution documents for the command-line tool.
//
// Instance:
//   { "mode": "intercept" | "drift",
//     "rho": 1.0,
//     "start": { "x": 0, "y": 0, "heading_deg": 90 },   optional
//     "speed": 1.0,                                      optional
//     "target": { "p0": [x, y], "v": [vx, vy] },          intercept mode
//     "terminal": [x, y], "wind": [wx, wy] }              drift mode
//
// A batch file is either an array of instances or { "instances": [...] }.

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "dubins/drift.hpp"
#include "dubins/frame.hpp"
#include "dubins/intercept.hpp"

namespace cli {

using nlohmann::json;

enum class Mode { Intercept, Drift };

/// Malformed or out-of-range user input.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Instance {
    Mode mode{Mode::Intercept};
    double rho{1.0};
    dubins::Configuration start{dubins::Configuration::origin()};
    double speed{1.0};
    dubins::Point p0;
    dubins::Point v;
    dubins::Point terminal;
    dubins::Point wind;
};

struct Solved {
    Instance instance;
    dubins::InterceptSolution solution;
    /// Drift mode: ground track in the solver frame; empty otherwise.
    std::vector<dubins::TrajectorySample> ground_track;
    dubins::Point ground_endpoint;
};

[[nodiscard]] Mode parse_mode(const std::string& s);
[[nodiscard]] Instance instance_from_json(const json& j);
[[nodiscard]] json instance_to_json(const Instance& in);
[[nodiscard]] std::vector<Instance> batch_from_json(const json& j);

/// The instance as seen by the solver: start at the origin heading +y, unit speed.
[[nodiscard]] dubins::TargetMotion canonical_target(const Instance& in);

/// Throws InputError for instances the solver cannot accept.
[[nodiscard]] Solved solve(const Instance& in);

/// Rounded to 12 significant digits so the text output is stable.
[[nodiscard]] double round12(double x);

[[nodiscard]] json solution_to_json(const Solved& s);

/// Pursuer samples in the world frame every `dt` world seconds.
[[nodiscard]] std::vector<dubins::TrajectorySample> pursuer_track(const Solved& s, double dt);
[[nodiscard]] std::vector<dubins::TrajectorySample> target_track(const Solved& s, double dt);
[[nodiscard]] std::string to_csv(const std::vector<dubins::TrajectorySample>& samples);

} // namespace cli
