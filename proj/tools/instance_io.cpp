#include "instance_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace cli {
namespace {

using dubins::Point;

Point point_at(const json& j, const char* key) {
    if (!j.contains(key)) {
        throw InputError(std::string("missing field '") + key + "'");
    }
    const json& a = j.at(key);
    if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number()) {
        throw InputError(std::string("field '") + key + "' must be [x, y]");
    }
    return {a[0].get<double>(), a[1].get<double>()};
}

double number_or(const json& j, const char* key, double fallback) {
    if (!j.contains(key)) {
        return fallback;
    }
    if (!j.at(key).is_number()) {
        throw InputError(std::string("field '") + key + "' must be a number");
    }
    return j.at(key).get<double>();
}

json pair(Point p) { return json::array({round12(p.x), round12(p.y)}); }

double deg(double rad) { return rad * 180.0 / dubins::kPi; }
double rad(double deg) { return deg * dubins::kPi / 180.0; }

} // namespace

double round12(double x) {
    if (!std::isfinite(x)) {
        return x;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    const double r = std::stod(buf);
    return r == 0.0 ? 0.0 : r;
}

Mode parse_mode(const std::string& s) {
    if (s == "intercept") {
        return Mode::Intercept;
    }
    if (s == "drift") {
        return Mode::Drift;
    }
    throw InputError("mode must be 'intercept' or 'drift', got '" + s + "'");
}

Instance instance_from_json(const json& j) {
    if (!j.is_object()) {
        throw InputError("instance must be an object");
    }
    Instance in;
    in.mode = parse_mode(j.value("mode", std::string("intercept")));
    in.rho = number_or(j, "rho", 1.0);
    in.speed = number_or(j, "speed", 1.0);
    if (j.contains("start")) {
        const json& s = j.at("start");
        in.start = dubins::Configuration(number_or(s, "x", 0.0), number_or(s, "y", 0.0),
                                         rad(number_or(s, "heading_deg", 90.0)));
    }
    if (in.mode == Mode::Intercept) {
        if (!j.contains("target")) {
            throw InputError("intercept instance needs a 'target'");
        }
        in.p0 = point_at(j.at("target"), "p0");
        in.v = point_at(j.at("target"), "v");
    } else {
        in.terminal = point_at(j, "terminal");
        in.wind = point_at(j, "wind");
    }
    return in;
}

json instance_to_json(const Instance& in) {
    json j;
    j["mode"] = in.mode == Mode::Intercept ? "intercept" : "drift";
    j["rho"] = round12(in.rho);
    j["speed"] = round12(in.speed);
    j["start"] = {{"x", round12(in.start.x())},
                  {"y", round12(in.start.y())},
                  {"heading_deg", round12(deg(in.start.theta()))}};
    if (in.mode == Mode::Intercept) {
        j["target"] = {{"p0", pair(in.p0)}, {"v", pair(in.v)}};
    } else {
        j["terminal"] = pair(in.terminal);
        j["wind"] = pair(in.wind);
    }
    return j;
}

std::vector<Instance> batch_from_json(const json& j) {
    const json* list = &j;
    if (j.is_object() && j.contains("instances")) {
        list = &j.at("instances");
    }
    if (!list->is_array()) {
        throw InputError("batch must be an array of instances or {\"instances\": [...]}");
    }
    std::vector<Instance> out;
    for (const json& item : *list) {
        out.push_back(instance_from_json(item));
    }
    return out;
}

dubins::TargetMotion canonical_target(const Instance& in) {
    const dubins::Frame frame(in.start, in.speed);
    if (in.mode == Mode::Intercept) {
        return {frame.to_canonical(in.p0), frame.velocity_to_canonical(in.v)};
    }
    return dubins::drift_as_target(frame.to_canonical(in.terminal), frame.velocity_to_canonical(in.wind));
}

Solved solve(const Instance& in) {
    if (!(in.rho > 0.0) || !std::isfinite(in.rho)) {
        throw InputError("rho must be positive");
    }
    if (!(in.speed > 0.0) || !std::isfinite(in.speed)) {
        throw InputError("speed must be positive");
    }
    dubins::TargetMotion target({0, 0}, {0, 0});
    try {
        target = canonical_target(in);
    } catch (const std::invalid_argument& e) {
        throw InputError(in.mode == Mode::Intercept ? "target speed must be below the pursuer speed"
                                                    : "wind speed must be below the airspeed");
    }
    Solved s;
    s.instance = in;
    if (in.mode == Mode::Intercept) {
        s.solution = dubins::solve_mtip(target, in.rho);
    } else {
        const dubins::Frame frame(in.start, in.speed);
        const dubins::DriftSolution d = dubins::solve_drift(target.initial_position(), -1.0 * target.velocity(), in.rho);
        s.solution = d.solution;
        s.ground_track = d.ground_track;
        s.ground_endpoint = frame.to_world(d.ground_endpoint);
    }
    return s;
}

json solution_to_json(const Solved& s) {
    const Instance& in = s.instance;
    const dubins::Frame frame(in.start, in.speed);
    const dubins::Candidate& c = s.solution.candidate;
    json j;
    j["mode"] = in.mode == Mode::Intercept ? "intercept" : "drift";
    j["t_m"] = round12(frame.time_to_world(s.solution.t_m));
    j["path_length"] = round12(s.solution.t_m);
    j["family"] = std::string(dubins::to_string(c.family));
    j["canonical_family"] = std::string(dubins::to_string(dubins::canonical_family(c)));
    j["mirrored"] = c.mirrored;
    j["region"] = std::string(dubins::to_string(c.region.tag));
    j["side"] = std::string(dubins::to_string(c.region.side));
    json segs = json::array();
    for (const dubins::Segment& seg : c.path.segments()) {
        segs.push_back({{"kind", std::string(dubins::to_string(seg.kind))},
                        {"magnitude", round12(seg.magnitude)},
                        {"length", round12(seg.length(in.rho))}});
    }
    j["segments"] = segs;
    if (in.mode == Mode::Intercept) {
        j["intercept_point"] = pair(frame.to_world(c.terminal));
    } else {
        j["terminal"] = pair(in.terminal);
        j["ground_endpoint"] = pair(s.ground_endpoint);
        j["ground_miss"] = round12(dubins::distance(s.ground_endpoint, in.terminal));
    }
    const dubins::TheoremCheck& k = s.solution.checks;
    json checks = {{"rollout_residual", round12(c.residual)},
                   {"f_terminal", round12(k.f_terminal)},
                   {"lower_bound", k.lower_bound},
                   {"region_law", k.region_law},
                   {"interior_r1_r2", k.interior_r1_r2}};
    if (k.l_minus) {
        checks["l_minus"] = round12(*k.l_minus);
        checks["l_plus"] = round12(*k.l_plus);
    }
    j["checks"] = checks;
    j["candidates"] = s.solution.all_candidates.size();
    return j;
}

std::vector<dubins::TrajectorySample> pursuer_track(const Solved& s, double dt) {
    const dubins::Frame frame(s.instance.start, s.instance.speed);
    std::vector<dubins::TrajectorySample> canon;
    if (s.instance.mode == Mode::Drift) {
        // Resample the ground track at the requested spacing.
        const dubins::DubinsPath& path = s.solution.candidate.path;
        const dubins::Point wind = frame.velocity_to_canonical(s.instance.wind);
        canon = dubins::rollout(path, dt * s.instance.speed).samples;
        for (auto& p : canon) {
            p.x += wind.x * p.t;
            p.y += wind.y * p.t;
        }
    } else {
        canon = dubins::rollout(s.solution.candidate.path, dt * s.instance.speed).samples;
    }
    std::vector<dubins::TrajectorySample> out;
    out.reserve(canon.size());
    for (const auto& p : canon) {
        out.push_back(frame.to_world(p));
    }
    return out;
}

std::vector<dubins::TrajectorySample> target_track(const Solved& s, double dt) {
    const Instance& in = s.instance;
    const double t_end = s.solution.t_m / in.speed;
    const dubins::Point p0 = in.mode == Mode::Intercept ? in.p0 : in.terminal;
    const dubins::Point v = in.mode == Mode::Intercept ? in.v : dubins::Point{0.0, 0.0};
    const double heading = dubins::norm(v) > 0.0 ? dubins::normalize_angle(std::atan2(v.y, v.x)) : 0.0;
    std::vector<dubins::TrajectorySample> out;
    const long n = static_cast<long>(std::floor(t_end / dt - 1e-9));
    for (long k = 0; k <= n; ++k) {
        const double t = static_cast<double>(k) * dt;
        out.push_back({t, p0.x + v.x * t, p0.y + v.y * t, heading, 0});
    }
    out.push_back({t_end, p0.x + v.x * t_end, p0.y + v.y * t_end, heading, 0});
    return out;
}

std::string to_csv(const std::vector<dubins::TrajectorySample>& samples) {
    std::ostringstream os;
    os << "t,x,y,theta,u\n";
    char buf[160];
    for (const auto& p : samples) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g,%d\n", p.t, p.x, p.y, p.theta, p.u);
        os << buf;
    }
    return os.str();
}

} // namespace cli
