// dubins_intercept_cli: earliest Dubins intercept of a constant-velocity target,
// or shortest path to a fixed point in steady wind.
//
//   dubins_intercept_cli --target-p0 -2 -2 --target-v 0.5 0
//   dubins_intercept_cli --mode drift --terminal 0 5 --wind 0 0
//   dubins_intercept_cli --instance case.json --out sol.json --traj path.csv
//   dubins_intercept_cli --generate 100 --seed 3 --check-oracle

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "instance_io.hpp"

#include "dubins/oracle.hpp"

namespace {

using cli::InputError;
using cli::json;

constexpr double kOracleTol = 2e-3;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    out << text;
}

std::vector<cli::Instance> generate(int n, unsigned seed, double rho) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> pos(-5.0, 5.0);
    std::uniform_real_distribution<double> angle(-dubins::kPi, dubins::kPi);
    std::uniform_real_distribution<double> speed(0.0, 0.9);
    std::vector<cli::Instance> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        cli::Instance in;
        in.rho = rho;
        in.p0 = {pos(rng), pos(rng)};
        const double a = angle(rng);
        const double s = speed(rng);
        in.v = {s * std::cos(a), s * std::sin(a)};
        out.push_back(in);
    }
    return out;
}

double oracle_time(const cli::Instance& in) {
    const dubins::TargetMotion m = cli::canonical_target(in);
    return dubins::mtip_oracle(m, in.rho) / in.speed;
}

int run_batch(const std::vector<cli::Instance>& instances, bool check_oracle, const std::string& out_path) {
    const long n = static_cast<long>(instances.size());
    std::vector<json> rows(instances.size());
    std::vector<int> solved_flag(instances.size(), 0);
    std::vector<double> gaps(instances.size(), 0.0);
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) {
        const cli::Instance& in = instances[static_cast<std::size_t>(i)];
        json row;
        row["instance"] = cli::instance_to_json(in);
        try {
            const cli::Solved s = cli::solve(in);
            row["solution"] = cli::solution_to_json(s);
            solved_flag[static_cast<std::size_t>(i)] = 1;
            if (check_oracle) {
                const double o = oracle_time(in);
                gaps[static_cast<std::size_t>(i)] = std::abs(s.solution.t_m / in.speed - o);
                row["oracle_t"] = cli::round12(o);
            }
        } catch (const InputError& e) {
            row["error"] = e.what();
        } catch (const std::exception& e) {
            row["error"] = std::string("solver failure: ") + e.what();
        }
        rows[static_cast<std::size_t>(i)] = std::move(row);
    }
    int solved = 0;
    int agree = 0;
    double worst = 0.0;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        if (solved_flag[i] == 0) {
            continue;
        }
        ++solved;
        worst = std::max(worst, gaps[i]);
        if (gaps[i] <= kOracleTol) {
            ++agree;
        }
    }
    json results(rows);
    if (!out_path.empty()) {
        write_text(out_path, json{{"results", results}}.dump(2) + "\n");
    }
    std::printf("solved: %d/%zu\n", solved, instances.size());
    if (check_oracle) {
        std::printf("within tolerance: %d/%zu (worst gap %.3g)\n", agree, instances.size(), worst);
        return agree == static_cast<int>(instances.size()) ? 0 : 1;
    }
    return solved == static_cast<int>(instances.size()) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Earliest Dubins intercept of a constant-velocity target"};

    std::string mode = "intercept";
    double rho = 1.0;
    double speed = 1.0;
    std::vector<double> p0;
    std::vector<double> v;
    std::vector<double> terminal;
    std::vector<double> wind;
    std::vector<double> start{0.0, 0.0, 90.0};
    std::string instance_path;
    std::string batch_path;
    std::string out_path;
    std::string traj_path;
    std::string target_traj_path;
    double sample_dt = 0.0;
    int n_generate = 0;
    unsigned seed = 1;
    bool check_oracle = false;

    app.add_option("--mode", mode, "intercept or drift")->check(CLI::IsMember({"intercept", "drift"}));
    auto* rho_opt = app.add_option("--rho", rho, "minimum turning radius");
    auto* speed_opt = app.add_option("--speed", speed, "pursuer speed");
    app.add_option("--target-p0", p0, "target initial position X Y")->expected(2);
    app.add_option("--target-v", v, "target velocity VX VY")->expected(2);
    app.add_option("--terminal", terminal, "drift mode goal X Y")->expected(2);
    app.add_option("--wind", wind, "drift mode wind WX WY")->expected(2);
    auto* start_opt = app.add_option("--start", start, "pursuer start X Y HEADING_DEG")->expected(3);
    app.add_option("--instance", instance_path, "instance JSON file");
    app.add_option("--batch", batch_path, "JSON array of instances");
    app.add_option("--generate", n_generate, "solve N random intercept instances")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "seed for --generate");
    app.add_flag("--check-oracle", check_oracle, "compare against the brute-force scan");
    app.add_option("--out", out_path, "solution JSON path (default stdout)");
    app.add_option("--traj", traj_path, "pursuer trajectory CSV");
    app.add_option("--target-traj", target_traj_path, "target trajectory CSV");
    app.add_option("--sample-dt", sample_dt, "trajectory sample spacing in seconds (default rho/100)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (n_generate > 0 || !batch_path.empty()) {
            std::vector<cli::Instance> list = !batch_path.empty() ? cli::batch_from_json(read_json_file(batch_path))
                                                                  : generate(n_generate, seed, rho);
            return run_batch(list, check_oracle, out_path);
        }

        cli::Instance in;
        if (!instance_path.empty()) {
            in = cli::instance_from_json(read_json_file(instance_path));
        } else {
            in.mode = cli::parse_mode(mode);
            if (in.mode == cli::Mode::Intercept) {
                if (p0.size() != 2 || v.size() != 2) {
                    throw InputError("intercept mode needs --target-p0 X Y and --target-v VX VY");
                }
                in.p0 = {p0[0], p0[1]};
                in.v = {v[0], v[1]};
            } else {
                if (terminal.size() != 2 || wind.size() != 2) {
                    throw InputError("drift mode needs --terminal X Y and --wind WX WY");
                }
                in.terminal = {terminal[0], terminal[1]};
                in.wind = {wind[0], wind[1]};
            }
        }
        if (instance_path.empty() || rho_opt->count() > 0) {
            in.rho = rho;
        }
        if (instance_path.empty() || speed_opt->count() > 0) {
            in.speed = speed;
        }
        if (instance_path.empty() || start_opt->count() > 0) {
            in.start = dubins::Configuration(start[0], start[1], start[2] * dubins::kPi / 180.0);
        }

        const cli::Solved s = cli::solve(in);
        json doc = cli::solution_to_json(s);
        if (check_oracle) {
            const double o = oracle_time(in);
            doc["oracle"] = {{"t", cli::round12(o)},
                             {"gap", cli::round12(std::abs(o - s.solution.t_m / in.speed))},
                             {"within_tolerance", std::abs(o - s.solution.t_m / in.speed) <= kOracleTol}};
        }
        write_text(out_path, doc.dump(2) + "\n");

        const double dt = sample_dt > 0.0 ? sample_dt : in.rho / 100.0;
        if (!traj_path.empty()) {
            write_text(traj_path, cli::to_csv(cli::pursuer_track(s, dt)));
        }
        if (!target_traj_path.empty()) {
            write_text(target_traj_path, cli::to_csv(cli::target_track(s, dt)));
        }
        return 0;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
