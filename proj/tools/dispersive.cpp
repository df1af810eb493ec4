#include "dispersive/checks.hpp"
#include "dispersive/config.hpp"
#include "dispersive/laws.hpp"
#include "dispersive/norms.hpp"
#include "dispersive/propagators.hpp"
#include "dispersive/report_io.hpp"
#include "dispersive/spectral.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <thread>

namespace fs = std::filesystem;
using namespace dispersive;

namespace {

constexpr int exit_failed_check = 1;
constexpr int exit_error = 2;

Field initial_field(const RunConfig& cfg) {
    const Grid grid(cfg.n, cfg.L);
    const InitialData& d = cfg.initial;
    return Field::sample(grid, [&](double x) {
        const double y = (x - d.center) / d.width;
        if (d.shape == "sech2") {
            const double s = 1.0 / std::cosh(y);
            return d.amplitude * s * s;
        }
        const double env = d.amplitude * std::exp(-y * y);
        return d.shape == "packet" ? env * std::cos(d.wavenumber * x) : env;
    });
}

DiagnosticHook solve_hook(const RunConfig& cfg) {
    const EquationSpec spec = cfg.equation();
    const auto names = cfg.diagnostics;
    const double s = cfg.diag_s;
    const double m = cfg.diag_m;
    return [=](double, const Field& u) {
        Diagnostics d;
        const InvariantReport inv = invariants(u, spec);
        for (const auto& name : names) {
            double v = 0.0;
            if (name == "mass") v = l2_squared(u);
            else if (name == "Hs_norm") v = sobolev(u, s);
            else if (name == "weighted_m_norm") v = weighted_l2(u, m);
            else if (name == "bracket_m_norm") v = weighted_l2(u, m, WeightKind::bracket);
            else if (name == "mean") v = moment(u, 0).real();
            else v = inv.get(name);
            d.emplace_back(name, v);
        }
        return d;
    };
}

void print_reports(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports) {
        std::printf("%-20s %-11s worst_ratio=%.6g fitted=%.6g residual=%.6g\n", r.check_id.c_str(),
                    verdict_name(r.verdict).c_str(), r.worst_ratio, r.fitted_constant, r.residual_max);
        for (const auto& n : r.notes) std::printf("    %s\n", n.c_str());
    }
}

int verdict_exit(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports) {
        if (r.verdict == Verdict::fail) return exit_failed_check;
    }
    return 0;
}

void write_check_output(const fs::path& dir, const CheckOutput& out, const std::string& checks_file,
                        const std::string& trajectory_file) {
    fs::create_directories(dir);
    write_checks_csv(dir / checks_file, out.reports);
    write_notes(dir / "notes.txt", out.reports);
    for (std::size_t i = 0; i < out.trajectories.size(); ++i) {
        const fs::path sub = out.trajectories.size() == 1 ? dir : dir / ("trajectory_" + std::to_string(i));
        write_trajectory_csv(sub / trajectory_file, out.trajectories[i]);
        write_norm_curves(sub, out.trajectories[i]);
    }
}

int run_solve(const RunConfig& cfg, const fs::path& out_dir) {
    const Field u0 = initial_field(cfg);
    const Trajectory traj = evolve(u0, cfg.equation(), cfg.stepper(), cfg.T, cfg.snapshots, solve_hook(cfg));
    fs::create_directories(out_dir);
    write_trajectory_csv(out_dir / cfg.trajectory_file, traj);
    write_norm_curves(out_dir, traj);
    for (const auto& w : traj.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
    std::printf("solve %s: %zu snapshot(s) written to %s\n", cfg.equation().name().c_str(), traj.size(),
                (out_dir / cfg.trajectory_file).string().c_str());
    if (traj.failed) {
        std::fprintf(stderr, "error: %s\n", traj.failure_message.c_str());
        return exit_failed_check;
    }
    return 0;
}

CheckRequest request_from(const RunConfig& cfg, const std::map<std::string, double>& params) {
    CheckRequest req;
    req.id = cfg.check_id;
    req.params = params;
    req.corpus.seed = cfg.seed;
    req.corpus.size = cfg.corpus_size;
    return req;
}

int run_single_check(const RunConfig& cfg, const fs::path& out_dir) {
    std::map<std::string, double> params;
    for (const auto& kv : cfg.check_params) params[kv.first] = kv.second.front();
    const CheckOutput out = run_check(request_from(cfg, params));
    write_check_output(out_dir, out, cfg.checks_file, cfg.trajectory_file);
    print_reports(out.reports);
    return verdict_exit(out.reports);
}

int run_sweep(const RunConfig& cfg, const fs::path& out_dir, unsigned jobs) {
    // Cartesian product of the listed parameter values, in key order.
    std::vector<std::map<std::string, double>> runs(1);
    for (const auto& kv : cfg.check_params) {
        std::vector<std::map<std::string, double>> next;
        for (const auto& base : runs) {
            for (double v : kv.second) {
                auto m = base;
                m[kv.first] = v;
                next.push_back(std::move(m));
            }
        }
        runs = std::move(next);
    }
    std::vector<CheckOutput> outputs(runs.size());
    std::vector<std::string> errors(runs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < runs.size(); i = next++) {
            try {
                outputs[i] = run_check(request_from(cfg, runs[i]));
                char name[32];
                std::snprintf(name, sizeof name, "run_%03zu", i);
                write_check_output(out_dir / name, outputs[i], cfg.checks_file, cfg.trajectory_file);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    const unsigned count = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(runs.size())));
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    std::vector<CheckReport> all;
    int status = 0;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (!errors[i].empty()) {
            std::fprintf(stderr, "error: run %zu: %s\n", i, errors[i].c_str());
            status = exit_error;
            continue;
        }
        for (const auto& r : outputs[i].reports) all.push_back(r);
    }
    if (!all.empty()) {
        fs::create_directories(out_dir);
        write_checks_csv(out_dir / cfg.checks_file, all);
        write_notes(out_dir / "notes.txt", all);
        print_reports(all);
    }
    if (status != 0) return status;
    return verdict_exit(all);
}

int dispatch(const RunConfig& cfg, const fs::path& out, unsigned jobs) {
    switch (cfg.command) {
    case Command::solve:
        return run_solve(cfg, out);
    case Command::check:
        return run_single_check(cfg, out);
    case Command::sweep:
        return run_sweep(cfg, out, jobs);
    }
    return exit_error;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral toolkit for NLS, gKdV and Benjamin-Ono: solver runs and estimate checks"};
    app.require_subcommand(0, 1);

    std::string print_path;
    app.add_option("--print-config", print_path, "Parse FILE and print its canonical form");

    std::string config_path, out_dir = "out";
    unsigned jobs = 1;

    auto* solve = app.add_subcommand("solve", "Evolve the configured equation and write the trajectory");
    solve->add_option("--config", config_path, "Configuration file")->required();
    solve->add_option("--out", out_dir, "Output directory");

    auto* run = app.add_subcommand("run", "Run a configuration file according to its `command` key");
    run->add_option("--config", config_path, "Configuration file")->required();
    run->add_option("--out", out_dir, "Output directory");
    run->add_option("--jobs", jobs, "Concurrent runs for sweeps");

    std::string check_name;
    std::vector<std::string> check_params;
    std::string seed_text;
    std::size_t corpus_size = default_corpus_size;
    auto* check = app.add_subcommand("check", "Run one named check");
    check->add_option("name", check_name, "Check id")->required();
    check->add_option("--param", check_params, "Parameter as key=value (repeatable)");
    check->add_option("--seed", seed_text, "Corpus seed (decimal or 0x hex)");
    check->add_option("--corpus-size", corpus_size, "Corpus size");
    check->add_option("--out", out_dir, "Output directory");

    auto* sweep = app.add_subcommand("sweep", "Run the Cartesian product of the configured check parameters");
    sweep->add_option("--config", config_path, "Configuration file")->required();
    sweep->add_option("--jobs", jobs, "Concurrent runs");
    sweep->add_option("--out", out_dir, "Output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!print_path.empty()) {
            std::cout << load_config(print_path).to_text();
            if (app.get_subcommands().empty()) return 0;
        }
        if (*solve || *run || *sweep) {
            RunConfig cfg = load_config(config_path);
            apply_environment(cfg);
            if (*solve && cfg.command != Command::solve) {
                throw std::invalid_argument("solve: config has command = " + command_name(cfg.command));
            }
            if (*sweep) {
                if (cfg.command == Command::solve) throw std::invalid_argument("sweep: config has command = solve");
                cfg.command = Command::sweep;
            }
            return dispatch(cfg, out_dir, jobs);
        }
        if (*check) {
            std::string text = "command = check\ncheck.id = " + check_name + "\ncheck.corpus_size = " + std::to_string(corpus_size) + "\n";
            if (!seed_text.empty()) text += "check.seed = " + seed_text + "\n";
            for (const auto& p : check_params) {
                const auto eq = p.find('=');
                if (eq == std::string::npos) throw std::invalid_argument("--param expects key=value, got '" + p + "'");
                text += "check." + p.substr(0, eq) + " = " + p.substr(eq + 1) + "\n";
            }
            RunConfig cfg;
            try {
                cfg = parse_config(text, "command line");
            } catch (const ConfigError& e) {
                // Positions refer to the synthesized text, not to anything the user typed.
                throw std::invalid_argument("check: " + e.message());
            }
            if (seed_text.empty()) apply_environment(cfg);
            return dispatch(cfg, out_dir, 1);
        }
        std::cout << app.help();
        return 0;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_error;
    }
}
