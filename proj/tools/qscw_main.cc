// Copyright 2026 The QSCW Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qscw: command-line driver for the continuity-witness simulator.
//
//   qscw run      --attacker memoryless --window 5 --basis fixed-x --trials 20000
//   qscw sweep    --axis tau_x --values 0.55,0.75,0.95 --protocols temporal,stateless
//   qscw figures  --out results/
//   qscw fit      results/window_fixed_x.csv
//
// Exit codes: 0 success, 1 runtime or statistical failure, 2 configuration error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qscw/config_file.h"
#include "qscw/errors.h"
#include "qscw/experiments.h"
#include "qscw/game.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;

constexpr const char *kOutputDirEnv = "QSCW_OUTPUT_DIR";

struct CliConfig {
    std::string config_path;
    std::optional<uint64_t> seed;
    unsigned jobs = 0;
    int verbosity = 0;
    std::string out_dir;
};

/// GameConfig fields settable from flags: flag text -> field name.
struct GameFlags {
    std::map<std::string, std::optional<std::string>> values;
    std::optional<uint64_t> attacker_k;

    void add_to(CLI::App *app) {
        static const std::vector<std::pair<std::string, std::string>> kFlags = {
            {"n", "Qubits in the witness"},
            {"window", "Audit window W (rounds after the fork)"},
            {"t_fork", "Honest rounds before the fork"},
            {"shots", "Measurement shots per round"},
            {"k_challenge_bits", "Challenge width in bits"},
            {"tau_x", "X-audit acceptance threshold"},
            {"tau_z", "Z-audit acceptance threshold"},
            {"basis_policy", "fixed-x | fixed-z | bernoulli-<p>"},
            {"noise_p", "Per-qubit depolarizing probability"},
            {"attacker", "memoryless | memoryless-fixed-<b> | memoryless-product | limited-memory | ideal-coherent"},
            {"trials", "Monte Carlo trials"},
            {"challenge_mode", "shared | independent"},
            {"protocol", "temporal | stateless"},
            {"secret_phase", "0 | 1 | random"},
        };
        for (const auto &[field, help] : kFlags) {
            std::string flag = "--" + field;
            for (auto &c : flag) {
                if (c == '_') {
                    c = '-';
                }
            }
            if (field == "basis_policy") {
                flag += ",--basis";
            }
            app->add_option(flag, values[field], help);
        }
        app->add_option("--attacker-k", attacker_k, "Coherence horizon k for --attacker limited-memory");
    }

    void apply(qscw::GameConfig &config) const {
        for (const auto &[field, value] : values) {
            if (!value) {
                continue;
            }
            std::string v = *value;
            if (field == "attacker" && v == "limited-memory") {
                v = "limited-memory-k" + std::to_string(attacker_k.value_or(1));
            }
            qscw::set_game_field(config, field, v);
        }
        if (attacker_k && !values.at("attacker")) {
            qscw::set_game_field(config, "attacker", "limited-memory-k" + std::to_string(*attacker_k));
        }
    }
};

std::string default_out_dir() {
    const char *env = std::getenv(kOutputDirEnv);
    return env != nullptr && *env != '\0' ? std::string(env) : std::string("results");
}

qscw::GameConfig build_game_config(const CliConfig &cli, const GameFlags &flags, const qscw::ConfigFile *file) {
    qscw::GameConfig config;
    if (file != nullptr) {
        qscw::apply_game_section(*file, config);
    }
    flags.apply(config);
    if (cli.seed) {
        config.master_seed = *cli.seed;
    }
    qscw::validate(config);
    return config;
}

void print_result(const qscw::GameConfig &config, const qscw::GameResult &r) {
    std::cout << "master_seed: " << config.master_seed << "\n";
    std::cout << "config: " << qscw::describe(config) << "\n";
    std::cout << "APR: " << qscw::format_number(r.apr) << "\n";
    std::cout << "FSR: " << qscw::format_number(r.fsr) << " (" << r.wins << " / " << r.samples << ")\n";
    std::cout << "FSR 95% CI: [" << qscw::format_number(r.fsr_ci.low) << ", " << qscw::format_number(r.fsr_ci.high)
              << "]\n";
    std::cout << "trials: " << r.trials_run << "\n";
}

void write_result_json(const std::string &path, const qscw::GameConfig &config, const qscw::GameResult &r) {
    nlohmann::json j;
    j["apr"] = r.apr;
    j["fsr"] = r.fsr;
    j["fsr_ci"] = {r.fsr_ci.low, r.fsr_ci.high};
    j["trials"] = r.trials_run;
    j["wins"] = r.wins;
    j["samples"] = r.samples;
    j["master_seed"] = config.master_seed;
    j["config"] = qscw::describe(config);
    j["config_digest"] = qscw::config_digest(config);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    out << j.dump(2) << "\n";
}

std::vector<std::string> split_commas(const std::string &text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum state continuity witness simulator"};
    // Global options may also follow the subcommand.
    app.fallthrough();
    app.require_subcommand(1, 1);

    CliConfig cli;
    cli.out_dir = default_out_dir();
    app.add_option("-c,--config", cli.config_path, "Key-value configuration file");
    app.add_option("--seed", cli.seed, "Master seed override");
    app.add_option("-j,--jobs", cli.jobs, "Worker threads (0 = all hardware threads)");
    app.add_flag("-v,--verbose", cli.verbosity, "More progress output");

    GameFlags run_flags;
    std::string json_path;
    auto *run_cmd = app.add_subcommand("run", "Estimate APR and FSR for one configuration");
    run_flags.add_to(run_cmd);
    run_cmd->add_option("--json", json_path, "Also write the result as JSON");

    GameFlags sweep_flags;
    std::string axis_text;
    std::string values_text;
    std::string protocols_text;
    std::string attackers_text;
    std::string sweep_csv;
    auto *sweep_cmd = app.add_subcommand("sweep", "Sweep one parameter and write a CSV");
    sweep_flags.add_to(sweep_cmd);
    sweep_cmd->add_option("--axis", axis_text, "W | noise_p | n | shots | tau_x | attacker_k");
    sweep_cmd->add_option("--values", values_text, "Comma-separated, strictly increasing");
    sweep_cmd->add_option("--protocols", protocols_text, "Comma-separated: temporal,stateless");
    sweep_cmd->add_option("--attackers", attackers_text, "Comma-separated attacker labels");
    sweep_cmd->add_option("--csv", sweep_csv, "Output CSV path (default <out>/sweep_<axis>.csv)");
    sweep_cmd->add_option("-o,--out", cli.out_dir, "Output directory (env " + std::string(kOutputDirEnv) + ")");

    std::optional<uint64_t> figure_trials;
    auto *figures_cmd = app.add_subcommand("figures", "Run every figure experiment");
    figures_cmd->add_option("-o,--out", cli.out_dir, "Output directory (env " + std::string(kOutputDirEnv) + ")");
    figures_cmd->add_option("--trials", figure_trials, "Override the trial count of every experiment");

    std::string fit_csv;
    auto *fit_cmd = app.add_subcommand("fit", "Fit log2(FSR) against W for each series in a CSV");
    fit_cmd->add_option("csv", fit_csv, "Sweep CSV with axis W")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        std::optional<qscw::ConfigFile> file;
        if (!cli.config_path.empty()) {
            file = qscw::ConfigFile::load(cli.config_path);
        }
        const qscw::ConfigFile *file_ptr = file ? &*file : nullptr;

        if (*run_cmd) {
            qscw::GameConfig config = build_game_config(cli, run_flags, file_ptr);
            qscw::GameResult r = qscw::estimate_fsr(config, cli.jobs);
            print_result(config, r);
            if (!json_path.empty()) {
                write_result_json(json_path, config, r);
            }
            return kExitOk;
        }

        if (*sweep_cmd) {
            qscw::SweepSpec spec;
            spec.base = build_game_config(cli, sweep_flags, file_ptr);
            if (file_ptr != nullptr) {
                qscw::apply_sweep_section(*file_ptr, spec);
            }
            if (!axis_text.empty()) {
                spec.axis = qscw::parse_axis(axis_text);
            }
            if (!values_text.empty()) {
                spec.values.clear();
                for (const auto &v : split_commas(values_text)) {
                    try {
                        spec.values.push_back(std::stod(v));
                    } catch (const std::exception &) {
                        throw qscw::ConfigError("values: bad number '" + v + "'");
                    }
                }
            }
            if (spec.values.empty()) {
                spec.values = qscw::default_axis_values(spec.axis);
            }
            if (!protocols_text.empty()) {
                spec.protocols.clear();
                for (const auto &p : split_commas(protocols_text)) {
                    spec.protocols.push_back(qscw::parse_protocol(p));
                }
            }
            if (!attackers_text.empty()) {
                spec.attackers.clear();
                for (const auto &a : split_commas(attackers_text)) {
                    spec.attackers.push_back(qscw::parse_attacker(a));
                }
            } else if (sweep_flags.values.at("attacker") || sweep_flags.attacker_k ||
                       (file_ptr != nullptr && file_ptr->get("game", "attacker"))) {
                spec.attackers = {spec.base.attacker};
            }
            qscw::validate(spec);
            std::cout << "master_seed: " << spec.base.master_seed << "\n";
            auto rows = qscw::sweep(spec, cli.jobs);
            std::filesystem::path csv = sweep_csv.empty()
                                            ? std::filesystem::path(cli.out_dir) /
                                                  ("sweep_" + qscw::axis_label(spec.axis) + ".csv")
                                            : std::filesystem::path(sweep_csv);
            if (csv.has_parent_path()) {
                std::filesystem::create_directories(csv.parent_path());
            }
            qscw::write_csv(csv, rows);
            std::cout << qscw::kCsvHeader << "\n";
            bool any_error = false;
            for (const auto &r : rows) {
                if (!r.error.empty()) {
                    std::cerr << "warning: " << r.axis << "=" << qscw::format_number(r.axis_value) << " "
                              << r.protocol << " " << r.attacker << ": " << r.error << "\n";
                    any_error = true;
                    continue;
                }
                std::cout << r.axis << "," << qscw::format_number(r.axis_value) << "," << r.protocol << ","
                          << r.attacker << "," << qscw::format_number(r.apr) << "," << qscw::format_number(r.fsr)
                          << "," << qscw::format_number(r.fsr_ci_low) << "," << qscw::format_number(r.fsr_ci_high)
                          << "," << r.trials << "," << r.seed << "\n";
            }
            std::cout << "wrote " << csv.string() << "\n";
            return any_error ? kExitRuntime : kExitOk;
        }

        if (*figures_cmd) {
            qscw::FigureSuiteOptions options;
            if (cli.seed) {
                options.master_seed = *cli.seed;
            } else if (file_ptr != nullptr) {
                qscw::GameConfig from_file;
                qscw::apply_game_section(*file_ptr, from_file);
                options.master_seed = from_file.master_seed;
            }
            options.trials = figure_trials;
            options.jobs = cli.jobs;
            if (cli.verbosity > 0) {
                options.log = [](const std::string &msg) { std::cerr << msg << "\n"; };
            }
            std::cout << "master_seed: " << options.master_seed << "\n";
            auto report = qscw::run_figure_suite(cli.out_dir, options);
            for (const auto &p : report.csv_files) {
                std::cout << "wrote " << p.string() << "\n";
            }
            std::cout << "wrote " << report.summary_file.string() << "\n";
            for (const auto &w : report.warnings) {
                std::cerr << "warning: " << w << "\n";
            }
            return kExitOk;
        }

        if (*fit_cmd) {
            auto rows = qscw::read_csv(fit_csv);
            std::map<std::pair<std::string, std::string>, std::vector<qscw::SweepRow>> series;
            std::vector<std::pair<std::string, std::string>> order;
            for (const auto &r : rows) {
                if (r.axis != "W") {
                    throw std::runtime_error(fit_csv + ": fit needs rows with axis W, found '" + r.axis + "'");
                }
                auto key = std::make_pair(r.protocol, r.attacker);
                if (!series.contains(key)) {
                    order.push_back(key);
                }
                series[key].push_back(r);
            }
            if (series.empty()) {
                throw std::runtime_error(fit_csv + ": no data rows");
            }
            int status = kExitOk;
            for (const auto &key : order) {
                std::cout << key.first << " " << key.second << ": ";
                try {
                    qscw::DecayFit fit = qscw::fit_decay(series[key]);
                    std::cout << "slope=" << qscw::format_number(fit.slope)
                              << " intercept=" << qscw::format_number(fit.intercept)
                              << " r_squared=" << qscw::format_number(fit.r_squared) << " points=" << fit.points
                              << "\n";
                } catch (const qscw::FitUnavailable &e) {
                    std::cout << "fit unavailable (" << e.what() << ")\n";
                    status = kExitRuntime;
                }
            }
            return status;
        }
    } catch (const qscw::ConfigError &e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitRuntime;
}
