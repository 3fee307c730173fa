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

#include "qscw/experiments.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qscw/errors.h"

namespace qscw {

namespace {

constexpr uint64_t kCellStream = 3;

uint64_t fnv1a(std::string_view text) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

uint64_t as_count(SweepAxis axis, double value) {
    if (!(value >= 0) || std::floor(value) != value || value > 1e12) {
        throw ConfigError(axis_label(axis) + " value " + format_number(value) + " is not a non-negative integer");
    }
    return static_cast<uint64_t>(value);
}

std::vector<std::string> split_csv_line(const std::string &line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) {
        cells.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        cells.emplace_back();
    }
    return cells;
}

double parse_double(const std::string &text, const std::filesystem::path &path, size_t line_no) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": bad number '" + text + "'");
    }
    return v;
}

uint64_t parse_u64(const std::string &text, const std::filesystem::path &path, size_t line_no) {
    uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": bad integer '" + text + "'");
    }
    return v;
}

}  // namespace

std::string axis_label(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::Window:
            return "W";
        case SweepAxis::NoiseP:
            return "noise_p";
        case SweepAxis::Qubits:
            return "n";
        case SweepAxis::Shots:
            return "shots";
        case SweepAxis::TauX:
            return "tau_x";
        case SweepAxis::AttackerK:
            return "attacker_k";
    }
    return "?";
}

SweepAxis parse_axis(std::string_view text) {
    for (auto axis : {SweepAxis::Window, SweepAxis::NoiseP, SweepAxis::Qubits, SweepAxis::Shots, SweepAxis::TauX,
                      SweepAxis::AttackerK}) {
        if (text == axis_label(axis)) {
            return axis;
        }
    }
    if (text == "window") {
        return SweepAxis::Window;
    }
    throw ConfigError("axis: unrecognized value '" + std::string(text) +
                      "' (expected W, noise_p, n, shots, tau_x or attacker_k)");
}

GameConfig apply_axis(GameConfig base, SweepAxis axis, double value) {
    switch (axis) {
        case SweepAxis::Window:
            base.window = as_count(axis, value);
            break;
        case SweepAxis::NoiseP:
            base.noise_p = value;
            break;
        case SweepAxis::Qubits:
            base.n = as_count(axis, value);
            break;
        case SweepAxis::Shots:
            base.shots = as_count(axis, value);
            break;
        case SweepAxis::TauX:
            base.tau_x = value;
            break;
        case SweepAxis::AttackerK:
            base.attacker = LimitedMemory{as_count(axis, value)};
            break;
    }
    validate(base);
    return base;
}

void validate(const SweepSpec &spec) {
    if (spec.values.empty()) {
        throw ConfigError("sweep values must not be empty");
    }
    for (size_t i = 1; i < spec.values.size(); i++) {
        if (!(spec.values[i] > spec.values[i - 1])) {
            throw ConfigError("sweep values must be strictly increasing");
        }
    }
    if (spec.protocols.empty()) {
        throw ConfigError("sweep protocols must not be empty");
    }
    if (spec.axis != SweepAxis::AttackerK && spec.attackers.empty()) {
        throw ConfigError("sweep attackers must not be empty");
    }
}

std::vector<double> default_axis_values(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::Window:
            return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
        case SweepAxis::NoiseP:
            return {0, 0.01, 0.02, 0.05, 0.1, 0.2};
        case SweepAxis::Qubits:
            return {2, 3, 4, 6, 8};
        case SweepAxis::Shots:
            return {1, 4, 16, 32, 128, 512};
        case SweepAxis::TauX:
            return {0.55, 0.65, 0.75, 0.85, 0.95};
        case SweepAxis::AttackerK:
            return {1, 2, 4, 8, 16};
    }
    return {};
}

uint64_t cell_seed(uint64_t master_seed, SweepAxis axis, double value, ProtocolKind protocol,
                   std::string_view attacker) {
    std::string key = axis_label(axis) + "|" + format_number(value) + "|" + protocol_label(protocol) + "|" +
                      std::string(attacker);
    return derive_seed(master_seed, fnv1a(key), kCellStream);
}

std::vector<SweepRow> sweep(const SweepSpec &spec, unsigned jobs) {
    validate(spec);
    std::vector<AttackerModel> attackers = spec.attackers;
    if (spec.axis == SweepAxis::AttackerK) {
        attackers = {LimitedMemory{1}};  // replaced per value by apply_axis
    }
    std::vector<SweepRow> rows;
    for (double value : spec.values) {
        for (ProtocolKind protocol : spec.protocols) {
            for (const AttackerModel &attacker : attackers) {
                SweepRow row;
                row.axis = axis_label(spec.axis);
                row.axis_value = value;
                row.protocol = protocol_label(protocol);
                try {
                    GameConfig cfg = spec.base;
                    cfg.protocol = protocol;
                    cfg.attacker = attacker;
                    cfg = apply_axis(cfg, spec.axis, value);
                    row.attacker = attacker_label(cfg.attacker) + spec.attacker_suffix;
                    cfg.master_seed = cell_seed(spec.base.master_seed, spec.axis, value, protocol, row.attacker);
                    GameResult r = estimate_fsr(cfg, jobs);
                    row.apr = r.apr;
                    row.fsr = r.fsr;
                    row.fsr_ci_low = r.fsr_ci.low;
                    row.fsr_ci_high = r.fsr_ci.high;
                    row.trials = r.trials_run;
                    row.seed = cfg.master_seed;
                } catch (const ConfigError &e) {
                    if (row.attacker.empty()) {
                        row.attacker = attacker_label(attacker) + spec.attacker_suffix;
                    }
                    row.error = e.what();
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

void write_csv(const std::filesystem::path &path, std::span<const SweepRow> rows) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    out << kCsvHeader << '\n';
    for (const SweepRow &r : rows) {
        if (!r.error.empty()) {
            continue;
        }
        out << r.axis << ',' << format_number(r.axis_value) << ',' << r.protocol << ',' << r.attacker << ','
            << format_number(r.apr) << ',' << format_number(r.fsr) << ',' << format_number(r.fsr_ci_low) << ','
            << format_number(r.fsr_ci_high) << ',' << r.trials << ',' << r.seed << '\n';
    }
    out.flush();
    if (!out) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

std::vector<SweepRow> read_csv(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error(path.string() + ": empty file");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != kCsvHeader) {
        throw std::runtime_error(path.string() + ": unexpected header '" + line + "'");
    }
    std::vector<SweepRow> rows;
    size_t line_no = 1;
    while (std::getline(in, line)) {
        line_no++;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        auto cells = split_csv_line(line);
        if (cells.size() != 10) {
            throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": expected 10 columns, got " +
                                     std::to_string(cells.size()));
        }
        SweepRow r;
        r.axis = cells[0];
        r.axis_value = parse_double(cells[1], path, line_no);
        r.protocol = cells[2];
        r.attacker = cells[3];
        r.apr = parse_double(cells[4], path, line_no);
        r.fsr = parse_double(cells[5], path, line_no);
        r.fsr_ci_low = parse_double(cells[6], path, line_no);
        r.fsr_ci_high = parse_double(cells[7], path, line_no);
        r.trials = parse_u64(cells[8], path, line_no);
        r.seed = parse_u64(cells[9], path, line_no);
        rows.push_back(std::move(r));
    }
    return rows;
}

FitUnavailable::FitUnavailable(size_t usable_rows)
    : std::runtime_error("decay fit needs at least 3 rows with fsr > 0, have " + std::to_string(usable_rows)),
      usable_rows_(usable_rows) {
}

DecayFit fit_decay(std::span<const SweepRow> rows) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (const SweepRow &r : rows) {
        if (r.error.empty() && r.fsr > 0) {
            xs.push_back(r.axis_value);
            ys.push_back(std::log2(r.fsr));
        }
    }
    if (xs.size() < 3) {
        throw FitUnavailable(xs.size());
    }
    const double m = static_cast<double>(xs.size());
    double mx = 0;
    double my = 0;
    for (size_t i = 0; i < xs.size(); i++) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= m;
    my /= m;
    double sxx = 0;
    double sxy = 0;
    double syy = 0;
    for (size_t i = 0; i < xs.size(); i++) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (sxx == 0) {
        throw FitUnavailable(0);
    }
    DecayFit fit;
    fit.points = xs.size();
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss_res = 0;
    for (size_t i = 0; i < xs.size(); i++) {
        double e = ys[i] - (fit.intercept + fit.slope * xs[i]);
        ss_res += e * e;
    }
    // A flat series fitted exactly (e.g. fsr = 1 everywhere) counts as a perfect fit.
    fit.r_squared = syy > 0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
    return fit;
}

std::vector<FigureExperiment> figure_experiments(const FigureSuiteOptions &options) {
    GameConfig base;
    base.master_seed = options.master_seed;
    base.n = 4;
    base.t_fork = 3;
    base.shots = 32;
    base.k_challenge_bits = 8;
    base.tau_x = 0.85;
    base.tau_z = 0.85;
    base.noise_p = 0.0;
    base.window = 5;
    base.trials = options.trials.value_or(5000);
    // The decay experiments need more trials to resolve FSR ~ 2^-12.
    const uint64_t window_trials = options.trials.value_or(20000);

    const std::vector<double> windows = default_axis_values(SweepAxis::Window);
    const std::vector<double> noise_levels = default_axis_values(SweepAxis::NoiseP);
    const std::vector<ProtocolKind> both{ProtocolKind::Temporal, ProtocolKind::Stateless};

    std::vector<FigureExperiment> out;

    {
        SweepSpec s{base, SweepAxis::AttackerK, default_axis_values(SweepAxis::AttackerK),
                    {ProtocolKind::Temporal}, {}, ""};
        s.base.window = 8;
        s.base.basis_policy = BasisPolicy::fixed_x();
        out.push_back({"attacker_k", "attacker_k.csv", {s}, {}});
    }
    {
        SweepSpec s{base, SweepAxis::Qubits, default_axis_values(SweepAxis::Qubits), both, {Memoryless{}}, ""};
        out.push_back({"n_qubits", "n_qubits.csv", {s}, {}});
    }
    {
        SweepSpec s{base, SweepAxis::Shots, default_axis_values(SweepAxis::Shots), both, {Memoryless{}}, ""};
        out.push_back({"shots", "shots.csv", {s}, {}});
    }
    {
        // Noise makes the threshold bite on honest runs; at p = 0 APR is 1 for every tau.
        SweepSpec s{base, SweepAxis::TauX, default_axis_values(SweepAxis::TauX), both, {Memoryless{}}, ""};
        s.base.noise_p = 0.05;
        out.push_back({"tau_x", "tau_x.csv", {s}, {}});
    }
    {
        SweepSpec s{base, SweepAxis::Window, windows, {ProtocolKind::Temporal}, {Memoryless{}}, ""};
        s.base.basis_policy = BasisPolicy::fixed_x();
        s.base.trials = window_trials;
        out.push_back({"window_fixed_x", "window_fixed_x.csv", {s}, {{"window_fixed_x", "memoryless", 0}}});
    }
    {
        SweepSpec fixed{base,
                        SweepAxis::Window,
                        windows,
                        {ProtocolKind::Temporal},
                        {Memoryless{}, Memoryless{Memoryless::Strategy::ProductState, 0}, LimitedMemory{2},
                         LimitedMemory{4}, IdealCoherent{}},
                        ""};
        fixed.base.basis_policy = BasisPolicy::fixed_x();
        fixed.base.trials = window_trials;
        SweepSpec mixed{base, SweepAxis::Window, windows, {ProtocolKind::Temporal}, {Memoryless{}}, "@bernoulli-0.5"};
        mixed.base.basis_policy = BasisPolicy::bernoulli(0.5);
        mixed.base.trials = window_trials;
        out.push_back({"window_models",
                       "window_models.csv",
                       {fixed, mixed},
                       {{"window_mixed_basis", "memoryless@bernoulli-0.5", 1},
                        {"window_models/limited-memory-k2", "limited-memory-k2", 0},
                        {"window_models/limited-memory-k4", "limited-memory-k4", 0}}});
    }
    {
        SweepSpec s{base, SweepAxis::NoiseP, noise_levels, both, {Memoryless{}}, ""};
        out.push_back({"noise", "noise.csv", {s}, {}});
    }
    {
        SweepSpec s{base,
                    SweepAxis::NoiseP,
                    noise_levels,
                    {ProtocolKind::Temporal},
                    {Memoryless{}, LimitedMemory{4}, IdealCoherent{}},
                    ""};
        out.push_back({"noise_models", "noise_models.csv", {s}, {}});
    }
    return out;
}

FigureSuiteReport run_figure_suite(const std::filesystem::path &out_dir, const FigureSuiteOptions &options) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec || !std::filesystem::is_directory(out_dir)) {
        throw std::runtime_error("cannot create output directory " + out_dir.string() + ": " + ec.message());
    }
    FigureSuiteReport report;
    nlohmann::json summary = nlohmann::json::object();
    for (const FigureExperiment &exp : figure_experiments(options)) {
        if (options.log) {
            options.log("running " + exp.name);
        }
        std::vector<SweepRow> rows;
        for (const SweepSpec &s : exp.sweeps) {
            auto part = sweep(s, options.jobs);
            for (auto &r : part) {
                if (!r.error.empty()) {
                    report.warnings.push_back(exp.name + ": " + r.error);
                }
            }
            rows.insert(rows.end(), part.begin(), part.end());
        }
        auto path = out_dir / exp.csv_file;
        write_csv(path, rows);
        report.csv_files.push_back(path);

        for (const FitTarget &target : exp.fits) {
            std::vector<SweepRow> series;
            for (const auto &r : rows) {
                if (r.attacker == target.attacker) {
                    series.push_back(r);
                }
            }
            const std::string &key = target.key;
            nlohmann::json entry;
            // Digest of the fitted series' configuration (its attacker, not the base default).
            const SweepSpec &source = exp.sweeps.at(target.sweep_index);
            GameConfig fitted = source.base;
            for (const AttackerModel &a : source.attackers) {
                if (attacker_label(a) + source.attacker_suffix == target.attacker) {
                    fitted.attacker = a;
                }
            }
            entry["config_digest"] = config_digest(fitted);
            try {
                DecayFit fit = fit_decay(series);
                entry["slope"] = fit.slope;
                entry["intercept"] = fit.intercept;
                entry["r_squared"] = fit.r_squared;
            } catch (const FitUnavailable &e) {
                entry["slope"] = nullptr;
                entry["intercept"] = nullptr;
                entry["r_squared"] = nullptr;
                report.warnings.push_back(key + ": " + e.what());
            }
            summary[key] = entry;
        }
    }
    report.summary_file = out_dir / "summary.json";
    std::ofstream out(report.summary_file, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open " + report.summary_file.string() + " for writing");
    }
    out << summary.dump(2) << '\n';
    if (!out) {
        throw std::runtime_error("write failed for " + report.summary_file.string());
    }
    return report;
}

}  // namespace qscw
