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

#ifndef QSCW_EXPERIMENTS_H
#define QSCW_EXPERIMENTS_H

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qscw/game.h"

namespace qscw {

enum class SweepAxis : uint8_t { Window, NoiseP, Qubits, Shots, TauX, AttackerK };

/// CSV spelling: W, noise_p, n, shots, tau_x, attacker_k.
std::string axis_label(SweepAxis axis);
SweepAxis parse_axis(std::string_view text);

/// Returns base with the axis field set to value. Integer axes reject
/// non-integral values; the result is validated.
GameConfig apply_axis(GameConfig base, SweepAxis axis, double value);

struct SweepSpec {
    GameConfig base;
    SweepAxis axis = SweepAxis::Window;
    std::vector<double> values;
    std::vector<ProtocolKind> protocols{ProtocolKind::Temporal};
    /// Ignored for the attacker_k axis, whose value selects LimitedMemory{k}.
    std::vector<AttackerModel> attackers{Memoryless{}};
    /// Appended to attacker_label() in the attacker column (e.g. "@bernoulli-0.5").
    std::string attacker_suffix;
};

/// Values must be non-empty and strictly increasing; lists non-empty.
void validate(const SweepSpec &spec);

/// Default grid for an axis: W 1..12, noise {0,.01,.02,.05,.1,.2},
/// n {2,3,4,6,8}, shots {1,4,16,32,128,512}, tau_x {.55,.65,.75,.85,.95},
/// attacker_k {1,2,4,8,16}.
std::vector<double> default_axis_values(SweepAxis axis);

struct SweepRow {
    std::string axis;
    double axis_value = 0;
    std::string protocol;
    std::string attacker;
    double apr = 0;
    double fsr = 0;
    double fsr_ci_low = 0;
    double fsr_ci_high = 0;
    uint64_t trials = 0;
    uint64_t seed = 0;
    /// Set when this cell's configuration was invalid; such rows carry no data
    /// and are not written to CSV.
    std::string error;
};

/// Seed of one sweep cell, derived from the base seed and the cell's identity
/// (not its position), so adding series does not perturb existing ones.
uint64_t cell_seed(uint64_t master_seed, SweepAxis axis, double value, ProtocolKind protocol,
                   std::string_view attacker);

/// One row per (value x protocol x attacker), in that nesting order.
std::vector<SweepRow> sweep(const SweepSpec &spec, unsigned jobs = 0);

inline constexpr std::string_view kCsvHeader =
    "axis,axis_value,protocol,attacker,apr,fsr,fsr_ci_low,fsr_ci_high,trials,seed";

void write_csv(const std::filesystem::path &path, std::span<const SweepRow> rows);
std::vector<SweepRow> read_csv(const std::filesystem::path &path);

struct DecayFit {
    double slope = 0;
    double intercept = 0;
    double r_squared = 0;
    size_t points = 0;
};

class FitUnavailable : public std::runtime_error {
   public:
    FitUnavailable(size_t usable_rows);
    size_t usable_rows() const {
        return usable_rows_;
    }

   private:
    size_t usable_rows_;
};

/// Ordinary least squares of log2(fsr) on the axis value. Rows with fsr = 0
/// are skipped; at least 3 must remain or FitUnavailable is thrown.
DecayFit fit_decay(std::span<const SweepRow> rows);

struct FigureSuiteOptions {
    uint64_t master_seed = 20260101;
    /// Overrides every experiment's trial count when set.
    std::optional<uint64_t> trials;
    unsigned jobs = 0;
    /// Progress messages (one line per experiment); may be empty.
    std::function<void(const std::string &)> log;
};

/// A decay fit reported in summary.json under `key`, over the rows of one
/// attacker label produced by sweeps[sweep_index].
struct FitTarget {
    std::string key;
    std::string attacker;
    size_t sweep_index = 0;
};

struct FigureExperiment {
    std::string name;
    std::string csv_file;
    /// Concatenated in order into the CSV.
    std::vector<SweepSpec> sweeps;
    std::vector<FitTarget> fits;
};

/// The eight figure experiments at their default configuration.
std::vector<FigureExperiment> figure_experiments(const FigureSuiteOptions &options);

struct FigureSuiteReport {
    std::vector<std::filesystem::path> csv_files;
    std::filesystem::path summary_file;
    std::vector<std::string> warnings;
};

/// Writes one CSV per figure plus summary.json into out_dir (created if
/// missing). I/O failures throw std::runtime_error naming the path.
FigureSuiteReport run_figure_suite(const std::filesystem::path &out_dir, const FigureSuiteOptions &options);

}  // namespace qscw

#endif
