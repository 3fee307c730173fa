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

#ifndef QSCW_CONFIG_FILE_H
#define QSCW_CONFIG_FILE_H

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "qscw/experiments.h"
#include "qscw/game.h"

namespace qscw {

/// Flat key = value text with optional [section] headers. '#' and ';' start
/// comments. Keys before any header belong to [game].
///
///     [game]
///     n = 4
///     window = 5
///     attacker = limited-memory-k4
///
///     [sweep]
///     axis = W
///     values = 1, 2, 3
///     protocols = temporal, stateless
class ConfigFile {
   public:
    static ConfigFile parse(std::string_view text, const std::string &source = "<config>");
    /// Throws ConfigError naming the path if the file cannot be read.
    static ConfigFile load(const std::filesystem::path &path);

    std::optional<std::string> get(const std::string &section, const std::string &key) const;
    const std::map<std::string, std::string> *section(const std::string &name) const;
    const std::string &source() const {
        return source_;
    }

   private:
    std::string source_;
    std::map<std::string, std::map<std::string, std::string>> sections_;
};

/// Applies every key of [game] to config. Keys are GameConfig field names;
/// unknown keys and bad values throw ConfigError naming the key.
void apply_game_section(const ConfigFile &file, GameConfig &config);

/// Applies [sweep] (axis, values, protocols, attackers) to spec.
void apply_sweep_section(const ConfigFile &file, SweepSpec &spec);

/// Field-level setter shared with the command line: `key` is a GameConfig
/// field name, `value` its text form.
void set_game_field(GameConfig &config, std::string_view key, std::string_view value);

}  // namespace qscw

#endif
