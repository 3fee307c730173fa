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

#include "qscw/config_file.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "qscw/errors.h"

namespace qscw {

namespace {

std::string_view trim(std::string_view s) {
    const char *ws = " \t\r\n";
    size_t b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    size_t e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(std::string_view text) {
    std::vector<std::string> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) {
            comma = text.size();
        }
        auto item = trim(text.substr(start, comma - start));
        if (!item.empty()) {
            out.emplace_back(item);
        }
        start = comma + 1;
    }
    return out;
}

uint64_t to_u64(std::string_view key, std::string_view value) {
    uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw ConfigError(std::string(key) + ": expected an unsigned integer, got '" + std::string(value) + "'");
    }
    return v;
}

double to_double(std::string_view key, std::string_view value) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw ConfigError(std::string(key) + ": expected a number, got '" + std::string(value) + "'");
    }
    return v;
}

}  // namespace

ConfigFile ConfigFile::parse(std::string_view text, const std::string &source) {
    ConfigFile file;
    file.source_ = source;
    std::string current = "game";
    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            nl = text.size();
        }
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        line_no++;
        size_t comment = line.find_first_of("#;");
        if (comment != std::string_view::npos) {
            line = line.substr(0, comment);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']' || line.size() < 3) {
                throw ConfigError(source + ":" + std::to_string(line_no) + ": malformed section header");
            }
            current = std::string(trim(line.substr(1, line.size() - 2)));
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(source + ":" + std::to_string(line_no) + ": expected key = value");
        }
        std::string key(trim(line.substr(0, eq)));
        std::string value(trim(line.substr(eq + 1)));
        if (key.empty()) {
            throw ConfigError(source + ":" + std::to_string(line_no) + ": empty key");
        }
        file.sections_[current][key] = value;
    }
    return file;
}

ConfigFile ConfigFile::load(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot read config file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path.string());
}

std::optional<std::string> ConfigFile::get(const std::string &section, const std::string &key) const {
    auto s = sections_.find(section);
    if (s == sections_.end()) {
        return std::nullopt;
    }
    auto k = s->second.find(key);
    if (k == s->second.end()) {
        return std::nullopt;
    }
    return k->second;
}

const std::map<std::string, std::string> *ConfigFile::section(const std::string &name) const {
    auto s = sections_.find(name);
    return s == sections_.end() ? nullptr : &s->second;
}

void set_game_field(GameConfig &config, std::string_view key, std::string_view value) {
    if (key == "n") {
        config.n = to_u64(key, value);
    } else if (key == "window" || key == "W") {
        config.window = to_u64(key, value);
    } else if (key == "t_fork") {
        config.t_fork = to_u64(key, value);
    } else if (key == "shots") {
        config.shots = to_u64(key, value);
    } else if (key == "k_challenge_bits") {
        config.k_challenge_bits = to_u64(key, value);
    } else if (key == "tau_x") {
        config.tau_x = to_double(key, value);
    } else if (key == "tau_z") {
        config.tau_z = to_double(key, value);
    } else if (key == "basis_policy") {
        config.basis_policy = BasisPolicy::parse(value);
    } else if (key == "noise_p") {
        config.noise_p = to_double(key, value);
    } else if (key == "attacker") {
        config.attacker = parse_attacker(value);
    } else if (key == "trials") {
        config.trials = to_u64(key, value);
    } else if (key == "master_seed") {
        config.master_seed = to_u64(key, value);
    } else if (key == "challenge_mode") {
        config.challenge_mode = parse_challenge_mode(value);
    } else if (key == "protocol") {
        config.protocol = parse_protocol(value);
    } else if (key == "secret_phase") {
        if (value == "random") {
            config.secret_phase.reset();
        } else {
            uint64_t b = to_u64(key, value);
            if (b > 1) {
                throw ConfigError("secret_phase: expected 0, 1 or random");
            }
            config.secret_phase = static_cast<uint8_t>(b);
        }
    } else {
        throw ConfigError("unknown configuration key '" + std::string(key) + "'");
    }
}

void apply_game_section(const ConfigFile &file, GameConfig &config) {
    const auto *game = file.section("game");
    if (game == nullptr) {
        return;
    }
    for (const auto &[key, value] : *game) {
        try {
            set_game_field(config, key, value);
        } catch (const ConfigError &e) {
            throw ConfigError(file.source() + ": [game] " + e.what());
        }
    }
}

void apply_sweep_section(const ConfigFile &file, SweepSpec &spec) {
    const auto *sweep = file.section("sweep");
    if (sweep == nullptr) {
        return;
    }
    for (const auto &[key, value] : *sweep) {
        try {
            if (key == "axis") {
                spec.axis = parse_axis(value);
            } else if (key == "values") {
                spec.values.clear();
                for (const auto &v : split_list(value)) {
                    spec.values.push_back(to_double("values", v));
                }
            } else if (key == "protocols") {
                spec.protocols.clear();
                for (const auto &v : split_list(value)) {
                    spec.protocols.push_back(parse_protocol(v));
                }
            } else if (key == "attackers") {
                spec.attackers.clear();
                for (const auto &v : split_list(value)) {
                    spec.attackers.push_back(parse_attacker(v));
                }
            } else {
                throw ConfigError("unknown configuration key '" + key + "'");
            }
        } catch (const ConfigError &e) {
            throw ConfigError(file.source() + ": [sweep] " + e.what());
        }
    }
}

}  // namespace qscw
