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

#include <gtest/gtest.h>

#include "qscw/errors.h"

using namespace qscw;

TEST(ConfigFile, ParsesSectionsAndComments) {
    auto file = ConfigFile::parse(
        "# leading comment\n"
        "n = 6\n"
        "[game]\n"
        "window = 9   ; trailing\n"
        "attacker = limited-memory-k4\n"
        "\n"
        "[sweep]\n"
        "axis = noise_p\n"
        "values = 0, 0.1, 0.2\n");
    EXPECT_EQ(file.get("game", "n"), "6");
    EXPECT_EQ(file.get("game", "window"), "9");
    EXPECT_EQ(file.get("sweep", "values"), "0, 0.1, 0.2");
    EXPECT_FALSE(file.get("game", "shots").has_value());
    EXPECT_EQ(file.section("nothing"), nullptr);

    GameConfig cfg;
    apply_game_section(file, cfg);
    EXPECT_EQ(cfg.n, 6u);
    EXPECT_EQ(cfg.window, 9u);
    EXPECT_EQ(attacker_label(cfg.attacker), "limited-memory-k4");

    SweepSpec spec;
    apply_sweep_section(file, spec);
    EXPECT_EQ(spec.axis, SweepAxis::NoiseP);
    EXPECT_EQ(spec.values, (std::vector<double>{0, 0.1, 0.2}));
}

TEST(ConfigFile, MalformedLines) {
    EXPECT_THROW(ConfigFile::parse("n 4\n"), ConfigError);
    EXPECT_THROW(ConfigFile::parse("[game\nn = 4\n"), ConfigError);
    EXPECT_THROW(ConfigFile::load("/nonexistent/qscw.conf"), ConfigError);
}

TEST(ConfigFile, EveryFieldIsSettable) {
    GameConfig c;
    set_game_field(c, "n", "3");
    set_game_field(c, "window", "7");
    set_game_field(c, "W", "8");
    set_game_field(c, "t_fork", "0");
    set_game_field(c, "shots", "64");
    set_game_field(c, "k_challenge_bits", "16");
    set_game_field(c, "tau_x", "0.7");
    set_game_field(c, "tau_z", "0.6");
    set_game_field(c, "basis_policy", "fixed-x");
    set_game_field(c, "noise_p", "0.05");
    set_game_field(c, "attacker", "ideal-coherent");
    set_game_field(c, "trials", "123");
    set_game_field(c, "master_seed", "99");
    set_game_field(c, "challenge_mode", "independent");
    set_game_field(c, "protocol", "stateless");
    set_game_field(c, "secret_phase", "1");
    EXPECT_EQ(describe(c),
              "n=3;window=8;t_fork=0;shots=64;k_challenge_bits=16;tau_x=0.7;tau_z=0.6;basis_policy=fixed-x;"
              "noise_p=0.05;attacker=ideal-coherent;trials=123;master_seed=99;challenge_mode=independent;"
              "protocol=stateless;secret_phase=1");
    set_game_field(c, "secret_phase", "random");
    EXPECT_FALSE(c.secret_phase.has_value());
}

TEST(ConfigFile, BadKeysAndValuesNameTheKey) {
    GameConfig c;
    auto message_of = [&](std::string_view key, std::string_view value) {
        try {
            set_game_field(c, key, value);
        } catch (const ConfigError &e) {
            return std::string(e.what());
        }
        return std::string();
    };
    EXPECT_NE(message_of("colour", "blue").find("colour"), std::string::npos);
    EXPECT_NE(message_of("shots", "many").find("shots"), std::string::npos);
    EXPECT_NE(message_of("tau_x", "0.5x").find("tau_x"), std::string::npos);
    EXPECT_NE(message_of("n", "-3").find("n"), std::string::npos);
}
