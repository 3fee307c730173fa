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

#ifndef QSCW_RNG_H
#define QSCW_RNG_H

#include <cstdint>
#include <random>

namespace qscw {

/// Explicitly seeded pseudo-random stream.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The std distributions are implementation-defined, so every
/// conversion to bits, integers and doubles is done here by hand; the same
/// seed yields the same draws on every conforming platform.
class RngStream {
   public:
    explicit RngStream(uint64_t seed) : engine_(seed) {
    }

    uint64_t next_u64() {
        return engine_();
    }

    bool next_bit() {
        if (bits_left_ == 0) {
            bit_buffer_ = engine_();
            bits_left_ = 64;
        }
        bool b = bit_buffer_ & 1;
        bit_buffer_ >>= 1;
        bits_left_--;
        return b;
    }

    /// Uniform double in [0, 1) with 53 random mantissa bits.
    double next_unit() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// True with probability p. p <= 0 never fires, p >= 1 always fires.
    bool bernoulli(double p) {
        return next_unit() < p;
    }

    /// Uniform integer in [0, bound). Unbiased (rejection sampling).
    uint64_t below(uint64_t bound);

   private:
    std::mt19937_64 engine_;
    uint64_t bit_buffer_ = 0;
    int bits_left_ = 0;
};

/// Mixes a master seed with a task index and stream tag into an independent
/// child seed (splitmix64 finalizer chain). Used for per-trial and per-cell
/// seeding so results do not depend on scheduling.
uint64_t derive_seed(uint64_t master, uint64_t index, uint64_t stream = 0);

}  // namespace qscw

#endif
