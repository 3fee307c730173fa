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

#include "qscw/rng.h"

#include "qscw/errors.h"

namespace qscw {

uint64_t RngStream::below(uint64_t bound) {
    if (bound == 0) {
        throw ConfigError("RngStream::below: bound must be positive");
    }
    // Largest multiple of bound representable; reject draws above it.
    uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
    uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

namespace {
uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}
}  // namespace

uint64_t derive_seed(uint64_t master, uint64_t index, uint64_t stream) {
    return splitmix64(splitmix64(splitmix64(master) ^ index) ^ (stream * 0xD1B54A32D192ED03ULL));
}

}  // namespace qscw
