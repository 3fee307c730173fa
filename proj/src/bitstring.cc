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

#include "qscw/bitstring.h"

#include "qscw/errors.h"

namespace qscw {

Bitstring::Bitstring(uint64_t value, size_t length) : value_(value), length_(length) {
    if (length > kMaxLength) {
        throw ConfigError("bitstring length " + std::to_string(length) + " exceeds the limit of 64");
    }
    if ((value & ~mask(length)) != 0) {
        throw ConfigError("bitstring value has bits set beyond its length");
    }
}

Bitstring Bitstring::parse(std::string_view text) {
    if (text.size() > kMaxLength) {
        throw ConfigError("bitstring text longer than 64 characters");
    }
    uint64_t v = 0;
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw ConfigError("bitstring text may only contain '0' and '1'");
        }
        v = (v << 1) | static_cast<uint64_t>(c == '1');
    }
    return Bitstring(v, text.size());
}

std::string Bitstring::str() const {
    std::string out(length_, '0');
    for (size_t i = 0; i < length_; i++) {
        if ((*this)[i]) {
            out[length_ - 1 - i] = '1';
        }
    }
    return out;
}

}  // namespace qscw
