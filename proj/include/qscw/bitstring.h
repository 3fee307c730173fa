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

#ifndef QSCW_BITSTRING_H
#define QSCW_BITSTRING_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace qscw {

/// Fixed-length string of at most 64 bits. Bit i is (value >> i) & 1, so for a
/// measurement outcome bit i is the value of qubit i.
///
/// The text form is written most-significant bit first (ket order), so "0001"
/// has bit 0 set.
class Bitstring {
   public:
    static constexpr size_t kMaxLength = 64;

    Bitstring() = default;
    Bitstring(uint64_t value, size_t length);

    static Bitstring parse(std::string_view text);

    size_t size() const {
        return length_;
    }
    uint64_t value() const {
        return value_;
    }
    bool operator[](size_t i) const {
        return (value_ >> i) & 1;
    }
    size_t popcount() const {
        return static_cast<size_t>(std::popcount(value_));
    }
    bool all_zeros() const {
        return value_ == 0;
    }
    bool all_ones() const {
        return length_ > 0 && value_ == mask(length_);
    }

    std::string str() const;

    bool operator==(const Bitstring &) const = default;

    static constexpr uint64_t mask(size_t length) {
        return length >= 64 ? ~uint64_t{0} : ((uint64_t{1} << length) - 1);
    }

   private:
    uint64_t value_ = 0;
    size_t length_ = 0;
};

/// XOR of all bits.
inline uint8_t parity(const Bitstring &bits) {
    return static_cast<uint8_t>(bits.popcount() & 1);
}

}  // namespace qscw

#endif
