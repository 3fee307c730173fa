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

#ifndef QSCW_ERRORS_H
#define QSCW_ERRORS_H

#include <stdexcept>
#include <string>

namespace qscw {

/// A parameter is outside its allowed range. The message names the field.
class ConfigError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Messages arrived out of order or do not match what the verifier asked for.
class ProtocolError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// Evidence that cannot be audited at all (e.g. no shots).
class MalformedEvidence : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// An internal numerical invariant was violated (e.g. a state lost its normalization).
class InvariantError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace qscw

#endif
