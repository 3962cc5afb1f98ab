// Copyright 2026 The qseal Authors
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

#ifndef QSEAL_ERRORS_H
#define QSEAL_ERRORS_H

#include <stdexcept>
#include <string>

namespace qseal {

/// Precondition violated by a caller-supplied value.
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A requested computation exceeds a configured size cap.
struct CapacityError : std::length_error {
    using std::length_error::length_error;
};

/// Ciphertext tag does not match the supplied key.
struct KeyMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// No ciphertext in a list matches the supplied key.
struct NotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// More than one ciphertext matches the supplied key.
struct Ambiguity : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An operation is not defined for the seal mode it was given.
struct UnsupportedMode : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An honest package failed to open; indicates a corrupted package.
struct ProtocolCorruption : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qseal

#endif
