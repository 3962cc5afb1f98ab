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

#ifndef QSEAL_DOCUMENTS_H
#define QSEAL_DOCUMENTS_H

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "qseal/experiment.h"
#include "qseal/seal.h"

namespace qseal::doc {

using json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

/// A document is unreadable, truncated, has the wrong kind, or fails a
/// structural check.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Amplitudes of the form num/sqrt(rad) are stored as {"num", "rad"}; anything
// else falls back to {"hex": "<C99 hex float>"}. Both decode bit-exactly.
json encode_amplitude(double amplitude);
double decode_amplitude(const json &j);

json encode_state(const SparseState &state);
SparseState decode_state(const json &j);

json encode_package(const SealPackage &package);
SealPackage decode_package(const json &j);

json encode_secret(const AliceSecret &secret);
AliceSecret decode_secret(const json &j);

json encode_return(const ReturnMessage &message);
ReturnMessage decode_return(const json &j);

json encode_report(const EstimateReport &report);

/// Canonical text: sorted keys, no insignificant whitespace, trailing newline.
std::string write_document(std::string_view kind, const json &payload);

/// Parses and checks the envelope; returns the payload.
json read_document(std::string_view text, std::string_view expected_kind);

}  // namespace qseal::doc

#endif
