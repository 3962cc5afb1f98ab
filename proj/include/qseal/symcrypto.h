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

#ifndef QSEAL_SYMCRYPTO_H
#define QSEAL_SYMCRYPTO_H

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "qseal/bits.h"

namespace qseal {

using KeyTag = std::array<std::uint8_t, 16>;

/// Hash-keystream ciphertext. `key_tag` lets a key holder find the ciphertext
/// meant for it. The body is unauthenticated: flipping a ciphertext bit flips
/// the same plaintext bit.
struct Ciphertext {
    KeyTag key_tag{};
    std::vector<std::uint8_t> body;

    bool operator==(const Ciphertext &) const = default;
};

/// First 16 bytes of SHA-256("tag/" || key).
KeyTag key_tag(const BasisString &key);

/// Block i of the keystream is SHA-256("enc/" || key || be64(i)).
std::vector<std::uint8_t> keystream(const BasisString &key, std::size_t length);

Ciphertext enc(const BasisString &key, std::span<const std::uint8_t> msg);

/// Throws KeyMismatch when the tag does not belong to `key`.
std::vector<std::uint8_t> dec(const BasisString &key, const Ciphertext &ct);

/// Decrypts the single ciphertext tagged for `key`. Throws NotFound when no
/// tag matches and Ambiguity when several do.
std::vector<std::uint8_t> find_and_dec(const BasisString &key, std::span<const Ciphertext> cts);

}  // namespace qseal

#endif
