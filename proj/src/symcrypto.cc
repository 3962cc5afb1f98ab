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

#include "qseal/symcrypto.h"

#include <algorithm>

#include "qseal/errors.h"
#include "qseal/hash.h"

namespace qseal {

KeyTag key_tag(const BasisString &key) {
    Digest d = Sha256().update("tag/").update(key.to_bytes()).finish();
    KeyTag tag;
    std::copy_n(d.begin(), tag.size(), tag.begin());
    return tag;
}

std::vector<std::uint8_t> keystream(const BasisString &key, std::size_t length) {
    const auto key_bytes = key.to_bytes();
    std::vector<std::uint8_t> out;
    out.reserve(length);
    for (std::uint64_t counter = 0; out.size() < length; counter++) {
        Digest block = Sha256().update("enc/").update(key_bytes).update_u64_be(counter).finish();
        std::size_t take = std::min(block.size(), length - out.size());
        out.insert(out.end(), block.begin(), block.begin() + static_cast<std::ptrdiff_t>(take));
    }
    return out;
}

Ciphertext enc(const BasisString &key, std::span<const std::uint8_t> msg) {
    if (key.empty()) {
        throw InvalidInput("encryption key must be nonempty");
    }
    Ciphertext ct;
    ct.key_tag = key_tag(key);
    ct.body = keystream(key, msg.size());
    for (std::size_t i = 0; i < msg.size(); i++) {
        ct.body[i] ^= msg[i];
    }
    return ct;
}

std::vector<std::uint8_t> dec(const BasisString &key, const Ciphertext &ct) {
    if (key.empty()) {
        throw InvalidInput("decryption key must be nonempty");
    }
    if (key_tag(key) != ct.key_tag) {
        throw KeyMismatch("ciphertext was not made with this key");
    }
    std::vector<std::uint8_t> out = keystream(key, ct.body.size());
    for (std::size_t i = 0; i < out.size(); i++) {
        out[i] ^= ct.body[i];
    }
    return out;
}

std::vector<std::uint8_t> find_and_dec(const BasisString &key, std::span<const Ciphertext> cts) {
    if (cts.empty()) {
        throw InvalidInput("ciphertext list is empty");
    }
    const KeyTag tag = key_tag(key);
    const Ciphertext *match = nullptr;
    for (const auto &ct : cts) {
        if (ct.key_tag == tag) {
            if (match != nullptr) {
                throw Ambiguity("several ciphertexts carry this key's tag");
            }
            match = &ct;
        }
    }
    if (match == nullptr) {
        throw NotFound("no ciphertext carries this key's tag");
    }
    return dec(key, *match);
}

}  // namespace qseal
