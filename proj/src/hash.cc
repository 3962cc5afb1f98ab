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

#include "qseal/hash.h"

#include <openssl/evp.h>

#include <stdexcept>

namespace qseal {

struct Sha256::Ctx {
    EVP_MD_CTX *md = nullptr;
    ~Ctx() { EVP_MD_CTX_free(md); }
};

Sha256::Sha256() : ctx_(std::make_unique<Ctx>()) {
    ctx_->md = EVP_MD_CTX_new();
    if (ctx_->md == nullptr || EVP_DigestInit_ex(ctx_->md, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 initialization failed");
    }
}

Sha256::~Sha256() = default;

Sha256 &Sha256::update(std::span<const std::uint8_t> data) {
    if (!data.empty() && EVP_DigestUpdate(ctx_->md, data.data(), data.size()) != 1) {
        throw std::runtime_error("SHA-256 update failed");
    }
    return *this;
}

Sha256 &Sha256::update(std::string_view text) {
    return update(std::span(reinterpret_cast<const std::uint8_t *>(text.data()), text.size()));
}

Sha256 &Sha256::update_u64_be(std::uint64_t value) {
    std::array<std::uint8_t, 8> buf;
    for (int i = 0; i < 8; i++) {
        buf[i] = static_cast<std::uint8_t>(value >> (56 - 8 * i));
    }
    return update(buf);
}

Digest Sha256::finish() {
    Digest out;
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(ctx_->md, out.data(), &len) != 1 || len != out.size()) {
        throw std::runtime_error("SHA-256 finalization failed");
    }
    return out;
}

}  // namespace qseal
