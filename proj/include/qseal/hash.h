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

#ifndef QSEAL_HASH_H
#define QSEAL_HASH_H

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string_view>

namespace qseal {

using Digest = std::array<std::uint8_t, 32>;

/// Incremental SHA-256 (OpenSSL EVP underneath).
class Sha256 {
   public:
    Sha256();
    ~Sha256();
    Sha256(const Sha256 &) = delete;
    Sha256 &operator=(const Sha256 &) = delete;

    Sha256 &update(std::span<const std::uint8_t> data);
    Sha256 &update(std::string_view text);
    Sha256 &update_u64_be(std::uint64_t value);
    Digest finish();

   private:
    struct Ctx;
    std::unique_ptr<Ctx> ctx_;
};

}  // namespace qseal

#endif
