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

#ifndef QSEAL_BITS_H
#define QSEAL_BITS_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qseal {

class Rng;

/// Fixed-length bit string. Bit 0 is the leftmost (most significant) bit, so
/// the natural ordering is lexicographic over bit positions and the packed
/// byte form is big-endian with zero padding after the last bit.
class BasisString {
   public:
    BasisString() = default;

    /// All-zero string of `bit_len` bits.
    explicit BasisString(std::size_t bit_len);

    /// String whose bits are the low `bit_len` bits of `value`, most
    /// significant first. Requires bit_len <= 64.
    static BasisString from_uint(std::uint64_t value, std::size_t bit_len);

    /// Parses the packed big-endian hex form produced by `to_hex`.
    static BasisString from_hex(std::string_view hex, std::size_t bit_len);

    /// Parses a string of '0'/'1' characters.
    static BasisString from_binary(std::string_view bits);

    static BasisString random(std::size_t bit_len, Rng &rng);

    std::size_t size() const { return bit_len_; }
    bool empty() const { return bit_len_ == 0; }

    bool get(std::size_t index) const;
    void set(std::size_t index, bool value);
    void flip(std::size_t index);

    bool is_zero() const;

    /// Inner product over GF(2).
    bool dot(const BasisString &other) const;

    /// Index of the first set bit, or size() when the string is zero.
    std::size_t lowest_set_index() const;

    BasisString operator^(const BasisString &other) const;
    BasisString &operator^=(const BasisString &other);

    /// Requires size() <= 64.
    std::uint64_t to_uint() const;

    std::vector<std::uint8_t> to_bytes() const;
    std::string to_hex() const;
    std::string to_binary() const;

    bool operator==(const BasisString &other) const = default;
    std::strong_ordering operator<=>(const BasisString &other) const;

   private:
    void check_same_length(const BasisString &other) const;
    void mask_tail();

    std::size_t bit_len_ = 0;
    std::vector<std::uint64_t> words_;
};

std::string to_hex(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> from_hex(std::string_view hex);

}  // namespace qseal

#endif
