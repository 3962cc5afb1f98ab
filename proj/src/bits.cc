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

#include "qseal/bits.h"

#include <bit>

#include "qseal/errors.h"
#include "qseal/rng.h"

namespace qseal {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t bit_len) { return (bit_len + kWordBits - 1) / kWordBits; }

std::uint64_t bit_mask(std::size_t index) { return std::uint64_t{1} << (kWordBits - 1 - index % kWordBits); }

int hex_value(char c) {
    if (c >= '0' && c <= '9') {
        return c - '0';
    }
    if (c >= 'a' && c <= 'f') {
        return c - 'a' + 10;
    }
    if (c >= 'A' && c <= 'F') {
        return c - 'A' + 10;
    }
    return -1;
}

}  // namespace

BasisString::BasisString(std::size_t bit_len) : bit_len_(bit_len), words_(word_count(bit_len), 0) {}

BasisString BasisString::from_uint(std::uint64_t value, std::size_t bit_len) {
    if (bit_len > 64) {
        throw InvalidInput("from_uint supports at most 64 bits");
    }
    BasisString out(bit_len);
    if (bit_len > 0) {
        if (bit_len < 64 && (value >> bit_len) != 0) {
            throw InvalidInput("value does not fit in the requested bit length");
        }
        out.words_[0] = value << (64 - bit_len);
    }
    return out;
}

BasisString BasisString::from_hex(std::string_view hex, std::size_t bit_len) {
    std::vector<std::uint8_t> bytes = qseal::from_hex(hex);
    if (bytes.size() != (bit_len + 7) / 8) {
        throw InvalidInput("hex length does not match bit length " + std::to_string(bit_len));
    }
    BasisString out(bit_len);
    for (std::size_t i = 0; i < bytes.size(); i++) {
        out.words_[i / 8] |= std::uint64_t{bytes[i]} << (56 - 8 * (i % 8));
    }
    BasisString masked = out;
    masked.mask_tail();
    if (masked.words_ != out.words_) {
        throw InvalidInput("hex string has nonzero padding bits");
    }
    return out;
}

BasisString BasisString::from_binary(std::string_view bits) {
    BasisString out(bits.size());
    for (std::size_t i = 0; i < bits.size(); i++) {
        if (bits[i] == '1') {
            out.set(i, true);
        } else if (bits[i] != '0') {
            throw InvalidInput("binary string may only contain '0' and '1'");
        }
    }
    return out;
}

BasisString BasisString::random(std::size_t bit_len, Rng &rng) {
    BasisString out(bit_len);
    for (auto &w : out.words_) {
        w = rng.next_u64();
    }
    out.mask_tail();
    return out;
}

bool BasisString::get(std::size_t index) const {
    if (index >= bit_len_) {
        throw InvalidInput("bit index out of range");
    }
    return (words_[index / kWordBits] & bit_mask(index)) != 0;
}

void BasisString::set(std::size_t index, bool value) {
    if (index >= bit_len_) {
        throw InvalidInput("bit index out of range");
    }
    if (value) {
        words_[index / kWordBits] |= bit_mask(index);
    } else {
        words_[index / kWordBits] &= ~bit_mask(index);
    }
}

void BasisString::flip(std::size_t index) {
    if (index >= bit_len_) {
        throw InvalidInput("bit index out of range");
    }
    words_[index / kWordBits] ^= bit_mask(index);
}

bool BasisString::is_zero() const {
    for (auto w : words_) {
        if (w != 0) {
            return false;
        }
    }
    return true;
}

bool BasisString::dot(const BasisString &other) const {
    check_same_length(other);
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); i++) {
        acc ^= words_[i] & other.words_[i];
    }
    return (std::popcount(acc) & 1) != 0;
}

std::size_t BasisString::lowest_set_index() const {
    for (std::size_t i = 0; i < words_.size(); i++) {
        if (words_[i] != 0) {
            return i * kWordBits + static_cast<std::size_t>(std::countl_zero(words_[i]));
        }
    }
    return bit_len_;
}

BasisString BasisString::operator^(const BasisString &other) const {
    BasisString out = *this;
    out ^= other;
    return out;
}

BasisString &BasisString::operator^=(const BasisString &other) {
    check_same_length(other);
    for (std::size_t i = 0; i < words_.size(); i++) {
        words_[i] ^= other.words_[i];
    }
    return *this;
}

std::uint64_t BasisString::to_uint() const {
    if (bit_len_ > 64) {
        throw InvalidInput("to_uint supports at most 64 bits");
    }
    if (bit_len_ == 0) {
        return 0;
    }
    return words_[0] >> (64 - bit_len_);
}

std::vector<std::uint8_t> BasisString::to_bytes() const {
    std::vector<std::uint8_t> out((bit_len_ + 7) / 8);
    for (std::size_t i = 0; i < out.size(); i++) {
        out[i] = static_cast<std::uint8_t>(words_[i / 8] >> (56 - 8 * (i % 8)));
    }
    return out;
}

std::string BasisString::to_hex() const { return qseal::to_hex(to_bytes()); }

std::string BasisString::to_binary() const {
    std::string out(bit_len_, '0');
    for (std::size_t i = 0; i < bit_len_; i++) {
        if (get(i)) {
            out[i] = '1';
        }
    }
    return out;
}

std::strong_ordering BasisString::operator<=>(const BasisString &other) const {
    if (auto c = bit_len_ <=> other.bit_len_; c != 0) {
        return c;
    }
    for (std::size_t i = 0; i < words_.size(); i++) {
        if (auto c = words_[i] <=> other.words_[i]; c != 0) {
            return c;
        }
    }
    return std::strong_ordering::equal;
}

void BasisString::check_same_length(const BasisString &other) const {
    if (bit_len_ != other.bit_len_) {
        throw InvalidInput(
            "bit strings differ in length (" + std::to_string(bit_len_) + " vs " + std::to_string(other.bit_len_) +
            ")");
    }
}

void BasisString::mask_tail() {
    std::size_t tail = bit_len_ % kWordBits;
    if (tail != 0) {
        words_.back() &= ~std::uint64_t{0} << (kWordBits - tail);
    }
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        out.push_back(kDigits[b >> 4]);
        out.push_back(kDigits[b & 0xf]);
    }
    return out;
}

std::vector<std::uint8_t> from_hex(std::string_view hex) {
    if (hex.size() % 2 != 0) {
        throw InvalidInput("hex string has odd length");
    }
    std::vector<std::uint8_t> out(hex.size() / 2);
    for (std::size_t i = 0; i < out.size(); i++) {
        int hi = hex_value(hex[2 * i]);
        int lo = hex_value(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) {
            throw InvalidInput("invalid hex digit");
        }
        out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
    }
    return out;
}

}  // namespace qseal
