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

#include "qseal/tcf.h"

#include <string>

#include "qseal/errors.h"
#include "qseal/hash.h"

namespace qseal {

namespace {

constexpr std::size_t kSaltBytes = 32;
constexpr std::size_t kPublicKeyBytes = 2 + kSaltBytes;
constexpr std::size_t kMaxBitLen = 128;

std::size_t public_key_bit_len(std::span<const std::uint8_t> pk) {
    if (pk.size() != kPublicKeyBytes) {
        throw InvalidInput("public key must be " + std::to_string(kPublicKeyBytes) + " bytes");
    }
    return (std::size_t{pk[0]} << 8) | pk[1];
}

}  // namespace

void TcfParams::validate() const {
    if (bit_len < 2) {
        throw InvalidInput("TCF domain needs at least 2 bits");
    }
    if (image_len != 256) {
        throw InvalidInput("TCF image length is fixed at 256 bits");
    }
    if (bit_len > kMaxBitLen) {
        throw InvalidInput("TCF image length must be at least twice the domain length");
    }
}

XorShiftTcf::XorShiftTcf(const TcfKeyPair &key) : public_key_(key.public_key), shift_(key.trapdoor) {
    if (public_key_bit_len(public_key_) != shift_.size()) {
        throw InvalidInput("trapdoor length does not match public key");
    }
    if (shift_.is_zero()) {
        throw InvalidInput("trapdoor shift must be nonzero");
    }
}

Bytes XorShiftTcf::eval(const BasisString &x) const {
    if (x.size() != shift_.size()) {
        throw InvalidInput("TCF input has " + std::to_string(x.size()) + " bits, expected " +
                           std::to_string(shift_.size()));
    }
    BasisString partner = x ^ shift_;
    const BasisString &canonical = partner < x ? partner : x;
    Digest d = Sha256()
                   .update("tcf/eval")
                   .update(std::span(public_key_).subspan(2))
                   .update(canonical.to_bytes())
                   .finish();
    return Bytes(d.begin(), d.end());
}

TcfKeyPair keygen(const TcfParams &params, Rng &rng) {
    params.validate();
    TcfKeyPair key;
    key.params = params;
    key.public_key.resize(kPublicKeyBytes);
    key.public_key[0] = static_cast<std::uint8_t>(params.bit_len >> 8);
    key.public_key[1] = static_cast<std::uint8_t>(params.bit_len);
    for (std::size_t i = 2; i < kPublicKeyBytes; i++) {
        key.public_key[i] = static_cast<std::uint8_t>(rng.next_u64());
    }
    do {
        key.trapdoor = BasisString::random(params.bit_len, rng);
    } while (key.trapdoor.is_zero());
    return key;
}

TcfKeyPair make_key_pair(std::span<const std::uint8_t> public_key, BasisString trapdoor) {
    TcfKeyPair key;
    key.params.bit_len = public_key_bit_len(public_key);
    key.params.validate();
    key.public_key.assign(public_key.begin(), public_key.end());
    key.trapdoor = std::move(trapdoor);
    XorShiftTcf check(key);
    return key;
}

std::shared_ptr<const TcfInstance> make_instance(const TcfKeyPair &key) {
    return std::make_shared<const XorShiftTcf>(key);
}

Bytes eval(const TcfKeyPair &key, const BasisString &x) { return XorShiftTcf(key).eval(x); }

Claw sample_claw(const TcfKeyPair &key, Rng &rng) {
    XorShiftTcf f(key);
    Claw claw;
    claw.x1 = BasisString::random(key.params.bit_len, rng);
    claw.x2 = claw.x1 ^ key.trapdoor;
    claw.y = f.eval(claw.x1);
    return claw;
}

bool verify_claw(const TcfInstance &instance, const Claw &claw) {
    if (claw.x1.size() != instance.bit_len() || claw.x2.size() != instance.bit_len()) {
        return false;
    }
    if (claw.x1 == claw.x2) {
        return false;
    }
    return instance.eval(claw.x1) == claw.y && instance.eval(claw.x2) == claw.y;
}

}  // namespace qseal
