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

#ifndef QSEAL_TCF_H
#define QSEAL_TCF_H

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "qseal/bits.h"
#include "qseal/rng.h"

namespace qseal {

using Bytes = std::vector<std::uint8_t>;

struct TcfParams {
    std::size_t bit_len = 16;
    std::size_t image_len = 256;  // bits; only 256 is supported

    /// Throws InvalidInput unless 2 <= bit_len and image_len == 256 >= 2 * bit_len.
    void validate() const;
};

/// `public_key` names the instance: big-endian 16-bit bit_len followed by a
/// 32-byte random salt. The trapdoor is the secret shift s with every claw
/// satisfying x1 ^ x2 = s.
struct TcfKeyPair {
    TcfParams params;
    Bytes public_key;
    BasisString trapdoor;
};

struct Claw {
    BasisString x1;
    BasisString x2;
    Bytes y;
};

/// Evaluation access to one 2-to-1 function instance. Holders can evaluate
/// but cannot read the trapdoor. Alternative families plug in here.
class TcfInstance {
   public:
    virtual ~TcfInstance() = default;
    virtual std::size_t bit_len() const = 0;
    virtual std::span<const std::uint8_t> public_key() const = 0;
    virtual Bytes eval(const BasisString &x) const = 0;
};

/// f(x) = SHA-256("tcf/eval" || salt || min(x, x ^ s)). Exact claws, exactly
/// 2-to-1. Evaluation needs s, so this object plays the role of an oracle
/// that the simulation holds on Bob's behalf.
class XorShiftTcf final : public TcfInstance {
   public:
    explicit XorShiftTcf(const TcfKeyPair &key);

    std::size_t bit_len() const override { return shift_.size(); }
    std::span<const std::uint8_t> public_key() const override { return public_key_; }
    Bytes eval(const BasisString &x) const override;

    /// The shift, for persisting the oracle between CLI invocations. Bob's
    /// strategies only ever see the TcfInstance interface.
    const BasisString &shift_for_serialization() const { return shift_; }

   private:
    Bytes public_key_;
    BasisString shift_;
};

TcfKeyPair keygen(const TcfParams &params, Rng &rng);

/// Rebuilds a key pair from its serialized parts, checking consistency.
TcfKeyPair make_key_pair(std::span<const std::uint8_t> public_key, BasisString trapdoor);

std::shared_ptr<const TcfInstance> make_instance(const TcfKeyPair &key);

Bytes eval(const TcfKeyPair &key, const BasisString &x);

Claw sample_claw(const TcfKeyPair &key, Rng &rng);

/// True iff x1 != x2 and both evaluate to y. Never throws on malformed
/// claws; a length mismatch is simply false.
bool verify_claw(const TcfInstance &instance, const Claw &claw);

}  // namespace qseal

#endif
