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

#ifndef QSEAL_SEAL_H
#define QSEAL_SEAL_H

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qseal/bits.h"
#include "qseal/rng.h"
#include "qseal/sparse_state.h"
#include "qseal/symcrypto.h"
#include "qseal/tcf.h"

namespace qseal {

inline constexpr std::size_t kMaxBranches = 64;

enum class SealKind { BinaryTcf, NarySymmetric };

struct SealMode {
    SealKind kind = SealKind::BinaryTcf;
    std::size_t k = 2;

    static SealMode binary() { return {SealKind::BinaryTcf, 2}; }
    static SealMode nary(std::size_t k) { return {SealKind::NarySymmetric, k}; }

    /// Number of superposed branches.
    std::size_t branches() const { return kind == SealKind::BinaryTcf ? 2 : k; }
    void validate() const;

    bool operator==(const SealMode &) const = default;
};

/// What Bob holds. In binary mode `tcf_instance` gives him evaluation access
/// to f; in n-ary mode he gets one ciphertext per branch.
struct SealPackage {
    SealMode mode;
    std::size_t bit_len = 0;
    SparseState quantum_register;
    std::shared_ptr<const TcfInstance> tcf_instance;
    std::vector<Ciphertext> ciphertexts;
};

/// What Alice keeps for verification.
struct AliceSecret {
    SealMode mode;
    std::size_t bit_len = 0;
    Bytes y;
    std::vector<BasisString> branch_strings;
    std::optional<TcfKeyPair> trapdoor;
    SparseState original_state;
};

struct Sealed {
    SealPackage package;
    AliceSecret secret;
};

enum class CheatStrategy { Honest, MeasureKeepCollapsed, MeasureReturnRandomBasis, MeasureGuessD };
enum class ReturnKind { Quantum, Classical };
enum class VerifyMethod { Projective, HelstromPerBranch };
enum class Verdict { Accept, Reject };

/// Honest works with either return kind, MeasureGuessD only with a classical
/// return, and the two state-returning cheats only with a quantum return.
bool compatible(CheatStrategy strategy, ReturnKind kind);

struct ReturnMessage {
    std::variant<SparseState, BasisString> content;

    ReturnKind kind() const { return content.index() == 0 ? ReturnKind::Quantum : ReturnKind::Classical; }
    const SparseState &state() const { return std::get<SparseState>(content); }
    const BasisString &d() const { return std::get<BasisString>(content); }
};

Sealed alice_seal_binary(const TcfParams &params, Rng &rng);

/// Requires 2 <= k <= kMaxBranches, nonempty y, and 2^bit_len >= 4k.
Sealed alice_seal_nary(std::size_t k, std::span<const std::uint8_t> y, std::size_t bit_len, Rng &rng);

/// Measures the register in the computational basis (collapsing it in place)
/// and recovers y from the outcome. Opening a collapsed register again gives
/// the same outcome.
Bytes bob_open(SealPackage &package, Rng &rng);

/// Bob's reply when Alice recalls the seal. Takes the package by value: the
/// register leaves Bob's hands with the reply.
ReturnMessage bob_respond(SealPackage package, CheatStrategy strategy, ReturnKind kind, Rng &rng);

/// Alternative hypothesis the HelstromPerBranch verifier tests against: the
/// returned state itself when it differs from the original, otherwise a
/// uniformly chosen collapsed branch.
SparseState candidate_alternative(const AliceSecret &secret, const SparseState &returned, Rng &rng);

/// Projective accepts with probability <psi|returned>^2. HelstromPerBranch
/// discriminates psi from `alternative` (or candidate_alternative when none
/// is given) and rejects when the alternative is identified.
Verdict alice_verify_quantum(
    const AliceSecret &secret,
    const SparseState &returned,
    VerifyMethod method,
    Rng &rng,
    const SparseState *alternative = nullptr);

/// Accept iff d . (x1 ^ x2) = 0. Throws UnsupportedMode for seals with more
/// than two branches.
Verdict alice_verify_classical(const AliceSecret &secret, const BasisString &d);

Verdict alice_verify(const AliceSecret &secret, const ReturnMessage &message, VerifyMethod method, Rng &rng);

std::string_view to_string(CheatStrategy strategy);
std::string_view to_string(ReturnKind kind);
std::string_view to_string(VerifyMethod method);
std::string_view to_string(Verdict verdict);
CheatStrategy parse_strategy(std::string_view text);
ReturnKind parse_return_kind(std::string_view text);
VerifyMethod parse_verify_method(std::string_view text);

}  // namespace qseal

#endif
