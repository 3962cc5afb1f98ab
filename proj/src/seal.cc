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

#include "qseal/seal.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "qseal/errors.h"

namespace qseal {

void SealMode::validate() const {
    if (kind == SealKind::BinaryTcf) {
        if (k != 2) {
            throw InvalidInput("binary TCF seals always have two branches");
        }
        return;
    }
    if (k < 2 || k > kMaxBranches) {
        throw InvalidInput("n-ary seals need between 2 and " + std::to_string(kMaxBranches) + " branches");
    }
}

bool compatible(CheatStrategy strategy, ReturnKind kind) {
    switch (strategy) {
        case CheatStrategy::Honest:
            return true;
        case CheatStrategy::MeasureKeepCollapsed:
        case CheatStrategy::MeasureReturnRandomBasis:
            return kind == ReturnKind::Quantum;
        case CheatStrategy::MeasureGuessD:
            return kind == ReturnKind::Classical;
    }
    return false;
}

Sealed alice_seal_binary(const TcfParams &params, Rng &rng) {
    TcfKeyPair key = keygen(params, rng);
    Claw claw = sample_claw(key, rng);
    std::vector<BasisString> branches{claw.x1, claw.x2};
    SparseState psi = uniform_superposition(branches);
    auto instance = make_instance(key);
    return Sealed{
        SealPackage{SealMode::binary(), params.bit_len, psi, std::move(instance), {}},
        AliceSecret{SealMode::binary(), params.bit_len, claw.y, std::move(branches), std::move(key), psi},
    };
}

Sealed alice_seal_nary(std::size_t k, std::span<const std::uint8_t> y, std::size_t bit_len, Rng &rng) {
    SealMode mode = SealMode::nary(k);
    mode.validate();
    if (y.empty()) {
        throw InvalidInput("sealed secret must be nonempty");
    }
    if (bit_len == 0 || (bit_len < 64 && (std::uint64_t{1} << bit_len) < 4 * k)) {
        throw InvalidInput("register too small: need 2^bit_len >= 4k");
    }
    std::vector<BasisString> branches;
    std::set<BasisString> seen;
    while (branches.size() < k) {
        BasisString x = BasisString::random(bit_len, rng);
        if (seen.insert(x).second) {
            branches.push_back(std::move(x));
        }
    }
    std::vector<Ciphertext> cts;
    cts.reserve(k);
    for (const auto &x : branches) {
        cts.push_back(enc(x, y));
    }
    SparseState psi = uniform_superposition(branches);
    Bytes secret_y(y.begin(), y.end());
    return Sealed{
        SealPackage{mode, bit_len, psi, nullptr, std::move(cts)},
        AliceSecret{mode, bit_len, std::move(secret_y), std::move(branches), std::nullopt, psi},
    };
}

Bytes bob_open(SealPackage &package, Rng &rng) {
    Measurement m = measure_computational(package.quantum_register, rng);
    package.quantum_register = m.collapsed;
    if (package.mode.kind == SealKind::BinaryTcf) {
        if (package.tcf_instance == nullptr) {
            throw ProtocolCorruption("binary package has no function instance");
        }
        return package.tcf_instance->eval(m.outcome);
    }
    try {
        return find_and_dec(m.outcome, package.ciphertexts);
    } catch (const NotFound &e) {
        throw ProtocolCorruption(std::string("package ciphertexts do not match the register: ") + e.what());
    } catch (const Ambiguity &e) {
        throw ProtocolCorruption(std::string("package ciphertexts do not match the register: ") + e.what());
    } catch (const InvalidInput &e) {
        throw ProtocolCorruption(std::string("package ciphertexts do not match the register: ") + e.what());
    }
}

ReturnMessage bob_respond(SealPackage package, CheatStrategy strategy, ReturnKind kind, Rng &rng) {
    if (!compatible(strategy, kind)) {
        throw InvalidInput(
            std::string("strategy ") + std::string(to_string(strategy)) + " cannot produce a " +
            std::string(to_string(kind)) + " return");
    }
    const std::size_t n = package.quantum_register.bit_len();
    switch (strategy) {
        case CheatStrategy::Honest:
            if (kind == ReturnKind::Quantum) {
                return ReturnMessage{std::move(package.quantum_register)};
            }
            return ReturnMessage{hadamard_measure(package.quantum_register, rng)};
        case CheatStrategy::MeasureKeepCollapsed:
            return ReturnMessage{measure_computational(package.quantum_register, rng).collapsed};
        case CheatStrategy::MeasureReturnRandomBasis:
            measure_computational(package.quantum_register, rng);
            return ReturnMessage{SparseState::basis(BasisString::random(n, rng))};
        case CheatStrategy::MeasureGuessD:
            measure_computational(package.quantum_register, rng);
            return ReturnMessage{BasisString::random(n, rng)};
    }
    throw InvalidInput("unknown strategy");
}

SparseState candidate_alternative(const AliceSecret &secret, const SparseState &returned, Rng &rng) {
    if (!returned.approx_equal(secret.original_state)) {
        return returned;
    }
    const auto &branches = secret.branch_strings;
    return SparseState::basis(branches[rng.uniform_below(branches.size())]);
}

Verdict alice_verify_quantum(
    const AliceSecret &secret,
    const SparseState &returned,
    VerifyMethod method,
    Rng &rng,
    const SparseState *alternative) {
    const SparseState &psi = secret.original_state;
    if (returned.bit_len() != psi.bit_len()) {
        throw InvalidInput("returned state has the wrong register size");
    }
    if (method == VerifyMethod::Projective) {
        double overlap = inner_product(psi, returned);
        return rng.uniform01() < overlap * overlap ? Verdict::Accept : Verdict::Reject;
    }
    if (alternative != nullptr) {
        return helstrom_discriminate(returned, psi, *alternative, rng) == 0 ? Verdict::Accept : Verdict::Reject;
    }
    SparseState alt = candidate_alternative(secret, returned, rng);
    return helstrom_discriminate(returned, psi, alt, rng) == 0 ? Verdict::Accept : Verdict::Reject;
}

Verdict alice_verify_classical(const AliceSecret &secret, const BasisString &d) {
    if (secret.branch_strings.size() != 2) {
        throw UnsupportedMode("classical return is only defined for two-branch seals");
    }
    if (d.size() != secret.bit_len) {
        throw InvalidInput("returned string has the wrong length");
    }
    const BasisString delta = secret.branch_strings[0] ^ secret.branch_strings[1];
    return d.dot(delta) ? Verdict::Reject : Verdict::Accept;
}

Verdict alice_verify(const AliceSecret &secret, const ReturnMessage &message, VerifyMethod method, Rng &rng) {
    if (message.kind() == ReturnKind::Classical) {
        return alice_verify_classical(secret, message.d());
    }
    return alice_verify_quantum(secret, message.state(), method, rng);
}

std::string_view to_string(CheatStrategy strategy) {
    switch (strategy) {
        case CheatStrategy::Honest:
            return "honest";
        case CheatStrategy::MeasureKeepCollapsed:
            return "measure-keep";
        case CheatStrategy::MeasureReturnRandomBasis:
            return "measure-random";
        case CheatStrategy::MeasureGuessD:
            return "measure-guess-d";
    }
    return "?";
}

std::string_view to_string(ReturnKind kind) { return kind == ReturnKind::Quantum ? "quantum" : "classical"; }

std::string_view to_string(VerifyMethod method) {
    return method == VerifyMethod::Projective ? "projective" : "helstrom";
}

std::string_view to_string(Verdict verdict) { return verdict == Verdict::Accept ? "accept" : "reject"; }

CheatStrategy parse_strategy(std::string_view text) {
    for (auto s : {CheatStrategy::Honest, CheatStrategy::MeasureKeepCollapsed, CheatStrategy::MeasureReturnRandomBasis,
                   CheatStrategy::MeasureGuessD}) {
        if (text == to_string(s)) {
            return s;
        }
    }
    throw InvalidInput("unknown strategy '" + std::string(text) + "'");
}

ReturnKind parse_return_kind(std::string_view text) {
    if (text == "quantum") {
        return ReturnKind::Quantum;
    }
    if (text == "classical") {
        return ReturnKind::Classical;
    }
    throw InvalidInput("unknown return kind '" + std::string(text) + "'");
}

VerifyMethod parse_verify_method(std::string_view text) {
    if (text == "projective") {
        return VerifyMethod::Projective;
    }
    if (text == "helstrom") {
        return VerifyMethod::HelstromPerBranch;
    }
    throw InvalidInput("unknown verify method '" + std::string(text) + "'");
}

}  // namespace qseal
