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

#include <cmath>

#include "gtest/gtest.h"

#include "qseal/errors.h"
#include "test_util.h"

using namespace qseal;
using qseal::testing::three_se;

namespace {

std::vector<std::uint8_t> bytes_of(std::string_view s) { return {s.begin(), s.end()}; }

}  // namespace

TEST(alice_seal_binary, package_invariants) {
    Rng rng(1);
    auto sealed = alice_seal_binary(TcfParams{16}, rng);
    const auto &pkg = sealed.package;
    const auto &sec = sealed.secret;
    ASSERT_EQ(pkg.quantum_register.size(), 2u);
    ASSERT_EQ(sec.branch_strings.size(), 2u);
    EXPECT_TRUE(verify_claw(*pkg.tcf_instance, Claw{sec.branch_strings[0], sec.branch_strings[1], sec.y}));
    for (const auto &t : pkg.quantum_register.terms()) {
        EXPECT_EQ(pkg.tcf_instance->eval(t.bits), sec.y);
    }
    EXPECT_NEAR(trace_distance_pure(pkg.quantum_register, SparseState::basis(sec.branch_strings[0])),
                std::sqrt(2.0) / 2, 1e-12);
    ASSERT_TRUE(sec.trapdoor.has_value());
    EXPECT_EQ(sec.branch_strings[0] ^ sec.branch_strings[1], sec.trapdoor->trapdoor);
}

TEST(alice_seal_binary, seeds_give_distinct_claws) {
    Rng a(1);
    Rng b(2);
    EXPECT_NE(alice_seal_binary(TcfParams{16}, a).secret.branch_strings,
              alice_seal_binary(TcfParams{16}, b).secret.branch_strings);
}

TEST(alice_seal_nary, three_branches_decrypt_to_y) {
    Rng rng(2);
    auto y = bytes_of("ba");
    auto sealed = alice_seal_nary(3, y, 16, rng);
    ASSERT_EQ(sealed.package.ciphertexts.size(), 3u);
    for (const auto &x : sealed.secret.branch_strings) {
        EXPECT_NEAR(sealed.package.quantum_register.amplitude(x), 1 / std::sqrt(3.0), 1e-15);
        EXPECT_EQ(find_and_dec(x, sealed.package.ciphertexts), y);
    }
}

TEST(alice_seal_nary, parameter_checks) {
    Rng rng(3);
    auto y = bytes_of("y");
    EXPECT_THROW(alice_seal_nary(1, y, 16, rng), InvalidInput);
    EXPECT_THROW(alice_seal_nary(65, y, 16, rng), InvalidInput);
    EXPECT_THROW(alice_seal_nary(3, {}, 16, rng), InvalidInput);
    EXPECT_THROW(alice_seal_nary(3, y, 3, rng), InvalidInput);  // 8 < 12
    EXPECT_NO_THROW(alice_seal_nary(3, y, 4, rng));
    // Tight register forces resampling of duplicates.
    for (int i = 0; i < 50; i++) {
        auto s = alice_seal_nary(4, y, 4, rng);
        EXPECT_EQ(s.package.quantum_register.size(), 4u);
    }
}

TEST(alice_seal_nary, two_branches_match_binary_theory) {
    Rng rng(4);
    auto n2 = alice_seal_nary(2, bytes_of("y"), 16, rng);
    auto b2 = alice_seal_binary(TcfParams{16}, rng);
    auto branch = [](const Sealed &s) { return SparseState::basis(s.secret.branch_strings[0]); };
    EXPECT_NEAR(helstrom_success_probability(n2.package.quantum_register, branch(n2)),
                helstrom_success_probability(b2.package.quantum_register, branch(b2)), 1e-15);
}

TEST(bob_open, recovers_y_in_both_modes) {
    Rng rng(5);
    for (int i = 0; i < 2000; i++) {
        auto b = alice_seal_binary(TcfParams{16}, rng);
        ASSERT_EQ(bob_open(b.package, rng), b.secret.y);
        auto n = alice_seal_nary(3, bytes_of("secret"), 16, rng);
        ASSERT_EQ(bob_open(n.package, rng), n.secret.y);
    }
}

TEST(bob_open, collapses_and_is_idempotent) {
    Rng rng(6);
    auto n = alice_seal_nary(5, bytes_of("secret"), 16, rng);
    auto y1 = bob_open(n.package, rng);
    ASSERT_EQ(n.package.quantum_register.size(), 1u);
    auto kept = n.package.quantum_register.terms()[0].bits;
    for (int i = 0; i < 20; i++) {
        EXPECT_EQ(bob_open(n.package, rng), y1);
        EXPECT_EQ(n.package.quantum_register.terms()[0].bits, kept);
    }
}

TEST(bob_open, corrupted_package_reported) {
    Rng rng(7);
    auto n = alice_seal_nary(3, bytes_of("secret"), 16, rng);
    n.package.ciphertexts.pop_back();
    n.package.ciphertexts.pop_back();
    n.package.ciphertexts.pop_back();
    n.package.ciphertexts.push_back(enc(BasisString::from_uint(1, 16), bytes_of("x")));
    // Measuring a branch whose ciphertext is gone cannot succeed.
    EXPECT_THROW(
        {
            for (int i = 0; i < 50; i++) {
                auto copy = n.package;
                bob_open(copy, rng);
            }
        },
        ProtocolCorruption);
    auto b = alice_seal_binary(TcfParams{16}, rng);
    b.package.tcf_instance.reset();
    EXPECT_THROW(bob_open(b.package, rng), ProtocolCorruption);
}

TEST(bob_respond, compatibility_table) {
    EXPECT_TRUE(compatible(CheatStrategy::Honest, ReturnKind::Quantum));
    EXPECT_TRUE(compatible(CheatStrategy::Honest, ReturnKind::Classical));
    EXPECT_TRUE(compatible(CheatStrategy::MeasureKeepCollapsed, ReturnKind::Quantum));
    EXPECT_FALSE(compatible(CheatStrategy::MeasureKeepCollapsed, ReturnKind::Classical));
    EXPECT_TRUE(compatible(CheatStrategy::MeasureReturnRandomBasis, ReturnKind::Quantum));
    EXPECT_FALSE(compatible(CheatStrategy::MeasureGuessD, ReturnKind::Quantum));
    EXPECT_TRUE(compatible(CheatStrategy::MeasureGuessD, ReturnKind::Classical));
    Rng rng(8);
    auto b = alice_seal_binary(TcfParams{16}, rng);
    EXPECT_THROW(bob_respond(b.package, CheatStrategy::MeasureGuessD, ReturnKind::Quantum, rng), InvalidInput);
}

TEST(bob_respond, honest_classical_satisfies_relation) {
    Rng rng(9);
    for (int i = 0; i < 2000; i++) {
        auto b = alice_seal_binary(TcfParams{16}, rng);
        auto reply = bob_respond(b.package, CheatStrategy::Honest, ReturnKind::Classical, rng);
        ASSERT_EQ(reply.kind(), ReturnKind::Classical);
        ASSERT_FALSE(reply.d().dot(b.secret.branch_strings[0] ^ b.secret.branch_strings[1]));
    }
}

TEST(bob_respond, honest_quantum_returns_register) {
    Rng rng(10);
    auto b = alice_seal_binary(TcfParams{16}, rng);
    auto reply = bob_respond(b.package, CheatStrategy::Honest, ReturnKind::Quantum, rng);
    EXPECT_TRUE(reply.state().approx_equal(b.secret.original_state));
}

TEST(bob_respond, measure_keep_returns_one_branch) {
    Rng rng(11);
    auto n = alice_seal_nary(4, bytes_of("s"), 16, rng);
    auto reply = bob_respond(n.package, CheatStrategy::MeasureKeepCollapsed, ReturnKind::Quantum, rng);
    ASSERT_EQ(reply.state().size(), 1u);
    const auto &xs = n.secret.branch_strings;
    EXPECT_NE(std::find(xs.begin(), xs.end(), reply.state().terms()[0].bits), xs.end());
}

TEST(bob_respond, opened_then_kept_returns_the_opened_branch) {
    Rng rng(12);
    auto n = alice_seal_nary(4, bytes_of("s"), 16, rng);
    bob_open(n.package, rng);
    auto opened = n.package.quantum_register.terms()[0].bits;
    auto reply = bob_respond(std::move(n.package), CheatStrategy::MeasureKeepCollapsed, ReturnKind::Quantum, rng);
    EXPECT_EQ(reply.state().terms()[0].bits, opened);
}

TEST(bob_respond, guessed_d_passes_half_the_time) {
    Rng rng(13);
    const int n = 10000;
    int accepted = 0;
    for (int i = 0; i < n; i++) {
        auto b = alice_seal_binary(TcfParams{16}, rng);
        auto reply = bob_respond(b.package, CheatStrategy::MeasureGuessD, ReturnKind::Classical, rng);
        accepted += alice_verify_classical(b.secret, reply.d()) == Verdict::Accept;
    }
    EXPECT_NEAR(accepted / double(n), 0.5, 0.015);
}

TEST(alice_verify_quantum, honest_projective_always_accepts) {
    Rng rng(14);
    for (int i = 0; i < 1000; i++) {
        auto b = alice_seal_binary(TcfParams{16}, rng);
        auto reply = bob_respond(b.package, CheatStrategy::Honest, ReturnKind::Quantum, rng);
        ASSERT_EQ(alice_verify_quantum(b.secret, reply.state(), VerifyMethod::Projective, rng), Verdict::Accept);
    }
}

TEST(alice_verify_quantum, collapsed_branch_detection_rates) {
    Rng rng(15);
    const int n = 100000;
    int helstrom_reject = 0;
    int projective_reject = 0;
    for (int i = 0; i < n; i++) {
        auto b = alice_seal_binary(TcfParams{16}, rng);
        auto reply = bob_respond(b.package, CheatStrategy::MeasureKeepCollapsed, ReturnKind::Quantum, rng);
        helstrom_reject +=
            alice_verify_quantum(b.secret, reply.state(), VerifyMethod::HelstromPerBranch, rng) == Verdict::Reject;
        projective_reject +=
            alice_verify_quantum(b.secret, reply.state(), VerifyMethod::Projective, rng) == Verdict::Reject;
    }
    EXPECT_NEAR(helstrom_reject / double(n), 0.8536, 0.005);
    // <psi|x_i>^2 = 1/2 from the sparse terms directly.
    EXPECT_NEAR(projective_reject / double(n), 0.5, 0.015);
}

TEST(alice_verify_quantum, explicit_alternative_is_used) {
    Rng rng(16);
    auto b = alice_seal_binary(TcfParams{16}, rng);
    auto r = SparseState::basis(BasisString::from_uint(0, 16) == b.secret.branch_strings[0]
                                    ? BasisString::from_uint(1, 16)
                                    : BasisString::from_uint(0, 16));
    if (r.approx_equal(SparseState::basis(b.secret.branch_strings[1]))) {
        GTEST_SKIP();
    }
    for (int i = 0; i < 200; i++) {
        EXPECT_EQ(alice_verify_quantum(b.secret, r, VerifyMethod::HelstromPerBranch, rng, &r), Verdict::Reject);
    }
    EXPECT_THROW(alice_verify_quantum(b.secret, r, VerifyMethod::HelstromPerBranch, rng, &b.secret.original_state),
                 InvalidInput);
}

TEST(alice_verify_quantum, size_mismatch_rejected) {
    Rng rng(17);
    auto b = alice_seal_binary(TcfParams{16}, rng);
    EXPECT_THROW(alice_verify_quantum(b.secret, SparseState::basis(BasisString(8)), VerifyMethod::Projective, rng),
                 InvalidInput);
}

TEST(alice_verify_classical, relation_check) {
    Rng rng(18);
    auto b = alice_seal_binary(TcfParams{16}, rng);
    EXPECT_EQ(alice_verify_classical(b.secret, BasisString(16)), Verdict::Accept);
    auto delta = b.secret.branch_strings[0] ^ b.secret.branch_strings[1];
    BasisString odd(16);
    odd.set(delta.lowest_set_index(), true);
    EXPECT_EQ(alice_verify_classical(b.secret, odd), Verdict::Reject);
    EXPECT_THROW(alice_verify_classical(b.secret, BasisString(8)), InvalidInput);
}

TEST(alice_verify_classical, unsupported_for_many_branches) {
    Rng rng(19);
    auto n = alice_seal_nary(3, bytes_of("s"), 16, rng);
    EXPECT_THROW(alice_verify_classical(n.secret, BasisString(16)), UnsupportedMode);
    auto two = alice_seal_nary(2, bytes_of("s"), 16, rng);
    EXPECT_NO_THROW(alice_verify_classical(two.secret, BasisString(16)));
}

TEST(strategy_names, roundtrip) {
    for (auto s : {CheatStrategy::Honest, CheatStrategy::MeasureKeepCollapsed, CheatStrategy::MeasureReturnRandomBasis,
                   CheatStrategy::MeasureGuessD}) {
        EXPECT_EQ(parse_strategy(to_string(s)), s);
    }
    EXPECT_THROW(parse_strategy("sneaky"), InvalidInput);
    EXPECT_EQ(parse_verify_method("helstrom"), VerifyMethod::HelstromPerBranch);
    EXPECT_THROW(parse_return_kind("carrier-pigeon"), InvalidInput);
}
