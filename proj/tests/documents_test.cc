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

#include "qseal/documents.h"

#include <cmath>
#include <cstring>

#include "gtest/gtest.h"

#include "qseal/errors.h"

using namespace qseal;
using namespace qseal::doc;

namespace {

std::vector<std::uint8_t> bytes_of(std::string_view s) { return {s.begin(), s.end()}; }

template <typename T>
T through_text(std::string_view kind, const json &payload, T (*decode)(const json &)) {
    return decode(read_document(write_document(kind, payload), kind));
}

bool bit_identical(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST(amplitude, protocol_amplitudes_use_exact_pairs) {
    for (int k = 1; k <= 64; k++) {
        for (double sign : {1.0, -1.0}) {
            double a = sign / std::sqrt(double(k));
            json j = encode_amplitude(a);
            ASSERT_TRUE(j.contains("rad")) << j.dump();
            EXPECT_EQ(j.at("rad").get<int>(), k);
            EXPECT_TRUE(bit_identical(decode_amplitude(j), a));
        }
    }
}

TEST(amplitude, other_values_roundtrip_bit_exactly) {
    Rng rng(1);
    for (int i = 0; i < 1000; i++) {
        double a = rng.uniform01() * 2 - 1;
        if (a == 0) {
            continue;
        }
        EXPECT_TRUE(bit_identical(decode_amplitude(encode_amplitude(a)), a)) << a;
    }
    EXPECT_TRUE(encode_amplitude(std::sqrt(0.8)).contains("hex"));
    EXPECT_THROW(decode_amplitude(json{{"num", 2}, {"rad", 4}}), FormatError);
    EXPECT_THROW(decode_amplitude(json{{"hex", "0x1.8p+0junk"}}), FormatError);
}

TEST(state_document, roundtrip_property) {
    Rng rng(2);
    for (int rep = 0; rep < 100; rep++) {
        std::size_t n = 1 + rng.uniform_below(200);
        std::size_t terms = 1 + rng.uniform_below(6);
        std::vector<Term> t;
        double norm = 0;
        for (std::size_t i = 0; i < terms; i++) {
            BasisString x = BasisString::random(n, rng);
            if (std::any_of(t.begin(), t.end(), [&](const Term &e) { return e.bits == x; })) {
                continue;
            }
            double a = rng.uniform01() + 0.1;
            t.push_back(Term{x, a});
            norm += a * a;
        }
        for (auto &e : t) {
            e.amplitude /= std::sqrt(norm);
        }
        auto st = SparseState::from_terms(n, t);
        auto back = decode_state(encode_state(st));
        ASSERT_EQ(back.size(), st.size());
        for (std::size_t i = 0; i < st.size(); i++) {
            EXPECT_EQ(back.terms()[i].bits, st.terms()[i].bits);
            EXPECT_TRUE(bit_identical(back.terms()[i].amplitude, st.terms()[i].amplitude));
        }
    }
}

TEST(package_document, binary_roundtrip) {
    Rng rng(3);
    auto sealed = alice_seal_binary(TcfParams{24}, rng);
    auto back = through_text("seal_package", encode_package(sealed.package), decode_package);
    EXPECT_EQ(back.mode, SealMode::binary());
    EXPECT_TRUE(back.quantum_register.approx_equal(sealed.package.quantum_register));
    for (const auto &t : back.quantum_register.terms()) {
        EXPECT_EQ(back.tcf_instance->eval(t.bits), sealed.secret.y);
    }
    auto pk = encode_package(sealed.package).at("tcf_instance").at("public_key").get<std::string>();
    EXPECT_EQ(pk.find(sealed.secret.trapdoor->trapdoor.to_hex()), std::string::npos);
}

TEST(package_document, nary_roundtrip) {
    Rng rng(4);
    auto sealed = alice_seal_nary(5, bytes_of("payload"), 16, rng);
    auto back = through_text("seal_package", encode_package(sealed.package), decode_package);
    EXPECT_EQ(back.mode, SealMode::nary(5));
    EXPECT_EQ(back.ciphertexts, sealed.package.ciphertexts);
    EXPECT_EQ(back.tcf_instance, nullptr);
}

TEST(secret_document, roundtrip_both_modes) {
    Rng rng(5);
    auto b = alice_seal_binary(TcfParams{16}, rng);
    auto bs = through_text("alice_secret", encode_secret(b.secret), decode_secret);
    EXPECT_EQ(bs.y, b.secret.y);
    EXPECT_EQ(bs.branch_strings, b.secret.branch_strings);
    EXPECT_EQ(bs.trapdoor->trapdoor, b.secret.trapdoor->trapdoor);
    auto n = alice_seal_nary(3, bytes_of("ba"), 12, rng);
    auto ns = through_text("alice_secret", encode_secret(n.secret), decode_secret);
    EXPECT_EQ(ns.y, n.secret.y);
    EXPECT_FALSE(ns.trapdoor.has_value());
}

TEST(secret_document, tampered_claw_rejected) {
    Rng rng(6);
    auto b = alice_seal_binary(TcfParams{16}, rng);
    json j = encode_secret(b.secret);
    j["y"] = std::string(64, '0');
    EXPECT_THROW(decode_secret(j), FormatError);
}

TEST(return_document, roundtrip) {
    Rng rng(7);
    auto b = alice_seal_binary(TcfParams{16}, rng);
    auto q = bob_respond(b.package, CheatStrategy::Honest, ReturnKind::Quantum, rng);
    auto qb = through_text("return_message", encode_return(q), decode_return);
    EXPECT_TRUE(qb.state().approx_equal(q.state()));
    auto c = bob_respond(b.package, CheatStrategy::Honest, ReturnKind::Classical, rng);
    auto cb = through_text("return_message", encode_return(c), decode_return);
    EXPECT_EQ(cb.d(), c.d());
}

TEST(envelope, canonical_text) {
    Rng rng(8);
    auto sealed = alice_seal_binary(TcfParams{16}, rng);
    std::string text = write_document("seal_package", encode_package(sealed.package));
    EXPECT_EQ(text.back(), '\n');
    std::string body = text.substr(0, text.size() - 1);
    EXPECT_EQ(body.find(' '), std::string::npos);
    EXPECT_EQ(body.find('\n'), std::string::npos);
    EXPECT_EQ(json::parse(body).dump(), body);
    EXPECT_EQ(body.rfind("{\"format_version\":1,\"kind\":\"seal_package\",\"payload\":{", 0), 0u);
}

TEST(envelope, rejects_bad_documents) {
    std::string good = write_document("report", json{{"x", 1}});
    EXPECT_NO_THROW(read_document(good, "report"));
    EXPECT_THROW(read_document(good, "seal_package"), FormatError);
    EXPECT_THROW(read_document(good.substr(0, good.size() / 2), "report"), FormatError);
    EXPECT_THROW(read_document(R"({"format_version":2,"kind":"report","payload":{}})", "report"), FormatError);
    EXPECT_THROW(read_document("", "report"), FormatError);
}

TEST(report_document, fields) {
    EstimateReport r;
    r.statistic = "detection";
    r.successes = 3;
    r.trials = 4;
    r.p_hat = 0.75;
    json j = encode_report(r);
    EXPECT_TRUE(j.at("p_theory").is_null());
    r.p_theory = 0.5;
    EXPECT_EQ(encode_report(r).at("p_theory").get<double>(), 0.5);
}
