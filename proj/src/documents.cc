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
#include <cstdio>
#include <cstdlib>

#include "qseal/errors.h"

namespace qseal::doc {

namespace {

template <typename F>
auto guarded(std::string_view what, F &&f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception &e) {
        throw FormatError(std::string(what) + ": " + e.what());
    } catch (const InvalidInput &e) {
        throw FormatError(std::string(what) + ": " + e.what());
    }
}

json encode_mode(SealMode mode) {
    return json{{"kind", mode.kind == SealKind::BinaryTcf ? "binary" : "nary"}, {"k", mode.k}};
}

SealMode decode_mode(const json &j) {
    const auto kind = j.at("kind").get<std::string>();
    SealMode mode;
    if (kind == "binary") {
        mode = SealMode::binary();
    } else if (kind == "nary") {
        mode = SealMode::nary(j.at("k").get<std::size_t>());
    } else {
        throw FormatError("unknown seal mode '" + kind + "'");
    }
    if (j.at("k").get<std::size_t>() != mode.k) {
        throw FormatError("seal mode has inconsistent branch count");
    }
    mode.validate();
    return mode;
}

json encode_bits(const BasisString &bits) { return bits.to_hex(); }

BasisString decode_bits(const json &j, std::size_t bit_len) {
    return BasisString::from_hex(j.get<std::string>(), bit_len);
}

json encode_bytes(std::span<const std::uint8_t> bytes) { return to_hex(bytes); }

Bytes decode_bytes(const json &j) { return from_hex(j.get<std::string>()); }

json encode_key(const TcfKeyPair &key, bool with_shift) {
    json out{{"public_key", encode_bytes(key.public_key)}};
    if (with_shift) {
        out["shift"] = encode_bits(key.trapdoor);
    }
    return out;
}

TcfKeyPair decode_key(const json &j, std::size_t bit_len) {
    Bytes pk = decode_bytes(j.at("public_key"));
    TcfKeyPair key = make_key_pair(pk, decode_bits(j.at("shift"), bit_len));
    if (key.params.bit_len != bit_len) {
        throw FormatError("function instance does not match register size");
    }
    return key;
}

}  // namespace

json encode_amplitude(double amplitude) {
    const double k = std::round(1 / (amplitude * amplitude));
    if (k >= 1 && k <= 4294967296.0) {
        const double num = amplitude < 0 ? -1.0 : 1.0;
        if (num / std::sqrt(k) == amplitude) {
            return json{{"num", static_cast<int>(num)}, {"rad", static_cast<std::uint64_t>(k)}};
        }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%a", amplitude);
    return json{{"hex", buf}};
}

double decode_amplitude(const json &j) {
    if (j.contains("hex")) {
        const std::string text = j.at("hex").get<std::string>();
        char *end = nullptr;
        double v = std::strtod(text.c_str(), &end);
        if (end == text.c_str() || *end != '\0') {
            throw FormatError("malformed hex-float amplitude");
        }
        return v;
    }
    const int num = j.at("num").get<int>();
    const auto rad = j.at("rad").get<std::uint64_t>();
    if ((num != 1 && num != -1) || rad == 0) {
        throw FormatError("amplitude must be +-1/sqrt(rad) with rad >= 1");
    }
    return static_cast<double>(num) / std::sqrt(static_cast<double>(rad));
}

json encode_state(const SparseState &state) {
    json terms = json::array();
    for (const auto &t : state.terms()) {
        terms.push_back(json{{"bits", encode_bits(t.bits)}, {"amp", encode_amplitude(t.amplitude)}});
    }
    return json{{"bit_len", state.bit_len()}, {"terms", terms}};
}

SparseState decode_state(const json &j) {
    return guarded("state", [&] {
        const auto bit_len = j.at("bit_len").get<std::size_t>();
        std::vector<Term> terms;
        for (const auto &t : j.at("terms")) {
            terms.push_back(Term{decode_bits(t.at("bits"), bit_len), decode_amplitude(t.at("amp"))});
        }
        return SparseState::from_terms(bit_len, std::move(terms));
    });
}

json encode_package(const SealPackage &package) {
    json out{
        {"mode", encode_mode(package.mode)},
        {"bit_len", package.bit_len},
        {"register", encode_state(package.quantum_register)},
    };
    if (package.mode.kind == SealKind::BinaryTcf) {
        // The oracle section stands in for the simulator's evaluation service;
        // `public_key` alone names the instance and is all Bob may inspect.
        auto *xs = dynamic_cast<const XorShiftTcf *>(package.tcf_instance.get());
        if (xs == nullptr) {
            throw InvalidInput("only XOR-shift instances can be serialized");
        }
        out["tcf_instance"] = json{{"public_key", encode_bytes(xs->public_key())}};
        out["simulator_oracle"] = json{{"shift", xs->shift_for_serialization().to_hex()}};
    } else {
        json cts = json::array();
        for (const auto &ct : package.ciphertexts) {
            cts.push_back(json{{"key_tag", encode_bytes(ct.key_tag)}, {"body", encode_bytes(ct.body)}});
        }
        out["ciphertexts"] = cts;
    }
    return out;
}

SealPackage decode_package(const json &j) {
    return guarded("seal package", [&] {
        SealMode mode = decode_mode(j.at("mode"));
        const auto bit_len = j.at("bit_len").get<std::size_t>();
        SparseState reg = decode_state(j.at("register"));
        if (reg.bit_len() != bit_len) {
            throw FormatError("register size does not match package");
        }
        SealPackage package{mode, bit_len, reg, nullptr, {}};
        if (mode.kind == SealKind::BinaryTcf) {
            json key{{"public_key", j.at("tcf_instance").at("public_key")},
                     {"shift", j.at("simulator_oracle").at("shift")}};
            package.tcf_instance = make_instance(decode_key(key, bit_len));
        } else {
            for (const auto &c : j.at("ciphertexts")) {
                Ciphertext ct;
                Bytes tag = decode_bytes(c.at("key_tag"));
                if (tag.size() != ct.key_tag.size()) {
                    throw FormatError("key tag must be 16 bytes");
                }
                std::copy(tag.begin(), tag.end(), ct.key_tag.begin());
                ct.body = decode_bytes(c.at("body"));
                package.ciphertexts.push_back(std::move(ct));
            }
            if (package.ciphertexts.size() != mode.k) {
                throw FormatError("n-ary package needs one ciphertext per branch");
            }
        }
        return package;
    });
}

json encode_secret(const AliceSecret &secret) {
    json branches = json::array();
    for (const auto &x : secret.branch_strings) {
        branches.push_back(encode_bits(x));
    }
    json out{
        {"mode", encode_mode(secret.mode)},
        {"bit_len", secret.bit_len},
        {"y", encode_bytes(secret.y)},
        {"branch_strings", branches},
        {"original_state", encode_state(secret.original_state)},
    };
    if (secret.trapdoor) {
        out["trapdoor"] = encode_key(*secret.trapdoor, true);
    }
    return out;
}

AliceSecret decode_secret(const json &j) {
    return guarded("alice secret", [&] {
        SealMode mode = decode_mode(j.at("mode"));
        const auto bit_len = j.at("bit_len").get<std::size_t>();
        std::vector<BasisString> branches;
        for (const auto &b : j.at("branch_strings")) {
            branches.push_back(decode_bits(b, bit_len));
        }
        if (branches.size() != mode.branches()) {
            throw FormatError("branch count does not match seal mode");
        }
        SparseState psi = decode_state(j.at("original_state"));
        if (!psi.approx_equal(uniform_superposition(branches))) {
            throw FormatError("stored state is not the superposition of the branches");
        }
        AliceSecret secret{mode, bit_len, decode_bytes(j.at("y")), std::move(branches), std::nullopt, psi};
        if (mode.kind == SealKind::BinaryTcf) {
            secret.trapdoor = decode_key(j.at("trapdoor"), bit_len);
            Claw claw{secret.branch_strings[0], secret.branch_strings[1], secret.y};
            if (!verify_claw(*make_instance(*secret.trapdoor), claw)) {
                throw FormatError("stored branches are not a claw for the stored trapdoor");
            }
        }
        return secret;
    });
}

json encode_return(const ReturnMessage &message) {
    if (message.kind() == ReturnKind::Quantum) {
        return json{{"type", "quantum"}, {"bit_len", message.state().bit_len()}, {"state", encode_state(message.state())}};
    }
    return json{{"type", "classical"}, {"bit_len", message.d().size()}, {"d", encode_bits(message.d())}};
}

ReturnMessage decode_return(const json &j) {
    return guarded("return message", [&] {
        const auto type = j.at("type").get<std::string>();
        const auto bit_len = j.at("bit_len").get<std::size_t>();
        if (type == "quantum") {
            SparseState st = decode_state(j.at("state"));
            if (st.bit_len() != bit_len) {
                throw FormatError("returned state size mismatch");
            }
            return ReturnMessage{std::move(st)};
        }
        if (type == "classical") {
            return ReturnMessage{decode_bits(j.at("d"), bit_len)};
        }
        throw FormatError("unknown return type '" + type + "'");
    });
}

json encode_report(const EstimateReport &report) {
    json out{
        {"statistic", report.statistic}, {"successes", report.successes}, {"trials", report.trials},
        {"p_hat", report.p_hat},         {"ci_low", report.ci_low},       {"ci_high", report.ci_high},
        {"p_theory", nullptr},
    };
    if (report.p_theory) {
        out["p_theory"] = *report.p_theory;
    }
    return out;
}

std::string write_document(std::string_view kind, const json &payload) {
    json envelope{{"format_version", kFormatVersion}, {"kind", kind}, {"payload", payload}};
    return envelope.dump() + "\n";
}

json read_document(std::string_view text, std::string_view expected_kind) {
    return guarded("document", [&] {
        json envelope = json::parse(text);
        if (envelope.at("format_version").get<int>() != kFormatVersion) {
            throw FormatError("unsupported format_version");
        }
        if (envelope.at("kind").get<std::string>() != expected_kind) {
            throw FormatError(
                "expected a " + std::string(expected_kind) + " document, got " + envelope.at("kind").get<std::string>());
        }
        return envelope.at("payload");
    });
}

}  // namespace qseal::doc
