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

#include "qseal/cli.h"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qseal/documents.h"
#include "qseal/errors.h"
#include "qseal/experiment.h"
#include "qseal/seal.h"

namespace qseal::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    out.close();
    if (!out) {
        throw IoError("cannot write " + path);
    }
}

std::string fixed6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

SealMode parse_mode(const std::string &mode, std::size_t k, bool k_given) {
    if (mode == "binary") {
        if (k_given && k != 2) {
            throw UsageError("binary mode always uses two branches");
        }
        return SealMode::binary();
    }
    if (!k_given) {
        throw UsageError("--k is required in nary mode");
    }
    SealMode m = SealMode::nary(k);
    m.validate();
    return m;
}

struct SealOptions {
    std::string mode = "binary";
    std::size_t bits = 16;
    std::size_t k = 2;
    std::string secret;
    std::uint64_t seed = 0;
    std::string out_package;
    std::string out_secret;
};

struct OpenOptions {
    std::string package;
    std::uint64_t seed = 0;
};

struct RespondOptions {
    std::string package;
    std::string strategy;
    std::string kind;
    std::uint64_t seed = 0;
    std::string out;
};

struct VerifyOptions {
    std::string secret;
    std::string returned;
    std::string method = "projective";
    std::uint64_t seed = 0;
};

struct SimulateOptions {
    std::string mode = "binary";
    std::size_t k = 2;
    std::size_t bits = 16;
    std::string strategy = "honest";
    std::string kind = "quantum";
    std::string method = "projective";
    std::string statistic;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    bool mixture = false;
    bool read = false;
    std::string out;
    std::string csv;
};

struct CurveOptions {
    std::size_t k_max = 2;
    std::uint64_t trials = 20000;
    std::size_t bits = 16;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::string out;
};

int cmd_seal(const SealOptions &o, bool k_given, bool secret_given, std::ostream &out) {
    SealMode mode = parse_mode(o.mode, o.k, k_given);
    Rng rng(o.seed);
    Sealed sealed = [&] {
        if (mode.kind == SealKind::BinaryTcf) {
            if (secret_given) {
                throw UsageError("binary mode derives y from the claw; --secret is not allowed");
            }
            return alice_seal_binary(TcfParams{o.bits}, rng);
        }
        if (!secret_given) {
            throw UsageError("--secret is required in nary mode");
        }
        Bytes y = from_hex(o.secret);
        return alice_seal_nary(mode.k, y, o.bits, rng);
    }();
    write_file(o.out_package, doc::write_document("seal_package", doc::encode_package(sealed.package)));
    write_file(o.out_secret, doc::write_document("alice_secret", doc::encode_secret(sealed.secret)));
    out << "sealed " << (mode.kind == SealKind::BinaryTcf ? "binary" : "nary") << " k=" << mode.branches()
        << " bits=" << o.bits << "\n";
    return kOk;
}

SealPackage load_package(const std::string &path) {
    return doc::decode_package(doc::read_document(read_file(path), "seal_package"));
}

int cmd_open(const OpenOptions &o, std::ostream &out) {
    SealPackage package = load_package(o.package);
    Rng rng(o.seed);
    out << to_hex(bob_open(package, rng)) << "\n";
    return kOk;
}

int cmd_respond(const RespondOptions &o, std::ostream &out) {
    CheatStrategy strategy = parse_strategy(o.strategy);
    ReturnKind kind = parse_return_kind(o.kind);
    if (!compatible(strategy, kind)) {
        throw UsageError("strategy " + o.strategy + " cannot produce a " + o.kind + " return");
    }
    SealPackage package = load_package(o.package);
    Rng rng(o.seed);
    ReturnMessage reply = bob_respond(std::move(package), strategy, kind, rng);
    write_file(o.out, doc::write_document("return_message", doc::encode_return(reply)));
    out << "wrote " << o.kind << " return\n";
    return kOk;
}

int cmd_verify(const VerifyOptions &o, std::ostream &out) {
    VerifyMethod method = parse_verify_method(o.method);
    AliceSecret secret = doc::decode_secret(doc::read_document(read_file(o.secret), "alice_secret"));
    ReturnMessage reply = doc::decode_return(doc::read_document(read_file(o.returned), "return_message"));
    const std::size_t reply_len = reply.kind() == ReturnKind::Quantum ? reply.state().bit_len() : reply.d().size();
    if (reply_len != secret.bit_len) {
        throw UsageError("return message and secret disagree on register size");
    }
    if (reply.kind() == ReturnKind::Classical && secret.branch_strings.size() != 2) {
        throw UsageError("classical returns are only defined for two-branch seals");
    }
    Rng rng(o.seed);
    Verdict v = alice_verify(secret, reply, method, rng);
    out << to_string(v) << "\n";
    return v == Verdict::Accept ? kOk : kReject;
}

void print_report(const EstimateReport &r, std::ostream &out) {
    out << "statistic: " << r.statistic << "\n";
    out << "p_hat: " << fixed6(r.p_hat) << "\n";
    out << "ci95: [" << fixed6(r.ci_low) << ", " << fixed6(r.ci_high) << "]\n";
    out << "trials: " << r.trials << "\n";
    out << "p_theory: " << (r.p_theory ? fixed6(*r.p_theory) : std::string("n/a")) << "\n";
}

int cmd_simulate(const SimulateOptions &o, bool k_given, std::ostream &out) {
    if (o.mixture && o.read) {
        throw UsageError("--mixture and --read are exclusive");
    }
    EstimateReport report;
    std::size_t k = 2;
    if (o.mixture) {
        report = mixture_diagnostic(o.bits, o.trials, o.seed, o.threads);
    } else {
        SealMode mode = parse_mode(o.mode, o.k, k_given);
        k = mode.branches();
        if (o.read) {
            report = read_trials(mode, o.bits, o.trials, o.seed, o.threads);
        } else {
            TrialConfig config;
            config.mode = mode;
            config.bit_len = o.bits;
            config.strategy = parse_strategy(o.strategy);
            config.return_kind = parse_return_kind(o.kind);
            config.verify_method = parse_verify_method(o.method);
            config.trials = o.trials;
            config.seed = o.seed;
            if (o.statistic == "acceptance") {
                config.statistic = Statistic::Acceptance;
            } else if (o.statistic == "detection") {
                config.statistic = Statistic::Detection;
            } else if (!o.statistic.empty()) {
                throw UsageError("unknown statistic '" + o.statistic + "'");
            }
            report = run_trials(config, o.threads);
        }
    }
    print_report(report, out);
    if (!o.out.empty()) {
        write_file(o.out, doc::write_document("report", doc::encode_report(report)));
    }
    if (!o.csv.empty()) {
        char row[160];
        std::snprintf(row, sizeof row, "%zu,%s,%.6f,%.6f,%.6f,%" PRIu64 "\n", k,
                      report.p_theory ? fixed6(*report.p_theory).c_str() : "", report.p_hat, report.ci_low,
                      report.ci_high, report.trials);
        write_file(o.csv, std::string("k,p_theory,p_hat,ci_low,ci_high,trials\n") + row);
    }
    return kOk;
}

int cmd_curve(const CurveOptions &o, std::ostream &out) {
    auto points = fig1_curve(o.k_max, o.trials, o.bits, o.seed, o.threads);
    std::string csv = curve_csv(points);
    write_file(o.out, csv);
    out << csv;
    return kOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quantum seal protocol simulator", "qseal"};
    app.require_subcommand(1);

    SealOptions seal;
    auto *seal_cmd = app.add_subcommand("seal", "Create a seal package and Alice's secret");
    seal_cmd->add_option("--mode", seal.mode, "binary | nary")->check(CLI::IsMember({"binary", "nary"}));
    seal_cmd->add_option("--bits", seal.bits, "Register size in bits");
    auto *seal_k = seal_cmd->add_option("--k", seal.k, "Superposed strings (nary mode)");
    auto *seal_secret = seal_cmd->add_option("--secret", seal.secret, "Hex secret y (nary mode)");
    seal_cmd->add_option("--seed", seal.seed);
    seal_cmd->add_option("--out-package", seal.out_package)->required();
    seal_cmd->add_option("--out-secret", seal.out_secret)->required();

    OpenOptions open;
    auto *open_cmd = app.add_subcommand("open", "Measure the register and print y");
    open_cmd->add_option("--package", open.package)->required();
    open_cmd->add_option("--seed", open.seed);

    RespondOptions respond;
    auto *respond_cmd = app.add_subcommand("respond", "Produce Bob's reply to a recall");
    respond_cmd->add_option("--package", respond.package)->required();
    respond_cmd->add_option("--strategy", respond.strategy, "honest | measure-keep | measure-random | measure-guess-d")
        ->required();
    respond_cmd->add_option("--kind", respond.kind, "quantum | classical")->required();
    respond_cmd->add_option("--seed", respond.seed);
    respond_cmd->add_option("--out", respond.out)->required();

    VerifyOptions verify;
    auto *verify_cmd = app.add_subcommand("verify", "Check Bob's reply; exit 0 accept, 1 reject");
    verify_cmd->add_option("--secret", verify.secret)->required();
    verify_cmd->add_option("--return", verify.returned)->required();
    verify_cmd->add_option("--method", verify.method, "projective | helstrom");
    verify_cmd->add_option("--seed", verify.seed);

    SimulateOptions sim;
    auto *sim_cmd = app.add_subcommand("simulate", "Estimate acceptance or detection rates");
    sim_cmd->add_option("--mode", sim.mode)->check(CLI::IsMember({"binary", "nary"}));
    auto *sim_k = sim_cmd->add_option("--k", sim.k);
    sim_cmd->add_option("--bits", sim.bits);
    sim_cmd->add_option("--strategy", sim.strategy);
    sim_cmd->add_option("--kind", sim.kind);
    sim_cmd->add_option("--method", sim.method);
    sim_cmd->add_option("--statistic", sim.statistic, "acceptance | detection");
    sim_cmd->add_option("--trials", sim.trials)->check(CLI::PositiveNumber);
    sim_cmd->add_option("--seed", sim.seed);
    sim_cmd->add_option("--threads", sim.threads)->check(CLI::PositiveNumber);
    sim_cmd->add_flag("--mixture", sim.mixture, "Verifier not told the kept branch");
    sim_cmd->add_flag("--read", sim.read, "Estimate the honest read rate");
    sim_cmd->add_option("--out", sim.out, "Write the report document here");
    sim_cmd->add_option("--csv", sim.csv, "Write a one-row CSV here");

    CurveOptions curve;
    auto *curve_cmd = app.add_subcommand("curve", "Detection probability versus number of superposed strings");
    curve_cmd->add_option("--k-max", curve.k_max)->required()->check(CLI::Range(2, static_cast<int>(kMaxBranches)));
    curve_cmd->add_option("--trials", curve.trials)->check(CLI::PositiveNumber);
    curve_cmd->add_option("--bits", curve.bits);
    curve_cmd->add_option("--seed", curve.seed);
    curve_cmd->add_option("--threads", curve.threads)->check(CLI::PositiveNumber);
    curve_cmd->add_option("--out", curve.out)->required();

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (seal_cmd->parsed()) {
            return cmd_seal(seal, seal_k->count() > 0, seal_secret->count() > 0, out);
        }
        if (open_cmd->parsed()) {
            return cmd_open(open, out);
        }
        if (respond_cmd->parsed()) {
            return cmd_respond(respond, out);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(verify, out);
        }
        if (sim_cmd->parsed()) {
            return cmd_simulate(sim, sim_k->count() > 0, out);
        }
        if (curve_cmd->parsed()) {
            return cmd_curve(curve, out);
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const InvalidInput &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UnsupportedMode &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const doc::FormatError &e) {
        err << "error: " << e.what() << "\n";
        return kIntegrity;
    } catch (const IoError &e) {
        err << "error: " << e.what() << "\n";
        return kIntegrity;
    } catch (const ProtocolCorruption &e) {
        err << "error: " << e.what() << "\n";
        return kIntegrity;
    }
    return kUsage;
}

}  // namespace qseal::cli
