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

#include "qseal/experiment.h"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <thread>

#include "qseal/errors.h"

namespace qseal {

namespace {

constexpr double kZ95 = 1.959963984540054;
constexpr std::size_t kNarySecretBytes = 16;

Sealed make_seal(SealMode mode, std::size_t bit_len, Rng &rng) {
    if (mode.kind == SealKind::BinaryTcf) {
        return alice_seal_binary(TcfParams{bit_len}, rng);
    }
    Bytes y(kNarySecretBytes);
    for (auto &b : y) {
        b = static_cast<std::uint8_t>(rng.next_u64());
    }
    return alice_seal_nary(mode.k, y, bit_len, rng);
}

EstimateReport make_report(std::string statistic, std::uint64_t successes, std::uint64_t trials,
                           std::optional<double> theory) {
    EstimateReport r;
    r.statistic = std::move(statistic);
    r.successes = successes;
    r.trials = trials;
    r.p_hat = static_cast<double>(successes) / static_cast<double>(trials);
    Interval ci = wilson_interval(successes, trials);
    r.ci_low = ci.low;
    r.ci_high = ci.high;
    r.p_theory = theory;
    return r;
}

void validate_seal_shape(SealMode mode, std::size_t bit_len) {
    mode.validate();
    if (mode.kind == SealKind::BinaryTcf) {
        TcfParams{bit_len}.validate();
    } else if (bit_len == 0 || (bit_len < 64 && (std::uint64_t{1} << bit_len) < 4 * mode.k)) {
        throw InvalidInput("register too small: need 2^bit_len >= 4k");
    }
}

}  // namespace

std::string_view to_string(Statistic statistic) {
    return statistic == Statistic::Acceptance ? "acceptance" : "detection";
}

void TrialConfig::validate() const {
    validate_seal_shape(mode, bit_len);
    if (trials < 1) {
        throw InvalidInput("need at least one trial");
    }
    if (!compatible(strategy, return_kind)) {
        throw InvalidInput(
            std::string("strategy ") + std::string(to_string(strategy)) + " cannot produce a " +
            std::string(to_string(return_kind)) + " return");
    }
    if (return_kind == ReturnKind::Classical && mode.branches() != 2) {
        throw InvalidInput("classical return is only defined for two-branch seals");
    }
}

Statistic TrialConfig::effective_statistic() const {
    if (statistic) {
        return *statistic;
    }
    return strategy == CheatStrategy::Honest ? Statistic::Acceptance : Statistic::Detection;
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials) {
    if (trials == 0 || successes > trials) {
        throw InvalidInput("invalid binomial counts");
    }
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = kZ95 * kZ95;
    const double denom = 1 + z2 / n;
    const double center = (p + z2 / (2 * n)) / denom;
    const double half = kZ95 / denom * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n));
    // Clamp so rounding never pushes p_hat outside its own interval.
    return Interval{std::clamp(std::min(center - half, p), 0.0, 1.0), std::clamp(std::max(center + half, p), 0.0, 1.0)};
}

double theory_pcheck(std::size_t k) {
    if (k < 1) {
        throw InvalidInput("need at least one superposed string");
    }
    return 0.5 + 0.5 * std::sqrt(1 - 1 / static_cast<double>(k));
}

std::optional<double> theory_rate(const TrialConfig &config) {
    const double k = static_cast<double>(config.mode.branches());
    // Chance that a uniformly random basis state lands on one of the branches.
    const double hit = std::min(1.0, k * std::ldexp(1.0, -static_cast<int>(config.bit_len)));
    std::optional<double> accept;
    if (config.return_kind == ReturnKind::Classical) {
        accept = config.strategy == CheatStrategy::Honest ? 1.0 : 0.5;
    } else if (config.verify_method == VerifyMethod::Projective) {
        switch (config.strategy) {
            case CheatStrategy::Honest:
                accept = 1.0;
                break;
            case CheatStrategy::MeasureKeepCollapsed:
                accept = 1 / k;
                break;
            case CheatStrategy::MeasureReturnRandomBasis:
                accept = hit / k;
                break;
            case CheatStrategy::MeasureGuessD:
                break;
        }
    } else {
        const double pcheck = theory_pcheck(config.mode.branches());
        switch (config.strategy) {
            case CheatStrategy::Honest:
                accept = pcheck;
                break;
            case CheatStrategy::MeasureKeepCollapsed:
                accept = 1 - pcheck;
                break;
            case CheatStrategy::MeasureReturnRandomBasis:
                accept = hit * (1 - pcheck);
                break;
            case CheatStrategy::MeasureGuessD:
                break;
        }
    }
    if (!accept) {
        return std::nullopt;
    }
    return config.effective_statistic() == Statistic::Acceptance ? *accept : 1 - *accept;
}

std::uint64_t count_successes(
    std::uint64_t trials, std::uint64_t seed, unsigned threads, const std::function<bool(Rng &)> &trial) {
    auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t hits = 0;
        for (std::uint64_t i = begin; i < end; i++) {
            Rng rng(derive_seed(seed, i));
            hits += trial(rng) ? 1 : 0;
        }
        return hits;
    };
    threads = std::max(1u, threads);
    if (threads == 1 || trials < 2 * threads) {
        return run_range(0, trials);
    }
    std::vector<std::uint64_t> partial(threads, 0);
    std::vector<std::exception_ptr> errors(threads);
    {
        std::vector<std::jthread> workers;
        for (unsigned t = 0; t < threads; t++) {
            std::uint64_t begin = trials * t / threads;
            std::uint64_t end = trials * (t + 1) / threads;
            workers.emplace_back([&, t, begin, end] {
                try {
                    partial[t] = run_range(begin, end);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    std::uint64_t total = 0;
    for (auto p : partial) {
        total += p;
    }
    return total;
}

EstimateReport run_trials(const TrialConfig &config, unsigned threads) {
    config.validate();
    const Statistic statistic = config.effective_statistic();
    auto trial = [&](Rng &rng) {
        Sealed sealed = make_seal(config.mode, config.bit_len, rng);
        ReturnMessage reply = bob_respond(std::move(sealed.package), config.strategy, config.return_kind, rng);
        Verdict verdict = alice_verify(sealed.secret, reply, config.verify_method, rng);
        return statistic == Statistic::Acceptance ? verdict == Verdict::Accept : verdict == Verdict::Reject;
    };
    std::uint64_t hits = count_successes(config.trials, config.seed, threads, trial);
    return make_report(std::string(to_string(statistic)), hits, config.trials, theory_rate(config));
}

EstimateReport read_trials(
    SealMode mode, std::size_t bit_len, std::uint64_t trials, std::uint64_t seed, unsigned threads) {
    validate_seal_shape(mode, bit_len);
    if (trials < 1) {
        throw InvalidInput("need at least one trial");
    }
    auto trial = [&](Rng &rng) {
        Sealed sealed = make_seal(mode, bit_len, rng);
        return bob_open(sealed.package, rng) == sealed.secret.y;
    };
    return make_report("read", count_successes(trials, seed, threads, trial), trials, 1.0);
}

EstimateReport mixture_diagnostic(std::size_t bit_len, std::uint64_t trials, std::uint64_t seed, unsigned threads) {
    validate_seal_shape(SealMode::binary(), bit_len);
    if (trials < 1) {
        throw InvalidInput("need at least one trial");
    }
    auto trial = [&](Rng &rng) {
        Sealed sealed = make_seal(SealMode::binary(), bit_len, rng);
        const SparseState &psi = sealed.secret.original_state;
        std::vector<WeightedState> mixture;
        for (const auto &x : sealed.secret.branch_strings) {
            mixture.push_back(WeightedState{0.5, SparseState::basis(x)});
        }
        const bool cheated = rng.coin();
        SparseState truth =
            cheated ? measure_computational(sealed.package.quantum_register, rng).collapsed : sealed.package.quantum_register;
        int guess = helstrom_discriminate_mixture(truth, psi, mixture, rng);
        return guess == (cheated ? 1 : 0);
    };
    // Optimal success for psi versus the k-branch mixture is 1 - 1/(2k).
    return make_report("mixture_discrimination_success", count_successes(trials, seed, threads, trial), trials, 0.75);
}

std::vector<CurvePoint> fig1_curve(
    std::size_t k_max, std::uint64_t trials_per_point, std::size_t bit_len, std::uint64_t seed, unsigned threads) {
    if (k_max < 2 || k_max > kMaxBranches) {
        throw InvalidInput("k_max must lie in [2, " + std::to_string(kMaxBranches) + "]");
    }
    std::vector<CurvePoint> points;
    for (std::size_t k = 2; k <= k_max; k++) {
        TrialConfig config;
        config.mode = SealMode::nary(k);
        config.bit_len = bit_len;
        config.strategy = CheatStrategy::MeasureKeepCollapsed;
        config.return_kind = ReturnKind::Quantum;
        config.verify_method = VerifyMethod::HelstromPerBranch;
        config.trials = trials_per_point;
        config.seed = derive_seed(seed, k);
        EstimateReport r = run_trials(config, threads);
        points.push_back(CurvePoint{k, theory_pcheck(k), r.p_hat, r.ci_low, r.ci_high, r.trials});
    }
    return points;
}

std::string curve_csv(const std::vector<CurvePoint> &points) {
    std::string out = "k,p_theory,p_hat,ci_low,ci_high,trials\n";
    char line[160];
    for (const auto &p : points) {
        std::snprintf(line, sizeof line, "%zu,%.6f,%.6f,%.6f,%.6f,%" PRIu64 "\n", p.k, p.p_theory, p.p_hat, p.ci_low,
                      p.ci_high, p.trials);
        out += line;
    }
    return out;
}

}  // namespace qseal
