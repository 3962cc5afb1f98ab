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

#ifndef QSEAL_EXPERIMENT_H
#define QSEAL_EXPERIMENT_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qseal/seal.h"

namespace qseal {

enum class Statistic { Acceptance, Detection };

std::string_view to_string(Statistic statistic);

struct TrialConfig {
    SealMode mode = SealMode::binary();
    std::size_t bit_len = 16;
    CheatStrategy strategy = CheatStrategy::Honest;
    ReturnKind return_kind = ReturnKind::Quantum;
    VerifyMethod verify_method = VerifyMethod::Projective;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    // Defaults to acceptance for honest Bob and detection for a cheater.
    std::optional<Statistic> statistic;

    void validate() const;
    Statistic effective_statistic() const;
};

struct EstimateReport {
    std::string statistic;
    std::uint64_t successes = 0;
    std::uint64_t trials = 0;
    double p_hat = 0;
    double ci_low = 0;
    double ci_high = 0;
    std::optional<double> p_theory;
};

struct CurvePoint {
    std::size_t k = 0;
    double p_theory = 0;
    double p_hat = 0;
    double ci_low = 0;
    double ci_high = 0;
    std::uint64_t trials = 0;
};

struct Interval {
    double low = 0;
    double high = 0;
};

/// 95% Wilson score interval for `successes` out of `trials`.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials);

/// 1/2 + 1/2 sqrt(1 - 1/k).
double theory_pcheck(std::size_t k);

/// Closed-form value of the configured statistic, when one applies.
std::optional<double> theory_rate(const TrialConfig &config);

/// Runs `trials` independent Bernoulli trials. Trial i draws from
/// Rng(derive_seed(seed, i)) regardless of how work is split, so the count is
/// identical for every `threads` value.
std::uint64_t count_successes(
    std::uint64_t trials, std::uint64_t seed, unsigned threads, const std::function<bool(Rng &)> &trial);

/// Seal, respond, verify; p_hat is the frequency of the configured statistic.
EstimateReport run_trials(const TrialConfig &config, unsigned threads = 1);

/// Fraction of honest openings that return Alice's y.
EstimateReport read_trials(
    SealMode mode, std::size_t bit_len, std::uint64_t trials, std::uint64_t seed, unsigned threads = 1);

/// Two-branch seal, verifier not told which branch a cheater kept: optimal
/// equal-prior discrimination of psi against the uniform branch mixture.
EstimateReport mixture_diagnostic(std::size_t bit_len, std::uint64_t trials, std::uint64_t seed, unsigned threads = 1);

/// n-ary seals with k = 2..k_max under (MeasureKeepCollapsed,
/// HelstromPerBranch), each point paired with theory_pcheck(k).
std::vector<CurvePoint> fig1_curve(
    std::size_t k_max, std::uint64_t trials_per_point, std::size_t bit_len, std::uint64_t seed,
    unsigned threads = 1);

/// Header `k,p_theory,p_hat,ci_low,ci_high,trials`, reals to 6 decimals.
std::string curve_csv(const std::vector<CurvePoint> &points);

}  // namespace qseal

#endif
