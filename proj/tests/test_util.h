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

#ifndef QSEAL_TESTS_TEST_UTIL_H
#define QSEAL_TESTS_TEST_UTIL_H

// Brute-force oracles shared by the test suites. Nothing here calls into the
// sampling or discrimination code it is used to check.

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "qseal/sparse_state.h"

namespace qseal::testing {

/// Dense output distribution of H^{\otimes n} applied to `state`, by an
/// in-place fast Walsh-Hadamard butterfly over the full 2^n vector.
inline std::vector<double> dense_hadamard_distribution(const SparseState &state) {
    const std::size_t n = state.bit_len();
    if (n > 22) {
        throw std::invalid_argument("oracle limited to 22 qubits");
    }
    std::vector<double> v(std::size_t{1} << n, 0.0);
    for (const auto &t : state.terms()) {
        v[t.bits.to_uint()] = t.amplitude;
    }
    for (std::size_t h = 1; h < v.size(); h <<= 1) {
        for (std::size_t i = 0; i < v.size(); i += 2 * h) {
            for (std::size_t j = i; j < i + h; j++) {
                double a = v[j];
                double b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
        }
    }
    const double scale = std::ldexp(1.0, -static_cast<int>(n));
    for (auto &x : v) {
        x = x * x * scale;
    }
    return v;
}

inline double total_variation(const std::vector<double> &p, const std::vector<double> &q) {
    double acc = 0;
    for (std::size_t i = 0; i < p.size(); i++) {
        acc += std::abs(p[i] - q[i]);
    }
    return acc / 2;
}

inline std::vector<double> normalize_counts(const std::vector<std::uint64_t> &counts) {
    double total = 0;
    for (auto c : counts) {
        total += static_cast<double>(c);
    }
    std::vector<double> out;
    for (auto c : counts) {
        out.push_back(static_cast<double>(c) / total);
    }
    return out;
}

/// Upper 0.001 critical values of chi-square for 1..15 degrees of freedom.
inline double chi2_critical_001(std::size_t dof) {
    static const double table[] = {10.828, 13.816, 16.266, 18.467, 20.515, 22.458, 24.322, 26.124,
                                   27.877, 29.588, 31.264, 32.909, 34.528, 36.123, 37.697};
    if (dof < 1 || dof > 15) {
        throw std::invalid_argument("chi-square table covers 1..15 dof");
    }
    return table[dof - 1];
}

inline double chi2_statistic(const std::vector<std::uint64_t> &counts, const std::vector<double> &probs) {
    double total = 0;
    for (auto c : counts) {
        total += static_cast<double>(c);
    }
    double stat = 0;
    for (std::size_t i = 0; i < counts.size(); i++) {
        double expected = total * probs[i];
        double diff = static_cast<double>(counts[i]) - expected;
        stat += diff * diff / expected;
    }
    return stat;
}

/// Three binomial standard errors around p for n trials.
inline double three_se(double p, std::uint64_t n) { return 3 * std::sqrt(p * (1 - p) / static_cast<double>(n)); }

}  // namespace qseal::testing

#endif
