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

#ifndef QSEAL_SPARSE_STATE_H
#define QSEAL_SPARSE_STATE_H

#include <cstddef>
#include <span>
#include <vector>

#include "qseal/bits.h"
#include "qseal/rng.h"

namespace qseal {

inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kAmplitudeTolerance = 1e-12;

struct Term {
    BasisString bits;
    double amplitude = 0;
};

/// Real-amplitude superposition over a handful of computational basis
/// strings of equal length. Terms are kept sorted by basis string; every
/// stored amplitude is nonzero and the squared amplitudes sum to one.
class SparseState {
   public:
    /// The basis state |bits>.
    static SparseState basis(BasisString bits);

    /// Validates and sorts arbitrary terms. Throws InvalidInput on empty
    /// input, a length mismatch, duplicate strings, a zero amplitude, or a
    /// norm off by more than kNormTolerance.
    static SparseState from_terms(std::size_t bit_len, std::vector<Term> terms);

    std::size_t bit_len() const { return bit_len_; }
    std::size_t size() const { return terms_.size(); }
    std::span<const Term> terms() const { return terms_; }

    /// Amplitude of `bits`, zero when absent.
    double amplitude(const BasisString &bits) const;

    /// Same support and amplitudes within kAmplitudeTolerance.
    bool approx_equal(const SparseState &other) const;

   private:
    SparseState(std::size_t bit_len, std::vector<Term> terms) : bit_len_(bit_len), terms_(std::move(terms)) {}

    std::size_t bit_len_ = 0;
    std::vector<Term> terms_;
};

/// Equal-weight superposition with amplitude 1/sqrt(k) on each string.
SparseState uniform_superposition(std::span<const BasisString> strings);

double inner_product(const SparseState &a, const SparseState &b);

/// sqrt(1 - <a|b>^2), clamped to [0, 1].
double trace_distance_pure(const SparseState &a, const SparseState &b);

struct Measurement {
    BasisString outcome;
    SparseState collapsed;
};

Measurement measure_computational(const SparseState &state, Rng &rng);

enum class HadamardPath {
    // Closed-form sampling for one or two terms, dense enumeration otherwise.
    Auto,
    // Always enumerate all 2^bit_len outcomes.
    Dense,
};

struct HadamardOptions {
    HadamardPath path = HadamardPath::Auto;
    std::size_t dense_cap = 20;
};

/// Applies H to every qubit and measures in the computational basis.
/// Throws CapacityError if enumeration is needed and bit_len > dense_cap.
BasisString hadamard_measure(const SparseState &state, Rng &rng, const HadamardOptions &options = {});

/// Optimal equal-prior success probability for telling a from b.
double helstrom_success_probability(const SparseState &a, const SparseState &b);

/// Optimal two-outcome measurement for h0 versus h1 with equal priors,
/// applied to `truth`. Returns the guessed hypothesis index. Any part of
/// `truth` outside span{h0, h1} is resolved by a fair coin.
int helstrom_discriminate(const SparseState &truth, const SparseState &h0, const SparseState &h1, Rng &rng);

struct WeightedState {
    double weight = 0;
    SparseState state;
};

/// Helstrom measurement for the pure state h0 versus the mixture
/// sum_i w_i |phi_i><phi_i|, with equal priors. Weights must sum to one.
/// Zero-eigenvalue directions and components outside the joint support are
/// resolved by a fair coin.
int helstrom_discriminate_mixture(
    const SparseState &truth, const SparseState &h0, std::span<const WeightedState> h1, Rng &rng);

/// 1/2 + ||rho0 - rho1||_1 / 4 for the same pair of hypotheses.
double helstrom_success_probability_mixture(const SparseState &h0, std::span<const WeightedState> h1);

}  // namespace qseal

#endif
