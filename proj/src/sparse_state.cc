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

#include "qseal/sparse_state.h"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <string>

#include "qseal/errors.h"

namespace qseal {

namespace {

void require_same_bit_len(const SparseState &a, const SparseState &b) {
    if (a.bit_len() != b.bit_len()) {
        throw InvalidInput(
            "states differ in register size (" + std::to_string(a.bit_len()) + " vs " + std::to_string(b.bit_len()) +
            ")");
    }
}

int resolve(double p0, double p1, Rng &rng) {
    double u = rng.uniform01();
    if (u < p0) {
        return 0;
    }
    if (u < p0 + p1) {
        return 1;
    }
    return rng.coin() ? 1 : 0;
}

BasisString hadamard_dense(const SparseState &state, Rng &rng, std::size_t cap) {
    const std::size_t n = state.bit_len();
    if (n > cap) {
        throw CapacityError(
            "dense Hadamard enumeration needs bit_len <= " + std::to_string(cap) + ", got " + std::to_string(n));
    }
    std::vector<std::uint64_t> keys;
    std::vector<double> amps;
    for (const auto &t : state.terms()) {
        keys.push_back(t.bits.to_uint());
        amps.push_back(t.amplitude);
    }
    const std::uint64_t outcomes = std::uint64_t{1} << n;
    const double scale = std::ldexp(1.0, -static_cast<int>(n));
    const double u = rng.uniform01();
    double cumulative = 0;
    std::uint64_t last_nonzero = 0;
    for (std::uint64_t d = 0; d < outcomes; d++) {
        double amp = 0;
        for (std::size_t j = 0; j < keys.size(); j++) {
            amp += (std::popcount(d & keys[j]) & 1) ? -amps[j] : amps[j];
        }
        double p = amp * amp * scale;
        if (p > 0) {
            last_nonzero = d;
        }
        cumulative += p;
        if (u < cumulative) {
            return BasisString::from_uint(d, n);
        }
    }
    return BasisString::from_uint(last_nonzero, n);
}

}  // namespace

SparseState SparseState::basis(BasisString bits) {
    if (bits.empty()) {
        throw InvalidInput("basis string must be nonempty");
    }
    std::size_t n = bits.size();
    return SparseState(n, {Term{std::move(bits), 1.0}});
}

SparseState SparseState::from_terms(std::size_t bit_len, std::vector<Term> terms) {
    if (bit_len == 0) {
        throw InvalidInput("register size must be positive");
    }
    if (terms.empty()) {
        throw InvalidInput("state needs at least one term");
    }
    double norm = 0;
    for (const auto &t : terms) {
        if (t.bits.size() != bit_len) {
            throw InvalidInput("term length does not match register size");
        }
        if (t.amplitude == 0 || !std::isfinite(t.amplitude)) {
            throw InvalidInput("amplitudes must be finite and nonzero");
        }
        norm += t.amplitude * t.amplitude;
    }
    if (std::abs(norm - 1) > kNormTolerance) {
        throw InvalidInput("state is not normalized (sum of squares " + std::to_string(norm) + ")");
    }
    std::sort(terms.begin(), terms.end(), [](const Term &a, const Term &b) { return a.bits < b.bits; });
    for (std::size_t i = 1; i < terms.size(); i++) {
        if (terms[i].bits == terms[i - 1].bits) {
            throw InvalidInput("duplicate basis string " + terms[i].bits.to_hex());
        }
    }
    return SparseState(bit_len, std::move(terms));
}

double SparseState::amplitude(const BasisString &bits) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), bits, [](const Term &t, const BasisString &b) { return t.bits < b; });
    if (it != terms_.end() && it->bits == bits) {
        return it->amplitude;
    }
    return 0;
}

bool SparseState::approx_equal(const SparseState &other) const {
    if (bit_len_ != other.bit_len_ || terms_.size() != other.terms_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < terms_.size(); i++) {
        if (terms_[i].bits != other.terms_[i].bits ||
            std::abs(terms_[i].amplitude - other.terms_[i].amplitude) > kAmplitudeTolerance) {
            return false;
        }
    }
    return true;
}

SparseState uniform_superposition(std::span<const BasisString> strings) {
    if (strings.empty()) {
        throw InvalidInput("superposition needs at least one string");
    }
    const double amp = 1.0 / std::sqrt(static_cast<double>(strings.size()));
    std::vector<Term> terms;
    terms.reserve(strings.size());
    for (const auto &s : strings) {
        terms.push_back(Term{s, amp});
    }
    return SparseState::from_terms(strings.front().size(), std::move(terms));
}

double inner_product(const SparseState &a, const SparseState &b) {
    require_same_bit_len(a, b);
    // Merge walk over the two sorted supports.
    auto ta = a.terms();
    auto tb = b.terms();
    std::size_t i = 0;
    std::size_t j = 0;
    double acc = 0;
    while (i < ta.size() && j < tb.size()) {
        if (ta[i].bits < tb[j].bits) {
            i++;
        } else if (tb[j].bits < ta[i].bits) {
            j++;
        } else {
            acc += ta[i].amplitude * tb[j].amplitude;
            i++;
            j++;
        }
    }
    return acc;
}

double trace_distance_pure(const SparseState &a, const SparseState &b) {
    // sqrt amplifies rounding in 1 - overlap^2 to ~1e-8, so equal states are
    // special-cased to give exactly zero.
    if (a.approx_equal(b)) {
        require_same_bit_len(a, b);
        return 0;
    }
    double overlap = inner_product(a, b);
    return std::sqrt(std::clamp(1 - overlap * overlap, 0.0, 1.0));
}

Measurement measure_computational(const SparseState &state, Rng &rng) {
    auto terms = state.terms();
    const double u = rng.uniform01();
    double cumulative = 0;
    const Term *chosen = &terms.back();
    for (const auto &t : terms) {
        cumulative += t.amplitude * t.amplitude;
        if (u < cumulative) {
            chosen = &t;
            break;
        }
    }
    return Measurement{chosen->bits, SparseState::basis(chosen->bits)};
}

BasisString hadamard_measure(const SparseState &state, Rng &rng, const HadamardOptions &options) {
    auto terms = state.terms();
    if (options.path == HadamardPath::Dense || terms.size() > 2) {
        return hadamard_dense(state, rng, options.dense_cap);
    }
    BasisString d = BasisString::random(state.bit_len(), rng);
    if (terms.size() == 1) {
        return d;
    }
    // Outcome amplitude is proportional to a + b (-1)^{d.delta}, so the parity
    // d.delta is 0 with probability (a+b)^2/2 and d is uniform within the
    // chosen coset. Flipping one bit where delta is set swaps cosets.
    const BasisString delta = terms[0].bits ^ terms[1].bits;
    const double sum = terms[0].amplitude + terms[1].amplitude;
    const bool want_odd = rng.uniform01() >= sum * sum / 2;
    if (d.dot(delta) != want_odd) {
        d.flip(delta.lowest_set_index());
    }
    return d;
}

double helstrom_success_probability(const SparseState &a, const SparseState &b) {
    return 0.5 + trace_distance_pure(a, b) / 2;
}

int helstrom_discriminate(const SparseState &truth, const SparseState &h0, const SparseState &h1, Rng &rng) {
    require_same_bit_len(truth, h0);
    require_same_bit_len(h0, h1);
    // Gram matrix [[1, c], [c, 1]]. Orthonormalize: e0 = h0, e1 = (h1 - c h0)/s,
    // so h0 = (1, 0) and h1 = (c, s). The operator |h0><h0| - |h1><h1| is then
    // s * [[s, -c], [-c, -s]] with eigenvalues +-s and eigenvectors
    // (1 + s, -c) and (c, 1 + s), both of squared norm 2 + 2s.
    const double c = inner_product(h0, h1);
    const double s2 = 1 - c * c;
    if (s2 <= kAmplitudeTolerance) {
        throw InvalidInput("hypotheses are the same state");
    }
    const double s = std::sqrt(s2);
    const double t0 = inner_product(h0, truth);
    const double t1 = (inner_product(h1, truth) - c * t0) / s;
    const double norm = 2 + 2 * s;
    const double along0 = (1 + s) * t0 - c * t1;
    const double along1 = c * t0 + (1 + s) * t1;
    return resolve(along0 * along0 / norm, along1 * along1 / norm, rng);
}

namespace {

struct MixtureOperator {
    std::map<BasisString, int> index;
    Eigen::MatrixXd positive;  // projector onto positive eigenspace
    Eigen::MatrixXd zero;      // projector onto null eigenspace within the support
    double trace_norm = 0;
};

MixtureOperator build_mixture_operator(const SparseState &h0, std::span<const WeightedState> h1) {
    if (h1.empty()) {
        throw InvalidInput("mixture needs at least one component");
    }
    double total = 0;
    for (const auto &w : h1) {
        require_same_bit_len(h0, w.state);
        if (!(w.weight >= 0)) {
            throw InvalidInput("mixture weights must be nonnegative");
        }
        total += w.weight;
    }
    if (std::abs(total - 1) > kNormTolerance) {
        throw InvalidInput("mixture weights must sum to one");
    }

    MixtureOperator op;
    auto add_support = [&](const SparseState &st) {
        for (const auto &t : st.terms()) {
            op.index.emplace(t.bits, 0);
        }
    };
    add_support(h0);
    for (const auto &w : h1) {
        add_support(w.state);
    }
    constexpr std::size_t kMaxDim = 4096;
    if (op.index.size() > kMaxDim) {
        throw CapacityError("joint support too large for mixture discrimination");
    }
    int next = 0;
    for (auto &[bits, i] : op.index) {
        i = next++;
    }
    const int dim = next;
    auto vec = [&](const SparseState &st) {
        Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
        for (const auto &t : st.terms()) {
            v[op.index.at(t.bits)] = t.amplitude;
        }
        return v;
    };

    Eigen::VectorXd v0 = vec(h0);
    Eigen::MatrixXd diff = v0 * v0.transpose();
    for (const auto &w : h1) {
        Eigen::VectorXd v = vec(w.state);
        diff -= w.weight * (v * v.transpose());
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(diff);
    const auto &vals = solver.eigenvalues();
    const auto &vecs = solver.eigenvectors();
    op.positive = Eigen::MatrixXd::Zero(dim, dim);
    op.zero = Eigen::MatrixXd::Zero(dim, dim);
    for (int i = 0; i < dim; i++) {
        op.trace_norm += std::abs(vals[i]);
        if (vals[i] > kAmplitudeTolerance) {
            op.positive += vecs.col(i) * vecs.col(i).transpose();
        } else if (vals[i] >= -kAmplitudeTolerance) {
            op.zero += vecs.col(i) * vecs.col(i).transpose();
        }
    }
    return op;
}

}  // namespace

int helstrom_discriminate_mixture(
    const SparseState &truth, const SparseState &h0, std::span<const WeightedState> h1, Rng &rng) {
    require_same_bit_len(truth, h0);
    MixtureOperator op = build_mixture_operator(h0, h1);
    Eigen::VectorXd t = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(op.index.size()));
    double outside = 0;
    for (const auto &term : truth.terms()) {
        auto it = op.index.find(term.bits);
        if (it == op.index.end()) {
            outside += term.amplitude * term.amplitude;
        } else {
            t[it->second] = term.amplitude;
        }
    }
    const double p_pos = t.dot(op.positive * t);
    const double p_zero = t.dot(op.zero * t);
    const double p0 = p_pos + p_zero / 2;
    const double p1 = std::max(0.0, 1 - p_pos - p_zero - outside) + p_zero / 2;
    // Remaining mass (outside the joint support) goes to resolve's coin.
    return resolve(p0, p1, rng);
}

double helstrom_success_probability_mixture(const SparseState &h0, std::span<const WeightedState> h1) {
    return 0.5 + build_mixture_operator(h0, h1).trace_norm / 4;
}

}  // namespace qseal
