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

#ifndef QSEAL_RNG_H
#define QSEAL_RNG_H

#include <cstdint>
#include <random>

namespace qseal {

/// Seeded randomness source. Wraps std::mt19937_64, whose output sequence is
/// fixed by the standard, and derives every draw from raw 64-bit words so
/// results do not depend on the standard library's distribution classes.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [0, bound). Requires bound > 0.
    std::uint64_t uniform_below(std::uint64_t bound);

    /// Uniform double in [0, 1) with 53 bits of resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool coin() { return (engine_() >> 63) != 0; }

   private:
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Seed of independent stream `stream` under `master`. Counter-based, so any
/// trial's stream can be rebuilt without replaying the others.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

}  // namespace qseal

#endif
