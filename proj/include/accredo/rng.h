// Copyright 2026 The Accredo Authors
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

#pragma once

#include <cstdint>
#include <random>

namespace accredo {

/// Mixes a 64-bit value (splitmix64 finalizer).
constexpr uint64_t mix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Derives an independent stream seed from a root seed and stream coordinates,
/// e.g. (campaign seed, run index) or (seed, run index, shot index).
constexpr uint64_t derive_seed(uint64_t root, uint64_t a, uint64_t b = 0) {
    return mix64(mix64(mix64(root) ^ a) ^ (b * 0xD1B54A32D192ED03ull));
}

/// Seeded random source used throughout the library.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. Bounded integers and doubles are derived here rather than through
/// std::uniform_*_distribution, whose algorithms vary between standard library
/// implementations; seeded runs therefore reproduce across toolchains.
class Rng {
   public:
    using result_type = uint64_t;

    explicit Rng(uint64_t seed) : engine_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }
    result_type operator()() { return engine_(); }

    /// Uniform integer in [0, bound). bound must be nonzero.
    uint64_t uniform_below(uint64_t bound) {
        // Lemire's nearly-divisionless method.
        unsigned __int128 product = static_cast<unsigned __int128>(engine_()) * bound;
        auto low = static_cast<uint64_t>(product);
        if (low < bound) {
            uint64_t threshold = -bound % bound;
            while (low < threshold) {
                product = static_cast<unsigned __int128>(engine_()) * bound;
                low = static_cast<uint64_t>(product);
            }
        }
        return static_cast<uint64_t>(product >> 64);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Always consumes exactly one draw, whatever the value of p.
    bool bernoulli(double p) { return uniform01() < p; }

   private:
    std::mt19937_64 engine_;
};

}  // namespace accredo
