// Copyright 2026 The Qentro Authors
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

#ifndef QENTRO_RANDOM_H
#define QENTRO_RANDOM_H

#include <cstdint>
#include <random>

namespace qentro {

/// Seeded pseudo-random stream. Streams are single-owner; concurrent work
/// derives independent substreams with `derive` instead of sharing one.
class RandomStream {
   public:
    explicit RandomStream(uint64_t seed) : seed_(seed), engine_(mix(seed)) {
    }

    /// Independent stream for work unit `index` under `master`. Depends only on
    /// the pair, so results do not depend on scheduling order.
    static RandomStream derive(uint64_t master, uint64_t index) {
        return RandomStream(mix(master ^ mix(index + 0x632be59bd9b4e019ULL)));
    }

    RandomStream substream(uint64_t index) const {
        return derive(seed_, index);
    }

    uint64_t seed() const noexcept {
        return seed_;
    }

    uint64_t next_u64() {
        return engine_();
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// True with probability `p`.
    bool bernoulli(double p) {
        return uniform() < p;
    }

    double normal() {
        return normal_(engine_);
    }

    using result_type = std::mt19937_64::result_type;
    static constexpr result_type min() {
        return std::mt19937_64::min();
    }
    static constexpr result_type max() {
        return std::mt19937_64::max();
    }
    result_type operator()() {
        return engine_();
    }

   private:
    // splitmix64 finalizer
    static uint64_t mix(uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    uint64_t seed_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_;
};

}  // namespace qentro

#endif
