// Copyright 2026 The pingpong-sim Authors
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

#ifndef PINGPONG_RNG_H
#define PINGPONG_RNG_H

#include <cstdint>
#include <random>

namespace pingpong {

/// Seeded generator. Draws are platform independent: uniform doubles are
/// built from the top 53 bits of mt19937_64 rather than std distributions.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    /// Independent stream for one round of a session.
    static Rng for_stream(uint64_t seed, uint64_t stream) { return Rng(mix(mix(seed) ^ mix(stream + 1))); }

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    bool bernoulli(double p) { return uniform() < p; }
    int bit() { return static_cast<int>(engine_() >> 63); }

   private:
    static uint64_t mix(uint64_t z) {
        // splitmix64 finalizer
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::mt19937_64 engine_;
};

}  // namespace pingpong

#endif
