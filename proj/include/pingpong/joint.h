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

#ifndef PINGPONG_JOINT_H
#define PINGPONG_JOINT_H

#include <array>
#include <cstddef>

#include "pingpong/measure.h"

namespace pingpong {

/// Eve's result k. None covers both "Eve did not measure" and "no photon in y".
enum class KSymbol { Zero = 0, One = 1, None = 2 };

KSymbol k_symbol(PolarizationOutcome eve_result);

/// Probability table over Alice's bit j, Eve's result k, Bob's Bell outcome m
/// and the symmetrization coin.
class JointDistribution {
   public:
    static constexpr size_t kJ = 2, kK = 3, kM = 5, kCoin = 2;
    static constexpr size_t kCells = kJ * kK * kM * kCoin;

    static constexpr size_t cell(int j, KSymbol k, BellOutcome m, int coin) {
        return ((static_cast<size_t>(j) * kK + static_cast<size_t>(k)) * kM + static_cast<size_t>(m)) * kCoin +
               static_cast<size_t>(coin);
    }

    double &at(int j, KSymbol k, BellOutcome m, int coin = 0) { return p_[cell(j, k, m, coin)]; }
    double at(int j, KSymbol k, BellOutcome m, int coin = 0) const { return p_[cell(j, k, m, coin)]; }

    /// Sum over coin.
    double p_jkm(int j, KSymbol k, BellOutcome m) const { return at(j, k, m, 0) + at(j, k, m, 1); }

    double total() const;
    JointDistribution normalized() const;
    /// Half the L1 distance over all cells.
    double total_variation(const JointDistribution &other) const;
    /// Largest absolute cell difference.
    double max_deviation(const JointDistribution &other) const;

    JointDistribution &operator+=(const JointDistribution &other);
    JointDistribution scaled(double factor) const;

    template <typename Fn>
    void for_each(Fn &&fn) const {
        for (int j = 0; j < 2; j++)
            for (int k = 0; k < 3; k++)
                for (int m = 0; m < 5; m++)
                    for (int c = 0; c < 2; c++) {
                        fn(j, static_cast<KSymbol>(k), static_cast<BellOutcome>(m), c,
                           at(j, static_cast<KSymbol>(k), static_cast<BellOutcome>(m), c));
                    }
    }

   private:
    std::array<double, kCells> p_{};
};

}  // namespace pingpong

#endif
