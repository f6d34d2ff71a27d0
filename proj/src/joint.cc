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

#include "pingpong/joint.h"

#include <cmath>
#include <stdexcept>

namespace pingpong {

KSymbol k_symbol(PolarizationOutcome eve_result) {
    switch (eve_result) {
        case PolarizationOutcome::Zero:
            return KSymbol::Zero;
        case PolarizationOutcome::One:
            return KSymbol::One;
        default:
            return KSymbol::None;
    }
}

double JointDistribution::total() const {
    double t = 0;
    for (double v : p_) t += v;
    return t;
}

JointDistribution JointDistribution::normalized() const {
    double t = total();
    if (t <= 0) throw std::domain_error("cannot normalize an empty distribution");
    return scaled(1.0 / t);
}

double JointDistribution::total_variation(const JointDistribution &other) const {
    double d = 0;
    for (size_t i = 0; i < kCells; i++) d += std::abs(p_[i] - other.p_[i]);
    return 0.5 * d;
}

double JointDistribution::max_deviation(const JointDistribution &other) const {
    double d = 0;
    for (size_t i = 0; i < kCells; i++) d = std::max(d, std::abs(p_[i] - other.p_[i]));
    return d;
}

JointDistribution &JointDistribution::operator+=(const JointDistribution &other) {
    for (size_t i = 0; i < kCells; i++) p_[i] += other.p_[i];
    return *this;
}

JointDistribution JointDistribution::scaled(double factor) const {
    JointDistribution out = *this;
    for (double &v : out.p_) v *= factor;
    return out;
}

}  // namespace pingpong
