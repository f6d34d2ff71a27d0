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

#ifndef PINGPONG_ANALYSIS_H
#define PINGPONG_ANALYSIS_H

#include <array>
#include <span>
#include <string>
#include <vector>

#include "pingpong/attack.h"
#include "pingpong/joint.h"

namespace pingpong {

/// Exact (j, k, m, coin) distribution of a fully attacked message round on an
/// ideal channel, computed from state vectors with j and the coin uniform.
JointDistribution exact_joint(const AttackVariant &variant);

/// Joint distribution produced by given return-leg output states, one per
/// (j, coin). Coins whose weight is zero may pass any state. With
/// eve_measures false, k is recorded as None.
JointDistribution joint_from_states(const std::array<std::array<StateVector, 2>, 2> &states, bool symmetrized,
                                    bool eve_measures = true);

enum class InfoPair { AE, AB, BE };
std::string_view info_pair_name(InfoPair pair);

/// Shannon mutual information in bits. Eve's side is (k, coin): she knows
/// when she symmetrized. Bob's side is m alone.
double mutual_information(const JointDistribution &joint, InfoPair pair);

/// P(m != j) over message rounds where Bob saw a photon. Phi outcomes count as
/// errors; loss is excluded. Returns 0 if no round reached Bob.
double qber(const JointDistribution &joint);

/// Probability that t is empty at Alice after the forward attack on an ideal channel.
double induced_loss(AttackKind kind);

/// Largest fraction of rounds Eve can attack while the photon rate Alice
/// observes can still be brought down to eta by discarding photons, given
/// that an attacked round keeps its photon with probability `survival`.
double attack_fraction_limit(double survival, double eta);

/// Control-mode detection probability on an ideal channel, every round
/// attacked. With two_basis the z and x bases are equally likely.
double detection_probability(AttackKind kind, bool two_basis);

struct InfoReport {
    double I_AE = 0, I_AB = 0, I_BE = 0;
    double qber = 0;
    double induced_loss = 0;
    double detection_z = 0, detection_two_basis = 0;
};

InfoReport info_report(const AttackVariant &variant);

struct SweepPoint {
    double eta = 0;
    AttackKind kind = AttackKind::None;
    double f_star = 0;
    /// Per transmitted message bit: attacked bits give Eve I_AE; unattacked
    /// bits give her nothing and give Bob one full bit.
    double I_AE_eff = 0;
    double I_AB_eff = 0;
    double induced_loss = 0;
};

/// One point per (eta, kind) for the Wojcik and improved attacks, grid order
/// first. Per-attacked-bit gains come from exact_joint.
std::vector<SweepPoint> sweep(std::span<const double> eta_grid, bool symmetrize = false);

/// `steps` evenly spaced values from start to stop inclusive.
std::vector<double> eta_grid(double start, double stop, int steps);

}  // namespace pingpong

#endif
