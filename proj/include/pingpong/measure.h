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

#ifndef PINGPONG_MEASURE_H
#define PINGPONG_MEASURE_H

#include <array>
#include <string_view>
#include <vector>

#include "pingpong/rng.h"
#include "pingpong/state.h"

namespace pingpong {

enum class Basis { Z, X };
std::string_view basis_name(Basis b);

/// Result of a polarization measurement on one mode. In the x basis Zero
/// stands for |+> and One for |->.
enum class PolarizationOutcome { Vacuum = 0, Zero = 1, One = 2, TwoPhoton = 3 };
std::string_view outcome_name(PolarizationOutcome o);

/// Bob's Bell measurement on (h, t). Components where t is empty or doubly
/// occupied report Loss.
enum class BellOutcome { PsiPlus = 0, PsiMinus = 1, PhiPlus = 2, PhiMinus = 3, Loss = 4 };
std::string_view outcome_name(BellOutcome o);

/// One outcome of a projective measurement together with its Born
/// probability and the renormalized post-measurement state.
template <typename Outcome>
struct Branch {
    Outcome outcome;
    double probability;
    StateVector state;
};

/// Branches with probability above 1e-15, in outcome order. In the x basis the
/// collapsed states are rotated back to the original frame.
std::vector<Branch<PolarizationOutcome>> polarization_branches(const StateVector &state, Register mode,
                                                               Basis basis = Basis::Z);
/// Indexed by PolarizationOutcome.
std::array<double, 4> polarization_distribution(const StateVector &state, Register mode, Basis basis = Basis::Z);
Branch<PolarizationOutcome> measure_polarization(const StateVector &state, Register mode, Basis basis, Rng &rng);

std::vector<Branch<BellOutcome>> bell_branches(const StateVector &state);
/// Indexed by BellOutcome.
std::array<double, 5> bell_distribution(const StateVector &state);
Branch<BellOutcome> measure_bell(const StateVector &state, Rng &rng);

/// Probabilities of finding 0, 1 or 2 photons in a mode.
std::array<double, 3> occupancy_distribution(const StateVector &state, Register mode);

/// Removes the photons of a mode whose content is definite on the support of
/// the state (e.g. right after a z measurement of that mode). Throws
/// std::logic_error if the content is not definite.
StateVector empty_mode(const StateVector &state, Register mode);

/// Picks a branch with probability proportional to its weight.
template <typename Outcome>
Branch<Outcome> sample(std::vector<Branch<Outcome>> branches, Rng &rng) {
    double u = rng.uniform();
    double total = 0;
    for (const auto &b : branches) total += b.probability;
    double acc = 0;
    for (auto &b : branches) {
        acc += b.probability / total;
        if (u < acc) return std::move(b);
    }
    return std::move(branches.back());
}

}  // namespace pingpong

#endif
