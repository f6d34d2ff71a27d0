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

#include "pingpong/measure.h"

#include <cmath>
#include <stdexcept>

#include "pingpong/gates.h"

namespace pingpong {

namespace {

constexpr double kMinBranch = 1e-15;

PolarizationOutcome outcome_of(ModeOccupancy m) { return static_cast<PolarizationOutcome>(m.index()); }

const Gate &hadamard_for(Register mode) {
    static const std::array<Gate, 4> gates = {gate_hadamard(Register::H), gate_hadamard(Register::T),
                                              gate_hadamard(Register::X), gate_hadamard(Register::Y)};
    return gates[static_cast<size_t>(mode)];
}

// Bell state amplitude <bell|h, t-polarization>.
double bell_coefficient(BellOutcome bell, int h, int tp) {
    const double r = 1.0 / std::sqrt(2.0);
    switch (bell) {
        case BellOutcome::PsiPlus:
            return h != tp ? r : 0.0;
        case BellOutcome::PsiMinus:
            return h != tp ? (h == 0 ? r : -r) : 0.0;
        case BellOutcome::PhiPlus:
            return h == tp ? r : 0.0;
        case BellOutcome::PhiMinus:
            return h == tp ? (h == 0 ? r : -r) : 0.0;
        case BellOutcome::Loss:
            break;
    }
    return 0.0;
}

}  // namespace

std::string_view basis_name(Basis b) { return b == Basis::Z ? "z" : "x"; }

std::string_view outcome_name(PolarizationOutcome o) {
    switch (o) {
        case PolarizationOutcome::Vacuum:
            return "vac";
        case PolarizationOutcome::Zero:
            return "0";
        case PolarizationOutcome::One:
            return "1";
        case PolarizationOutcome::TwoPhoton:
            return "two-photon";
    }
    return "?";
}

std::string_view outcome_name(BellOutcome o) {
    switch (o) {
        case BellOutcome::PsiPlus:
            return "psi+";
        case BellOutcome::PsiMinus:
            return "psi-";
        case BellOutcome::PhiPlus:
            return "phi+";
        case BellOutcome::PhiMinus:
            return "phi-";
        case BellOutcome::Loss:
            return "loss";
    }
    return "?";
}

std::vector<Branch<PolarizationOutcome>> polarization_branches(const StateVector &state, Register mode,
                                                               Basis basis) {
    const StateVector rotated = basis == Basis::X ? hadamard_for(mode).apply(state) : state;
    std::array<StateVector, 4> parts;
    for (size_t i = 0; i < BasisLabel::kCount; i++) {
        Amplitude a = rotated.at(i);
        if (a == Amplitude{}) continue;
        auto b = BasisLabel::from_index(i);
        parts[static_cast<size_t>(b.get(mode).index())].at(i) = a;
    }
    std::vector<Branch<PolarizationOutcome>> out;
    for (int o = 0; o < 4; o++) {
        double p = parts[o].norm_squared();
        if (p <= kMinBranch) continue;
        StateVector collapsed = parts[o].normalized();
        if (basis == Basis::X) collapsed = hadamard_for(mode).apply(collapsed);
        out.push_back({static_cast<PolarizationOutcome>(o), p, collapsed});
    }
    return out;
}

std::array<double, 4> polarization_distribution(const StateVector &state, Register mode, Basis basis) {
    std::array<double, 4> dist{};
    const StateVector rotated = basis == Basis::X ? hadamard_for(mode).apply(state) : state;
    for (size_t i = 0; i < BasisLabel::kCount; i++) {
        dist[static_cast<size_t>(outcome_of(BasisLabel::from_index(i).get(mode)))] += std::norm(rotated.at(i));
    }
    return dist;
}

Branch<PolarizationOutcome> measure_polarization(const StateVector &state, Register mode, Basis basis, Rng &rng) {
    return sample(polarization_branches(state, mode, basis), rng);
}

std::vector<Branch<BellOutcome>> bell_branches(const StateVector &state) {
    // Rest labels (t-count, x, y) with t holding one photon are indexed by
    // (x, y); the Bell components are computed per rest label.
    std::array<StateVector, 5> parts;
    for (size_t i = 0; i < BasisLabel::kCount; i++) {
        Amplitude a = state.at(i);
        if (a == Amplitude{}) continue;
        auto b = BasisLabel::from_index(i);
        if (!b.t.is_single()) parts[static_cast<size_t>(BellOutcome::Loss)].at(i) = a;
    }
    for (int bell = 0; bell < 4; bell++) {
        auto outcome = static_cast<BellOutcome>(bell);
        for (int xi = 0; xi < 4; xi++) {
            for (int yi = 0; yi < 4; yi++) {
                auto x = ModeOccupancy::from_index(xi);
                auto y = ModeOccupancy::from_index(yi);
                Amplitude overlap{};
                for (int h = 0; h < 2; h++) {
                    for (int tp = 0; tp < 2; tp++) {
                        overlap += bell_coefficient(outcome, h, tp) * state[BasisLabel{h, ModeOccupancy::pol(tp), x, y}];
                    }
                }
                if (overlap == Amplitude{}) continue;
                for (int h = 0; h < 2; h++) {
                    for (int tp = 0; tp < 2; tp++) {
                        parts[bell][BasisLabel{h, ModeOccupancy::pol(tp), x, y}] +=
                            overlap * bell_coefficient(outcome, h, tp);
                    }
                }
            }
        }
    }
    std::vector<Branch<BellOutcome>> out;
    for (int o = 0; o < 5; o++) {
        double p = parts[o].norm_squared();
        if (p <= kMinBranch) continue;
        out.push_back({static_cast<BellOutcome>(o), p, parts[o].normalized()});
    }
    return out;
}

std::array<double, 5> bell_distribution(const StateVector &state) {
    std::array<double, 5> dist{};
    for (const auto &b : bell_branches(state)) dist[static_cast<size_t>(b.outcome)] = b.probability;
    return dist;
}

Branch<BellOutcome> measure_bell(const StateVector &state, Rng &rng) { return sample(bell_branches(state), rng); }

std::array<double, 3> occupancy_distribution(const StateVector &state, Register mode) {
    std::array<double, 3> dist{};
    for (size_t i = 0; i < BasisLabel::kCount; i++) {
        dist[static_cast<size_t>(BasisLabel::from_index(i).get(mode).total())] += std::norm(state.at(i));
    }
    return dist;
}

StateVector empty_mode(const StateVector &state, Register mode) {
    if (mode == Register::H) throw std::invalid_argument("the home photon cannot be removed");
    StateVector out;
    bool seen = false;
    ModeOccupancy content;
    state.for_each_support([&](const BasisLabel &b, Amplitude a) {
        if (!seen) {
            content = b.get(mode);
            seen = true;
        } else if (b.get(mode) != content) {
            throw std::logic_error("mode content is not definite");
        }
        out[b.with(mode, ModeOccupancy::vac())] += a;
    });
    return out;
}

}  // namespace pingpong
