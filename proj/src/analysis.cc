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

#include "pingpong/analysis.h"

#include <cmath>
#include <stdexcept>

#include "pingpong/protocol.h"

namespace pingpong {

namespace {

constexpr size_t kEveSymbols = JointDistribution::kK * JointDistribution::kCoin;

size_t eve_symbol(KSymbol k, int coin) { return static_cast<size_t>(k) * 2 + static_cast<size_t>(coin); }

// I(A;B) from an unnormalized table; 0 log 0 = 0.
template <size_t NA, size_t NB>
double mutual_information_table(const std::array<std::array<double, NB>, NA> &table) {
    double total = 0;
    std::array<double, NA> pa{};
    std::array<double, NB> pb{};
    for (size_t a = 0; a < NA; a++) {
        for (size_t b = 0; b < NB; b++) {
            total += table[a][b];
            pa[a] += table[a][b];
            pb[b] += table[a][b];
        }
    }
    if (total <= 0) return 0.0;
    double info = 0;
    for (size_t a = 0; a < NA; a++) {
        for (size_t b = 0; b < NB; b++) {
            double p = table[a][b] / total;
            if (p <= 0) continue;
            info += p * std::log2(p / ((pa[a] / total) * (pb[b] / total)));
        }
    }
    return std::max(0.0, info);
}

}  // namespace

std::string_view info_pair_name(InfoPair pair) {
    switch (pair) {
        case InfoPair::AE:
            return "I_AE";
        case InfoPair::AB:
            return "I_AB";
        case InfoPair::BE:
            return "I_BE";
    }
    return "?";
}

JointDistribution joint_from_states(const std::array<std::array<StateVector, 2>, 2> &states, bool symmetrized,
                                    bool eve_measures) {
    JointDistribution joint;
    const int coins = symmetrized ? 2 : 1;
    const double weight = 0.5 / coins;
    for (int j = 0; j < 2; j++) {
        for (int coin = 0; coin < coins; coin++) {
            const StateVector &s = states[j][coin];
            if (!eve_measures) {
                auto bell = bell_distribution(s);
                for (int m = 0; m < 5; m++) joint.at(j, KSymbol::None, static_cast<BellOutcome>(m), coin) += weight * bell[m];
                continue;
            }
            for (const auto &eve : polarization_branches(s, Register::Y, Basis::Z)) {
                auto bell = bell_distribution(eve.state);
                for (int m = 0; m < 5; m++) {
                    joint.at(j, k_symbol(eve.outcome), static_cast<BellOutcome>(m), coin) +=
                        weight * eve.probability * bell[m];
                }
            }
        }
    }
    return joint;
}

JointDistribution exact_joint(const AttackVariant &variant) {
    const StateVector forward = forward_attack(variant.kind).apply(make_initial());
    std::array<std::array<StateVector, 2>, 2> states;
    for (int j = 0; j < 2; j++) {
        StateVector returned = ab_attack(encode(forward, j), variant.kind);
        states[j][0] = returned;
        states[j][1] = symmetrize(returned, true);
    }
    return joint_from_states(states, variant.symmetrize && variant.attacks(), variant.attacks());
}

double mutual_information(const JointDistribution &joint, InfoPair pair) {
    switch (pair) {
        case InfoPair::AE: {
            std::array<std::array<double, kEveSymbols>, 2> t{};
            joint.for_each([&](int j, KSymbol k, BellOutcome, int c, double p) { t[j][eve_symbol(k, c)] += p; });
            return mutual_information_table(t);
        }
        case InfoPair::AB: {
            std::array<std::array<double, 5>, 2> t{};
            joint.for_each([&](int j, KSymbol, BellOutcome m, int, double p) { t[j][static_cast<size_t>(m)] += p; });
            return mutual_information_table(t);
        }
        case InfoPair::BE: {
            std::array<std::array<double, kEveSymbols>, 5> t{};
            joint.for_each(
                [&](int, KSymbol k, BellOutcome m, int c, double p) { t[static_cast<size_t>(m)][eve_symbol(k, c)] += p; });
            return mutual_information_table(t);
        }
    }
    return 0.0;
}

double qber(const JointDistribution &joint) {
    double arrived = 0, errors = 0;
    joint.for_each([&](int j, KSymbol, BellOutcome m, int, double p) {
        if (m == BellOutcome::Loss) return;
        arrived += p;
        const bool correct = (m == BellOutcome::PsiPlus && j == 0) || (m == BellOutcome::PsiMinus && j == 1);
        if (!correct) errors += p;
    });
    return arrived > 0 ? errors / arrived : 0.0;
}

double induced_loss(AttackKind kind) {
    return occupancy_distribution(forward_attack(kind).apply(make_initial()), Register::T)[0];
}

double attack_fraction_limit(double survival, double eta) {
    if (!(survival >= 0 && survival <= 1) || !(eta >= 0 && eta <= 1)) {
        throw std::invalid_argument("survival and eta must lie in [0, 1]");
    }
    if (survival >= eta) return 1.0;
    return std::min(1.0, (1.0 - eta) / (1.0 - survival));
}

double detection_probability(AttackKind kind, bool two_basis) {
    const StateVector forward = forward_attack(kind).apply(make_initial());
    auto for_basis = [&](Basis basis) {
        double detected = 0;
        for (const auto &alice : polarization_branches(forward, Register::T, basis)) {
            if (alice.outcome == PolarizationOutcome::Vacuum) continue;
            for (const auto &bob : polarization_branches(alice.state, Register::H, basis)) {
                if (alice.outcome == PolarizationOutcome::TwoPhoton || detection_rule(basis, alice.outcome, bob.outcome)) {
                    detected += alice.probability * bob.probability;
                }
            }
        }
        return detected;
    };
    const double z = for_basis(Basis::Z);
    return two_basis ? 0.5 * (z + for_basis(Basis::X)) : z;
}

InfoReport info_report(const AttackVariant &variant) {
    const JointDistribution joint = exact_joint(variant);
    InfoReport r;
    r.I_AE = mutual_information(joint, InfoPair::AE);
    r.I_AB = mutual_information(joint, InfoPair::AB);
    r.I_BE = mutual_information(joint, InfoPair::BE);
    r.qber = qber(joint);
    r.induced_loss = induced_loss(variant.kind);
    r.detection_z = detection_probability(variant.kind, false);
    r.detection_two_basis = detection_probability(variant.kind, true);
    return r;
}

std::vector<double> eta_grid(double start, double stop, int steps) {
    if (steps < 1) throw std::invalid_argument("eta grid needs at least one step");
    if (!(start >= 0 && start <= 1 && stop >= 0 && stop <= 1)) throw std::invalid_argument("eta grid must lie in [0, 1]");
    std::vector<double> grid;
    grid.reserve(static_cast<size_t>(steps));
    for (int i = 0; i < steps; i++) {
        grid.push_back(steps == 1 ? start : start + (stop - start) * i / (steps - 1));
    }
    return grid;
}

std::vector<SweepPoint> sweep(std::span<const double> grid, bool symmetrize) {
    struct Gains {
        AttackKind kind;
        double I_AE, I_AB, loss;
    };
    std::vector<Gains> gains;
    for (auto kind : {AttackKind::Wojcik, AttackKind::Improved}) {
        const JointDistribution joint = exact_joint({kind, symmetrize});
        gains.push_back({kind, mutual_information(joint, InfoPair::AE), mutual_information(joint, InfoPair::AB),
                         induced_loss(kind)});
    }
    for (double eta : grid) {
        if (!(eta >= 0 && eta <= 1)) throw std::invalid_argument("eta grid must lie in [0, 1]");
    }
    std::vector<SweepPoint> points(grid.size() * gains.size());
    const auto n = static_cast<int64_t>(grid.size());
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < n; i++) {
        const double eta = grid[static_cast<size_t>(i)];
        for (size_t v = 0; v < gains.size(); v++) {
            const Gains &g = gains[v];
            SweepPoint &p = points[static_cast<size_t>(i) * gains.size() + v];
            p.eta = eta;
            p.kind = g.kind;
            p.f_star = attack_fraction_limit(1.0 - g.loss, eta);
            p.I_AE_eff = p.f_star * g.I_AE;
            p.I_AB_eff = p.f_star * g.I_AB + (1.0 - p.f_star);
            p.induced_loss = g.loss;
        }
    }
    return points;
}

}  // namespace pingpong
