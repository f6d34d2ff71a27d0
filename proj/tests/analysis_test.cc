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

#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "pingpong/protocol.h"

namespace pingpong {
namespace {

const double kGain = 0.75 * std::log2(4.0 / 3.0);                              // 0.311278...
const double kBobEve = 1.0 - 1.5 * std::log2(3.0) + 0.625 * std::log2(5.0);  // 0.073761...
const double kSymmetrizedBob = 0.75 * std::log2(3.0) - 1.0;                   // 0.188722...

JointDistribution reference_joint() {
    JointDistribution p;
    p.at(0, KSymbol::Zero, BellOutcome::PsiPlus) = 0.5;
    for (auto k : {KSymbol::Zero, KSymbol::One}) {
        for (auto m : {BellOutcome::PsiPlus, BellOutcome::PsiMinus}) p.at(1, k, m) = 0.125;
    }
    return p;
}

// Plain-map mutual information, written independently of the library.
double brute_mi(const std::map<std::pair<int, int>, double> &pxy) {
    std::map<int, double> px, py;
    for (auto &[xy, p] : pxy) {
        px[xy.first] += p;
        py[xy.second] += p;
    }
    double info = 0;
    for (auto &[xy, p] : pxy) {
        if (p > 0) info += p * std::log2(p / (px[xy.first] * py[xy.second]));
    }
    return info;
}

TEST(MutualInformation, ClosedFormsOnReferenceTable) {
    const JointDistribution p = reference_joint();
    EXPECT_NEAR(mutual_information(p, InfoPair::AE), kGain, 1e-12);
    EXPECT_NEAR(mutual_information(p, InfoPair::AB), kGain, 1e-12);
    EXPECT_NEAR(mutual_information(p, InfoPair::BE), kBobEve, 1e-12);
    EXPECT_NEAR(kGain, 0.311278, 1e-6);
    EXPECT_NEAR(kBobEve, 0.073761, 1e-6);
}

TEST(MutualInformation, AgreesWithBruteForce) {
    JointDistribution p;
    p.at(0, KSymbol::Zero, BellOutcome::PsiPlus, 0) = 0.2;
    p.at(0, KSymbol::One, BellOutcome::PsiMinus, 1) = 0.1;
    p.at(1, KSymbol::None, BellOutcome::Loss, 0) = 0.3;
    p.at(1, KSymbol::Zero, BellOutcome::PsiMinus, 1) = 0.25;
    p.at(1, KSymbol::One, BellOutcome::PhiPlus, 0) = 0.15;
    std::map<std::pair<int, int>, double> ae, ab, be;
    p.for_each([&](int j, KSymbol k, BellOutcome m, int c, double v) {
        const int eve = static_cast<int>(k) * 2 + c;
        ae[{j, eve}] += v;
        ab[{j, static_cast<int>(m)}] += v;
        be[{static_cast<int>(m), eve}] += v;
    });
    EXPECT_NEAR(mutual_information(p, InfoPair::AE), brute_mi(ae), 1e-12);
    EXPECT_NEAR(mutual_information(p, InfoPair::AB), brute_mi(ab), 1e-12);
    EXPECT_NEAR(mutual_information(p, InfoPair::BE), brute_mi(be), 1e-12);
}

TEST(MutualInformation, ZeroForIndependentAndEmptyTables) {
    JointDistribution p;
    EXPECT_EQ(mutual_information(p, InfoPair::AB), 0.0);
    for (int j = 0; j < 2; j++)
        for (auto m : {BellOutcome::PsiPlus, BellOutcome::PsiMinus}) p.at(j, KSymbol::None, m) = 0.25;
    EXPECT_NEAR(mutual_information(p, InfoPair::AB), 0.0, 1e-15);
}

TEST(ExactJoint, NoAttackDeliversEveryBit) {
    JointDistribution p = exact_joint({AttackKind::None, false});
    EXPECT_NEAR(p.at(0, KSymbol::None, BellOutcome::PsiPlus), 0.5, 1e-12);
    EXPECT_NEAR(p.at(1, KSymbol::None, BellOutcome::PsiMinus), 0.5, 1e-12);
    EXPECT_NEAR(mutual_information(p, InfoPair::AB), 1.0, 1e-12);
    EXPECT_EQ(qber(p), 0.0);
}

TEST(ExactJoint, WojcikBaselineReproducesReferenceTable) {
    JointDistribution p = exact_joint({AttackKind::Wojcik, false});
    EXPECT_LT(p.max_deviation(reference_joint()), 1e-12);
    EXPECT_NEAR(qber(p), 0.25, 1e-12);
}

// The improved attack returns -Psi- with y in |0> for j = 1: Bob reads every
// bit and Eve's result never depends on j.
TEST(ExactJoint, ImprovedAttack) {
    JointDistribution p = exact_joint({AttackKind::Improved, false});
    EXPECT_NEAR(p.at(0, KSymbol::Zero, BellOutcome::PsiPlus), 0.5, 1e-12);
    EXPECT_NEAR(p.at(1, KSymbol::Zero, BellOutcome::PsiMinus), 0.5, 1e-12);
    EXPECT_NEAR(p.total(), 1.0, 1e-12);
    InfoReport r = info_report({AttackKind::Improved, false});
    EXPECT_NEAR(r.I_AE, 0.0, 1e-12);
    EXPECT_NEAR(r.I_AB, 1.0, 1e-12);
    EXPECT_NEAR(r.I_BE, 0.0, 1e-12);
    EXPECT_NEAR(r.qber, 0.0, 1e-12);
    EXPECT_EQ(r.induced_loss, 0.0);
    EXPECT_EQ(r.detection_z, 0.0);
    EXPECT_NEAR(r.detection_two_basis, 0.25, 1e-12);
}

TEST(ExactJoint, SymmetrizedTargetStates) {
    std::array<std::array<StateVector, 2>, 2> states;
    for (int j = 0; j < 2; j++) {
        states[j][0] = target_return_state(j);
        states[j][1] = target_symmetrized_state(j);
    }
    EXPECT_LT(joint_from_states(states, false).max_deviation(reference_joint()), 1e-12);
    JointDistribution sym = joint_from_states(states, true);
    EXPECT_NEAR(sym.total(), 1.0, 1e-12);
    EXPECT_NEAR(mutual_information(sym, InfoPair::AB), kSymmetrizedBob, 1e-12);
    EXPECT_NEAR(mutual_information(sym, InfoPair::AE), kGain, 1e-12);
}

TEST(ExactJoint, SymmetrizedImprovedAttack) {
    JointDistribution p = exact_joint({AttackKind::Improved, true});
    EXPECT_NEAR(p.total(), 1.0, 1e-12);
    EXPECT_NEAR(mutual_information(p, InfoPair::AB), kSymmetrizedBob, 1e-12);
}

TEST(Qber, HalfAttackedWojcikSessionHalvesErrorRate) {
    ProtocolConfig c;
    c.attack = {AttackKind::Wojcik, false};
    c.attack_fraction = 0.5;
    c.control_probability = 0.0;
    EXPECT_NEAR(qber(expected_tally(c, {1.0}).message_joint()), 0.125, 1e-12);
}

TEST(Qber, IgnoresLossAndCountsPhi) {
    JointDistribution p;
    p.at(0, KSymbol::None, BellOutcome::PsiPlus) = 0.4;
    p.at(0, KSymbol::None, BellOutcome::PhiPlus) = 0.1;
    p.at(1, KSymbol::None, BellOutcome::Loss) = 0.5;
    EXPECT_NEAR(qber(p), 0.2, 1e-15);
    EXPECT_EQ(qber(JointDistribution{}), 0.0);
}

TEST(InducedLoss, Values) {
    EXPECT_EQ(induced_loss(AttackKind::Improved), 0.0);
    EXPECT_NEAR(induced_loss(AttackKind::Wojcik), 0.5, 1e-12);
    EXPECT_EQ(induced_loss(AttackKind::None), 0.0);
}

TEST(AttackFractionLimit, Cases) {
    EXPECT_EQ(attack_fraction_limit(1.0, 0.3), 1.0);
    EXPECT_EQ(attack_fraction_limit(0.5, 0.5), 1.0);
    EXPECT_EQ(attack_fraction_limit(0.5, 0.2), 1.0);
    EXPECT_NEAR(attack_fraction_limit(0.5, 0.75), 0.5, 1e-15);
    EXPECT_EQ(attack_fraction_limit(0.5, 1.0), 0.0);
    EXPECT_EQ(attack_fraction_limit(0.0, 0.0), 1.0);
    EXPECT_THROW(attack_fraction_limit(1.5, 0.5), std::invalid_argument);
    EXPECT_THROW(attack_fraction_limit(0.5, -0.1), std::invalid_argument);
}

TEST(EtaGrid, Endpoints) {
    auto g = eta_grid(0.0, 1.0, 101);
    ASSERT_EQ(g.size(), 101u);
    EXPECT_EQ(g.front(), 0.0);
    EXPECT_EQ(g.back(), 1.0);
    EXPECT_NEAR(g[50], 0.5, 1e-15);
    EXPECT_EQ(eta_grid(0.3, 0.9, 1), std::vector<double>{0.3});
    EXPECT_THROW(eta_grid(0.0, 1.0, 0), std::invalid_argument);
    EXPECT_THROW(eta_grid(0.0, 1.5, 3), std::invalid_argument);
}

TEST(Sweep, RowsAndFormulas) {
    auto grid = eta_grid(0.0, 1.0, 101);
    auto points = sweep(grid);
    ASSERT_EQ(points.size(), 202u);
    const double wojcik_gain = mutual_information(exact_joint({AttackKind::Wojcik, false}), InfoPair::AE);
    for (size_t i = 0; i < grid.size(); i++) {
        const SweepPoint &w = points[2 * i], &im = points[2 * i + 1];
        EXPECT_EQ(w.kind, AttackKind::Wojcik);
        EXPECT_EQ(im.kind, AttackKind::Improved);
        EXPECT_EQ(w.eta, grid[i]);
        const double want = grid[i] <= 0.5 ? 1.0 : (1.0 - grid[i]) / 0.5;
        EXPECT_NEAR(w.f_star, want, 1e-12);
        EXPECT_NEAR(w.I_AE_eff, w.f_star * wojcik_gain, 1e-12);
        EXPECT_NEAR(w.I_AB_eff, w.f_star * wojcik_gain + 1.0 - w.f_star, 1e-12);
        EXPECT_EQ(im.f_star, 1.0);
        EXPECT_EQ(im.induced_loss, 0.0);
        EXPECT_NEAR(w.induced_loss, 0.5, 1e-12);
        if (i > 0) EXPECT_LE(w.f_star, points[2 * (i - 1)].f_star);
    }
    EXPECT_EQ(points.back().eta, 1.0);
    EXPECT_NEAR(points[points.size() - 2].f_star, 0.0, 1e-12);
}

TEST(Sweep, RejectsOutOfRangeEta) {
    std::vector<double> bad{0.5, 1.2};
    EXPECT_THROW(sweep(bad), std::invalid_argument);
}

TEST(Detection, TwoBasisAveragesBases) {
    for (auto kind : {AttackKind::None, AttackKind::Wojcik, AttackKind::Improved}) {
        EXPECT_EQ(detection_probability(kind, false), 0.0) << attack_name(kind);
    }
    EXPECT_EQ(detection_probability(AttackKind::None, true), 0.0);
}

}  // namespace
}  // namespace pingpong
