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


#include "pingpong/protocol.h"

#include <gtest/gtest.h>

#include <cmath>
#include <tuple>

#include "pingpong/analysis.h"

namespace pingpong {
namespace {

ProtocolConfig make_config(AttackKind kind, bool sym = false, double control = 0.5, uint64_t rounds = 20000,
                           uint64_t seed = 1) {
    ProtocolConfig c;
    c.attack = {kind, sym};
    c.control_probability = control;
    c.rounds = rounds;
    c.seed = seed;
    return c;
}

double three_sigma(double p, double n) { return 3.0 * std::sqrt(p * (1.0 - p) / n); }

TEST(DetectionRule, ZBasisFlagsIdenticalOutcomes) {
    using O = PolarizationOutcome;
    EXPECT_TRUE(detection_rule(Basis::Z, O::Zero, O::Zero));
    EXPECT_TRUE(detection_rule(Basis::Z, O::One, O::One));
    EXPECT_FALSE(detection_rule(Basis::Z, O::Zero, O::One));
    EXPECT_FALSE(detection_rule(Basis::Z, O::One, O::Zero));
}

TEST(DetectionRule, XBasisFlagsDifferingOutcomes) {
    using O = PolarizationOutcome;
    EXPECT_FALSE(detection_rule(Basis::X, O::Zero, O::Zero));
    EXPECT_FALSE(detection_rule(Basis::X, O::One, O::One));
    EXPECT_TRUE(detection_rule(Basis::X, O::Zero, O::One));
    EXPECT_TRUE(detection_rule(Basis::X, O::One, O::Zero));
}

TEST(Removal, ChannelLossWithoutAttack) {
    EXPECT_DOUBLE_EQ(removal_probability(make_config(AttackKind::None), {0.7}), 0.3);
    EXPECT_DOUBLE_EQ(removal_probability(make_config(AttackKind::None), {1.0}), 0.0);
}

TEST(Removal, EveDiscardsToMatchChannel) {
    // Improved attack keeps every photon: discard 1 - eta.
    EXPECT_NEAR(removal_probability(make_config(AttackKind::Improved), {0.7}), 0.3, 1e-15);
    // Wojcik keeps half: no discard above eta = 1/2, 1 - eta/0.5 below.
    EXPECT_DOUBLE_EQ(removal_probability(make_config(AttackKind::Wojcik), {0.7}), 0.0);
    EXPECT_NEAR(removal_probability(make_config(AttackKind::Wojcik), {0.3}), 0.4, 1e-15);
    ProtocolConfig half = make_config(AttackKind::Wojcik);
    half.attack_fraction = 0.5;
    // r = 0.5 * 0.5 + 0.5 = 0.75
    EXPECT_NEAR(removal_probability(half, {0.6}), 0.2, 1e-15);
}

TEST(Protocol, ConfigValidation) {
    ProtocolConfig c = make_config(AttackKind::None);
    c.control_probability = 1.5;
    EXPECT_THROW(run_session(c, {1.0}), std::invalid_argument);
    c = make_config(AttackKind::None);
    c.rounds = 0;
    EXPECT_THROW(run_session_serial(c, {1.0}), std::invalid_argument);
    EXPECT_THROW(run_session(make_config(AttackKind::None), {-0.1}), std::invalid_argument);
}

TEST(Protocol, ParallelMatchesSerial) {
    for (auto kind : {AttackKind::None, AttackKind::Wojcik, AttackKind::Improved}) {
        for (bool sym : {false, true}) {
            ProtocolConfig c = make_config(kind, sym, 0.5, 5000, 42);
            c.two_basis_control = true;
            EXPECT_EQ(run_session(c, {0.8}), run_session_serial(c, {0.8})) << attack_name(kind) << sym;
        }
    }
}

TEST(Protocol, SameSeedSameStatistics) {
    ProtocolConfig c = make_config(AttackKind::Improved, true, 0.5, 5000, 9);
    EXPECT_EQ(run_session(c, {0.9}), run_session(c, {0.9}));
    ProtocolConfig d = c;
    d.seed = 10;
    EXPECT_FALSE(run_session(c, {0.9}) == run_session(d, {0.9}));
}

TEST(Protocol, PhotonFoundRateFollowsEta) {
    ProtocolConfig c = make_config(AttackKind::None, false, 1.0, 100000, 5);
    auto stats = run_session(c, {0.7});
    const double n = static_cast<double>(stats.total_control());
    EXPECT_EQ(stats.total_control(), 100000u);
    EXPECT_NEAR(stats.total_found() / n, 0.7, three_sigma(0.7, n));
}

TEST(Protocol, AttackedRatesMatchChannelWhereEveCanCompensate) {
    for (auto [kind, eta, found] : {std::tuple{AttackKind::Improved, 0.7, 0.7}, std::tuple{AttackKind::Wojcik, 0.3, 0.3},
                                    std::tuple{AttackKind::Wojcik, 0.7, 0.5}}) {
        ProtocolConfig c = make_config(kind, false, 1.0, 50000, 6);
        auto expected = expected_tally(c, {eta});
        EXPECT_NEAR(expected.total_found(), found, 1e-12) << attack_name(kind) << " " << eta;
        auto stats = run_session(c, {eta});
        const double n = static_cast<double>(stats.total_control());
        EXPECT_NEAR(stats.total_found() / n, found, three_sigma(found, n)) << attack_name(kind) << " " << eta;
    }
}

TEST(Protocol, NoAttackNeverDetectsInEitherBasis) {
    ProtocolConfig c = make_config(AttackKind::None, false, 1.0, 20000, 2);
    c.two_basis_control = true;
    auto stats = run_session(c, {1.0});
    EXPECT_GT(stats.control_rounds[1], 0u);
    EXPECT_EQ(stats.total_detections(), 0u);
    auto exact = expected_tally(c, {0.5});
    EXPECT_EQ(exact.total_detections(), 0.0);
}

TEST(Protocol, ImprovedAttackDetectionRates) {
    ProtocolConfig c = make_config(AttackKind::Improved, false, 1.0, 1, 0);
    c.two_basis_control = true;
    auto exact = expected_tally(c, {1.0});
    EXPECT_NEAR(exact.control_detections[0], 0.0, 1e-15);
    EXPECT_NEAR(exact.control_detections[1] / exact.control_rounds[1], 0.5, 1e-12);
}

TEST(Protocol, ExpectedTallySumsToOne) {
    for (auto kind : {AttackKind::None, AttackKind::Wojcik, AttackKind::Improved}) {
        ProtocolConfig c = make_config(kind, true);
        c.two_basis_control = true;
        c.attack_fraction = 0.5;
        for (double eta : {0.0, 0.25, 1.0}) {
            auto t = expected_tally(c, {eta});
            EXPECT_NEAR(t.total_rounds(), 1.0, 1e-12);
            EXPECT_NEAR(t.message_rounds, 0.5, 1e-12);
            EXPECT_NEAR(t.attacked_rounds, kind == AttackKind::None ? 0.0 : 0.5, 1e-12);
        }
    }
}

TEST(Protocol, MonteCarloJointWithinThreeSigmaOfExpectation) {
    ProtocolConfig c = make_config(AttackKind::Wojcik, true, 0.0, 40000, 3);
    auto stats = run_session(c, {1.0});
    auto exact = expected_tally(c, {1.0});
    const double n = static_cast<double>(stats.message_rounds);
    for (size_t i = 0; i < JointDistribution::kCells; i++) {
        const double p = exact.message[i];
        const double tol = std::max(three_sigma(p, n), 1e-12);
        EXPECT_NEAR(stats.message[i] / n, p, tol) << "cell " << i;
    }
}

TEST(Protocol, FullAttackMessageJointMatchesExactJoint) {
    for (auto kind : {AttackKind::Wojcik, AttackKind::Improved}) {
        for (bool sym : {false, true}) {
            ProtocolConfig c = make_config(kind, sym, 0.0);
            EXPECT_LT(expected_tally(c, {1.0}).message_joint().max_deviation(exact_joint({kind, sym})), 1e-12);
        }
    }
}

TEST(Protocol, ControlOnlyAndMessageOnly) {
    auto control = run_session(make_config(AttackKind::None, false, 1.0, 1000), {1.0});
    EXPECT_EQ(control.message_rounds, 0u);
    auto message = run_session(make_config(AttackKind::None, false, 0.0, 1000), {1.0});
    EXPECT_EQ(message.total_control(), 0u);
    EXPECT_EQ(message.message_rounds, 1000u);
}

TEST(Protocol, AttackFractionZeroMeansNoAttackedRounds) {
    ProtocolConfig c = make_config(AttackKind::Improved, false, 0.5, 2000);
    c.attack_fraction = 0.0;
    EXPECT_EQ(run_session(c, {1.0}).attacked_rounds, 0u);
}

TEST(Protocol, LostMessagePhotonsReachBobAsLoss) {
    ProtocolConfig c = make_config(AttackKind::None, false, 0.0);
    auto t = expected_tally(c, {0.0});
    auto joint = t.message_joint();
    EXPECT_NEAR(joint.at(0, KSymbol::None, BellOutcome::Loss) + joint.at(1, KSymbol::None, BellOutcome::Loss), 1.0,
                1e-12);
}

TEST(Protocol, RunRoundRecordsMessageFields) {
    ProtocolConfig c = make_config(AttackKind::Improved, false, 0.0);
    Rng rng(4);
    RoundRecord r = run_round(c, {1.0}, rng);
    EXPECT_EQ(r.mode, RoundMode::Message);
    ASSERT_TRUE(r.j.has_value());
    ASSERT_TRUE(r.m.has_value());
    EXPECT_TRUE(r.attacked);
    EXPECT_TRUE(r.k.has_value());
}

}  // namespace
}  // namespace pingpong
