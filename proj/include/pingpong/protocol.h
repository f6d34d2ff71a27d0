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

// Round-level model of the ping-pong protocol.
//
// A round: Bob prepares |Psi+>_ht (Eve's ancillas |vac>_x|0>_y ride along),
// the travel photon crosses the Bob-to-Alice leg (channel loss, or Eve's
// forward attack plus artificial discard), Alice either measures it (control
// mode) or applies Z^j and returns it (message mode), Eve applies her
// return-leg attack, optional symmetrization and measures y, and Bob performs
// a Bell measurement.
//
// Channel loss only acts on the Bob-to-Alice leg. When an attack is
// configured Eve replaces the channel by an ideal link, attacks a fraction of
// rounds, and discards photons so that the rate Alice observes matches eta
// whenever her attack alone would lose fewer photons than the channel.

#ifndef PINGPONG_PROTOCOL_H
#define PINGPONG_PROTOCOL_H

#include <cstdint>
#include <functional>
#include <optional>

#include "pingpong/attack.h"
#include "pingpong/joint.h"

namespace pingpong {

struct ChannelConfig {
    /// Survival probability of the travel photon on the Bob-to-Alice leg.
    double eta = 1.0;

    void validate() const;
};

struct ProtocolConfig {
    double control_probability = 0.5;
    AttackVariant attack;
    /// Fraction of rounds Eve attacks when an attack is configured.
    double attack_fraction = 1.0;
    /// Alice picks z or x uniformly in control mode instead of always z.
    bool two_basis_control = false;
    uint64_t rounds = 100000;
    uint64_t seed = 0;

    void validate() const;
};

enum class RoundMode { Control, Message };

struct RoundRecord {
    RoundMode mode = RoundMode::Control;
    std::optional<int> j;
    /// Eve's result; absent when she did not measure, Vacuum for no photon.
    std::optional<PolarizationOutcome> k;
    std::optional<BellOutcome> m;
    std::optional<Basis> control_basis;
    std::optional<PolarizationOutcome> alice_outcome;
    std::optional<PolarizationOutcome> bob_outcome;
    bool detection = false;
    bool attacked = false;
    bool symmetrized = false;
    bool photon_lost = false;

    bool photon_found() const {
        return alice_outcome.has_value() && *alice_outcome != PolarizationOutcome::Vacuum;
    }
};

/// Counts (or probability weights) aggregated over rounds.
template <typename T>
struct BasicTally {
    /// Message-round cells, same layout as JointDistribution.
    std::array<T, JointDistribution::kCells> message{};
    std::array<T, 2> control_rounds{};      // by basis (z, x)
    std::array<T, 2> control_found{};       // photon present at Alice
    std::array<T, 2> control_detections{};  // eavesdropping flagged
    T message_rounds{};
    T attacked_rounds{};
    T photons_lost{};

    void add(const RoundRecord &r, T weight = T{1});
    BasicTally &merge(const BasicTally &other);

    T total_rounds() const { return message_rounds + control_rounds[0] + control_rounds[1]; }
    T total_control() const { return control_rounds[0] + control_rounds[1]; }
    T total_found() const { return control_found[0] + control_found[1]; }
    T total_detections() const { return control_detections[0] + control_detections[1]; }

    /// Message-round cells normalized to a distribution.
    JointDistribution message_joint() const;

    bool operator==(const BasicTally &) const = default;
};

using SessionStats = BasicTally<uint64_t>;
/// Exact per-round probabilities from path enumeration.
using ExpectedTally = BasicTally<double>;

/// Probability that the travel photon is removed on the Bob-to-Alice leg,
/// before Alice (channel loss or Eve's artificial discard).
double removal_probability(const ProtocolConfig &config, const ChannelConfig &channel);

/// z: identical outcomes flag eavesdropping; x: differing outcomes do.
bool detection_rule(Basis basis, PolarizationOutcome alice, PolarizationOutcome bob);

RoundRecord run_round(const ProtocolConfig &config, const ChannelConfig &channel, Rng &rng);

/// Rounds run in parallel; round i draws from Rng::for_stream(seed, i), so the
/// result does not depend on the thread count.
SessionStats run_session(const ProtocolConfig &config, const ChannelConfig &channel);
/// Single-threaded reference for run_session.
SessionStats run_session_serial(const ProtocolConfig &config, const ChannelConfig &channel);

/// Calls fn(record, probability) for every branch of a round: every random
/// choice and every measurement outcome with nonzero probability. Uses the
/// same round logic as run_round. Returns the number of paths.
size_t for_each_round_path(const ProtocolConfig &config, const ChannelConfig &channel,
                           const std::function<void(const RoundRecord &, double)> &fn);

/// Exact per-round expectation of the session tally.
ExpectedTally expected_tally(const ProtocolConfig &config, const ChannelConfig &channel);

}  // namespace pingpong

#endif
