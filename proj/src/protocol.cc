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

#include <span>
#include <stdexcept>
#include <vector>

namespace pingpong {

namespace {

void check_probability(double p, const char *what) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
}

// Draws from the session RNG.
class SamplingChooser {
   public:
    explicit SamplingChooser(Rng &rng) : rng_(rng) {}

    size_t pick(std::span<const double> probs) {
        if (probs.size() == 1) return 0;
        double total = 0;
        for (double p : probs) total += p;
        double u = rng_.uniform() * total;
        double acc = 0;
        for (size_t i = 0; i < probs.size(); i++) {
            acc += probs[i];
            if (u < acc && probs[i] > 0) return i;
        }
        for (size_t i = probs.size(); i-- > 0;) {
            if (probs[i] > 0) return i;
        }
        return 0;
    }

   private:
    Rng &rng_;
};

// Follows a scripted prefix of choices, then takes the first option with
// nonzero probability and queues the alternatives as new scripts.
class ReplayChooser {
   public:
    ReplayChooser(const std::vector<size_t> &script, std::vector<std::vector<size_t>> &pending)
        : script_(script), pending_(pending) {}

    size_t pick(std::span<const double> probs) {
        if (probs.size() == 1) return 0;
        double total = 0;
        for (double p : probs) total += p;
        size_t choice = 0;
        if (taken_.size() < script_.size()) {
            choice = script_[taken_.size()];
        } else {
            while (choice < probs.size() && probs[choice] <= 0) choice++;
            for (size_t alt = choice + 1; alt < probs.size(); alt++) {
                if (probs[alt] <= 0) continue;
                auto next = taken_;
                next.push_back(alt);
                pending_.push_back(std::move(next));
            }
        }
        taken_.push_back(choice);
        weight_ *= probs[choice] / total;
        return choice;
    }

    double weight() const { return weight_; }

   private:
    const std::vector<size_t> &script_;
    std::vector<std::vector<size_t>> &pending_;
    std::vector<size_t> taken_;
    double weight_ = 1.0;
};

template <typename Chooser>
bool bernoulli(Chooser &chooser, double p) {
    if (p <= 0) return false;
    if (p >= 1) return true;
    const double probs[2] = {1.0 - p, p};
    return chooser.pick(probs) == 1;
}

template <typename Chooser, typename Outcome>
Branch<Outcome> pick_branch(Chooser &chooser, std::vector<Branch<Outcome>> branches) {
    if (branches.empty()) throw std::logic_error("measurement has no outcome");
    std::vector<double> probs;
    probs.reserve(branches.size());
    for (const auto &b : branches) probs.push_back(b.probability);
    return std::move(branches[chooser.pick(probs)]);
}

template <typename Chooser>
RoundRecord play_round(const ProtocolConfig &config, const ChannelConfig &channel, Chooser &chooser) {
    RoundRecord r;
    const AttackKind kind = config.attack.kind;
    StateVector s = make_initial();

    // Bob to Alice.
    if (config.attack.attacks()) r.attacked = bernoulli(chooser, config.attack_fraction);
    if (r.attacked) s = forward_attack(kind).apply(s);
    if (bernoulli(chooser, removal_probability(config, channel))) {
        // The environment (or Eve) takes whatever t holds.
        auto taken = pick_branch(chooser, polarization_branches(s, Register::T, Basis::Z));
        s = empty_mode(taken.state, Register::T);
        r.photon_lost = true;
    }

    if (bernoulli(chooser, config.control_probability)) {
        r.mode = RoundMode::Control;
        Basis basis = Basis::Z;
        if (config.two_basis_control && bernoulli(chooser, 0.5)) basis = Basis::X;
        r.control_basis = basis;
        auto alice = pick_branch(chooser, polarization_branches(s, Register::T, basis));
        r.alice_outcome = alice.outcome;
        if (alice.outcome == PolarizationOutcome::Vacuum) return r;
        auto bob = pick_branch(chooser, polarization_branches(alice.state, Register::H, basis));
        r.bob_outcome = bob.outcome;
        // A second photon in the travel mode is itself evidence of tampering.
        r.detection =
            alice.outcome == PolarizationOutcome::TwoPhoton || detection_rule(basis, alice.outcome, bob.outcome);
        return r;
    }

    r.mode = RoundMode::Message;
    const int j = bernoulli(chooser, 0.5) ? 1 : 0;
    r.j = j;
    s = encode(s, j);

    // Alice to Bob. Eve leaves rounds alone once she has discarded the photon.
    if (r.attacked && !r.photon_lost) {
        s = return_attack(kind).apply(s);
        if (config.attack.symmetrize) {
            r.symmetrized = bernoulli(chooser, 0.5);
            s = symmetrize(s, r.symmetrized);
        }
        auto eve = pick_branch(chooser, polarization_branches(s, Register::Y, Basis::Z));
        r.k = eve.outcome;
        s = std::move(eve.state);
    }
    r.m = pick_branch(chooser, bell_branches(s)).outcome;
    return r;
}

double forward_survival(AttackKind kind) {
    static const std::array<double, 3> survival = [] {
        std::array<double, 3> out{};
        for (auto k : {AttackKind::None, AttackKind::Wojcik, AttackKind::Improved}) {
            auto occ = occupancy_distribution(forward_attack(k).apply(make_initial()), Register::T);
            out[static_cast<size_t>(k)] = occ[1] + occ[2];
        }
        return out;
    }();
    return survival[static_cast<size_t>(kind)];
}

}  // namespace

void ChannelConfig::validate() const { check_probability(eta, "eta"); }

void ProtocolConfig::validate() const {
    check_probability(control_probability, "control_probability");
    check_probability(attack_fraction, "attack_fraction");
    if (rounds < 1) throw std::invalid_argument("rounds must be at least 1");
}

template <typename T>
void BasicTally<T>::add(const RoundRecord &r, T weight) {
    if (r.mode == RoundMode::Control) {
        const size_t b = r.control_basis == Basis::X ? 1 : 0;
        control_rounds[b] += weight;
        if (r.photon_found()) control_found[b] += weight;
        if (r.detection) control_detections[b] += weight;
    } else {
        message_rounds += weight;
        const KSymbol k = r.k ? k_symbol(*r.k) : KSymbol::None;
        message[JointDistribution::cell(r.j.value_or(0), k, r.m.value_or(BellOutcome::Loss), r.symmetrized)] +=
            weight;
    }
    if (r.attacked) attacked_rounds += weight;
    if (r.photon_lost) photons_lost += weight;
}

template <typename T>
BasicTally<T> &BasicTally<T>::merge(const BasicTally &other) {
    for (size_t i = 0; i < message.size(); i++) message[i] += other.message[i];
    for (size_t b = 0; b < 2; b++) {
        control_rounds[b] += other.control_rounds[b];
        control_found[b] += other.control_found[b];
        control_detections[b] += other.control_detections[b];
    }
    message_rounds += other.message_rounds;
    attacked_rounds += other.attacked_rounds;
    photons_lost += other.photons_lost;
    return *this;
}

template <typename T>
JointDistribution BasicTally<T>::message_joint() const {
    JointDistribution out;
    out.for_each([&](int j, KSymbol k, BellOutcome m, int c, double) {
        out.at(j, k, m, c) = static_cast<double>(message[JointDistribution::cell(j, k, m, c)]);
    });
    return out.normalized();
}

template struct BasicTally<uint64_t>;
template struct BasicTally<double>;

double removal_probability(const ProtocolConfig &config, const ChannelConfig &channel) {
    if (!config.attack.attacks()) return 1.0 - channel.eta;
    const double f = config.attack_fraction;
    const double rate = f * forward_survival(config.attack.kind) + (1.0 - f);
    return rate > channel.eta ? 1.0 - channel.eta / rate : 0.0;
}

bool detection_rule(Basis basis, PolarizationOutcome alice, PolarizationOutcome bob) {
    if (basis == Basis::Z) return alice == bob;
    return alice != bob;
}

RoundRecord run_round(const ProtocolConfig &config, const ChannelConfig &channel, Rng &rng) {
    SamplingChooser chooser(rng);
    return play_round(config, channel, chooser);
}

SessionStats run_session_serial(const ProtocolConfig &config, const ChannelConfig &channel) {
    config.validate();
    channel.validate();
    SessionStats stats;
    for (uint64_t i = 0; i < config.rounds; i++) {
        Rng rng = Rng::for_stream(config.seed, i);
        stats.add(run_round(config, channel, rng));
    }
    return stats;
}

SessionStats run_session(const ProtocolConfig &config, const ChannelConfig &channel) {
    config.validate();
    channel.validate();
    // Build shared gate tables before entering the parallel region.
    (void)attack_gates();
    (void)removal_probability(config, channel);

    const auto rounds = static_cast<int64_t>(config.rounds);
    SessionStats stats;
#pragma omp parallel
    {
        SessionStats local;
#pragma omp for schedule(static)
        for (int64_t i = 0; i < rounds; i++) {
            Rng rng = Rng::for_stream(config.seed, static_cast<uint64_t>(i));
            local.add(run_round(config, channel, rng));
        }
#pragma omp critical
        stats.merge(local);
    }
    return stats;
}

size_t for_each_round_path(const ProtocolConfig &config, const ChannelConfig &channel,
                           const std::function<void(const RoundRecord &, double)> &fn) {
    config.validate();
    channel.validate();
    std::vector<std::vector<size_t>> pending{{}};
    size_t paths = 0;
    while (!pending.empty()) {
        std::vector<size_t> script = std::move(pending.back());
        pending.pop_back();
        ReplayChooser chooser(script, pending);
        RoundRecord r = play_round(config, channel, chooser);
        fn(r, chooser.weight());
        paths++;
    }
    return paths;
}

ExpectedTally expected_tally(const ProtocolConfig &config, const ChannelConfig &channel) {
    ExpectedTally tally;
    for_each_round_path(config, channel, [&](const RoundRecord &r, double w) { tally.add(r, w); });
    return tally;
}

}  // namespace pingpong
