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

#include "pingpong/verify.h"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "pingpong/analysis.h"
#include "pingpong/protocol.h"

namespace pingpong {

namespace {

std::string num(double v) {
    std::ostringstream ss;
    ss << std::setprecision(12) << v;
    return ss.str();
}

struct Checker {
    std::vector<Check> &out;
    CheckGroup group;

    void at_most(std::string name, double measured, double bound) {
        out.push_back({group, std::move(name), num(measured), "<= " + num(bound), measured <= bound});
    }
    void near(std::string name, double measured, double expected, double tol) {
        out.push_back({group, std::move(name), num(measured), num(expected) + " +/- " + num(tol),
                       std::abs(measured - expected) <= tol});
    }
    void truth(std::string name, bool ok, std::string measured, std::string expected) {
        out.push_back({group, std::move(name), std::move(measured), std::move(expected), ok});
    }
};

// Largest deviation of `product` from the identity on the domain of `gate`.
// A label missing from the product's domain counts as a failure.
double identity_deviation(const Gate &gate, const Gate &product) {
    double worst = 0;
    for (size_t i = 0; i < BasisLabel::kCount; i++) {
        auto b = BasisLabel::from_index(i);
        if (!gate.in_domain(b)) continue;
        if (!product.in_domain(b)) return 1.0;
        StateVector out = product.apply(StateVector::basis(b));
        worst = std::max(worst, out.max_deviation(StateVector::basis(b)));
    }
    return worst;
}

StateVector random_state_on(const Gate &gate, Rng &rng) {
    StateVector s;
    for (size_t i = 0; i < BasisLabel::kCount; i++) {
        if (!gate.in_domain(BasisLabel::from_index(i))) continue;
        s.at(i) = Amplitude(rng.uniform() - 0.5, rng.uniform() - 0.5);
    }
    return s.normalized();
}

std::vector<Gate> named_gates() {
    const auto &g = attack_gates();
    return {gate_hadamard(Register::Y),
            gate_swap(Register::T, Register::X),
            gate_cpbs(),
            g.U,
            g.V,
            g.Q,
            g.W,
            g.W_inverse,
            g.Z_t,
            gate_pauli(Register::T, Pauli::X),
            gate_cnot(Register::T, Register::Y),
            g.S};
}

JointDistribution target_joint() {
    JointDistribution p;
    p.at(0, KSymbol::Zero, BellOutcome::PsiPlus) = 0.5;
    for (auto k : {KSymbol::Zero, KSymbol::One}) {
        for (auto m : {BellOutcome::PsiPlus, BellOutcome::PsiMinus}) p.at(1, k, m) = 0.125;
    }
    return p;
}

void property_checks(const VerifyOptions &options, std::vector<Check> &out) {
    Checker c{out, CheckGroup::Property};
    Rng rng(options.seed);

    for (const Gate &g : named_gates()) {
        c.at_most("unitarity " + g.name(), g.unitarity_defect(), 1e-12);
        double norm_error = 0;
        for (int i = 0; i < 100; i++) {
            norm_error = std::max(norm_error, std::abs(g.apply(random_state_on(g, rng)).norm_squared() - 1.0));
        }
        c.at_most("norm preservation " + g.name(), norm_error, 1e-9);
        c.truth("photon conservation " + g.name(), g.conserves_photons(), g.conserves_photons() ? "yes" : "no", "yes");
    }

    const auto &ag = attack_gates();
    for (const Gate &g : {gate_hadamard(Register::Y), gate_swap(Register::T, Register::X), gate_cpbs(), ag.U, ag.V,
                          gate_pauli(Register::T, Pauli::X), ag.Z_t, gate_cnot(Register::T, Register::Y)}) {
        c.at_most("involution " + g.name(), identity_deviation(g, g * g), 1e-12);
    }
    {
        // S_ty squared on labels where t and y each hold one photon.
        Gate s2 = ag.S * ag.S;
        double worst = 0;
        for (size_t i = 0; i < BasisLabel::kCount; i++) {
            auto b = BasisLabel::from_index(i);
            if (!b.t.is_single() || !b.y.is_single()) continue;
            if (!s2.in_domain(b)) {
                worst = 1.0;
                break;
            }
            worst = std::max(worst, s2.apply(StateVector::basis(b)).max_deviation(StateVector::basis(b)));
        }
        c.at_most("involution S_ty on polarization subspace", worst, 1e-12);
    }
    c.at_most("inverse W^-1 W on domain of W", identity_deviation(ag.W, ag.W_inverse * ag.W), 1e-12);
    c.at_most("inverse W^-1 W |initial>", ag.W_inverse.apply(ag.W.apply(make_initial())).max_deviation(make_initial()),
              1e-12);
    c.at_most("inverse Q^-1 Q on domain of Q", identity_deviation(ag.Q, ag.Q_inverse * ag.Q), 1e-12);

    {
        auto matches = matching_cpbs_conventions();
        std::string measured = matches.size() == 1 ? "convention " + matches[0].describe() + " selected"
                                                   : std::to_string(matches.size()) + " conventions match";
        c.truth("CPBS convention search", matches.size() == 1 && matches[0] == kDefaultCpbs, measured,
                "exactly one, equal to the built-in convention");
    }

    {
        size_t paths = 0, configs = 0;
        double worst_total = 0;
        std::string failure;
        for (auto kind : {AttackKind::None, AttackKind::Wojcik, AttackKind::Improved}) {
            for (bool sym : {false, true}) {
                for (bool two_basis : {false, true}) {
                    for (double eta : {1.0, 0.7, 0.3, 0.0}) {
                        for (double fraction : {1.0, 0.5}) {
                            ProtocolConfig config;
                            config.attack = {kind, sym};
                            config.two_basis_control = two_basis;
                            config.attack_fraction = fraction;
                            double total = 0;
                            try {
                                paths += for_each_round_path(config, {eta},
                                                             [&](const RoundRecord &, double w) { total += w; });
                            } catch (const std::exception &e) {
                                failure = e.what();
                            }
                            worst_total = std::max(worst_total, std::abs(total - 1.0));
                            configs++;
                        }
                    }
                }
            }
        }
        c.truth("reachability of every protocol path", failure.empty() && worst_total < 1e-12,
                failure.empty() ? std::to_string(paths) + " paths over " + std::to_string(configs) +
                                      " configs, probability defect " + num(worst_total)
                                : failure,
                "no domain or overflow error; path probabilities sum to 1");
    }

    for (AttackVariant v : {AttackVariant{AttackKind::None, false}, AttackVariant{AttackKind::Wojcik, false},
                            AttackVariant{AttackKind::Improved, false}, AttackVariant{AttackKind::Wojcik, true},
                            AttackVariant{AttackKind::Improved, true}}) {
        ProtocolConfig config;
        config.control_probability = 0.0;
        config.attack = v;
        config.rounds = options.rounds;
        config.seed = options.seed;
        auto stats = run_session(config, {1.0});
        c.at_most("monte carlo vs exact joint " + v.name(),
                  stats.message_joint().total_variation(exact_joint(v)), 0.01);
    }
}

void oracle_checks(std::vector<Check> &out) {
    Checker c{out, CheckGroup::Oracle};
    const auto &ag = attack_gates();
    const StateVector forward = ag.W.apply(make_initial());

    c.at_most("forward-attack state matches target form", forward.max_deviation(target_forward_state()), 1e-12);
    {
        double same = 0;
        for (const auto &t : polarization_branches(forward, Register::T)) {
            for (const auto &h : polarization_branches(t.state, Register::H)) {
                if (t.outcome == h.outcome) same += t.probability * h.probability;
            }
        }
        c.at_most("forward-attack (h, t) anticorrelation, P(identical)", same, 1e-12);
    }
    c.near("induced loss improved", induced_loss(AttackKind::Improved), 0.0, 0.0);
    c.near("induced loss wojcik", induced_loss(AttackKind::Wojcik), 0.5, 1e-12);

    for (int j = 0; j < 2; j++) {
        StateVector returned = ab_attack(encode(forward, j));
        c.at_most("return-attack state j=" + std::to_string(j) + " matches target form",
                  returned.max_deviation_up_to_phase(target_return_state(j)), 1e-12);
    }
    for (int j = 0; j < 2; j++) {
        c.at_most("S_ty maps target return state j=" + std::to_string(j) + " to target symmetrized state",
                  symmetrize(target_return_state(j), true).max_deviation_up_to_phase(target_symmetrized_state(j)),
                  1e-12);
    }

    const double gain = 0.75 * std::log2(4.0 / 3.0);
    const double bob_eve = 1.0 - 1.5 * std::log2(3.0) + 0.625 * std::log2(5.0);
    const double symmetrized_bob = 0.75 * std::log2(3.0) - 1.0;

    const JointDistribution improved = exact_joint({AttackKind::Improved, false});
    c.at_most("joint distribution improved", improved.max_deviation(target_joint()), 1e-12);
    c.near("I_AE improved", mutual_information(improved, InfoPair::AE), gain, 1e-9);
    c.near("I_AB improved", mutual_information(improved, InfoPair::AB), gain, 1e-9);
    c.near("I_BE improved", mutual_information(improved, InfoPair::BE), bob_eve, 1e-9);
    c.near("QBER improved", qber(improved), 0.25, 1e-12);

    const JointDistribution improved_sym = exact_joint({AttackKind::Improved, true});
    c.near("I_AB improved+sym", mutual_information(improved_sym, InfoPair::AB), symmetrized_bob, 1e-9);
    c.near("I_AE improved+sym (coin known to Eve)", mutual_information(improved_sym, InfoPair::AE), gain, 1e-9);

    c.near("detection z improved", detection_probability(AttackKind::Improved, false), 0.0, 0.0);
    c.near("detection two-basis improved", detection_probability(AttackKind::Improved, true), 0.25, 1e-12);

    const JointDistribution wojcik = exact_joint({AttackKind::Wojcik, false});
    c.at_most("joint distribution wojcik baseline", wojcik.max_deviation(target_joint()), 1e-12);
    c.near("I_AE wojcik baseline", mutual_information(wojcik, InfoPair::AE), gain, 1e-9);
    c.near("I_BE wojcik baseline", mutual_information(wojcik, InfoPair::BE), bob_eve, 1e-9);

    std::array<std::array<StateVector, 2>, 2> targets;
    for (int j = 0; j < 2; j++) {
        targets[j][0] = target_return_state(j);
        targets[j][1] = target_symmetrized_state(j);
    }
    const JointDistribution from_targets = joint_from_states(targets, false);
    c.at_most("joint distribution of target return states", from_targets.max_deviation(target_joint()),
              1e-12);
    c.near("I_AB of target symmetrized states",
           mutual_information(joint_from_states(targets, true), InfoPair::AB), symmetrized_bob, 1e-9);
}

}  // namespace

std::vector<Check> run_checks(const VerifyOptions &options) {
    std::vector<Check> out;
    if (options.suite != Suite::Oracles) property_checks(options, out);
    if (options.suite != Suite::Properties) oracle_checks(out);
    return out;
}

void print_checks(std::ostream &out, const std::vector<Check> &checks) {
    for (const auto &c : checks) {
        out << (c.group == CheckGroup::Property ? "[property] " : "[oracle]   ") << c.name << ": "
            << (c.pass ? "PASS" : "FAIL") << " (measured " << c.measured << ", expected " << c.expected << ")\n";
    }
}

bool all_pass(const std::vector<Check> &checks) {
    for (const auto &c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

}  // namespace pingpong
