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

#include "pingpong/attack.h"

#include <cmath>
#include <stdexcept>

namespace pingpong {

namespace {

Gate conditional_swap(std::string name, int y_polarization) {
    return Gate::from_action(std::move(name), [=](const BasisLabel &b) -> std::optional<Gate::Column> {
        if (b.y == ModeOccupancy::pol(y_polarization)) {
            BasisLabel swapped = b;
            swapped.t = b.x;
            swapped.x = b.t;
            return Gate::Column{{swapped, 1.0}};
        }
        return Gate::Column{{b, 1.0}};
    });
}

}  // namespace

std::string_view attack_name(AttackKind kind) {
    switch (kind) {
        case AttackKind::None:
            return "none";
        case AttackKind::Wojcik:
            return "wojcik";
        case AttackKind::Improved:
            return "improved";
    }
    return "?";
}

AttackKind parse_attack_kind(std::string_view name) {
    if (name == "none") return AttackKind::None;
    if (name == "wojcik") return AttackKind::Wojcik;
    if (name == "improved") return AttackKind::Improved;
    throw std::invalid_argument("unknown attack variant '" + std::string(name) + "'");
}

std::string AttackVariant::name() const {
    std::string n(attack_name(kind));
    if (symmetrize && attacks()) n += "+sym";
    return n;
}

Gate build_Q(CpbsConvention convention) {
    return (gate_swap(Register::T, Register::X) * gate_cpbs(convention) * gate_hadamard(Register::Y)).renamed("Q");
}

Gate build_U() { return conditional_swap("U", 0); }

Gate build_V() { return conditional_swap("V", 1); }

Gate build_W(CpbsConvention convention) { return (build_U() * build_V() * build_Q(convention)).renamed("W"); }

Gate build_W_inverse(CpbsConvention convention) {
    // Each factor is an involution, so W^-1 = Q^-1 V^-1 U^-1 = Q^-1 V U.
    Gate q_inverse = build_Q(convention).inverse();
    return (q_inverse * build_V() * build_U()).renamed("W^-1");
}

Gate build_S() {
    Gate z = gate_pauli(Register::T, Pauli::Z);
    Gate x = gate_pauli(Register::T, Pauli::X);
    return (x * z * gate_cnot(Register::T, Register::Y) * x * z).renamed("S_ty");
}

const AttackGates &attack_gates() {
    static const AttackGates gates = [] {
        Gate q = build_Q();
        return AttackGates{q,         q.inverse().renamed("Q^-1"), build_U(), build_V(), build_W(),
                           build_W_inverse(), build_S(), gate_pauli(Register::T, Pauli::Z)};
    }();
    return gates;
}

const Gate &forward_attack(AttackKind kind) {
    static const Gate identity = Gate::identity();
    switch (kind) {
        case AttackKind::Wojcik:
            return attack_gates().Q;
        case AttackKind::Improved:
            return attack_gates().W;
        case AttackKind::None:
            break;
    }
    return identity;
}

const Gate &return_attack(AttackKind kind) {
    static const Gate identity = Gate::identity();
    switch (kind) {
        case AttackKind::Wojcik:
            return attack_gates().Q_inverse;
        case AttackKind::Improved:
            return attack_gates().W_inverse;
        case AttackKind::None:
            break;
    }
    return identity;
}

StateVector encode(const StateVector &state, int j) {
    if (j != 0 && j != 1) throw std::invalid_argument("message bit must be 0 or 1");
    return j == 0 ? state : attack_gates().Z_t.apply(state);
}

StateVector ab_attack(const StateVector &state, AttackKind kind) { return return_attack(kind).apply(state); }

StateVector symmetrize(const StateVector &state, bool coin) { return coin ? attack_gates().S.apply(state) : state; }

Branch<PolarizationOutcome> eve_measure(const StateVector &state, Rng &rng) {
    return measure_polarization(state, Register::Y, Basis::Z, rng);
}

StateVector target_forward_state() {
    const auto vac = ModeOccupancy::vac();
    const auto p0 = ModeOccupancy::pol(0);
    const auto p1 = ModeOccupancy::pol(1);
    StateVector s;
    s[BasisLabel{0, p1, vac, p0}] = 0.5;
    s[BasisLabel{0, p1, p1, vac}] = 0.5;
    s[BasisLabel{1, p0, vac, p1}] = 0.5;
    s[BasisLabel{1, p0, p0, vac}] = 0.5;
    return s;
}

namespace {

// (1/2)[a (Psi+ + Psi-)|ya>_y + b (Psi+ - Psi-)|yb>_y]|vac>_x
StateVector bell_combination(double a, int ya, double b, int yb) {
    const auto vac = ModeOccupancy::vac();
    StateVector plus_y_a = make_bell(BellState::PsiPlus, vac, ModeOccupancy::pol(ya));
    StateVector minus_y_a = make_bell(BellState::PsiMinus, vac, ModeOccupancy::pol(ya));
    StateVector plus_y_b = make_bell(BellState::PsiPlus, vac, ModeOccupancy::pol(yb));
    StateVector minus_y_b = make_bell(BellState::PsiMinus, vac, ModeOccupancy::pol(yb));
    return (plus_y_a + minus_y_a) * Amplitude(0.5 * a) + (plus_y_b + minus_y_b * Amplitude(-1.0)) * Amplitude(0.5 * b);
}

}  // namespace

StateVector target_return_state(int j) { return bell_combination(j == 0 ? 1.0 : -1.0, j, 1.0, 0); }

StateVector target_symmetrized_state(int j) { return bell_combination(1.0, j, j == 0 ? 1.0 : -1.0, 1); }

std::vector<CpbsConvention> matching_cpbs_conventions() {
    std::vector<CpbsConvention> out;
    const StateVector target = target_forward_state();
    for (const auto &c : all_cpbs_conventions()) {
        if (build_W(c).apply(make_initial()).max_deviation(target) < 1e-12) out.push_back(c);
    }
    return out;
}

std::vector<std::pair<std::string, StateVector>> forward_attack_steps(AttackKind kind) {
    std::vector<std::pair<std::string, StateVector>> steps;
    StateVector s = make_initial();
    steps.emplace_back("initial", s);
    if (kind == AttackKind::None) return steps;
    for (const Gate &g : {gate_hadamard(Register::Y), gate_cpbs(), gate_swap(Register::T, Register::X)}) {
        s = g.apply(s);
        steps.emplace_back(g.name(), s);
    }
    if (kind == AttackKind::Improved) {
        for (const Gate &g : {build_V(), build_U()}) {
            s = g.apply(s);
            steps.emplace_back(g.name(), s);
        }
    }
    return steps;
}

}  // namespace pingpong
