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

#ifndef PINGPONG_ATTACK_H
#define PINGPONG_ATTACK_H

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pingpong/gates.h"
#include "pingpong/measure.h"

namespace pingpong {

enum class AttackKind { None, Wojcik, Improved };

std::string_view attack_name(AttackKind kind);
/// Accepts "none", "wojcik", "improved"; throws std::invalid_argument.
AttackKind parse_attack_kind(std::string_view name);

struct AttackVariant {
    AttackKind kind = AttackKind::None;
    /// Apply S_ty with probability 1/2 after the return-leg attack.
    bool symmetrize = false;

    bool attacks() const { return kind != AttackKind::None; }
    std::string name() const;
};

/// Q = SWAP_tx * CPBS * H_y (H_y acts first).
Gate build_Q(CpbsConvention convention = kDefaultCpbs);
/// SWAP_tx when y holds a polarization-0 photon, identity otherwise.
Gate build_U();
/// SWAP_tx when y holds a polarization-1 photon, identity otherwise.
Gate build_V();
/// W = U * V * Q.
Gate build_W(CpbsConvention convention = kDefaultCpbs);
Gate build_W_inverse(CpbsConvention convention = kDefaultCpbs);
/// S_ty = X_t * Z_t * CNOT_ty * X_t * Z_t.
Gate build_S();

/// Gates built once with the default CPBS convention.
struct AttackGates {
    Gate Q, Q_inverse, U, V, W, W_inverse, S, Z_t;
};
const AttackGates &attack_gates();

/// Eve's operation on the Bob-to-Alice leg (identity for AttackKind::None).
const Gate &forward_attack(AttackKind kind);
/// Eve's operation on the Alice-to-Bob leg: the inverse of forward_attack.
const Gate &return_attack(AttackKind kind);

/// Alice's encoding Z_t^j.
StateVector encode(const StateVector &state, int j);

/// Applies the return-leg attack; improved attack by default.
StateVector ab_attack(const StateVector &state, AttackKind kind = AttackKind::Improved);

/// Applies S_ty when coin is set.
StateVector symmetrize(const StateVector &state, bool coin);

/// Eve's z measurement of y. Vacuum means "no photon".
Branch<PolarizationOutcome> eve_measure(const StateVector &state, Rng &rng);

/// W|initial> written out term by term:
/// (1/2)|0>_h|1>_t(|vac>_x|0>_y + |1>_x|vac>_y) + (1/2)|1>_h|0>_t(|vac>_x|1>_y + |0>_x|vac>_y).
StateVector target_forward_state();

/// The target return-leg state
/// (1/2)[(-1)^j (Psi+ + Psi-)|j>_y + (Psi+ - Psi-)|0>_y]|vac>_x.
/// Note: ab_attack(encode(target_forward_state(), 1)) does not produce this
/// state; see README ("Known discrepancy").
StateVector target_return_state(int j);

/// The target symmetrized state
/// (1/2)[(Psi+ + Psi-)|j>_y + (-1)^j (Psi+ - Psi-)|1>_y]|vac>_x.
StateVector target_symmetrized_state(int j);

/// CPBS conventions for which W|initial> equals target_forward_state() to 1e-12.
std::vector<CpbsConvention> matching_cpbs_conventions();

/// State after each factor of the forward attack, starting from the initial
/// state, labelled by the factor just applied.
std::vector<std::pair<std::string, StateVector>> forward_attack_steps(AttackKind kind);

}  // namespace pingpong

#endif
