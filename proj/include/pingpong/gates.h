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

#ifndef PINGPONG_GATES_H
#define PINGPONG_GATES_H

#include <array>
#include <string>

#include "pingpong/gate.h"

namespace pingpong {

/// Polarization Hadamard on one register. Identity on an empty mode; a mode
/// holding one photon of each polarization is outside the domain.
Gate gate_hadamard(Register mode);

/// Exchanges the full contents of two optical modes.
Gate gate_swap(Register a, Register b);

enum class Pauli { X, Z };

/// Z: phase -1 per polarization-1 photon. X: exchanges polarizations.
/// Both act as identity on an empty mode.
Gate gate_pauli(Register target, Pauli which);

/// Flips the target's polarization when the control holds a polarization-1
/// photon. Active control with an empty or doubly occupied target, and a
/// doubly occupied control, are outside the domain.
Gate gate_cnot(Register control, Register target);

/// Which polarization the beam splitter between x and y reflects, as a
/// function of the control photon's polarization in t.
struct CpbsConvention {
    int reflected_when_control0 = 0;
    int reflected_when_control1 = 1;

    /// Ordinal in 0..3.
    int index() const { return reflected_when_control0 * 2 + reflected_when_control1; }
    std::string describe() const;

    bool operator==(const CpbsConvention &) const = default;
};

/// The convention used throughout: the reflected polarization equals the
/// control photon's polarization.
constexpr CpbsConvention kDefaultCpbs{0, 1};

std::array<CpbsConvention, 4> all_cpbs_conventions();

/// Controlled polarizing beam splitter on (t, x, y). Photons of the reflected
/// polarization are exchanged between x and y; the other polarization stays.
/// Identity when t is empty; undefined when t holds two photons.
Gate gate_cpbs(CpbsConvention convention = kDefaultCpbs);

}  // namespace pingpong

#endif
