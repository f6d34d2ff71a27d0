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

#include "pingpong/gates.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pingpong {

namespace {

using Column = Gate::Column;

std::string reg(Register r) { return std::string(register_name(r)); }

bool is_optical(Register r) { return r != Register::H; }

}  // namespace

Gate gate_hadamard(Register mode) {
    const double r = 1.0 / std::sqrt(2.0);
    return Gate::from_action("H_" + reg(mode), [=](const BasisLabel &b) -> std::optional<Column> {
        ModeOccupancy m = b.get(mode);
        if (m.is_vac()) return Column{{b, 1.0}};
        if (m.is_pair()) return std::nullopt;
        const double sign = m.polarization() == 0 ? 1.0 : -1.0;
        return Column{{b.with(mode, ModeOccupancy::pol(0)), r}, {b.with(mode, ModeOccupancy::pol(1)), sign * r}};
    });
}

Gate gate_swap(Register a, Register b) {
    if (a == b || !is_optical(a) || !is_optical(b)) {
        throw std::invalid_argument("SWAP needs two distinct optical modes");
    }
    return Gate::from_action("SWAP_" + reg(a) + reg(b), [=](const BasisLabel &label) -> std::optional<Column> {
        return Column{{label.with(a, label.get(b)).with(b, label.get(a)), 1.0}};
    });
}

Gate gate_pauli(Register target, Pauli which) {
    if (which == Pauli::Z) {
        return Gate::from_action("Z_" + reg(target), [=](const BasisLabel &b) -> std::optional<Column> {
            return Column{{b, b.get(target).n1() ? -1.0 : 1.0}};
        });
    }
    return Gate::from_action("X_" + reg(target), [=](const BasisLabel &b) -> std::optional<Column> {
        ModeOccupancy m = b.get(target);
        return Column{{b.with(target, ModeOccupancy(m.n1(), m.n0())), 1.0}};
    });
}

Gate gate_cnot(Register control, Register target) {
    if (control == target) throw std::invalid_argument("CNOT control and target must differ");
    return Gate::from_action("CNOT_" + reg(control) + reg(target), [=](const BasisLabel &b) -> std::optional<Column> {
        ModeOccupancy c = b.get(control);
        if (c.is_pair()) return std::nullopt;
        if (c.is_vac() || c.polarization() == 0) return Column{{b, 1.0}};
        ModeOccupancy t = b.get(target);
        if (!t.is_single()) return std::nullopt;
        return Column{{b.with(target, ModeOccupancy::pol(1 - t.polarization())), 1.0}};
    });
}

std::string CpbsConvention::describe() const {
    std::ostringstream ss;
    ss << "#" << index() << " (control 0 reflects " << reflected_when_control0 << ", control 1 reflects "
       << reflected_when_control1 << ")";
    return ss.str();
}

std::array<CpbsConvention, 4> all_cpbs_conventions() {
    return {CpbsConvention{0, 0}, CpbsConvention{0, 1}, CpbsConvention{1, 0}, CpbsConvention{1, 1}};
}

Gate gate_cpbs(CpbsConvention convention) {
    return Gate::from_action("CPBS_txy#" + std::to_string(convention.index()),
                             [=](const BasisLabel &b) -> std::optional<Column> {
                                 if (b.t.is_vac()) return Column{{b, 1.0}};
                                 if (b.t.is_pair()) return std::nullopt;
                                 const int r = b.t.polarization() == 0 ? convention.reflected_when_control0
                                                                       : convention.reflected_when_control1;
                                 BasisLabel out = b;
                                 out.x = b.x.with_count(r, b.y.count(r));
                                 out.y = b.y.with_count(r, b.x.count(r));
                                 return Column{{out, 1.0}};
                             });
}

}  // namespace pingpong
