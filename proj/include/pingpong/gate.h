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

#ifndef PINGPONG_GATE_H
#define PINGPONG_GATE_H

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pingpong/state.h"

namespace pingpong {

/// A linear map on the composite space, given column by column.
///
/// Each basis label in the declared domain maps to a short list of
/// (label, amplitude) terms. Labels outside the domain have no column and
/// applying the gate to a state supported on them raises DomainError.
class Gate {
   public:
    struct Term {
        BasisLabel label;
        Amplitude amplitude;
    };
    using Column = std::vector<Term>;
    /// Returns nullopt for labels outside the declared domain.
    using Action = std::function<std::optional<Column>(const BasisLabel &)>;

    static Gate from_action(std::string name, const Action &action);
    static Gate identity();

    const std::string &name() const { return name_; }
    bool in_domain(const BasisLabel &label) const { return columns_[label.index()].has_value(); }
    size_t domain_size() const;

    /// Throws DomainError outside the declared domain.
    std::span<const Term> column(const BasisLabel &label) const;

    /// Product `*this * right`: right acts first. The domain is every label in
    /// right's domain whose image lies in this gate's domain.
    Gate operator*(const Gate &right) const;

    /// Adjoint on the image of the declared domain. Throws std::logic_error if
    /// the gate is not unitary on its domain.
    Gate inverse() const;

    Gate renamed(std::string name) const;

    StateVector apply(const StateVector &state) const;

    /// Largest |<col_a|col_b> - delta_ab| over the declared domain.
    double unitarity_defect() const;
    /// True when every column term has the same (t, x, y) photon count as its input.
    bool conserves_photons() const;

   private:
    std::string name_;
    std::array<std::optional<Column>, BasisLabel::kCount> columns_;
};

inline StateVector apply(const Gate &gate, const StateVector &state) { return gate.apply(state); }

}  // namespace pingpong

#endif
