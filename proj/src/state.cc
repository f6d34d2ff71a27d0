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

#include "pingpong/state.h"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace pingpong {

std::string_view ModeOccupancy::name() const {
    switch (code_) {
        case 0:
            return "vac";
        case 1:
            return "0";
        case 2:
            return "1";
        default:
            return "01";
    }
}

std::string_view register_name(Register r) {
    switch (r) {
        case Register::H:
            return "h";
        case Register::T:
            return "t";
        case Register::X:
            return "x";
        case Register::Y:
            return "y";
    }
    return "?";
}

Register parse_register(std::string_view name) {
    if (name == "h") return Register::H;
    if (name == "t") return Register::T;
    if (name == "x") return Register::X;
    if (name == "y") return Register::Y;
    throw std::invalid_argument("unknown register '" + std::string(name) + "'");
}

ModeOccupancy BasisLabel::get(Register r) const {
    switch (r) {
        case Register::H:
            return ModeOccupancy::pol(h);
        case Register::T:
            return t;
        case Register::X:
            return x;
        case Register::Y:
            return y;
    }
    return {};
}

BasisLabel BasisLabel::with(Register r, ModeOccupancy m) const {
    BasisLabel out = *this;
    switch (r) {
        case Register::H:
            if (!m.is_single()) {
                throw OccupancyOverflow("home register must hold exactly one photon");
            }
            out.h = m.polarization();
            break;
        case Register::T:
            out.t = m;
            break;
        case Register::X:
            out.x = m;
            break;
        case Register::Y:
            out.y = m;
            break;
    }
    return out;
}

std::string BasisLabel::str() const {
    std::ostringstream ss;
    ss << "|" << h << ">_h|" << t.name() << ">_t|" << x.name() << ">_x|" << y.name() << ">_y";
    return ss.str();
}

StateVector StateVector::basis(const BasisLabel &label) {
    StateVector s;
    s[label] = 1.0;
    return s;
}

double StateVector::norm_squared() const {
    double total = 0;
    for (const auto &a : amps_) total += std::norm(a);
    return total;
}

StateVector StateVector::normalized() const {
    double n = std::sqrt(norm_squared());
    if (n == 0) throw std::domain_error("cannot normalize the zero vector");
    return *this * Amplitude(1.0 / n);
}

StateVector StateVector::operator+(const StateVector &other) const {
    StateVector out;
    for (size_t i = 0; i < amps_.size(); i++) out.amps_[i] = amps_[i] + other.amps_[i];
    return out;
}

StateVector StateVector::operator*(Amplitude scale) const {
    StateVector out;
    for (size_t i = 0; i < amps_.size(); i++) out.amps_[i] = amps_[i] * scale;
    return out;
}

double StateVector::max_deviation(const StateVector &other) const {
    double worst = 0;
    for (size_t i = 0; i < amps_.size(); i++) worst = std::max(worst, std::abs(amps_[i] - other.amps_[i]));
    return worst;
}

namespace {

StateVector phase_aligned(const StateVector &s) {
    size_t best = 0;
    for (size_t i = 1; i < BasisLabel::kCount; i++) {
        // Ties resolved toward the lower index so both sides pick the same label.
        if (std::abs(s.at(i)) > std::abs(s.at(best)) + 1e-12) best = i;
    }
    Amplitude a = s.at(best);
    if (std::abs(a) == 0) return s;
    return s * (std::conj(a) / std::abs(a));
}

}  // namespace

double StateVector::max_deviation_up_to_phase(const StateVector &other) const {
    return phase_aligned(*this).max_deviation(phase_aligned(other));
}

Amplitude StateVector::inner(const StateVector &other) const {
    Amplitude total{};
    for (size_t i = 0; i < amps_.size(); i++) total += std::conj(amps_[i]) * other.amps_[i];
    return total;
}

void StateVector::dump(std::ostream &out) const {
    auto flags = out.flags();
    auto precision = out.precision();
    out << std::setprecision(17);
    for (size_t i = 0; i < amps_.size(); i++) {
        if (amps_[i] == Amplitude{}) continue;
        auto b = BasisLabel::from_index(i);
        out << b.h << "," << b.t.name() << "," << b.x.name() << "," << b.y.name() << "," << amps_[i].real()
            << "," << amps_[i].imag() << "\n";
    }
    out.flags(flags);
    out.precision(precision);
}

StateVector make_bell(BellState bell, ModeOccupancy x, ModeOccupancy y) {
    const double r = 1.0 / std::sqrt(2.0);
    const bool psi = bell == BellState::PsiPlus || bell == BellState::PsiMinus;
    const double sign = (bell == BellState::PsiMinus || bell == BellState::PhiMinus) ? -1.0 : 1.0;
    StateVector s;
    // First term has h = 0, second h = 1; t is opposite to h for Psi.
    s[BasisLabel{0, ModeOccupancy::pol(psi ? 1 : 0), x, y}] = r;
    s[BasisLabel{1, ModeOccupancy::pol(psi ? 0 : 1), x, y}] = sign * r;
    return s;
}

std::string_view bell_name(BellState b) {
    switch (b) {
        case BellState::PsiPlus:
            return "psi+";
        case BellState::PsiMinus:
            return "psi-";
        case BellState::PhiPlus:
            return "phi+";
        case BellState::PhiMinus:
            return "phi-";
    }
    return "?";
}

StateVector make_initial() { return make_bell(BellState::PsiPlus, ModeOccupancy::vac(), ModeOccupancy::pol(0)); }

}  // namespace pingpong
