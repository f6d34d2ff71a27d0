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

#include "pingpong/gate.h"

#include <cmath>
#include <stdexcept>

namespace pingpong {

namespace {

constexpr double kDropEpsilon = 1e-15;

// Merges duplicate labels and drops cancelled terms.
Gate::Column canonical(const std::array<Amplitude, BasisLabel::kCount> &dense) {
    Gate::Column col;
    for (size_t i = 0; i < dense.size(); i++) {
        if (std::abs(dense[i]) > kDropEpsilon) col.push_back({BasisLabel::from_index(i), dense[i]});
    }
    return col;
}

}  // namespace

Gate Gate::from_action(std::string name, const Action &action) {
    Gate g;
    g.name_ = std::move(name);
    for (size_t i = 0; i < BasisLabel::kCount; i++) {
        auto col = action(BasisLabel::from_index(i));
        if (!col) continue;
        std::array<Amplitude, BasisLabel::kCount> dense{};
        for (const auto &term : *col) dense[term.label.index()] += term.amplitude;
        g.columns_[i] = canonical(dense);
    }
    return g;
}

Gate Gate::identity() {
    return from_action("I", [](const BasisLabel &b) { return Column{{b, 1.0}}; });
}

size_t Gate::domain_size() const {
    size_t n = 0;
    for (const auto &c : columns_) n += c.has_value();
    return n;
}

std::span<const Gate::Term> Gate::column(const BasisLabel &label) const {
    const auto &col = columns_[label.index()];
    if (!col) throw DomainError(name_ + " is not defined on " + label.str());
    return *col;
}

Gate Gate::operator*(const Gate &right) const {
    Gate out;
    out.name_ = name_ + "*" + right.name_;
    for (size_t i = 0; i < BasisLabel::kCount; i++) {
        const auto &first = right.columns_[i];
        if (!first) continue;
        std::array<Amplitude, BasisLabel::kCount> dense{};
        bool defined = true;
        for (const auto &mid : *first) {
            const auto &second = columns_[mid.label.index()];
            if (!second) {
                defined = false;
                break;
            }
            for (const auto &term : *second) dense[term.label.index()] += mid.amplitude * term.amplitude;
        }
        if (defined) out.columns_[i] = canonical(dense);
    }
    return out;
}

Gate Gate::inverse() const {
    if (unitarity_defect() > 1e-12) throw std::logic_error(name_ + " is not unitary on its domain");
    Gate out;
    out.name_ = name_ + "^-1";
    std::vector<std::array<Amplitude, BasisLabel::kCount>> rows(BasisLabel::kCount);
    std::array<bool, BasisLabel::kCount> in_image{};
    for (size_t a = 0; a < BasisLabel::kCount; a++) {
        if (!columns_[a]) continue;
        for (const auto &term : *columns_[a]) {
            size_t b = term.label.index();
            rows[b][a] += std::conj(term.amplitude);
            in_image[b] = true;
        }
    }
    size_t image = 0;
    for (size_t b = 0; b < BasisLabel::kCount; b++) {
        if (!in_image[b]) continue;
        image++;
        out.columns_[b] = canonical(rows[b]);
    }
    // The image must be a coordinate subspace of the same dimension as the
    // domain for the adjoint to be a two-sided inverse.
    if (image != domain_size()) throw std::logic_error(name_ + " image is not a coordinate subspace");
    return out;
}

Gate Gate::renamed(std::string name) const {
    Gate out = *this;
    out.name_ = std::move(name);
    return out;
}

StateVector Gate::apply(const StateVector &state) const {
    StateVector out;
    for (size_t i = 0; i < BasisLabel::kCount; i++) {
        Amplitude a = state.at(i);
        if (a == Amplitude{}) continue;
        const auto &col = columns_[i];
        if (!col) {
            if (std::abs(a) <= StateVector::kSupportEpsilon) continue;
            throw DomainError(name_ + " is not defined on " + BasisLabel::from_index(i).str());
        }
        for (const auto &term : *col) out.at(term.label.index()) += a * term.amplitude;
    }
    return out;
}

double Gate::unitarity_defect() const {
    double worst = 0;
    for (size_t a = 0; a < BasisLabel::kCount; a++) {
        if (!columns_[a]) continue;
        std::array<Amplitude, BasisLabel::kCount> dense_a{};
        for (const auto &term : *columns_[a]) dense_a[term.label.index()] = term.amplitude;
        for (size_t b = a; b < BasisLabel::kCount; b++) {
            if (!columns_[b]) continue;
            Amplitude dot{};
            for (const auto &term : *columns_[b]) dot += std::conj(dense_a[term.label.index()]) * term.amplitude;
            double expected = a == b ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(dot - expected));
        }
    }
    return worst;
}

bool Gate::conserves_photons() const {
    for (size_t a = 0; a < BasisLabel::kCount; a++) {
        if (!columns_[a]) continue;
        int n = BasisLabel::from_index(a).photon_count();
        for (const auto &term : *columns_[a]) {
            if (term.label.photon_count() != n) return false;
        }
    }
    return true;
}

}  // namespace pingpong
