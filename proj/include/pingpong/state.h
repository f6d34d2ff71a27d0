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

#ifndef PINGPONG_STATE_H
#define PINGPONG_STATE_H

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pingpong {

using Amplitude = std::complex<double>;

/// Raised when an operation would put two photons of the same polarization
/// into one optical mode.
struct OccupancyOverflow : std::overflow_error {
    using std::overflow_error::overflow_error;
};

/// Raised when a gate is applied to a basis label outside its declared domain.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Photon content of one optical mode, per polarization.
///
/// Each polarization holds zero or one photon, giving four states ordered
/// Vac < Pol0 < Pol1 < Pair. The ordering is also the serialization order.
class ModeOccupancy {
   public:
    constexpr ModeOccupancy() = default;

    /// Throws OccupancyOverflow if either count is outside {0, 1}.
    constexpr ModeOccupancy(int n0, int n1) {
        if (n0 < 0 || n0 > 1 || n1 < 0 || n1 > 1) {
            throw OccupancyOverflow("polarization occupancy must be 0 or 1");
        }
        code_ = static_cast<uint8_t>(n0 + 2 * n1);
    }

    static constexpr ModeOccupancy vac() { return ModeOccupancy(0, 0); }
    static constexpr ModeOccupancy pol(int p) { return p == 0 ? ModeOccupancy(1, 0) : ModeOccupancy(0, 1); }
    static constexpr ModeOccupancy pair() { return ModeOccupancy(1, 1); }

    /// Ordinal in Vac, Pol0, Pol1, Pair order.
    static constexpr ModeOccupancy from_index(int index) {
        ModeOccupancy m;
        m.code_ = static_cast<uint8_t>(index == 1 ? 1 : index == 2 ? 2 : index == 3 ? 3 : 0);
        return m;
    }
    constexpr int index() const { return code_; }

    constexpr int count(int polarization) const { return (code_ >> polarization) & 1; }
    constexpr int n0() const { return count(0); }
    constexpr int n1() const { return count(1); }
    constexpr int total() const { return n0() + n1(); }

    constexpr bool is_vac() const { return code_ == 0; }
    constexpr bool is_single() const { return total() == 1; }
    constexpr bool is_pair() const { return code_ == 3; }
    /// Polarization of a single photon; only meaningful when is_single().
    constexpr int polarization() const { return n1(); }

    /// Returns the occupancy with the given polarization count replaced.
    constexpr ModeOccupancy with_count(int polarization, int n) const {
        return polarization == 0 ? ModeOccupancy(n, n1()) : ModeOccupancy(n0(), n);
    }
    /// Adds one photon of the given polarization; throws on double occupancy.
    constexpr ModeOccupancy plus(int polarization) const {
        return with_count(polarization, count(polarization) + 1);
    }

    constexpr bool operator==(const ModeOccupancy &) const = default;
    constexpr auto operator<=>(const ModeOccupancy &) const = default;

    std::string_view name() const;

   private:
    uint8_t code_ = 0;
};

/// Registers of the composite system: Bob's home photon and three optical modes.
enum class Register : uint8_t { H = 0, T = 1, X = 2, Y = 3 };

std::string_view register_name(Register r);
Register parse_register(std::string_view name);

/// A basis label over (h, t, x, y).
///
/// h always holds exactly one photon; it is stored as a polarization bit.
struct BasisLabel {
    int h = 0;
    ModeOccupancy t;
    ModeOccupancy x;
    ModeOccupancy y;

    static constexpr size_t kCount = 2 * 4 * 4 * 4;

    /// Dense index in lexicographic (h, t, x, y) order.
    constexpr size_t index() const {
        return static_cast<size_t>(h) * 64 + static_cast<size_t>(t.index()) * 16 +
               static_cast<size_t>(x.index()) * 4 + static_cast<size_t>(y.index());
    }
    static constexpr BasisLabel from_index(size_t i) {
        BasisLabel b;
        b.h = static_cast<int>(i / 64);
        b.t = ModeOccupancy::from_index(static_cast<int>((i / 16) % 4));
        b.x = ModeOccupancy::from_index(static_cast<int>((i / 4) % 4));
        b.y = ModeOccupancy::from_index(static_cast<int>(i % 4));
        return b;
    }

    /// Occupancy of a register; h is reported as a single photon.
    ModeOccupancy get(Register r) const;
    /// Sets a register's occupancy; h only accepts a single photon.
    BasisLabel with(Register r, ModeOccupancy m) const;

    int photon_count() const { return t.total() + x.total() + y.total(); }

    constexpr bool operator==(const BasisLabel &) const = default;

    std::string str() const;
};

/// Normalized pure state over the 128 basis labels.
///
/// Stored densely; absent labels carry amplitude zero.
class StateVector {
   public:
    using Storage = std::array<Amplitude, BasisLabel::kCount>;

    StateVector() { amps_.fill(Amplitude{}); }

    static StateVector basis(const BasisLabel &label);

    Amplitude operator[](const BasisLabel &label) const { return amps_[label.index()]; }
    Amplitude &operator[](const BasisLabel &label) { return amps_[label.index()]; }
    Amplitude at(size_t index) const { return amps_[index]; }
    Amplitude &at(size_t index) { return amps_[index]; }

    const Storage &amplitudes() const { return amps_; }

    double norm_squared() const;
    /// Scales to unit norm; throws std::domain_error on a zero vector.
    StateVector normalized() const;

    StateVector operator+(const StateVector &other) const;
    StateVector operator*(Amplitude scale) const;

    /// Largest absolute amplitude difference.
    double max_deviation(const StateVector &other) const;
    /// Largest amplitude difference after aligning global phases: each state
    /// is rotated so its largest-magnitude amplitude is real positive.
    double max_deviation_up_to_phase(const StateVector &other) const;
    Amplitude inner(const StateVector &other) const;

    /// Labels with |amplitude| above the support threshold.
    template <typename Fn>
    void for_each_support(Fn &&fn) const {
        for (size_t i = 0; i < amps_.size(); i++) {
            if (std::abs(amps_[i]) > kSupportEpsilon) {
                fn(BasisLabel::from_index(i), amps_[i]);
            }
        }
    }

    /// Amplitudes below this magnitude are treated as numerical zero.
    static constexpr double kSupportEpsilon = 1e-12;

    /// One line per nonzero label, "h,t,x,y,re,im", in label order.
    void dump(std::ostream &out) const;

   private:
    Storage amps_;
};

/// |Psi+>_ht |vac>_x |0>_y.
StateVector make_initial();

/// (|0>_h|1>_t + s|1>_h|0>_t)/sqrt(2) times the given x, y contents; s = +1
/// for Psi+ and -1 for Psi-. Phi states use equal h and t polarizations.
enum class BellState : uint8_t { PsiPlus = 0, PsiMinus = 1, PhiPlus = 2, PhiMinus = 3 };
std::string_view bell_name(BellState b);
StateVector make_bell(BellState bell, ModeOccupancy x, ModeOccupancy y);

}  // namespace pingpong

#endif
