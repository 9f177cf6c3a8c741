// Copyright 2026 The qctp Authors
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

#pragma once

#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qctp {

using Amplitude = std::complex<double>;

inline constexpr std::uint64_t kDefaultAmplitudeCap = std::uint64_t{1} << 26;
inline constexpr double kInputNormTolerance = 1e-6;
inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kUnitaryTolerance = 1e-9;

/// Local dimension of every qudit in a register. Always >= 2.
class Dimension {
   public:
    explicit Dimension(int d);

    int value() const noexcept {
        return d_;
    }
    auto operator<=>(const Dimension &) const = default;

   private:
    int d_;
};

enum class Role { message, channel, decoy };

/// Logical particle name. Messages are x_k, channel qudits p_{k,j}, decoys decoy_k.
///
/// Textual form: "x3", "p2_0", "decoy7". k starts at 1; j starts at 0.
struct ParticleLabel {
    Role role = Role::message;
    int k = 1;
    int j = 0;

    static ParticleLabel message(int k);
    static ParticleLabel channel(int k, int j);
    static ParticleLabel decoy(int k);
    static ParticleLabel parse(std::string_view text);

    std::string str() const;
    auto operator<=>(const ParticleLabel &) const = default;
};

/// Ordered particle labels. Position 0 is the most significant base-d digit of a flat amplitude index.
class ParticleRegistry {
   public:
    ParticleRegistry(Dimension d, std::vector<ParticleLabel> labels);

    Dimension dimension() const noexcept {
        return d_;
    }
    std::size_t size() const noexcept {
        return labels_.size();
    }
    const std::vector<ParticleLabel> &labels() const noexcept {
        return labels_;
    }

    bool contains(const ParticleLabel &label) const;
    std::size_t position(const ParticleLabel &label) const;

    /// d^size(); throws CapExceeded if larger than `cap`.
    std::uint64_t amplitude_count(std::uint64_t cap = kDefaultAmplitudeCap) const;
    std::uint64_t stride(std::size_t position) const;

    std::uint64_t index_of(std::span<const int> digits) const;
    std::vector<int> digits_of(std::uint64_t index) const;

    ParticleRegistry without(std::span<const ParticleLabel> removed) const;
    ParticleRegistry concat(const ParticleRegistry &other) const;

    bool operator==(const ParticleRegistry &) const = default;

   private:
    Dimension d_;
    std::vector<ParticleLabel> labels_;
};

/// Dense d x d complex matrix, row-major.
class QuditMatrix {
   public:
    explicit QuditMatrix(std::size_t n);

    static QuditMatrix identity(std::size_t n);

    std::size_t size() const noexcept {
        return n_;
    }
    Amplitude &operator()(std::size_t row, std::size_t col) {
        return entries_[row * n_ + col];
    }
    const Amplitude &operator()(std::size_t row, std::size_t col) const {
        return entries_[row * n_ + col];
    }

    QuditMatrix adjoint() const;
    QuditMatrix operator*(const QuditMatrix &rhs) const;
    /// Largest entry-wise deviation of U^dagger U from the identity.
    double unitarity_error() const;

   private:
    std::size_t n_;
    std::vector<Amplitude> entries_;
};

/// Normalized pure state over a labeled register of qudits.
///
/// Values are immutable once constructed; every operation returns a new state.
class StateVector {
   public:
    /// Validates length (d^T), label uniqueness, the amplitude cap, and |norm - 1| <= 1e-6.
    static StateVector from_amplitudes(
        Dimension d,
        std::vector<ParticleLabel> labels,
        std::vector<Amplitude> amplitudes,
        std::uint64_t amplitude_cap = kDefaultAmplitudeCap);

    static StateVector basis_state(Dimension d, std::vector<ParticleLabel> labels, std::span<const int> digits);

    /// Zero-qudit register holding the scalar 1.
    static StateVector scalar(Dimension d);

    const ParticleRegistry &registry() const noexcept {
        return registry_;
    }
    Dimension dimension() const noexcept {
        return registry_.dimension();
    }
    std::span<const Amplitude> amplitudes() const noexcept {
        return amplitudes_;
    }
    Amplitude amplitude(std::uint64_t index) const {
        return amplitudes_.at(index);
    }
    double norm() const;

    /// Same amplitudes under a new label list of equal length.
    StateVector relabeled(std::vector<ParticleLabel> labels) const;

   private:
    StateVector(ParticleRegistry registry, std::vector<Amplitude> amplitudes);

    ParticleRegistry registry_;
    std::vector<Amplitude> amplitudes_;
};

StateVector tensor(const StateVector &a, const StateVector &b, std::uint64_t amplitude_cap = kDefaultAmplitudeCap);

/// <a|b>, conjugating a. Registries must match exactly.
Amplitude inner_product(const StateVector &a, const StateVector &b);

/// |<a|b>|^2, insensitive to global phase.
double fidelity(const StateVector &a, const StateVector &b);

StateVector apply_single_qudit_unitary(const StateVector &s, const ParticleLabel &label, const QuditMatrix &u);

namespace detail {

/// Flat-index offsets of every digit assignment on `positions`, enumerated with positions[0] most significant.
std::vector<std::uint64_t> subset_offsets(const ParticleRegistry &registry, std::span<const std::size_t> positions);

/// Positions of the registry not listed in `positions`, in ascending order.
std::vector<std::size_t> complement_positions(const ParticleRegistry &registry, std::span<const std::size_t> positions);

/// a * b, throwing CapExceeded when the product exceeds `cap`.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t cap);

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t cap);

}  // namespace detail

}  // namespace qctp
