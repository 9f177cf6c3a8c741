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

#include "qctp/register.h"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "qctp/error.h"

namespace qctp {

Dimension::Dimension(int d) : d_(d) {
    if (d < 2) {
        throw Error(ErrorCode::InvalidArgument, "d must be >= 2, got " + std::to_string(d));
    }
}

ParticleLabel ParticleLabel::message(int k) {
    return {Role::message, k, 0};
}

ParticleLabel ParticleLabel::channel(int k, int j) {
    return {Role::channel, k, j};
}

ParticleLabel ParticleLabel::decoy(int k) {
    return {Role::decoy, k, 0};
}

namespace {

bool parse_int(std::string_view text, int &out) {
    if (text.empty()) {
        return false;
    }
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc() && ptr == text.data() + text.size() && out >= 0;
}

}  // namespace

ParticleLabel ParticleLabel::parse(std::string_view text) {
    auto fail = [&]() -> ParticleLabel {
        throw Error(ErrorCode::ParseError, "bad particle label '" + std::string(text) + "'");
    };
    int k = 0;
    if (text.starts_with("decoy")) {
        if (!parse_int(text.substr(5), k) || k < 1) {
            return fail();
        }
        return decoy(k);
    }
    if (text.starts_with("x")) {
        if (!parse_int(text.substr(1), k) || k < 1) {
            return fail();
        }
        return message(k);
    }
    if (text.starts_with("p")) {
        auto rest = text.substr(1);
        auto sep = rest.find('_');
        int j = 0;
        if (sep == std::string_view::npos || !parse_int(rest.substr(0, sep), k) || k < 1 ||
            !parse_int(rest.substr(sep + 1), j)) {
            return fail();
        }
        return channel(k, j);
    }
    return fail();
}

std::string ParticleLabel::str() const {
    switch (role) {
        case Role::message:
            return "x" + std::to_string(k);
        case Role::channel:
            return "p" + std::to_string(k) + "_" + std::to_string(j);
        case Role::decoy:
            return "decoy" + std::to_string(k);
    }
    return "?";
}

ParticleRegistry::ParticleRegistry(Dimension d, std::vector<ParticleLabel> labels) : d_(d), labels_(std::move(labels)) {
    auto sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
        throw Error(ErrorCode::DuplicateLabel, dup->str());
    }
}

bool ParticleRegistry::contains(const ParticleLabel &label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::size_t ParticleRegistry::position(const ParticleLabel &label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        throw Error(ErrorCode::UnknownLabel, label.str());
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

std::uint64_t ParticleRegistry::amplitude_count(std::uint64_t cap) const {
    return detail::checked_pow(static_cast<std::uint64_t>(d_.value()), labels_.size(), cap);
}

std::uint64_t ParticleRegistry::stride(std::size_t position) const {
    std::uint64_t s = 1;
    for (std::size_t t = position + 1; t < labels_.size(); ++t) {
        s *= static_cast<std::uint64_t>(d_.value());
    }
    return s;
}

std::uint64_t ParticleRegistry::index_of(std::span<const int> digits) const {
    if (digits.size() != labels_.size()) {
        throw Error(ErrorCode::LengthMismatch, "digit count differs from register size");
    }
    std::uint64_t index = 0;
    for (int digit : digits) {
        if (digit < 0 || digit >= d_.value()) {
            throw Error(ErrorCode::IndexOutOfRange, "digit " + std::to_string(digit));
        }
        index = index * static_cast<std::uint64_t>(d_.value()) + static_cast<std::uint64_t>(digit);
    }
    return index;
}

std::vector<int> ParticleRegistry::digits_of(std::uint64_t index) const {
    std::vector<int> digits(labels_.size());
    auto d = static_cast<std::uint64_t>(d_.value());
    for (std::size_t t = labels_.size(); t-- > 0;) {
        digits[t] = static_cast<int>(index % d);
        index /= d;
    }
    if (index != 0) {
        throw Error(ErrorCode::IndexOutOfRange, "flat index exceeds register size");
    }
    return digits;
}

ParticleRegistry ParticleRegistry::without(std::span<const ParticleLabel> removed) const {
    std::vector<ParticleLabel> kept;
    kept.reserve(labels_.size());
    for (const auto &label : removed) {
        position(label);
    }
    for (const auto &label : labels_) {
        if (std::find(removed.begin(), removed.end(), label) == removed.end()) {
            kept.push_back(label);
        }
    }
    return ParticleRegistry(d_, std::move(kept));
}

ParticleRegistry ParticleRegistry::concat(const ParticleRegistry &other) const {
    if (other.d_ != d_) {
        throw Error(ErrorCode::DimensionMismatch, "cannot combine registers of different dimension");
    }
    std::vector<ParticleLabel> joined = labels_;
    for (const auto &label : other.labels_) {
        if (contains(label)) {
            throw Error(ErrorCode::LabelCollision, label.str());
        }
        joined.push_back(label);
    }
    return ParticleRegistry(d_, std::move(joined));
}

QuditMatrix::QuditMatrix(std::size_t n) : n_(n), entries_(n * n) {
}

QuditMatrix QuditMatrix::identity(std::size_t n) {
    QuditMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

QuditMatrix QuditMatrix::adjoint() const {
    QuditMatrix out(n_);
    for (std::size_t r = 0; r < n_; ++r) {
        for (std::size_t c = 0; c < n_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

QuditMatrix QuditMatrix::operator*(const QuditMatrix &rhs) const {
    if (rhs.n_ != n_) {
        throw Error(ErrorCode::DimensionMismatch, "matrix sizes differ");
    }
    QuditMatrix out(n_);
    for (std::size_t r = 0; r < n_; ++r) {
        for (std::size_t k = 0; k < n_; ++k) {
            Amplitude a = (*this)(r, k);
            if (a == Amplitude{}) {
                continue;
            }
            for (std::size_t c = 0; c < n_; ++c) {
                out(r, c) += a * rhs(k, c);
            }
        }
    }
    return out;
}

double QuditMatrix::unitarity_error() const {
    QuditMatrix product = adjoint() * (*this);
    double worst = 0;
    for (std::size_t r = 0; r < n_; ++r) {
        for (std::size_t c = 0; c < n_; ++c) {
            Amplitude expected = r == c ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(product(r, c) - expected));
        }
    }
    return worst;
}

StateVector::StateVector(ParticleRegistry registry, std::vector<Amplitude> amplitudes)
    : registry_(std::move(registry)), amplitudes_(std::move(amplitudes)) {
}

StateVector StateVector::from_amplitudes(
    Dimension d, std::vector<ParticleLabel> labels, std::vector<Amplitude> amplitudes, std::uint64_t amplitude_cap) {
    ParticleRegistry registry(d, std::move(labels));
    std::uint64_t expected = registry.amplitude_count(amplitude_cap);
    if (amplitudes.size() != expected) {
        throw Error(
            ErrorCode::LengthMismatch,
            "expected " + std::to_string(expected) + " amplitudes, got " + std::to_string(amplitudes.size()));
    }
    StateVector s(std::move(registry), std::move(amplitudes));
    double norm = s.norm();
    if (!(std::abs(norm - 1.0) <= kInputNormTolerance)) {
        throw Error(ErrorCode::NotNormalized, "norm is " + std::to_string(norm));
    }
    return s;
}

StateVector StateVector::basis_state(Dimension d, std::vector<ParticleLabel> labels, std::span<const int> digits) {
    ParticleRegistry registry(d, std::move(labels));
    std::vector<Amplitude> amps(registry.amplitude_count());
    amps[registry.index_of(digits)] = 1.0;
    return StateVector(std::move(registry), std::move(amps));
}

StateVector StateVector::scalar(Dimension d) {
    return StateVector(ParticleRegistry(d, {}), {Amplitude{1.0}});
}

double StateVector::norm() const {
    double total = 0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

StateVector StateVector::relabeled(std::vector<ParticleLabel> labels) const {
    if (labels.size() != registry_.size()) {
        throw Error(ErrorCode::LengthMismatch, "relabel must keep the register size");
    }
    return StateVector(ParticleRegistry(dimension(), std::move(labels)), amplitudes_);
}

StateVector tensor(const StateVector &a, const StateVector &b, std::uint64_t amplitude_cap) {
    ParticleRegistry joined = a.registry().concat(b.registry());
    std::uint64_t total = joined.amplitude_count(amplitude_cap);
    std::vector<Amplitude> amps;
    amps.reserve(total);
    for (const auto &x : a.amplitudes()) {
        for (const auto &y : b.amplitudes()) {
            amps.push_back(x * y);
        }
    }
    return StateVector::from_amplitudes(a.dimension(), joined.labels(), std::move(amps), amplitude_cap);
}

Amplitude inner_product(const StateVector &a, const StateVector &b) {
    if (a.registry() != b.registry()) {
        throw Error(ErrorCode::RegistryMismatch, "inner product needs identical registers");
    }
    Amplitude total{};
    auto lhs = a.amplitudes();
    auto rhs = b.amplitudes();
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        total += std::conj(lhs[i]) * rhs[i];
    }
    return total;
}

double fidelity(const StateVector &a, const StateVector &b) {
    return std::norm(inner_product(a, b));
}

StateVector apply_single_qudit_unitary(const StateVector &s, const ParticleLabel &label, const QuditMatrix &u) {
    const auto &registry = s.registry();
    std::size_t pos = registry.position(label);
    auto d = static_cast<std::size_t>(s.dimension().value());
    if (u.size() != d) {
        throw Error(ErrorCode::DimensionMismatch, "gate size differs from qudit dimension");
    }
    if (u.unitarity_error() > kUnitaryTolerance) {
        throw Error(ErrorCode::NotUnitary, "matrix is not unitary within tolerance");
    }

    std::uint64_t stride = registry.stride(pos);
    std::vector<std::size_t> target{pos};
    auto rest = detail::complement_positions(registry, target);
    auto bases = detail::subset_offsets(registry, rest);

    auto in = s.amplitudes();
    std::vector<Amplitude> out(in.size());
    for (std::uint64_t base : bases) {
        for (std::size_t r = 0; r < d; ++r) {
            Amplitude acc{};
            for (std::size_t c = 0; c < d; ++c) {
                acc += u(r, c) * in[base + c * stride];
            }
            out[base + r * stride] = acc;
        }
    }
    return StateVector::from_amplitudes(s.dimension(), registry.labels(), std::move(out), in.size());
}

namespace detail {

std::vector<std::uint64_t> subset_offsets(const ParticleRegistry &registry, std::span<const std::size_t> positions) {
    std::vector<std::uint64_t> offsets{0};
    auto d = static_cast<std::uint64_t>(registry.dimension().value());
    for (std::size_t pos : positions) {
        std::uint64_t stride = registry.stride(pos);
        std::vector<std::uint64_t> next;
        next.reserve(offsets.size() * d);
        for (std::uint64_t base : offsets) {
            for (std::uint64_t digit = 0; digit < d; ++digit) {
                next.push_back(base + digit * stride);
            }
        }
        offsets = std::move(next);
    }
    return offsets;
}

std::vector<std::size_t> complement_positions(const ParticleRegistry &registry, std::span<const std::size_t> positions) {
    std::vector<std::size_t> rest;
    for (std::size_t t = 0; t < registry.size(); ++t) {
        if (std::find(positions.begin(), positions.end(), t) == positions.end()) {
            rest.push_back(t);
        }
    }
    return rest;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
    if (a != 0 && b > cap / a) {
        throw Error(ErrorCode::CapExceeded, "size exceeds cap of " + std::to_string(cap));
    }
    std::uint64_t product = a * b;
    if (product > cap) {
        throw Error(ErrorCode::CapExceeded, std::to_string(product) + " exceeds cap of " + std::to_string(cap));
    }
    return product;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t cap) {
    std::uint64_t result = 1;
    if (result > cap) {
        throw Error(ErrorCode::CapExceeded, "cap below 1");
    }
    for (std::uint64_t i = 0; i < exponent; ++i) {
        result = checked_mul(result, base, cap);
    }
    return result;
}

}  // namespace detail

}  // namespace qctp
