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

#include "qctp/gates.h"

#include <cmath>
#include <numbers>

#include "qctp/error.h"

namespace qctp {

namespace {

void require_digit(Dimension d, int value, const char *what) {
    if (value < 0 || value >= d.value()) {
        throw Error(
            ErrorCode::IndexOutOfRange,
            std::string(what) + "=" + std::to_string(value) + " outside [0, " + std::to_string(d.value()) + ")");
    }
}

}  // namespace

const char *basis_name(Basis basis) {
    return basis == Basis::Z ? "Z" : "X";
}

Amplitude root_of_unity(int d, long long a) {
    long long r = a % d;
    if (r < 0) {
        r += d;
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(d));
}

StateVector z_basis_vector(Dimension d, int k, ParticleLabel label) {
    require_digit(d, k, "k");
    int digits[] = {k};
    return StateVector::basis_state(d, {label}, digits);
}

StateVector x_basis_vector(Dimension d, int u, ParticleLabel label) {
    require_digit(d, u, "u");
    const int dim = d.value();
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    std::vector<Amplitude> amps(dim);
    for (int l = 0; l < dim; ++l) {
        amps[l] = scale * root_of_unity(dim, static_cast<long long>(u) * l);
    }
    return StateVector::from_amplitudes(d, {label}, std::move(amps));
}

StateVector basis_vector(Dimension d, Basis basis, int value, ParticleLabel label) {
    return basis == Basis::Z ? z_basis_vector(d, value, label) : x_basis_vector(d, value, label);
}

StateVector bell_state(Dimension d, int u, int v, ParticleLabel first, ParticleLabel second) {
    require_digit(d, u, "u");
    require_digit(d, v, "v");
    const int dim = d.value();
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    std::vector<Amplitude> amps(static_cast<std::size_t>(dim) * dim);
    for (int l = 0; l < dim; ++l) {
        int partner = (l + v) % dim;
        amps[static_cast<std::size_t>(l) * dim + partner] = scale * root_of_unity(dim, static_cast<long long>(l) * u);
    }
    return StateVector::from_amplitudes(d, {first, second}, std::move(amps));
}

GeneralizedPauli generalized_pauli(Dimension d, int u, int v) {
    require_digit(d, u, "u");
    require_digit(d, v, "v");
    const int dim = d.value();
    QuditMatrix m(dim);
    for (int l = 0; l < dim; ++l) {
        m((l + v) % dim, l) = root_of_unity(dim, static_cast<long long>(u) * l);
    }
    return {u, v, std::move(m)};
}

StateVector ghz_state(Dimension d, int parties, std::vector<ParticleLabel> labels) {
    if (parties < 2) {
        throw Error(ErrorCode::InvalidArgument, "GHZ state needs at least 2 parties");
    }
    if (labels.size() != static_cast<std::size_t>(parties)) {
        throw Error(
            ErrorCode::LengthMismatch,
            std::to_string(parties) + " parties but " + std::to_string(labels.size()) + " labels");
    }
    ParticleRegistry registry(d, labels);
    std::vector<Amplitude> amps(registry.amplitude_count());
    const double scale = 1.0 / std::sqrt(static_cast<double>(d.value()));
    // |l...l> sits at l * (1 + d + d^2 + ...).
    std::uint64_t repunit = 0;
    for (int t = 0; t < parties; ++t) {
        repunit = repunit * static_cast<std::uint64_t>(d.value()) + 1;
    }
    for (int l = 0; l < d.value(); ++l) {
        amps[static_cast<std::uint64_t>(l) * repunit] = scale;
    }
    return StateVector::from_amplitudes(d, std::move(labels), std::move(amps));
}

}  // namespace qctp
