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

#include <vector>

#include "qctp/register.h"

namespace qctp {

/// Single-qudit measuring basis: computational (Z) or its Fourier conjugate (X).
enum class Basis { Z, X };

const char *basis_name(Basis basis);

/// e^{2 pi i a / d}, with `a` reduced mod d before the exponent is formed.
Amplitude root_of_unity(int d, long long a);

/// Weyl operator: |l> -> e^{2 pi i u l / d} |l + v mod d>.
struct GeneralizedPauli {
    int u = 0;
    int v = 0;
    QuditMatrix matrix;
};

StateVector z_basis_vector(Dimension d, int k, ParticleLabel label = ParticleLabel::message(1));

/// (1/sqrt d) sum_l e^{2 pi i u l / d} |l>.
StateVector x_basis_vector(Dimension d, int u, ParticleLabel label = ParticleLabel::message(1));

StateVector basis_vector(Dimension d, Basis basis, int value, ParticleLabel label = ParticleLabel::message(1));

/// (1/sqrt d) sum_l e^{2 pi i l u / d} |l>_first |l + v mod d>_second.
StateVector bell_state(
    Dimension d,
    int u,
    int v,
    ParticleLabel first = ParticleLabel::message(1),
    ParticleLabel second = ParticleLabel::message(2));

GeneralizedPauli generalized_pauli(Dimension d, int u, int v);

/// (1/sqrt d) sum_l |l, l, ..., l> over `parties` qudits carrying `labels`.
StateVector ghz_state(Dimension d, int parties, std::vector<ParticleLabel> labels);

}  // namespace qctp
