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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qctp/gates.h"
#include "qctp/register.h"
#include "qctp/rng.h"

namespace qctp {

struct DecoyRecord {
    Basis basis = Basis::Z;
    int value = 0;
    /// Insertion slot in the host sequence, 0..host_length.
    std::size_t position = 0;
};

struct Decoy {
    DecoyRecord record;
    StateVector state;
};

/// Adversary on the quantum line.
struct EveModel {
    enum class Kind { none, intercept_resend };
    Kind kind = Kind::none;

    static EveModel none() {
        return {Kind::none};
    }
    /// Measures every passing qudit in a uniformly random basis and resends the eigenstate found.
    static EveModel intercept_resend() {
        return {Kind::intercept_resend};
    }

    std::string name() const;
    static EveModel parse(std::string_view text);
};

/// `count` decoys, each uniform over the 2d states of Z_d and X_d.
std::vector<Decoy> generate_decoys(Dimension d, std::size_t count, Rng &rng, std::size_t host_length = 0);

std::vector<StateVector> transmit(std::span<const Decoy> decoys, const EveModel &eve, Rng &rng);

struct DecoyCheck {
    std::size_t errors = 0;
    double rate = 0;
};

/// Measures each received qudit in its preparation basis; an error is any outcome differing from the prepared value.
DecoyCheck check_decoys(std::span<const StateVector> transmitted, std::span<const DecoyRecord> records, Rng &rng);

/// None: 0. Intercept-resend: (1/2)(1 - 1/d).
double detection_probability_analytic(Dimension d, const EveModel &eve);

struct DecoyReport {
    int d = 2;
    std::size_t count = 0;
    EveModel eve;
    std::size_t errors = 0;
    double rate = 0;
    double analytic_rate = 0;
    std::uint64_t seed = 0;
};

/// Generate, transmit and check `count` decoys with a single seeded stream.
DecoyReport run_decoy_experiment(Dimension d, std::size_t count, const EveModel &eve, std::uint64_t seed);

std::string decoy_report_to_json(const DecoyReport &report);

}  // namespace qctp
