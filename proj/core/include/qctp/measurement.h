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
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qctp/gates.h"
#include "qctp/register.h"
#include "qctp/rng.h"

namespace qctp {

/// Below this, a projection is treated as impossible and its residual is absent.
inline constexpr double kZeroProbability = 1e-15;
inline constexpr std::uint64_t kDefaultBranchCap = 1'000'000;

/// Result of measuring one qudit in Z or X.
struct SingleOutcome {
    Basis basis = Basis::Z;
    int u = 0;
    bool operator==(const SingleOutcome &) const = default;
};

/// Index (u, v) of the generalized Bell state a pair was projected onto.
struct BellOutcome {
    int u = 0;
    int v = 0;
    bool operator==(const BellOutcome &) const = default;
};

using Outcome = std::variant<SingleOutcome, BellOutcome>;

std::string outcome_str(const Outcome &outcome);

struct Projection {
    double probability = 0;
    /// Normalized post-measurement state with the projected labels removed; empty when probability < kZeroProbability.
    std::optional<StateVector> residual;
};

/// Partial projection of `s` onto `vector` living on `labels`.
///
/// The amplitudes of `vector` are read in the order of `labels`; its own
/// labels are not consulted.
Projection project_onto(const StateVector &s, std::span<const ParticleLabel> labels, const StateVector &vector);

struct Branch {
    Outcome outcome;
    double probability = 0;
    std::optional<StateVector> collapsed;
};

/// All d outcomes of a single-qudit measurement, in ascending outcome order.
std::vector<Branch> single_branches(const StateVector &s, const ParticleLabel &label, Basis basis);

/// All d^2 Bell outcomes, ordered lexicographically by (u, v).
std::vector<Branch> bell_branches(const StateVector &s, const ParticleLabel &a, const ParticleLabel &b);

/// Samples one outcome by inverse CDF over `branches`.
Branch sample_branch(std::vector<Branch> branches, Rng &rng);

Branch measure_single(const StateVector &s, const ParticleLabel &label, Basis basis, Rng &rng);
Branch measure_bell(const StateVector &s, const ParticleLabel &a, const ParticleLabel &b, Rng &rng);

struct SingleStep {
    ParticleLabel label;
    Basis basis = Basis::Z;
};

struct BellStep {
    ParticleLabel first;
    ParticleLabel second;
};

using MeasurementStep = std::variant<SingleStep, BellStep>;

struct PlanBranch {
    std::vector<Outcome> outcomes;
    double probability = 0;
    std::optional<StateVector> collapsed;
};

/// Every outcome combination of `plan`, in lexicographic outcome order.
///
/// Zero-probability branches are kept, with probability 0 and no state.
std::vector<PlanBranch> enumerate_branches(
    const StateVector &s, std::span<const MeasurementStep> plan, std::uint64_t branch_cap = kDefaultBranchCap);

}  // namespace qctp
