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

#include "qctp/measurement.h"

#include <algorithm>
#include <cmath>

#include "qctp/error.h"

namespace qctp {

std::string outcome_str(const Outcome &outcome) {
    if (const auto *single = std::get_if<SingleOutcome>(&outcome)) {
        return std::string(basis_name(single->basis)) + ":" + std::to_string(single->u);
    }
    const auto &bell = std::get<BellOutcome>(outcome);
    return "bell:" + std::to_string(bell.u) + "," + std::to_string(bell.v);
}

Projection project_onto(const StateVector &s, std::span<const ParticleLabel> labels, const StateVector &vector) {
    const auto &registry = s.registry();
    if (vector.dimension() != s.dimension() || vector.registry().size() != labels.size()) {
        throw Error(ErrorCode::DimensionMismatch, "projector does not match the measured particles");
    }
    std::vector<std::size_t> positions;
    positions.reserve(labels.size());
    for (const auto &label : labels) {
        std::size_t pos = registry.position(label);
        if (std::find(positions.begin(), positions.end(), pos) != positions.end()) {
            throw Error(ErrorCode::DuplicateLabel, label.str());
        }
        positions.push_back(pos);
    }

    auto rest = detail::complement_positions(registry, positions);
    auto measured_offsets = detail::subset_offsets(registry, positions);
    auto kept_offsets = detail::subset_offsets(registry, rest);
    auto amps = s.amplitudes();
    auto projector = vector.amplitudes();

    std::vector<Amplitude> residual(kept_offsets.size());
    double probability = 0;
    for (std::size_t r = 0; r < kept_offsets.size(); ++r) {
        Amplitude acc{};
        const std::uint64_t base = kept_offsets[r];
        for (std::size_t p = 0; p < measured_offsets.size(); ++p) {
            acc += std::conj(projector[p]) * amps[base + measured_offsets[p]];
        }
        residual[r] = acc;
        probability += std::norm(acc);
    }

    Projection result;
    result.probability = probability;
    if (probability < kZeroProbability) {
        return result;
    }
    const double scale = 1.0 / std::sqrt(probability);
    for (auto &a : residual) {
        a *= scale;
    }
    result.residual = StateVector::from_amplitudes(
        s.dimension(), registry.without(labels).labels(), std::move(residual), kept_offsets.size());
    return result;
}

std::vector<Branch> single_branches(const StateVector &s, const ParticleLabel &label, Basis basis) {
    s.registry().position(label);
    const int d = s.dimension().value();
    std::vector<Branch> branches;
    branches.reserve(d);
    const ParticleLabel labels[] = {label};
    for (int u = 0; u < d; ++u) {
        auto projection = project_onto(s, labels, basis_vector(s.dimension(), basis, u, label));
        branches.push_back({SingleOutcome{basis, u}, projection.probability, std::move(projection.residual)});
    }
    return branches;
}

std::vector<Branch> bell_branches(const StateVector &s, const ParticleLabel &a, const ParticleLabel &b) {
    if (a == b) {
        throw Error(ErrorCode::SameParticle, a.str());
    }
    s.registry().position(a);
    s.registry().position(b);
    const int d = s.dimension().value();
    std::vector<Branch> branches;
    branches.reserve(static_cast<std::size_t>(d) * d);
    const ParticleLabel labels[] = {a, b};
    for (int u = 0; u < d; ++u) {
        for (int v = 0; v < d; ++v) {
            auto projection = project_onto(s, labels, bell_state(s.dimension(), u, v, a, b));
            branches.push_back({BellOutcome{u, v}, projection.probability, std::move(projection.residual)});
        }
    }
    return branches;
}

Branch sample_branch(std::vector<Branch> branches, Rng &rng) {
    const double r = rng.uniform01();
    double cumulative = 0;
    std::size_t chosen = branches.size();
    std::size_t last_possible = branches.size();
    for (std::size_t i = 0; i < branches.size(); ++i) {
        if (branches[i].collapsed) {
            last_possible = i;
        }
        cumulative += branches[i].probability;
        if (r < cumulative && branches[i].collapsed) {
            chosen = i;
            break;
        }
    }
    if (chosen == branches.size()) {
        // Rounding left r above the final cumulative sum.
        chosen = last_possible;
    }
    if (chosen == branches.size()) {
        throw Error(ErrorCode::NotNormalized, "no outcome has nonzero probability");
    }
    return std::move(branches[chosen]);
}

Branch measure_single(const StateVector &s, const ParticleLabel &label, Basis basis, Rng &rng) {
    return sample_branch(single_branches(s, label, basis), rng);
}

Branch measure_bell(const StateVector &s, const ParticleLabel &a, const ParticleLabel &b, Rng &rng) {
    return sample_branch(bell_branches(s, a, b), rng);
}

namespace {

std::size_t step_arity(const MeasurementStep &step, int d) {
    return std::holds_alternative<SingleStep>(step) ? static_cast<std::size_t>(d) : static_cast<std::size_t>(d) * d;
}

std::vector<Outcome> step_outcomes(const MeasurementStep &step, int d) {
    std::vector<Outcome> outcomes;
    if (const auto *single = std::get_if<SingleStep>(&step)) {
        for (int u = 0; u < d; ++u) {
            outcomes.emplace_back(SingleOutcome{single->basis, u});
        }
    } else {
        for (int u = 0; u < d; ++u) {
            for (int v = 0; v < d; ++v) {
                outcomes.emplace_back(BellOutcome{u, v});
            }
        }
    }
    return outcomes;
}

std::vector<Branch> step_branches(const StateVector &s, const MeasurementStep &step) {
    if (const auto *single = std::get_if<SingleStep>(&step)) {
        return single_branches(s, single->label, single->basis);
    }
    const auto &bell = std::get<BellStep>(step);
    return bell_branches(s, bell.first, bell.second);
}

void expand(
    const std::optional<StateVector> &state,
    double probability,
    std::vector<Outcome> &prefix,
    std::span<const MeasurementStep> plan,
    std::size_t step,
    int d,
    std::vector<PlanBranch> &out) {
    if (step == plan.size()) {
        out.push_back({prefix, probability, state});
        return;
    }
    if (!state) {
        for (const auto &outcome : step_outcomes(plan[step], d)) {
            prefix.push_back(outcome);
            expand(std::nullopt, 0.0, prefix, plan, step + 1, d, out);
            prefix.pop_back();
        }
        return;
    }
    for (auto &branch : step_branches(*state, plan[step])) {
        prefix.push_back(branch.outcome);
        double joint = branch.collapsed ? probability * branch.probability : 0.0;
        expand(branch.collapsed, joint, prefix, plan, step + 1, d, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<PlanBranch> enumerate_branches(
    const StateVector &s, std::span<const MeasurementStep> plan, std::uint64_t branch_cap) {
    const int d = s.dimension().value();
    std::vector<ParticleLabel> seen;
    auto claim = [&](const ParticleLabel &label) {
        s.registry().position(label);
        if (std::find(seen.begin(), seen.end(), label) != seen.end()) {
            throw Error(ErrorCode::UnknownLabel, label.str() + " is measured twice in the plan");
        }
        seen.push_back(label);
    };
    std::uint64_t total = 1;
    for (const auto &step : plan) {
        if (const auto *single = std::get_if<SingleStep>(&step)) {
            claim(single->label);
        } else {
            const auto &bell = std::get<BellStep>(step);
            if (bell.first == bell.second) {
                throw Error(ErrorCode::SameParticle, bell.first.str());
            }
            claim(bell.first);
            claim(bell.second);
        }
        try {
            total = detail::checked_mul(total, step_arity(step, d), branch_cap);
        } catch (const Error &) {
            throw Error(ErrorCode::BranchCapExceeded, "plan has more than " + std::to_string(branch_cap) + " branches");
        }
    }

    std::vector<PlanBranch> out;
    out.reserve(total);
    std::vector<Outcome> prefix;
    expand(s, 1.0, prefix, plan, 0, d, out);
    return out;
}

}  // namespace qctp
