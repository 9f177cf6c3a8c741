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

#include "qctp/decoy.h"

#include "qctp/error.h"
#include "qctp/measurement.h"

namespace qctp {

std::string EveModel::name() const {
    switch (kind) {
        case Kind::none:
            return "none";
        case Kind::intercept_resend:
            return "intercept-resend";
    }
    throw Error(ErrorCode::UnsupportedModel, "unknown eavesdropper model");
}

EveModel EveModel::parse(std::string_view text) {
    if (text == "none") {
        return none();
    }
    if (text == "intercept-resend") {
        return intercept_resend();
    }
    throw Error(ErrorCode::UnsupportedModel, "unknown eavesdropper model '" + std::string(text) + "'");
}

std::vector<Decoy> generate_decoys(Dimension d, std::size_t count, Rng &rng, std::size_t host_length) {
    std::vector<Decoy> decoys;
    decoys.reserve(count);
    const auto dim = static_cast<std::uint64_t>(d.value());
    for (std::size_t i = 0; i < count; ++i) {
        std::uint64_t pick = rng.uniform_index(2 * dim);
        DecoyRecord record;
        record.basis = pick < dim ? Basis::Z : Basis::X;
        record.value = static_cast<int>(pick % dim);
        record.position = static_cast<std::size_t>(rng.uniform_index(host_length + 1));
        auto label = ParticleLabel::decoy(static_cast<int>(i) + 1);
        decoys.push_back({record, basis_vector(d, record.basis, record.value, label)});
    }
    return decoys;
}

std::vector<StateVector> transmit(std::span<const Decoy> decoys, const EveModel &eve, Rng &rng) {
    std::vector<StateVector> out;
    out.reserve(decoys.size());
    for (const auto &decoy : decoys) {
        switch (eve.kind) {
            case EveModel::Kind::none:
                out.push_back(decoy.state);
                break;
            case EveModel::Kind::intercept_resend: {
                Basis guess = rng.uniform_index(2) == 0 ? Basis::Z : Basis::X;
                const auto &label = decoy.state.registry().labels().front();
                auto seen = measure_single(decoy.state, label, guess, rng);
                int value = std::get<SingleOutcome>(seen.outcome).u;
                out.push_back(basis_vector(decoy.state.dimension(), guess, value, label));
                break;
            }
            default:
                throw Error(ErrorCode::UnsupportedModel, "unknown eavesdropper model");
        }
    }
    return out;
}

DecoyCheck check_decoys(std::span<const StateVector> transmitted, std::span<const DecoyRecord> records, Rng &rng) {
    if (transmitted.size() != records.size()) {
        throw Error(
            ErrorCode::LengthMismatch,
            std::to_string(transmitted.size()) + " received qudits but " + std::to_string(records.size()) + " records");
    }
    DecoyCheck check;
    for (std::size_t i = 0; i < transmitted.size(); ++i) {
        const auto &state = transmitted[i];
        const auto &label = state.registry().labels().front();
        auto result = measure_single(state, label, records[i].basis, rng);
        if (std::get<SingleOutcome>(result.outcome).u != records[i].value) {
            ++check.errors;
        }
    }
    check.rate = transmitted.empty() ? 0.0 : static_cast<double>(check.errors) / static_cast<double>(transmitted.size());
    return check;
}

double detection_probability_analytic(Dimension d, const EveModel &eve) {
    switch (eve.kind) {
        case EveModel::Kind::none:
            return 0.0;
        case EveModel::Kind::intercept_resend:
            // Wrong basis half the time; then the resent eigenstate passes with probability 1/d.
            return 0.5 * (1.0 - 1.0 / static_cast<double>(d.value()));
    }
    throw Error(ErrorCode::UnsupportedModel, "no closed form for this eavesdropper model");
}

DecoyReport run_decoy_experiment(Dimension d, std::size_t count, const EveModel &eve, std::uint64_t seed) {
    Rng rng(seed);
    auto decoys = generate_decoys(d, count, rng);
    auto received = transmit(decoys, eve, rng);
    std::vector<DecoyRecord> records;
    records.reserve(decoys.size());
    for (const auto &decoy : decoys) {
        records.push_back(decoy.record);
    }
    auto check = check_decoys(received, records, rng);

    DecoyReport report;
    report.d = d.value();
    report.count = count;
    report.eve = eve;
    report.errors = check.errors;
    report.rate = check.rate;
    report.analytic_rate = detection_probability_analytic(d, eve);
    report.seed = seed;
    return report;
}

}  // namespace qctp
