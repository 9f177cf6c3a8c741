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

#include "qctp/teleport.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qctp/error.h"
#include "qctp/gates.h"

namespace qctp {

void ProtocolConfig::validate() const {
    if (d < 2) {
        throw Error(ErrorCode::InvalidArgument, "d must be >= 2");
    }
    if (m < 1) {
        throw Error(ErrorCode::InvalidArgument, "m must be >= 1");
    }
    if (n < 0) {
        throw Error(ErrorCode::InvalidArgument, "n must be >= 0");
    }
    auto qudits = static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(n + 3);
    try {
        detail::checked_pow(static_cast<std::uint64_t>(d), qudits, amplitude_cap);
    } catch (const Error &) {
        throw Error(
            ErrorCode::CapExceeded,
            "composite of " + std::to_string(d) + "^" + std::to_string(qudits) + " amplitudes exceeds cap of " +
                std::to_string(amplitude_cap));
    }
}

std::uint64_t ProtocolConfig::branch_count() const {
    auto measured = static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(n + 2);
    try {
        return detail::checked_pow(static_cast<std::uint64_t>(d), measured, branch_cap);
    } catch (const Error &) {
        throw Error(
            ErrorCode::BranchCapExceeded,
            std::to_string(d) + "^" + std::to_string(measured) + " branches exceed cap of " +
                std::to_string(branch_cap));
    }
}

std::vector<ParticleLabel> ProtocolConfig::message_labels() const {
    std::vector<ParticleLabel> labels;
    for (int k = 1; k <= m; ++k) {
        labels.push_back(ParticleLabel::message(k));
    }
    return labels;
}

std::vector<ParticleLabel> ProtocolConfig::receiver_labels() const {
    std::vector<ParticleLabel> labels;
    for (int k = 1; k <= m; ++k) {
        labels.push_back(ParticleLabel::channel(k, n + 1));
    }
    return labels;
}

double intrinsic_efficiency(const ProtocolConfig &config) {
    auto useful = static_cast<double>(config.m) * static_cast<double>(config.n + 2);
    return useful / (useful + static_cast<double>(config.decoy_count));
}

std::vector<Correction> compute_correction(
    std::span<const BellOutcome> alpha, const std::vector<std::vector<int>> &beta, int d) {
    if (alpha.size() != beta.size()) {
        throw Error(
            ErrorCode::ShapeMismatch,
            std::to_string(alpha.size()) + " sender outcomes but " + std::to_string(beta.size()) + " controller rows");
    }
    auto in_range = [d](int x) { return x >= 0 && x < d; };
    std::vector<Correction> out;
    out.reserve(alpha.size());
    for (std::size_t k = 0; k < alpha.size(); ++k) {
        if (!beta.empty() && beta[k].size() != beta[0].size()) {
            throw Error(ErrorCode::ShapeMismatch, "controller rows have unequal length");
        }
        if (!in_range(alpha[k].u) || !in_range(alpha[k].v)) {
            throw Error(ErrorCode::IndexOutOfRange, "sender outcome outside [0, d)");
        }
        long long p = alpha[k].u;
        for (int b : beta[k]) {
            if (!in_range(b)) {
                throw Error(ErrorCode::IndexOutOfRange, "controller outcome outside [0, d)");
            }
            p += b;
        }
        out.push_back({static_cast<int>(p % d), (d - alpha[k].v) % d});
    }
    return out;
}

double expected_global_phase(std::span<const BellOutcome> alpha, int d) {
    long long exponent = 0;
    for (const auto &a : alpha) {
        exponent += static_cast<long long>(a.u) * a.v;
    }
    exponent %= d;
    return 2.0 * std::numbers::pi * static_cast<double>(exponent) / static_cast<double>(d);
}

StateVector build_channel(const ProtocolConfig &config) {
    config.validate();
    Dimension d = config.dimension();
    StateVector channel = StateVector::scalar(d);
    for (int k = 1; k <= config.m; ++k) {
        std::vector<ParticleLabel> labels;
        for (int j = 0; j <= config.n + 1; ++j) {
            labels.push_back(ParticleLabel::channel(k, j));
        }
        channel = tensor(channel, ghz_state(d, config.n + 2, std::move(labels)), config.amplitude_cap);
    }
    return channel;
}

std::vector<MeasurementStep> sender_plan(const ProtocolConfig &config) {
    std::vector<MeasurementStep> plan;
    for (int k = 1; k <= config.m; ++k) {
        plan.emplace_back(BellStep{ParticleLabel::message(k), ParticleLabel::channel(k, 0)});
    }
    return plan;
}

std::vector<MeasurementStep> controller_plan(const ProtocolConfig &config) {
    std::vector<MeasurementStep> plan;
    for (int k = 1; k <= config.m; ++k) {
        for (int j = 1; j <= config.n; ++j) {
            plan.emplace_back(SingleStep{ParticleLabel::channel(k, j), Basis::X});
        }
    }
    return plan;
}

namespace {

std::vector<BellOutcome> alpha_from(std::span<const Outcome> outcomes) {
    std::vector<BellOutcome> alpha;
    for (const auto &o : outcomes) {
        alpha.push_back(std::get<BellOutcome>(o));
    }
    return alpha;
}

std::vector<std::vector<int>> beta_from(std::span<const Outcome> outcomes, const ProtocolConfig &config) {
    std::vector<std::vector<int>> beta(config.m, std::vector<int>(config.n));
    std::size_t i = 0;
    for (int k = 0; k < config.m; ++k) {
        for (int j = 0; j < config.n; ++j) {
            beta[k][j] = std::get<SingleOutcome>(outcomes[i++]).u;
        }
    }
    return beta;
}

void require_controller_stage(const StateVector &s, const ProtocolConfig &config) {
    for (int k = 1; k <= config.m; ++k) {
        if (s.registry().contains(ParticleLabel::message(k)) || s.registry().contains(ParticleLabel::channel(k, 0))) {
            throw Error(ErrorCode::OutOfOrder, "controllers measure only after the sender's Bell measurements");
        }
    }
}

void require_input(const ProtocolConfig &config, const StateVector &input) {
    if (input.dimension().value() != config.d) {
        throw Error(ErrorCode::DimensionMismatch, "input dimension differs from protocol dimension");
    }
    if (input.registry().labels() != config.message_labels()) {
        throw Error(ErrorCode::RegistryMismatch, "input must be a state on x1..xm");
    }
}

}  // namespace

SenderResult alice_measure(const StateVector &s, const ProtocolConfig &config, Rng &rng) {
    SenderResult result{{}, 1.0, s};
    for (int k = 1; k <= config.m; ++k) {
        auto branch = measure_bell(*result.post, ParticleLabel::message(k), ParticleLabel::channel(k, 0), rng);
        result.alpha.push_back(std::get<BellOutcome>(branch.outcome));
        result.probability *= branch.probability;
        result.post = std::move(branch.collapsed);
    }
    return result;
}

std::vector<SenderResult> alice_measure_all(const StateVector &s, const ProtocolConfig &config) {
    auto plan = sender_plan(config);
    std::vector<SenderResult> out;
    for (auto &branch : enumerate_branches(s, plan, config.branch_cap)) {
        out.push_back({alpha_from(branch.outcomes), branch.probability, std::move(branch.collapsed)});
    }
    return out;
}

ControllerResult controllers_measure(const StateVector &s, const ProtocolConfig &config, Rng &rng) {
    require_controller_stage(s, config);
    ControllerResult result{std::vector<std::vector<int>>(config.m), 1.0, s};
    for (int k = 1; k <= config.m; ++k) {
        for (int j = 1; j <= config.n; ++j) {
            auto branch = measure_single(*result.post, ParticleLabel::channel(k, j), Basis::X, rng);
            result.beta[k - 1].push_back(std::get<SingleOutcome>(branch.outcome).u);
            result.probability *= branch.probability;
            result.post = std::move(branch.collapsed);
        }
    }
    return result;
}

std::vector<ControllerResult> controllers_measure_all(const StateVector &s, const ProtocolConfig &config) {
    require_controller_stage(s, config);
    auto plan = controller_plan(config);
    std::vector<ControllerResult> out;
    for (auto &branch : enumerate_branches(s, plan, config.branch_cap)) {
        out.push_back({beta_from(branch.outcomes, config), branch.probability, std::move(branch.collapsed)});
    }
    return out;
}

StateVector charlie_correct(const StateVector &s, std::span<const Correction> corrections) {
    const auto &labels = s.registry().labels();
    if (labels.size() != corrections.size()) {
        throw Error(
            ErrorCode::UnknownLabel,
            "expected exactly " + std::to_string(corrections.size()) + " receiver qudits, register holds " +
                std::to_string(labels.size()));
    }
    StateVector out = s;
    for (std::size_t k = 0; k < corrections.size(); ++k) {
        const auto &label = labels[k];
        if (label.role != Role::channel || label.k != static_cast<int>(k) + 1) {
            throw Error(ErrorCode::UnknownLabel, label.str() + " is not receiver qudit " + std::to_string(k + 1));
        }
        auto gate = generalized_pauli(s.dimension(), corrections[k].p, corrections[k].q);
        out = apply_single_qudit_unitary(out, label, gate.matrix);
    }
    return out;
}

ReconstructionCheck check_reconstruction(
    const StateVector &input, const StateVector &corrected, std::span<const BellOutcome> alpha) {
    StateVector aligned = corrected.relabeled(input.registry().labels());
    Amplitude overlap = inner_product(input, aligned);
    ReconstructionCheck check;
    check.fidelity = std::norm(overlap);
    check.phase = std::arg(overlap);
    check.expected_phase = expected_global_phase(alpha, input.dimension().value());
    double diff = std::remainder(check.phase - check.expected_phase, 2.0 * std::numbers::pi);
    check.phase_error = std::abs(diff);
    check.phase_ok = check.phase_error <= kPhaseTolerance;
    return check;
}

StateVector prepare_composite(const ProtocolConfig &config, const StateVector &input) {
    config.validate();
    require_input(config, input);
    return tensor(input, build_channel(config), config.amplitude_cap);
}

std::vector<ProtocolBranch> enumerate_protocol(const ProtocolConfig &config, const StateVector &input) {
    StateVector composite = prepare_composite(config, input);
    config.branch_count();

    auto plan = sender_plan(config);
    auto controllers = controller_plan(config);
    plan.insert(plan.end(), controllers.begin(), controllers.end());

    std::vector<ProtocolBranch> out;
    const auto m = static_cast<std::size_t>(config.m);
    for (auto &branch : enumerate_branches(composite, plan, config.branch_cap)) {
        std::span<const Outcome> outcomes(branch.outcomes);
        ProtocolBranch pb;
        pb.transcript.alpha = alpha_from(outcomes.first(m));
        pb.transcript.beta = beta_from(outcomes.subspan(m), config);
        pb.transcript.corrections = compute_correction(pb.transcript.alpha, pb.transcript.beta, config.d);
        pb.probability = branch.probability;
        pb.receiver_state = std::move(branch.collapsed);
        out.push_back(std::move(pb));
    }
    return out;
}

namespace {

void corrupt(std::vector<Correction> &corrections, int d) {
    corrections[0].p = (corrections[0].p + 1) % d;
    corrections[0].q = (corrections[0].q + 1) % d;
}

BranchRecord evaluate_branch(
    const StateVector &input,
    Transcript transcript,
    double probability,
    const std::optional<StateVector> &receiver_state,
    const RunOptions &options,
    int d) {
    if (options.corrupt_correction) {
        corrupt(transcript.corrections, d);
    }
    BranchRecord record;
    record.probability = probability;
    if (receiver_state) {
        auto corrected = charlie_correct(*receiver_state, transcript.corrections);
        auto check = check_reconstruction(input, corrected, transcript.alpha);
        record.fidelity = check.fidelity;
        record.phase_error = check.phase_error;
        record.phase_ok = check.phase_ok;
    }
    record.transcript = std::move(transcript);
    return record;
}

void summarize(RunReport &report) {
    report.min_fidelity = 1.0;
    report.prob_sum = 0;
    report.phase_ok = true;
    for (const auto &b : report.branches) {
        report.min_fidelity = std::min(report.min_fidelity, b.fidelity);
        report.prob_sum += b.probability;
        report.phase_ok = report.phase_ok && b.phase_ok;
    }
    report.eta_q = intrinsic_efficiency(report.config);
}

}  // namespace

bool RunReport::passed() const {
    bool ok = !branches.empty() && min_fidelity >= 1.0 - kFidelityTolerance && phase_ok;
    if (mode == RunMode::all_branch) {
        ok = ok && std::abs(prob_sum - 1.0) <= kProbabilityTolerance;
    }
    return ok;
}

RunReport run_sampled(
    const ProtocolConfig &config, const StateVector &input, std::uint64_t seed, const RunOptions &options) {
    StateVector composite = prepare_composite(config, input);
    Rng rng(seed);
    auto sender = alice_measure(composite, config, rng);
    auto controllers = controllers_measure(*sender.post, config, rng);

    Transcript transcript;
    transcript.alpha = sender.alpha;
    transcript.beta = controllers.beta;
    transcript.corrections = compute_correction(transcript.alpha, transcript.beta, config.d);

    RunReport report;
    report.config = config;
    report.mode = RunMode::sampled;
    report.seed = seed;
    report.corrupted = options.corrupt_correction;
    report.branches.push_back(evaluate_branch(
        input,
        std::move(transcript),
        sender.probability * controllers.probability,
        controllers.post,
        options,
        config.d));
    summarize(report);
    return report;
}

RunReport verify_all_branches(const ProtocolConfig &config, const StateVector &input, const RunOptions &options) {
    RunReport report;
    report.config = config;
    report.mode = RunMode::all_branch;
    report.corrupted = options.corrupt_correction;
    for (auto &branch : enumerate_protocol(config, input)) {
        report.branches.push_back(evaluate_branch(
            input, std::move(branch.transcript), branch.probability, branch.receiver_state, options, config.d));
    }
    summarize(report);
    return report;
}

StateVector random_message_state(const ProtocolConfig &config, std::uint64_t seed) {
    config.validate();
    Rng rng(seed);
    ParticleRegistry registry(config.dimension(), config.message_labels());
    std::vector<Amplitude> amps(registry.amplitude_count(config.amplitude_cap));
    double total = 0;
    for (auto &a : amps) {
        double re = rng.normal();
        double im = rng.normal();
        a = Amplitude(re, im);
        total += std::norm(a);
    }
    const double scale = 1.0 / std::sqrt(total);
    for (auto &a : amps) {
        a *= scale;
    }
    return StateVector::from_amplitudes(config.dimension(), config.message_labels(), std::move(amps), config.amplitude_cap);
}

}  // namespace qctp
