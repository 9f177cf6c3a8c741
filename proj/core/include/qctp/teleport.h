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
#include <vector>

#include "qctp/measurement.h"
#include "qctp/register.h"
#include "qctp/rng.h"

namespace qctp {

inline constexpr double kFidelityTolerance = 1e-9;
inline constexpr double kProbabilityTolerance = 1e-9;
inline constexpr double kPhaseTolerance = 1e-6;

/// Shape of one controlled-teleportation run: m message qudits of dimension d, n controllers.
///
/// The channel is m GHZ states of n + 2 qudits each. Qudit p_{k,0} belongs to
/// the sender, p_{k,j} (1 <= j <= n) to controller j, and p_{k,n+1} to the receiver.
struct ProtocolConfig {
    int d = 2;
    int m = 1;
    int n = 0;
    std::uint64_t amplitude_cap = kDefaultAmplitudeCap;
    std::uint64_t branch_cap = kDefaultBranchCap;
    /// Only feeds the efficiency figure.
    std::uint64_t decoy_count = 0;

    /// Throws InvalidArgument for out-of-range d, m, n and CapExceeded when d^{m(n+3)} > amplitude_cap.
    void validate() const;

    Dimension dimension() const {
        return Dimension(d);
    }

    /// d^{m(n+2)}; throws BranchCapExceeded above branch_cap.
    std::uint64_t branch_count() const;

    std::vector<ParticleLabel> message_labels() const;
    std::vector<ParticleLabel> receiver_labels() const;
};

/// Ratio of useful qudits m(n+2) to all transmitted qudits m(n+2) + decoys.
double intrinsic_efficiency(const ProtocolConfig &config);

/// Receiver's Weyl correction U_{p q} for one message qudit.
struct Correction {
    int p = 0;
    int q = 0;
    bool operator==(const Correction &) const = default;
};

struct Transcript {
    /// Sender's Bell outcomes; alpha[k].u is alpha_{k1}, alpha[k].v is alpha_{k2}.
    std::vector<BellOutcome> alpha;
    /// beta[k][j] is controller j+1's X outcome on p_{k+1, j+1}.
    std::vector<std::vector<int>> beta;
    std::vector<Correction> corrections;
};

/// p_k = (alpha_{k1} + sum_j beta_{kj}) mod d, q_k = (d - alpha_{k2}) mod d.
std::vector<Correction> compute_correction(
    std::span<const BellOutcome> alpha, const std::vector<std::vector<int>> &beta, int d);

/// (2 pi / d) sum_k alpha_{k1} alpha_{k2}, reduced to [0, 2 pi).
double expected_global_phase(std::span<const BellOutcome> alpha, int d);

/// m GHZ states on p_{k,0..n+1}, k = 1..m, in k order.
StateVector build_channel(const ProtocolConfig &config);

std::vector<MeasurementStep> sender_plan(const ProtocolConfig &config);
std::vector<MeasurementStep> controller_plan(const ProtocolConfig &config);

struct SenderResult {
    std::vector<BellOutcome> alpha;
    double probability = 0;
    std::optional<StateVector> post;
};

struct ControllerResult {
    std::vector<std::vector<int>> beta;
    double probability = 0;
    std::optional<StateVector> post;
};

/// Bell measurements on (x_k, p_{k,0}) for k = 1..m, sampled.
SenderResult alice_measure(const StateVector &s, const ProtocolConfig &config, Rng &rng);
/// Every sender outcome, lexicographic in (alpha_{11}, alpha_{12}, alpha_{21}, ...).
std::vector<SenderResult> alice_measure_all(const StateVector &s, const ProtocolConfig &config);

/// X measurements on p_{k,j}, k = 1..m, j = 1..n in (k, j) order, sampled. Throws OutOfOrder before the sender has measured.
ControllerResult controllers_measure(const StateVector &s, const ProtocolConfig &config, Rng &rng);
std::vector<ControllerResult> controllers_measure_all(const StateVector &s, const ProtocolConfig &config);

/// Applies U_{p_k q_k} to the k-th remaining receiver qudit p_{k,*}.
StateVector charlie_correct(const StateVector &s, std::span<const Correction> corrections);

struct ReconstructionCheck {
    double fidelity = 0;
    /// arg <input|corrected>.
    double phase = 0;
    double expected_phase = 0;
    /// Wrapped |phase - expected_phase|.
    double phase_error = 0;
    bool phase_ok = false;
};

/// Compares the corrected receiver state (relabeled onto x_1..x_m) with the input.
ReconstructionCheck check_reconstruction(
    const StateVector &input, const StateVector &corrected, std::span<const BellOutcome> alpha);

/// Sender and controller outcomes for one branch, before correction.
struct ProtocolBranch {
    Transcript transcript;
    double probability = 0;
    /// Receiver's m qudits after all measurements; empty for impossible branches.
    std::optional<StateVector> receiver_state;
};

/// Prepared composite state: input tensored with the channel.
StateVector prepare_composite(const ProtocolConfig &config, const StateVector &input);

/// All d^{m(n+2)} measurement branches with their prescribed corrections.
std::vector<ProtocolBranch> enumerate_protocol(const ProtocolConfig &config, const StateVector &input);

enum class RunMode { sampled, all_branch };

struct BranchRecord {
    Transcript transcript;
    double probability = 0;
    double fidelity = 0;
    double phase_error = 0;
    bool phase_ok = false;
};

struct RunOptions {
    /// Test hook: replaces (p_1, q_1) with (p_1 + 1, q_1 + 1) mod d on every branch.
    bool corrupt_correction = false;
};

struct RunReport {
    ProtocolConfig config;
    RunMode mode = RunMode::sampled;
    std::uint64_t seed = 0;
    bool corrupted = false;
    std::vector<BranchRecord> branches;
    double min_fidelity = 0;
    double prob_sum = 0;
    double eta_q = 0;
    bool phase_ok = false;

    /// Reconstruction held on every branch (and, in all-branch mode, probabilities summed to 1).
    bool passed() const;
};

RunReport run_sampled(
    const ProtocolConfig &config, const StateVector &input, std::uint64_t seed, const RunOptions &options = {});

RunReport verify_all_branches(
    const ProtocolConfig &config, const StateVector &input, const RunOptions &options = {});

/// Seeded complex-Gaussian state on x_1..x_m, normalized.
StateVector random_message_state(const ProtocolConfig &config, std::uint64_t seed);

std::string report_to_json(const RunReport &report);

}  // namespace qctp
