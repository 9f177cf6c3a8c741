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

#include "cli.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "qctp/decoy.h"
#include "qctp/error.h"
#include "qctp/state_io.h"
#include "qctp/teleport.h"

namespace qctp::cli {

namespace {

struct CliConfig {
    int d = 2;
    int m = 1;
    int n = 0;
    std::string state = "random";
    std::uint64_t seed = 0;
    std::string out_path;
    std::uint64_t branch_cap = kDefaultBranchCap;
    std::uint64_t amp_cap = kDefaultAmplitudeCap;
    std::uint64_t count = 0;
    std::string eve = "none";
    bool corrupt_correction = false;
};

/// Decorrelates the random input state from the measurement stream that shares the user's seed.
constexpr std::uint64_t kStateSeedSalt = 0x9E3779B97F4A7C15ull;

ProtocolConfig protocol_config(const CliConfig &cfg) {
    ProtocolConfig config;
    config.d = cfg.d;
    config.m = cfg.m;
    config.n = cfg.n;
    config.amplitude_cap = cfg.amp_cap;
    config.branch_cap = cfg.branch_cap;
    config.decoy_count = cfg.count;
    config.validate();
    return config;
}

std::vector<int> parse_digits(std::string_view text, int d) {
    std::vector<int> digits;
    auto bad = [&]() -> std::vector<int> {
        throw Error(ErrorCode::ParseError, "bad basis digits '" + std::string(text) + "'");
    };
    if (text.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            auto end = text.find(',', start);
            auto piece = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
            int value = 0;
            auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
            if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size()) {
                return bad();
            }
            digits.push_back(value);
            if (end == std::string_view::npos) {
                break;
            }
            start = end + 1;
        }
    } else {
        for (char c : text) {
            if (c < '0' || c > '9') {
                return bad();
            }
            digits.push_back(c - '0');
        }
    }
    for (int digit : digits) {
        if (digit < 0 || digit >= d) {
            return bad();
        }
    }
    return digits;
}

StateVector ghz_like_state(const ProtocolConfig &config) {
    ParticleRegistry registry(config.dimension(), config.message_labels());
    std::vector<Amplitude> amps(registry.amplitude_count(config.amplitude_cap));
    std::uint64_t repunit = 0;
    for (int t = 0; t < config.m; ++t) {
        repunit = repunit * static_cast<std::uint64_t>(config.d) + 1;
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(config.d));
    for (int l = 0; l < config.d; ++l) {
        amps[static_cast<std::uint64_t>(l) * repunit] = scale;
    }
    return StateVector::from_amplitudes(config.dimension(), config.message_labels(), std::move(amps), config.amplitude_cap);
}

StateVector resolve_state(const CliConfig &cfg, const ProtocolConfig &config) {
    if (cfg.state == "random") {
        return random_message_state(config, cfg.seed ^ kStateSeedSalt);
    }
    if (cfg.state == "ghz-like") {
        return ghz_like_state(config);
    }
    if (cfg.state.starts_with("basis:")) {
        auto digits = parse_digits(std::string_view(cfg.state).substr(6), config.d);
        if (digits.size() != static_cast<std::size_t>(config.m)) {
            throw Error(ErrorCode::LengthMismatch, "basis state needs exactly m digits");
        }
        return StateVector::basis_state(config.dimension(), config.message_labels(), digits);
    }
    return load_state_spec(cfg.state, config.amplitude_cap);
}

void emit(const std::string &text, const CliConfig &cfg, std::ostream &out) {
    if (cfg.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw Error(ErrorCode::InvalidArgument, "cannot write " + cfg.out_path);
    }
    file << text;
}

void add_protocol_flags(CLI::App *cmd, CliConfig &cfg) {
    cmd->add_option("--d", cfg.d, "qudit dimension");
    cmd->add_option("--m", cfg.m, "number of message qudits");
    cmd->add_option("--n", cfg.n, "number of controllers");
    cmd->add_option("--state", cfg.state, "state file path, 'random', 'ghz-like' or 'basis:<digits>'");
    cmd->add_option("--seed", cfg.seed, "64-bit seed");
    cmd->add_option("--out", cfg.out_path, "report path (stdout when omitted)");
    cmd->add_option("--branch-cap", cfg.branch_cap, "maximum number of enumerated branches");
    cmd->add_option("--amp-cap", cfg.amp_cap, "maximum number of amplitudes");
    cmd->add_option("--count", cfg.count, "decoy qudits accompanying the channel (efficiency only)");
    cmd->add_flag("--corrupt-correction", cfg.corrupt_correction, "test hook: perturb the first correction");
}

int exit_code_for(const Error &e) {
    switch (e.code()) {
        case ErrorCode::CapExceeded:
        case ErrorCode::BranchCapExceeded:
            return kExitCapExceeded;
        default:
            return kExitConfigError;
    }
}

int cmd_protocol(const CliConfig &cfg, bool all_branches, std::ostream &out, std::ostream &err) {
    if (cfg.d < 2) {
        err << "error: d must be ≥ 2\n";
        return kExitConfigError;
    }
    ProtocolConfig config = protocol_config(cfg);
    if (all_branches) {
        config.branch_count();
    }
    StateVector input = resolve_state(cfg, config);
    RunOptions options;
    options.corrupt_correction = cfg.corrupt_correction;

    RunReport report = all_branches ? verify_all_branches(config, input, options)
                                    : run_sampled(config, input, cfg.seed, options);
    report.seed = cfg.seed;
    emit(report_to_json(report), cfg, out);

    bool ok = all_branches ? report.passed() : report.min_fidelity >= 1.0 - kFidelityTolerance;
    if (!ok) {
        err << "reconstruction failed: min fidelity " << report.min_fidelity << "\n";
        return kExitFidelityFailure;
    }
    return kExitOk;
}

int cmd_decoy(const CliConfig &cfg, std::ostream &out, std::ostream &err) {
    if (cfg.d < 2) {
        err << "error: d must be ≥ 2\n";
        return kExitConfigError;
    }
    if (cfg.count < 1) {
        err << "error: count must be ≥ 1\n";
        return kExitConfigError;
    }
    EveModel eve = EveModel::parse(cfg.eve);
    DecoyReport report = run_decoy_experiment(Dimension(cfg.d), cfg.count, eve, cfg.seed);
    emit(decoy_report_to_json(report), cfg, out);
    return kExitOk;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Controlled teleportation of m-qudit states over d-dimensional GHZ channels"};
    app.require_subcommand(1);

    CliConfig cfg;
    auto *run = app.add_subcommand("run", "one sampled protocol execution");
    add_protocol_flags(run, cfg);
    auto *verify = app.add_subcommand("verify", "enumerate every measurement branch");
    add_protocol_flags(verify, cfg);

    auto *decoy = app.add_subcommand("decoy", "decoy-qudit eavesdropping check");
    decoy->add_option("--d", cfg.d, "qudit dimension");
    decoy->add_option("--count", cfg.count, "number of decoys")->required();
    decoy->add_option("--eve", cfg.eve, "none | intercept-resend");
    decoy->add_option("--seed", cfg.seed, "64-bit seed");
    decoy->add_option("--out", cfg.out_path, "report path (stdout when omitted)");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitConfigError;
    }

    try {
        if (run->parsed()) {
            return cmd_protocol(cfg, false, out, err);
        }
        if (verify->parsed()) {
            return cmd_protocol(cfg, true, out, err);
        }
        return cmd_decoy(cfg, out, err);
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

}  // namespace qctp::cli
