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

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>
#include "qctp/decoy.h"
#include "qctp/error.h"
#include "qctp/state_io.h"
#include "qctp/teleport.h"

namespace qctp {

using nlohmann::json;

StateVector parse_state_spec(std::string_view json_text, std::uint64_t amplitude_cap) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    try {
        int d = doc.at("d").get<int>();
        std::vector<ParticleLabel> labels;
        for (const auto &text : doc.at("labels")) {
            labels.push_back(ParticleLabel::parse(text.get<std::string>()));
        }
        std::vector<Amplitude> amps;
        for (const auto &pair : doc.at("amplitudes")) {
            if (!pair.is_array() || pair.size() != 2) {
                throw Error(ErrorCode::ParseError, "each amplitude must be a [re, im] pair");
            }
            amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
        }
        return StateVector::from_amplitudes(Dimension(d), std::move(labels), std::move(amps), amplitude_cap);
    } catch (const json::exception &e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

StateVector load_state_spec(const std::filesystem::path &path, std::uint64_t amplitude_cap) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::ParseError, "cannot open state file " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_state_spec(buffer.str(), amplitude_cap);
}

std::string state_spec_json(const StateVector &state) {
    json doc;
    doc["d"] = state.dimension().value();
    doc["labels"] = json::array();
    for (const auto &label : state.registry().labels()) {
        doc["labels"].push_back(label.str());
    }
    doc["amplitudes"] = json::array();
    for (const auto &a : state.amplitudes()) {
        doc["amplitudes"].push_back({a.real(), a.imag()});
    }
    return doc.dump(2) + "\n";
}

std::string report_to_json(const RunReport &report) {
    json doc;
    doc["config"] = {
        {"d", report.config.d},
        {"m", report.config.m},
        {"n", report.config.n},
        {"amplitude_cap", report.config.amplitude_cap},
        {"branch_cap", report.config.branch_cap},
        {"decoy_count", report.config.decoy_count},
    };
    doc["mode"] = report.mode == RunMode::sampled ? "sampled" : "all-branch";
    doc["seed"] = report.seed;
    if (report.corrupted) {
        doc["corrupt_correction"] = true;
    }
    json branches = json::array();
    for (const auto &b : report.branches) {
        json alpha = json::array();
        for (const auto &a : b.transcript.alpha) {
            alpha.push_back({a.u, a.v});
        }
        json p = json::array();
        json q = json::array();
        for (const auto &c : b.transcript.corrections) {
            p.push_back(c.p);
            q.push_back(c.q);
        }
        branches.push_back({
            {"alpha", alpha},
            {"beta", b.transcript.beta},
            {"p", p},
            {"q", q},
            {"probability", b.probability},
            {"fidelity", b.fidelity},
            {"phase_ok", b.phase_ok},
        });
    }
    doc["branches"] = std::move(branches);
    doc["aggregate"] = {
        {"min_fidelity", report.min_fidelity},
        {"prob_sum", report.prob_sum},
        {"eta_q", report.eta_q},
        {"phase_ok", report.phase_ok},
    };
    return doc.dump(2) + "\n";
}

std::string decoy_report_to_json(const DecoyReport &report) {
    json doc = {
        {"d", report.d},
        {"count", report.count},
        {"eve_model", report.eve.name()},
        {"errors", report.errors},
        {"rate", report.rate},
        {"analytic_rate", report.analytic_rate},
        {"seed", report.seed},
    };
    return doc.dump(2) + "\n";
}

}  // namespace qctp
