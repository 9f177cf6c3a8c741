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

#include <cmath>
#include <map>

#include "gtest/gtest.h"
#include <nlohmann/json.hpp>
#include "test_util.h"

using namespace qctp;
using qctp::testing::code_of;

namespace {

double four_sigma(double p, double n) {
    return 4.0 * std::sqrt(p * (1.0 - p) / n);
}

std::vector<DecoyRecord> records_of(const std::vector<Decoy> &decoys) {
    std::vector<DecoyRecord> out;
    for (const auto &d : decoys) {
        out.push_back(d.record);
    }
    return out;
}

}  // namespace

TEST(generate_decoys, empty) {
    Rng rng(1);
    EXPECT_TRUE(generate_decoys(Dimension(3), 0, rng).empty());
}

TEST(generate_decoys, uniform_over_both_bases) {
    const int n = 100000;
    Rng rng(5);
    auto decoys = generate_decoys(Dimension(2), n, rng);
    std::map<std::pair<Basis, int>, int> counts;
    for (const auto &d : decoys) {
        ++counts[{d.record.basis, d.record.value}];
    }
    ASSERT_EQ(counts.size(), 4u);
    for (const auto &[key, count] : counts) {
        EXPECT_LE(std::abs(count / static_cast<double>(n) - 0.25), four_sigma(0.25, n));
    }
}

TEST(generate_decoys, states_are_normalized_eigenstates) {
    Rng rng(6);
    auto decoys = generate_decoys(Dimension(5), 200, rng, 7);
    for (const auto &d : decoys) {
        EXPECT_NEAR(d.state.norm(), 1.0, 1e-12);
        EXPECT_LE(d.record.position, 7u);
        auto expected = basis_vector(Dimension(5), d.record.basis, d.record.value, d.state.registry().labels()[0]);
        EXPECT_NEAR(fidelity(d.state, expected), 1.0, 1e-12);
    }
}

TEST(transmit, no_eavesdropper_is_identity) {
    Rng rng(7);
    auto decoys = generate_decoys(Dimension(3), 100, rng);
    auto received = transmit(decoys, EveModel::none(), rng);
    ASSERT_EQ(received.size(), decoys.size());
    for (std::size_t i = 0; i < decoys.size(); ++i) {
        EXPECT_NEAR(fidelity(received[i], decoys[i].state), 1.0, 1e-15);
    }
    auto check = check_decoys(received, records_of(decoys), rng);
    EXPECT_EQ(check.errors, 0u);
    EXPECT_EQ(check.rate, 0.0);
}

TEST(transmit, matching_basis_leaves_decoy_unchanged) {
    // Z-prepared decoys in d=3: an intercept in Z returns the same eigenstate,
    // an intercept in X returns an X eigenstate. Either way the result is an
    // eigenstate of the guessed basis.
    Rng rng(8);
    auto decoys = generate_decoys(Dimension(3), 2000, rng);
    auto received = transmit(decoys, EveModel::intercept_resend(), rng);
    int unchanged = 0;
    int conjugate = 0;
    for (std::size_t i = 0; i < decoys.size(); ++i) {
        double f = fidelity(received[i], decoys[i].state);
        if (std::abs(f - 1.0) < 1e-12) {
            ++unchanged;
        } else {
            EXPECT_NEAR(f, 1.0 / 3.0, 1e-12);
            ++conjugate;
        }
    }
    EXPECT_GT(unchanged, 0);
    EXPECT_GT(conjugate, 0);
}

TEST(check_decoys, conjugate_basis_passes_with_one_over_d) {
    const int n = 100000;
    for (int d : {2, 3, 5}) {
        Rng rng(static_cast<std::uint64_t>(d));
        std::vector<StateVector> received;
        std::vector<DecoyRecord> records;
        for (int i = 0; i < n; ++i) {
            int value = static_cast<int>(rng.uniform_index(d));
            records.push_back({Basis::Z, value, 0});
            received.push_back(x_basis_vector(Dimension(d), static_cast<int>(rng.uniform_index(d))));
        }
        auto check = check_decoys(received, records, rng);
        double p_error = 1.0 - 1.0 / d;
        EXPECT_LE(std::abs(check.rate - p_error), four_sigma(p_error, n)) << "d=" << d;
    }
}

TEST(check_decoys, length_mismatch) {
    Rng rng(1);
    std::vector<StateVector> received{z_basis_vector(Dimension(2), 0)};
    std::vector<DecoyRecord> records;
    EXPECT_EQ(code_of([&] { check_decoys(received, records, rng); }), ErrorCode::LengthMismatch);
}

TEST(detection_probability_analytic, values) {
    EXPECT_DOUBLE_EQ(detection_probability_analytic(Dimension(2), EveModel::intercept_resend()), 0.25);
    EXPECT_DOUBLE_EQ(detection_probability_analytic(Dimension(3), EveModel::intercept_resend()), 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(detection_probability_analytic(Dimension(5), EveModel::intercept_resend()), 0.4);
    EXPECT_EQ(detection_probability_analytic(Dimension(7), EveModel::none()), 0.0);
    EveModel bogus{static_cast<EveModel::Kind>(99)};
    EXPECT_EQ(code_of([&] { detection_probability_analytic(Dimension(2), bogus); }), ErrorCode::UnsupportedModel);
}

TEST(detection_probability_analytic, increasing_in_d) {
    double previous = 0;
    for (int d = 2; d <= 12; ++d) {
        double p = detection_probability_analytic(Dimension(d), EveModel::intercept_resend());
        EXPECT_GT(p, previous);
        previous = p;
    }
}

TEST(decoy_experiment, monte_carlo_matches_analytic) {
    const int n = 100000;
    for (int d : {2, 3, 5}) {
        auto report = run_decoy_experiment(Dimension(d), n, EveModel::intercept_resend(), 1000 + d);
        EXPECT_LE(std::abs(report.rate - report.analytic_rate), four_sigma(report.analytic_rate, n)) << "d=" << d;
    }
    auto clean = run_decoy_experiment(Dimension(3), n, EveModel::none(), 4);
    EXPECT_EQ(clean.errors, 0u);
}

TEST(eve_model, parse) {
    EXPECT_EQ(EveModel::parse("none").kind, EveModel::Kind::none);
    EXPECT_EQ(EveModel::parse("intercept-resend").kind, EveModel::Kind::intercept_resend);
    EXPECT_EQ(code_of([] { EveModel::parse("beam-splitter"); }), ErrorCode::UnsupportedModel);
}

TEST(decoy_report, json_fields) {
    auto report = run_decoy_experiment(Dimension(2), 1000, EveModel::intercept_resend(), 9);
    auto doc = nlohmann::json::parse(decoy_report_to_json(report));
    EXPECT_EQ(doc["d"], 2);
    EXPECT_EQ(doc["count"], 1000);
    EXPECT_EQ(doc["eve_model"], "intercept-resend");
    EXPECT_EQ(doc["errors"], report.errors);
    EXPECT_DOUBLE_EQ(doc["rate"].get<double>(), report.rate);
    EXPECT_DOUBLE_EQ(doc["analytic_rate"].get<double>(), 0.25);
    EXPECT_EQ(doc["seed"], 9);
}
