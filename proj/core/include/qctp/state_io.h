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

#include <filesystem>
#include <string>
#include <string_view>

#include "qctp/register.h"

namespace qctp {

/// Parses a state spec:
///
///     {"d": 3, "labels": ["x1"], "amplitudes": [[0.6, 0], [0, 0], [0.8, 0]]}
///
/// Amplitudes are [re, im] pairs in register order, first label most significant.
StateVector parse_state_spec(std::string_view json_text, std::uint64_t amplitude_cap = kDefaultAmplitudeCap);

StateVector load_state_spec(const std::filesystem::path &path, std::uint64_t amplitude_cap = kDefaultAmplitudeCap);

std::string state_spec_json(const StateVector &state);

}  // namespace qctp
