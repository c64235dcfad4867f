// Copyright 2026 The qintuit Authors
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

#ifndef QINTUIT_CLI_H
#define QINTUIT_CLI_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qintuit/measurement.h"
#include "qintuit/quantum_core.h"

namespace qintuit {

namespace exit_code {
constexpr int OK = 0;
constexpr int FAILURE = 1;
constexpr int PARSE_ERROR = 2;
constexpr int INVALID_FRAME = 3;
constexpr int INVALID_CONFIG = 4;
constexpr int ATOM_BUDGET = 5;
}  // namespace exit_code

constexpr size_t TRUTH_TABLE_MAX_ATOMS = 20;

struct ExperimentConfig {
    std::vector<Amplitude> amplitudes;
    std::vector<std::string> labels;
    uint64_t trials = 0;
    uint64_t seed = 1;
    uint64_t max_denominator = DEFAULT_MAX_DENOMINATOR;
    std::optional<std::string> output;
};

/// Reads {"amplitudes": [[re, im], ...], "labels": [...], "trials": T,
/// "seed": S, "max_denominator": D, "output": path}. Only "amplitudes" and
/// "trials" are required. Throws InvalidConfig on schema errors.
ExperimentConfig experiment_config_from_json(const nlohmann::json &j);

/// {state, weights, trials, seed, counts, frequencies, expected, chi_square,
///  chi_square_dof, p_value, prng_id}. Weights are listed per outcome with 0
/// for outcomes outside the support.
nlohmann::json experiment_to_json(const StateVector &state, const ExperimentStats &stats);

/// Entry point of the qintuit command line tool. `args` excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qintuit

#endif
