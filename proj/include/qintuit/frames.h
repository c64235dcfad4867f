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

#ifndef QINTUIT_FRAMES_H
#define QINTUIT_FRAMES_H

#include <string>

#include "json.hpp"
#include "qintuit/kripke.h"

namespace qintuit {

/// Model file layout:
///
///     {
///       "worlds":    ["root", "leaf1", "leaf2"],
///       "root":      "root",
///       "order":     [["root", "leaf1"], ["root", "leaf2"]],
///       "forcing":   {"leaf1": ["a1"], "leaf2": ["a2"]},
///       "atoms":     ["a1", "a2"],
///       "undecided": []
///     }
///
/// "atoms", "undecided", "order" and "forcing" are optional.
KripkeModelSpec model_spec_from_json(const nlohmann::json &j);
nlohmann::json model_spec_to_json(const KripkeModelSpec &spec);

/// Reads and validates a model file. Throws InvalidModel, UnknownWorld.
KripkeModel load_model_file(const std::string &path);

/// A model together with the world at which formulas are evaluated.
struct Frame {
    KripkeModel model;
    World world;
};

/// Resolves a frame specifier:
///   measurement:N  measurement_frame over a1..aN, evaluated at the root
///   leaf:n:N       the same frame evaluated at leaf n (1-based)
///   pihc           pi_hc_frame at its root
///   anything else  a model file path, evaluated at its root
/// Throws InvalidModel for malformed specifiers.
Frame resolve_frame(const std::string &specifier);

}  // namespace qintuit

#endif
