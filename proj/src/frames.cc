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

#include "qintuit/frames.h"

#include <charconv>
#include <fstream>

#include "qintuit/error.h"

using namespace qintuit;

KripkeModelSpec qintuit::model_spec_from_json(const nlohmann::json &j) {
    try {
        KripkeModelSpec spec;
        spec.worlds = j.at("worlds").get<std::vector<std::string>>();
        spec.root = j.at("root").get<std::string>();
        if (j.contains("order")) {
            for (const auto &pair : j.at("order")) {
                if (!pair.is_array() || pair.size() != 2) {
                    throw Error(ErrorCode::InvalidModel, "each order entry must be a [lower, upper] pair");
                }
                spec.order.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
            }
        }
        if (j.contains("forcing")) {
            for (const auto &[world, atoms] : j.at("forcing").items()) {
                spec.forcing.emplace_back(world, atoms.get<std::vector<std::string>>());
            }
        }
        if (j.contains("atoms")) {
            spec.atoms = j.at("atoms").get<std::vector<std::string>>();
        }
        if (j.contains("undecided")) {
            spec.undecided = j.at("undecided").get<std::vector<std::string>>();
        }
        return spec;
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::InvalidModel, std::string("malformed model description: ") + e.what());
    }
}

nlohmann::json qintuit::model_spec_to_json(const KripkeModelSpec &spec) {
    nlohmann::json order = nlohmann::json::array();
    for (const auto &[a, b] : spec.order) {
        order.push_back({a, b});
    }
    nlohmann::json forcing = nlohmann::json::object();
    for (const auto &[world, atoms] : spec.forcing) {
        forcing[world] = atoms;
    }
    return {
        {"worlds", spec.worlds},
        {"root", spec.root},
        {"order", order},
        {"forcing", forcing},
        {"atoms", spec.atoms},
        {"undecided", spec.undecided},
    };
}

KripkeModel qintuit::load_model_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::InvalidModel, "cannot open model file '" + path + "'");
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::InvalidModel, "'" + path + "' is not valid JSON: " + e.what());
    }
    return KripkeModel(model_spec_from_json(j));
}

static size_t parse_count(std::string_view text, const std::string &specifier) {
    size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
        throw Error(ErrorCode::InvalidModel, "bad number '" + std::string(text) + "' in frame '" + specifier + "'");
    }
    return value;
}

Frame qintuit::resolve_frame(const std::string &specifier) {
    std::string_view s = specifier;
    if (s == "pihc") {
        KripkeModel m = pi_hc_frame();
        World root = m.root();
        return {std::move(m), root};
    }
    if (s.starts_with("measurement:")) {
        size_t n = parse_count(s.substr(12), specifier);
        KripkeModel m = measurement_frame(SampleSpace::numbered(n));
        World root = m.root();
        return {std::move(m), root};
    }
    if (s.starts_with("leaf:")) {
        auto rest = s.substr(5);
        auto colon = rest.find(':');
        if (colon == std::string_view::npos) {
            throw Error(ErrorCode::InvalidModel, "expected leaf:n:N but got '" + specifier + "'");
        }
        size_t leaf = parse_count(rest.substr(0, colon), specifier);
        size_t n = parse_count(rest.substr(colon + 1), specifier);
        if (leaf > n) {
            throw Error(ErrorCode::InvalidModel, "leaf " + std::to_string(leaf) + " of a " + std::to_string(n) +
                                                     "-outcome frame");
        }
        return {measurement_frame(SampleSpace::numbered(n)), leaf_world(leaf - 1)};
    }
    KripkeModel m = load_model_file(specifier);
    World root = m.root();
    return {std::move(m), root};
}
