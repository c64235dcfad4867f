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

#include "qintuit/cli.h"

#include <cmath>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "qintuit/error.h"
#include "qintuit/frames.h"
#include "qintuit/gleason.h"
#include "qintuit/kripke.h"
#include "qintuit/logic.h"

using namespace qintuit;

ExperimentConfig qintuit::experiment_config_from_json(const nlohmann::json &j) {
    ExperimentConfig config;
    try {
        for (const auto &pair : j.at("amplitudes")) {
            if (pair.is_number()) {
                config.amplitudes.emplace_back(pair.get<double>(), 0.0);
            } else if (pair.is_array() && pair.size() == 2) {
                config.amplitudes.emplace_back(pair[0].get<double>(), pair[1].get<double>());
            } else {
                throw Error(ErrorCode::InvalidConfig, "each amplitude must be [re, im] or a real number");
            }
        }
        if (j.contains("labels")) {
            config.labels = j.at("labels").get<std::vector<std::string>>();
        } else {
            config.labels = SampleSpace::numbered(config.amplitudes.size()).labels();
        }
        config.trials = j.at("trials").get<uint64_t>();
        if (j.contains("seed")) {
            config.seed = j.at("seed").get<uint64_t>();
        }
        if (j.contains("max_denominator")) {
            config.max_denominator = j.at("max_denominator").get<uint64_t>();
        }
        if (j.contains("output")) {
            config.output = j.at("output").get<std::string>();
        }
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::InvalidConfig, std::string("malformed experiment config: ") + e.what());
    }
    if (config.trials == 0) {
        throw Error(ErrorCode::InvalidConfig, "trials must be positive");
    }
    return config;
}

nlohmann::json qintuit::experiment_to_json(const StateVector &state, const ExperimentStats &stats) {
    nlohmann::json amplitudes = nlohmann::json::array();
    for (const auto &c : state.amplitudes()) {
        amplitudes.push_back({c.real(), c.imag()});
    }
    std::vector<uint64_t> weights(state.size(), 0);
    for (size_t k = 0; k < stats.weights.support.size(); k++) {
        weights[stats.weights.support[k]] = stats.weights.weights[k];
    }
    nlohmann::json result;
    result["state"] = {{"amplitudes", amplitudes}, {"labels", state.space().labels()}};
    result["weights"] = weights;
    result["trials"] = stats.trials;
    result["seed"] = stats.base_seed;
    result["counts"] = stats.counts;
    result["frequencies"] = stats.frequencies;
    result["expected"] = stats.expected;
    result["chi_square"] = stats.chi_square.statistic;
    result["chi_square_dof"] = stats.chi_square.degrees_of_freedom;
    result["p_value"] = stats.chi_square.p_value;
    result["prng_id"] = std::string(PRNG_ID);
    return result;
}

namespace {

int cmd_eval(const std::string &formula, const std::string &frame_spec, std::ostream &out, std::ostream &err) {
    std::optional<Frame> frame;
    try {
        frame.emplace(resolve_frame(frame_spec));
    } catch (const Error &e) {
        err << "invalid frame: " << e.what() << "\n";
        return exit_code::INVALID_FRAME;
    }
    std::optional<Proposition> p;
    try {
        p.emplace(parse(formula, frame->model.vocabulary()));
    } catch (const Error &e) {
        err << e.what() << "\n";
        return exit_code::PARSE_ERROR;
    }
    out << to_string(eval3_at(frame->model, frame->world, *p)) << "\n";
    return exit_code::OK;
}

int cmd_measure(const std::string &config_path, const std::string &out_path, std::ostream &out, std::ostream &err) {
    nlohmann::json result;
    std::optional<std::string> destination;
    try {
        std::ifstream in(config_path);
        if (!in) {
            throw Error(ErrorCode::InvalidConfig, "cannot open config file '" + config_path + "'");
        }
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception &e) {
            throw Error(ErrorCode::InvalidConfig, std::string("config is not valid JSON: ") + e.what());
        }
        ExperimentConfig config = experiment_config_from_json(j);
        StateVector state(config.amplitudes, config.labels);
        ExperimentStats stats = run_experiment(state, config.trials, config.seed, config.max_denominator);
        result = experiment_to_json(state, stats);
        destination = out_path.empty() ? config.output : std::optional<std::string>(out_path);
    } catch (const Error &e) {
        err << e.what() << "\n";
        return exit_code::INVALID_CONFIG;
    }
    std::string text = result.dump(2) + "\n";
    if (!destination.has_value() || *destination == "-") {
        out << text;
        return exit_code::OK;
    }
    std::ofstream file(*destination);
    if (!file || !(file << text)) {
        err << "cannot write '" << *destination << "'\n";
        return exit_code::FAILURE;
    }
    return exit_code::OK;
}

int cmd_truthtable(const std::string &formula, std::ostream &out, std::ostream &err) {
    std::optional<Proposition> p;
    try {
        p.emplace(parse(formula));
    } catch (const Error &e) {
        err << e.what() << "\n";
        return exit_code::PARSE_ERROR;
    }
    auto labels = atom_labels(*p);
    if (labels.size() > TRUTH_TABLE_MAX_ATOMS) {
        err << "formula has " << labels.size() << " atoms; the limit is " << TRUTH_TABLE_MAX_ATOMS << "\n";
        return exit_code::ATOM_BUDGET;
    }
    size_t n = labels.size();
    std::string header;
    for (const auto &label : labels) {
        header += label + " ";
    }
    out << header << "| value\n";
    bool one_hot = true;
    Valuation valuation;
    std::string row;
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); mask++) {
        row.clear();
        size_t ones = 0;
        for (size_t k = 0; k < n; k++) {
            bool v = (mask >> (n - 1 - k)) & 1;
            valuation[labels[k]] = v;
            ones += v;
            row.append(labels[k].size() - 1, ' ');
            row += v ? "1 " : "0 ";
        }
        bool value = eval_classical(*p, valuation);
        one_hot = one_hot && (value == (ones == 1));
        out << row << "| " << (value ? 1 : 0) << "\n";
    }
    out << "one-hot: " << (one_hot ? "yes" : "no") << "\n";
    return exit_code::OK;
}

int cmd_gleason_check(
    uint64_t pairs, size_t min_dim, size_t max_dim, uint64_t seed, double tol, std::ostream &out, std::ostream &err) {
    if (min_dim < 1 || max_dim < min_dim) {
        err << "need 1 <= min-dim <= max-dim\n";
        return exit_code::FAILURE;
    }
    Rng rng(seed);
    uint64_t passed = 0;
    double worst = 0;
    for (uint64_t k = 0; k < pairs; k++) {
        size_t dim = min_dim + static_cast<size_t>(uniform_below(rng, max_dim - min_dim + 1));
        StateVector psi = random_state(dim, rng);
        FrameAssignment fa = born_assignment(psi, random_orthonormal_basis(dim, rng));
        double total = 0;
        for (double v : fa.values) {
            total += v;
        }
        worst = std::max(worst, std::abs(total - 1.0));
        passed += check_additivity(fa, tol);
    }
    nlohmann::json result = {
        {"pairs", pairs},
        {"passed", passed},
        {"max_deviation", worst},
        {"tolerance", tol},
        {"seed", seed},
        {"prng_id", std::string(PRNG_ID)},
    };
    out << result.dump(2) << "\n";
    return passed == pairs ? exit_code::OK : exit_code::FAILURE;
}

int cmd_frames_validate(const std::string &path, std::ostream &out, std::ostream &err) {
    try {
        KripkeModel m = load_model_file(path);
        size_t leaves = 0;
        for (World w = 0; w < m.size(); w++) {
            leaves += m.is_maximal(w);
        }
        out << "valid: " << m.size() << " worlds, root '" << m.name(m.root()) << "', " << leaves
            << " maximal worlds\n";
        return exit_code::OK;
    } catch (const Error &e) {
        err << e.what() << "\n";
        return exit_code::INVALID_FRAME;
    }
}

}  // namespace

int qintuit::run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Intuitionistic evaluation of measurement propositions and Born-rule sampling", "qintuit"};
    app.require_subcommand(1);

    std::string formula;
    std::string frame_spec = "measurement:2";
    auto *eval = app.add_subcommand("eval", "Evaluate a formula at a frame: true, false or undecided");
    eval->add_option("formula", formula, "Formula, e.g. \"a1 | a2\"")->required();
    eval->add_option("--frame", frame_spec, "measurement:N, leaf:n:N, pihc or a model file")
        ->capture_default_str();

    std::string config_path;
    std::string out_path;
    auto *measure = app.add_subcommand("measure", "Run a seeded measurement experiment, print JSON");
    measure->add_option("--config", config_path, "Experiment config JSON")->required();
    measure->add_option("--out", out_path, "Output path (overrides the config; '-' for stdout)");

    auto *truthtable = app.add_subcommand("truthtable", "Print the classical truth table and a one-hot verdict");
    truthtable->add_option("formula", formula, "Formula")->required();

    uint64_t pairs = 1000;
    size_t min_dim = 2;
    size_t max_dim = 8;
    uint64_t seed = 1;
    double tol = 1e-9;
    auto *gleason = app.add_subcommand("gleason-check", "Check additivity of Born assignments on random bases");
    gleason->add_option("--pairs", pairs)->capture_default_str();
    gleason->add_option("--min-dim", min_dim)->capture_default_str();
    gleason->add_option("--max-dim", max_dim)->capture_default_str();
    gleason->add_option("--seed", seed)->capture_default_str();
    gleason->add_option("--tol", tol)->capture_default_str();

    std::string model_path;
    auto *frames = app.add_subcommand("frames", "Kripke model file utilities");
    frames->require_subcommand(1);
    auto *validate = frames->add_subcommand("validate", "Validate a model file");
    validate->add_option("path", model_path, "Model JSON file")->required();

    std::vector<const char *> argv{"qintuit"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_code::OK : exit_code::FAILURE;
    }

    if (*eval) {
        return cmd_eval(formula, frame_spec, out, err);
    }
    if (*measure) {
        return cmd_measure(config_path, out_path, out, err);
    }
    if (*truthtable) {
        return cmd_truthtable(formula, out, err);
    }
    if (*gleason) {
        return cmd_gleason_check(pairs, min_dim, max_dim, seed, tol, out, err);
    }
    if (*validate) {
        return cmd_frames_validate(model_path, out, err);
    }
    return exit_code::FAILURE;
}
