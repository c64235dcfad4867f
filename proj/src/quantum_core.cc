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

#include "qintuit/quantum_core.h"

#include <cmath>
#include <set>

#include "qintuit/error.h"

using namespace qintuit;

SampleSpace::SampleSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) {
        throw Error(ErrorCode::EmptySampleSpace, "a sample space needs at least one outcome");
    }
    std::set<std::string> seen;
    for (const auto &label : labels_) {
        if (!seen.insert(label).second) {
            throw Error(ErrorCode::DuplicateLabel, "outcome label '" + label + "' appears twice");
        }
    }
}

SampleSpace SampleSpace::numbered(size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (size_t k = 1; k <= n; k++) {
        labels.push_back("a" + std::to_string(k));
    }
    return SampleSpace(std::move(labels));
}

size_t SampleSpace::index_of(const std::string &label) const {
    for (size_t k = 0; k < labels_.size(); k++) {
        if (labels_[k] == label) {
            return k;
        }
    }
    return labels_.size();
}

static SampleSpace checked_space(const std::vector<Amplitude> &amplitudes, std::vector<std::string> labels) {
    if (amplitudes.size() != labels.size()) {
        throw Error(
            ErrorCode::DimensionMismatch,
            std::to_string(amplitudes.size()) + " amplitudes but " + std::to_string(labels.size()) + " labels");
    }
    if (amplitudes.empty()) {
        throw Error(ErrorCode::DimensionMismatch, "a state needs at least one amplitude");
    }
    return SampleSpace(std::move(labels));
}

StateVector::StateVector(std::vector<Amplitude> amplitudes, std::vector<std::string> labels)
    : amplitudes_(std::move(amplitudes)), space_(checked_space(amplitudes_, std::move(labels))) {
    double n2 = squared_norm(amplitudes_);
    if (!(std::abs(n2 - 1.0) <= NORM_TOLERANCE)) {
        throw Error(ErrorCode::NormViolation, "sum of |c_n|^2 is " + std::to_string(n2) + ", expected 1");
    }
}

StateVector::StateVector(std::vector<Amplitude> amplitudes)
    : StateVector(amplitudes, SampleSpace::numbered(amplitudes.size()).labels()) {
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> result;
    result.reserve(amplitudes_.size());
    for (const auto &c : amplitudes_) {
        result.push_back(std::norm(c));
    }
    return result;
}

CompositeState::CompositeState(Eigen::MatrixXcd amplitudes) : amplitudes_(std::move(amplitudes)) {
    double n2 = amplitudes_.squaredNorm();
    if (!(std::abs(n2 - 1.0) <= NORM_TOLERANCE)) {
        throw Error(ErrorCode::NormViolation, "composite state has squared norm " + std::to_string(n2));
    }
}

double qintuit::squared_norm(std::span<const Amplitude> amplitudes) {
    double total = 0;
    for (const auto &c : amplitudes) {
        total += std::norm(c);
    }
    return total;
}

double qintuit::distance(std::span<const Amplitude> a, std::span<const Amplitude> b) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::DimensionMismatch, "cannot compare states of different dimension");
    }
    double total = 0;
    for (size_t k = 0; k < a.size(); k++) {
        total += std::norm(a[k] - b[k]);
    }
    return std::sqrt(total);
}

double qintuit::born_probability(const StateVector &state, size_t n) {
    if (n >= state.size()) {
        throw Error(
            ErrorCode::IndexOutOfRange,
            "outcome " + std::to_string(n) + " of a " + std::to_string(state.size()) + "-outcome state");
    }
    return std::norm(state[n]);
}

StateVector qintuit::apply_swap(const StateVector &state, double phi1, double phi2) {
    if (state.size() != 2) {
        throw Error(ErrorCode::DimensionMismatch, "the swap operator acts on two-level states only");
    }
    // <a1|S|psi> = e^{i(phi1 - phi2)} c2, <a2|S|psi> = e^{i(phi2 - phi1)} c1.
    Amplitude forward = std::polar(1.0, phi1 - phi2);
    Amplitude backward = std::polar(1.0, phi2 - phi1);
    return StateVector({forward * state[1], backward * state[0]}, state.space().labels());
}

Eigen::MatrixXcd qintuit::pointer_map(std::span<const Amplitude> amplitudes) {
    auto n = static_cast<Eigen::Index>(amplitudes.size());
    Eigen::MatrixXcd result = Eigen::MatrixXcd::Zero(n, n + 1);
    for (Eigen::Index k = 0; k < n; k++) {
        result(k, k + 1) = amplitudes[static_cast<size_t>(k)];
    }
    return result;
}

CompositeState qintuit::premeasurement_evolve(const StateVector &state) {
    return CompositeState(pointer_map(state.amplitudes()));
}

std::vector<double> qintuit::schmidt_coefficients(const CompositeState &state) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(state.amplitudes());
    const auto &values = svd.singularValues();
    return {values.data(), values.data() + values.size()};
}

size_t qintuit::schmidt_rank(const CompositeState &state, double tol) {
    size_t rank = 0;
    for (double s : schmidt_coefficients(state)) {
        if (s > tol) {
            rank++;
        }
    }
    return rank;
}
