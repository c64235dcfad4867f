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

#include "qintuit/weights.h"

#include <cmath>
#include <numeric>

#include "qintuit/error.h"
#include "qintuit/quantum_core.h"

using namespace qintuit;

WeightVector::WeightVector(std::vector<uint64_t> weights) : weights_(std::move(weights)), total_(0) {
    if (weights_.empty()) {
        throw Error(ErrorCode::EmptySampleSpace, "a weight vector needs at least one entry");
    }
    uint64_t g = 0;
    for (uint64_t w : weights_) {
        if (w == 0) {
            throw Error(ErrorCode::ZeroProbability, "replication counts must be positive");
        }
        g = std::gcd(g, w);
    }
    for (uint64_t &w : weights_) {
        w /= g;
        total_ += w;
    }
}

namespace {

// Minimax allocation of exactly `total` replicas, each outcome getting at
// least one. Starts from rounding and moves single replicas while the sum is
// off; each move picks the outcome whose error grows least, which is optimal
// for a maximum of per-outcome convex errors under a sum constraint.
double allocate(std::span<const double> p, uint64_t total, std::vector<uint64_t> &w) {
    size_t n = p.size();
    auto t = static_cast<double>(total);
    auto err = [&](size_t k, uint64_t count) {
        return std::abs(static_cast<double>(count) / t - p[k]);
    };
    uint64_t sum = 0;
    for (size_t k = 0; k < n; k++) {
        auto r = static_cast<uint64_t>(std::llround(p[k] * t));
        w[k] = std::max<uint64_t>(1, r);
        sum += w[k];
    }
    while (sum > total) {
        size_t best = n;
        for (size_t k = 0; k < n; k++) {
            if (w[k] > 1 && (best == n || err(k, w[k] - 1) < err(best, w[best] - 1))) {
                best = k;
            }
        }
        w[best]--;
        sum--;
    }
    while (sum < total) {
        size_t best = 0;
        for (size_t k = 1; k < n; k++) {
            if (err(k, w[k] + 1) < err(best, w[best] + 1)) {
                best = k;
            }
        }
        w[best]++;
        sum++;
    }
    double worst = 0;
    for (size_t k = 0; k < n; k++) {
        worst = std::max(worst, err(k, w[k]));
    }
    return worst;
}

}  // namespace

WeightVector qintuit::to_weights(std::span<const double> probabilities, uint64_t max_denominator) {
    size_t n = probabilities.size();
    if (n == 0) {
        throw Error(ErrorCode::EmptySampleSpace, "no probabilities given");
    }
    double sum = 0;
    for (size_t k = 0; k < n; k++) {
        if (!(probabilities[k] > 0)) {
            throw Error(
                ErrorCode::ZeroProbability,
                "outcome " + std::to_string(k) + " has probability " + std::to_string(probabilities[k]));
        }
        sum += probabilities[k];
    }
    if (!(std::abs(sum - 1.0) <= NORM_TOLERANCE)) {
        throw Error(ErrorCode::NormViolation, "probabilities sum to " + std::to_string(sum));
    }
    if (max_denominator < n) {
        throw Error(
            ErrorCode::InfeasibleDenominator,
            "max denominator " + std::to_string(max_denominator) + " is below the " + std::to_string(n) +
                " outcomes");
    }

    std::vector<uint64_t> candidate(n);
    std::vector<uint64_t> best;
    double best_error = INFINITY;
    for (uint64_t total = n; total <= max_denominator; total++) {
        double e = allocate(probabilities, total, candidate);
        if (e < best_error) {
            best_error = e;
            best = candidate;
            if (e == 0) {
                break;
            }
        }
    }
    return WeightVector(std::move(best));
}

double qintuit::approximation_error(const WeightVector &w, std::span<const double> probabilities) {
    if (w.size() != probabilities.size()) {
        throw Error(ErrorCode::WeightMismatch, "weight and probability vectors differ in length");
    }
    double worst = 0;
    for (size_t k = 0; k < w.size(); k++) {
        double q = static_cast<double>(w[k]) / static_cast<double>(w.total());
        worst = std::max(worst, std::abs(q - probabilities[k]));
    }
    return worst;
}

Rational qintuit::weight_probability(const WeightVector &w, size_t n) {
    if (n >= w.size()) {
        throw Error(
            ErrorCode::IndexOutOfRange,
            "outcome " + std::to_string(n) + " of a " + std::to_string(w.size()) + "-outcome weight vector");
    }
    return Rational(static_cast<int64_t>(w[n]), static_cast<int64_t>(w.total()));
}

std::string qintuit::replica_label(const std::string &atom, uint64_t i) {
    return atom + "_r" + std::to_string(i);
}

Proposition qintuit::expand_replicas(const std::string &atom, uint64_t count) {
    if (count == 0) {
        throw Error(ErrorCode::ZeroProbability, "an outcome needs at least one replica");
    }
    Proposition result = Proposition::atom(replica_label(atom, 1));
    for (uint64_t i = 2; i <= count; i++) {
        result = lor(result, Proposition::atom(replica_label(atom, i)));
    }
    return result;
}
