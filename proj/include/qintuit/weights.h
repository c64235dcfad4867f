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

#ifndef QINTUIT_WEIGHTS_H
#define QINTUIT_WEIGHTS_H

#include <boost/rational.hpp>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qintuit/logic.h"

namespace qintuit {

using Rational = boost::rational<int64_t>;

constexpr uint64_t DEFAULT_MAX_DENOMINATOR = 4096;

/// Replication counts w_1..w_N with |c_n|^2 ~= w_n / sum(w). Every count is at
/// least 1 and the counts share no common factor.
class WeightVector {
   public:
    /// Throws ZeroProbability on a zero count. Divides out the common factor.
    explicit WeightVector(std::vector<uint64_t> weights);

    size_t size() const noexcept {
        return weights_.size();
    }
    uint64_t operator[](size_t k) const {
        return weights_[k];
    }
    const std::vector<uint64_t> &weights() const noexcept {
        return weights_;
    }
    uint64_t total() const noexcept {
        return total_;
    }

    bool operator==(const WeightVector &other) const = default;

   private:
    std::vector<uint64_t> weights_;
    uint64_t total_;
};

/// Best rational approximation of a probability vector by replication counts.
///
/// Searches every total T from N up to `max_denominator` and keeps the counts
/// minimizing max_n |w_n/T - p_n|; among equal errors the smallest total wins.
///
/// Throws NormViolation if the probabilities do not sum to 1, ZeroProbability
/// if one is not strictly positive, InfeasibleDenominator if
/// max_denominator < N.
WeightVector to_weights(std::span<const double> probabilities, uint64_t max_denominator = DEFAULT_MAX_DENOMINATOR);

/// max_n |w_n/total - p_n|.
double approximation_error(const WeightVector &w, std::span<const double> probabilities);

/// Exact w_n / total (0-based n). Throws IndexOutOfRange.
Rational weight_probability(const WeightVector &w, size_t n);

/// Name of the i-th replica (1-based) of an outcome atom.
std::string replica_label(const std::string &atom, uint64_t i);

/// The outcome atom rewritten as a disjunction of `count` disjoint replica
/// atoms, chained to the left. count == 1 gives the single replica atom.
Proposition expand_replicas(const std::string &atom, uint64_t count);

}  // namespace qintuit

#endif
