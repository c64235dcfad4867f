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

#ifndef QINTUIT_MEASUREMENT_H
#define QINTUIT_MEASUREMENT_H

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "qintuit/kripke.h"
#include "qintuit/logic.h"
#include "qintuit/quantum_core.h"
#include "qintuit/weights.h"

namespace qintuit {

/// The proposition "exactly one outcome atom is true".
///
/// N = 1 gives the atom itself and N = 2 gives (a1 | a2) & (~a1 | ~a2). For
/// N >= 3 the parity chain a1 ^ ... ^ aN is conjoined with the negation of
/// B_N, the disjunction of (ai & aj & ak) over all triples: odd parity
/// together with fewer than three true atoms means exactly one.
///
/// Throws EmptySampleSpace for an empty label list.
Proposition exactly_one(const SampleSpace &space);

using Rng = std::mt19937_64;

/// Identifies the generator and the integer draw so results can be reproduced bit for bit.
inline constexpr std::string_view PRNG_ID = "mt19937_64/rejection-v1";

/// Uniform integer in [0, bound) by rejection on the raw 64-bit output. Unlike
/// std::uniform_int_distribution this sequence is identical on every standard library.
uint64_t uniform_below(Rng &rng, uint64_t bound);

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform_unit(Rng &rng);

/// Replication counts for the outcomes a state can actually produce. Outcomes
/// with |c_n|^2 <= NORM_TOLERANCE are left out of `support` and get no replicas.
struct BornWeights {
    std::vector<size_t> support;
    WeightVector weights;
};

BornWeights born_weights(const StateVector &state, uint64_t max_denominator = DEFAULT_MAX_DENOMINATOR);

struct MeasurementRecord {
    size_t outcome;
    /// Outcome atom -> recorded truth value; exactly one entry is true.
    Valuation valuation;
    uint64_t seed;
};

/// One measurement: a uniform draw over the pool of all sum(w) replica events,
/// reported as the outcome owning the drawn replica. Pure in (state, weights, seed).
/// Throws WeightMismatch when the weights do not match the state's dimension.
MeasurementRecord sample(const StateVector &state, const WeightVector &weights, uint64_t seed);
MeasurementRecord sample(const StateVector &state, const BornWeights &weights, uint64_t seed);

/// Outcome index drawn by the replica pool; the allocation-free core of sample.
size_t sample_outcome(const BornWeights &weights, uint64_t seed);

/// Reference sampler drawing directly from the categorical distribution |c_n|^2.
size_t sample_outcome_direct(const StateVector &state, uint64_t seed);

struct ChiSquare {
    double statistic = 0;
    size_t degrees_of_freedom = 0;
    double p_value = 1;
};

/// Pearson goodness of fit of `counts` against `expected` probabilities.
/// Categories with zero expected probability are skipped; a positive count in
/// such a category gives an infinite statistic.
ChiSquare goodness_of_fit(std::span<const uint64_t> counts, std::span<const double> expected);

/// Two-sample chi-square homogeneity test over categories seen in either sample.
ChiSquare two_sample_chi_square(std::span<const uint64_t> a, std::span<const uint64_t> b);

struct ExperimentStats {
    BornWeights weights;
    uint64_t trials = 0;
    uint64_t base_seed = 0;
    std::vector<uint64_t> counts;
    std::vector<double> frequencies;
    /// w_n / total on the support, 0 elsewhere.
    std::vector<double> expected;
    ChiSquare chi_square;
};

/// Samples `trials` measurements with seeds base_seed .. base_seed + trials - 1
/// and compares the counts with the weight probabilities.
ExperimentStats run_experiment(
    const StateVector &state,
    uint64_t trials,
    uint64_t base_seed,
    uint64_t max_denominator = DEFAULT_MAX_DENOMINATOR);

/// The leaf of a measurement frame at which the record's outcome is forced.
/// Throws SpaceMismatch if the frame's leaves do not match the record's atoms.
World apply_record_to_frame(const KripkeModel &m, const MeasurementRecord &record);

}  // namespace qintuit

#endif
