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

#include "qintuit/measurement.h"

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <limits>

#include "qintuit/error.h"

using namespace qintuit;

Proposition qintuit::exactly_one(const SampleSpace &space) {
    size_t n = space.size();
    std::vector<Proposition> atoms;
    atoms.reserve(n);
    for (const auto &label : space.labels()) {
        atoms.push_back(Proposition::atom(label));
    }
    if (n == 1) {
        return atoms[0];
    }
    if (n == 2) {
        return land(lor(atoms[0], atoms[1]), lor(lnot(atoms[0]), lnot(atoms[1])));
    }
    Proposition parity = atoms[0];
    for (size_t k = 1; k < n; k++) {
        parity = lxor(parity, atoms[k]);
    }
    std::optional<Proposition> triples;
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            for (size_t k = j + 1; k < n; k++) {
                Proposition t = land(land(atoms[i], atoms[j]), atoms[k]);
                triples = triples ? lor(*triples, t) : t;
            }
        }
    }
    return land(parity, lnot(*triples));
}

uint64_t qintuit::uniform_below(Rng &rng, uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("uniform_below needs a positive bound");
    }
    // Largest multiple of bound that fits; draws at or above it are rejected.
    uint64_t limit = std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % bound;
    while (true) {
        uint64_t x = rng();
        if (x < limit) {
            return x % bound;
        }
    }
}

double qintuit::uniform_unit(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

BornWeights qintuit::born_weights(const StateVector &state, uint64_t max_denominator) {
    std::vector<size_t> support;
    std::vector<double> probabilities;
    double mass = 0;
    for (size_t n = 0; n < state.size(); n++) {
        double p = born_probability(state, n);
        if (p > NORM_TOLERANCE) {
            support.push_back(n);
            probabilities.push_back(p);
            mass += p;
        }
    }
    for (double &p : probabilities) {
        p /= mass;
    }
    return {std::move(support), to_weights(probabilities, max_denominator)};
}

size_t qintuit::sample_outcome(const BornWeights &weights, uint64_t seed) {
    Rng rng(seed);
    uint64_t replica = uniform_below(rng, weights.weights.total());
    for (size_t k = 0; k < weights.weights.size(); k++) {
        if (replica < weights.weights[k]) {
            return weights.support[k];
        }
        replica -= weights.weights[k];
    }
    throw std::logic_error("replica index beyond the pool");
}

size_t qintuit::sample_outcome_direct(const StateVector &state, uint64_t seed) {
    Rng rng(seed);
    double u = uniform_unit(rng) * squared_norm(state.amplitudes());
    double cumulative = 0;
    size_t last = 0;
    for (size_t n = 0; n < state.size(); n++) {
        double p = born_probability(state, n);
        if (p == 0) {
            continue;
        }
        last = n;
        cumulative += p;
        if (u < cumulative) {
            return n;
        }
    }
    return last;
}

static MeasurementRecord make_record(const StateVector &state, size_t outcome, uint64_t seed) {
    MeasurementRecord record{outcome, {}, seed};
    for (size_t n = 0; n < state.size(); n++) {
        record.valuation[state.space()[n]] = n == outcome;
    }
    return record;
}

MeasurementRecord qintuit::sample(const StateVector &state, const BornWeights &weights, uint64_t seed) {
    if (weights.support.size() != weights.weights.size()) {
        throw Error(ErrorCode::WeightMismatch, "support and weight vector differ in length");
    }
    for (size_t n : weights.support) {
        if (n >= state.size()) {
            throw Error(ErrorCode::WeightMismatch, "weight support refers to outcome " + std::to_string(n));
        }
    }
    return make_record(state, sample_outcome(weights, seed), seed);
}

MeasurementRecord qintuit::sample(const StateVector &state, const WeightVector &weights, uint64_t seed) {
    if (weights.size() != state.size()) {
        throw Error(
            ErrorCode::WeightMismatch,
            std::to_string(weights.size()) + " weights for a " + std::to_string(state.size()) + "-outcome state");
    }
    std::vector<size_t> support(state.size());
    for (size_t n = 0; n < support.size(); n++) {
        support[n] = n;
    }
    return sample(state, BornWeights{std::move(support), weights}, seed);
}

static double survival(double statistic, size_t dof) {
    if (dof == 0) {
        return statistic == 0 ? 1.0 : 0.0;
    }
    if (std::isinf(statistic)) {
        return 0.0;
    }
    boost::math::chi_squared dist(static_cast<double>(dof));
    return boost::math::cdf(boost::math::complement(dist, statistic));
}

ChiSquare qintuit::goodness_of_fit(std::span<const uint64_t> counts, std::span<const double> expected) {
    if (counts.size() != expected.size()) {
        throw Error(ErrorCode::DimensionMismatch, "counts and expected probabilities differ in length");
    }
    double total = 0;
    for (uint64_t c : counts) {
        total += static_cast<double>(c);
    }
    ChiSquare result;
    size_t categories = 0;
    for (size_t k = 0; k < counts.size(); k++) {
        double e = expected[k] * total;
        auto o = static_cast<double>(counts[k]);
        if (expected[k] <= 0) {
            if (counts[k] > 0) {
                result.statistic = INFINITY;
            }
            continue;
        }
        categories++;
        result.statistic += (o - e) * (o - e) / e;
    }
    result.degrees_of_freedom = categories > 0 ? categories - 1 : 0;
    result.p_value = survival(result.statistic, result.degrees_of_freedom);
    return result;
}

ChiSquare qintuit::two_sample_chi_square(std::span<const uint64_t> a, std::span<const uint64_t> b) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::DimensionMismatch, "samples have different category counts");
    }
    double na = 0;
    double nb = 0;
    for (size_t k = 0; k < a.size(); k++) {
        na += static_cast<double>(a[k]);
        nb += static_cast<double>(b[k]);
    }
    ChiSquare result;
    if (na == 0 || nb == 0) {
        return result;
    }
    double ka = std::sqrt(nb / na);
    double kb = std::sqrt(na / nb);
    size_t categories = 0;
    for (size_t k = 0; k < a.size(); k++) {
        auto x = static_cast<double>(a[k]);
        auto y = static_cast<double>(b[k]);
        if (x + y == 0) {
            continue;
        }
        categories++;
        double d = ka * x - kb * y;
        result.statistic += d * d / (x + y);
    }
    result.degrees_of_freedom = categories > 0 ? categories - 1 : 0;
    result.p_value = survival(result.statistic, result.degrees_of_freedom);
    return result;
}

ExperimentStats qintuit::run_experiment(
    const StateVector &state, uint64_t trials, uint64_t base_seed, uint64_t max_denominator) {
    if (trials == 0) {
        throw Error(ErrorCode::InvalidConfig, "an experiment needs at least one trial");
    }
    ExperimentStats stats{born_weights(state, max_denominator), trials, base_seed, {}, {}, {}, {}};
    size_t n = state.size();
    stats.counts.assign(n, 0);
    for (uint64_t t = 0; t < trials; t++) {
        stats.counts[sample_outcome(stats.weights, base_seed + t)]++;
    }
    stats.expected.assign(n, 0.0);
    for (size_t k = 0; k < stats.weights.support.size(); k++) {
        Rational q = weight_probability(stats.weights.weights, k);
        stats.expected[stats.weights.support[k]] =
            static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
    }
    for (uint64_t c : stats.counts) {
        stats.frequencies.push_back(static_cast<double>(c) / static_cast<double>(trials));
    }
    stats.chi_square = goodness_of_fit(stats.counts, stats.expected);
    return stats;
}

World qintuit::apply_record_to_frame(const KripkeModel &m, const MeasurementRecord &record) {
    if (m.size() != record.valuation.size() + 1) {
        throw Error(
            ErrorCode::SpaceMismatch,
            "frame has " + std::to_string(m.size()) + " worlds but the record covers " +
                std::to_string(record.valuation.size()) + " outcomes");
    }
    for (const auto &[atom, value] : record.valuation) {
        if (!m.vocabulary().declares(atom)) {
            throw Error(ErrorCode::SpaceMismatch, "frame does not declare outcome atom '" + atom + "'");
        }
    }
    for (World w = 0; w < m.size(); w++) {
        if (m.is_maximal(w) && post_valuation(m, w) == record.valuation) {
            return w;
        }
    }
    throw Error(ErrorCode::SpaceMismatch, "no leaf of the frame records this outcome");
}
