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

#include "qintuit/gleason.h"

#include <cmath>

#include "qintuit/error.h"

using namespace qintuit;

static Amplitude inner(std::span<const Amplitude> a, std::span<const Amplitude> b) {
    Amplitude total = 0;
    for (size_t k = 0; k < a.size(); k++) {
        total += std::conj(a[k]) * b[k];
    }
    return total;
}

void qintuit::check_orthonormal(const Basis &basis, double tol) {
    size_t dim = basis.size();
    for (const auto &v : basis) {
        if (v.size() != dim) {
            throw Error(ErrorCode::DimensionMismatch, "basis vectors must have one component per basis vector");
        }
    }
    for (size_t i = 0; i < dim; i++) {
        for (size_t j = i; j < dim; j++) {
            double target = i == j ? 1.0 : 0.0;
            if (std::abs(inner(basis[i], basis[j]) - target) > tol) {
                throw Error(
                    ErrorCode::NonOrthonormalBasis,
                    "<b" + std::to_string(i + 1) + "|b" + std::to_string(j + 1) + "> deviates from " +
                        std::to_string(static_cast<int>(target)));
            }
        }
    }
}

FrameAssignment qintuit::born_assignment(const StateVector &psi, const Basis &basis) {
    if (basis.size() != psi.size()) {
        throw Error(ErrorCode::DimensionMismatch, "basis and state dimensions differ");
    }
    check_orthonormal(basis);
    FrameAssignment result{basis, {}};
    for (const auto &b : basis) {
        result.values.push_back(std::norm(inner(b, psi.amplitudes())));
    }
    return result;
}

bool qintuit::check_additivity(std::span<const double> values, double tol) {
    double total = 0;
    for (double v : values) {
        total += v;
    }
    return std::abs(total - 1.0) <= tol;
}

bool qintuit::check_exclusivity(std::span<const double> values, double tol) {
    size_t ones = 0;
    for (size_t k = 0; k < values.size(); k++) {
        if (std::abs(values[k] - 1.0) <= tol) {
            ones++;
        } else if (std::abs(values[k]) > tol) {
            throw Error(
                ErrorCode::NonBooleanValue,
                "value " + std::to_string(values[k]) + " at position " + std::to_string(k) + " is neither 0 nor 1");
        }
    }
    // With 0/1 values a pairwise product is nonzero exactly when two entries are 1.
    return ones <= 1;
}

std::vector<double> qintuit::record_values(const MeasurementRecord &record, const SampleSpace &space) {
    std::vector<double> values;
    values.reserve(space.size());
    for (const auto &label : space.labels()) {
        auto it = record.valuation.find(label);
        if (it == record.valuation.end()) {
            throw Error(ErrorCode::SpaceMismatch, "record has no value for outcome '" + label + "'");
        }
        values.push_back(it->second ? 1.0 : 0.0);
    }
    return values;
}

Basis qintuit::standard_basis(size_t dim) {
    Basis basis(dim, std::vector<Amplitude>(dim, 0.0));
    for (size_t k = 0; k < dim; k++) {
        basis[k][k] = 1.0;
    }
    return basis;
}

static std::vector<Amplitude> gaussian_vector(size_t dim, Rng &rng) {
    std::normal_distribution<double> normal;
    std::vector<Amplitude> v(dim);
    for (auto &c : v) {
        double re = normal(rng);
        double im = normal(rng);
        c = {re, im};
    }
    return v;
}

Basis qintuit::random_orthonormal_basis(size_t dim, Rng &rng) {
    Basis basis;
    while (basis.size() < dim) {
        auto v = gaussian_vector(dim, rng);
        // Modified Gram-Schmidt, applied twice for numerical orthogonality.
        for (int pass = 0; pass < 2; pass++) {
            for (const auto &b : basis) {
                Amplitude proj = inner(b, v);
                for (size_t k = 0; k < dim; k++) {
                    v[k] -= proj * b[k];
                }
            }
        }
        double norm = std::sqrt(squared_norm(v));
        if (norm < 1e-6) {
            continue;
        }
        for (auto &c : v) {
            c /= norm;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

StateVector qintuit::random_state(size_t dim, Rng &rng) {
    auto v = gaussian_vector(dim, rng);
    double norm = std::sqrt(squared_norm(v));
    for (auto &c : v) {
        c /= norm;
    }
    return StateVector(std::move(v));
}
