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

#ifndef QINTUIT_GLEASON_H
#define QINTUIT_GLEASON_H

#include <span>
#include <vector>

#include "qintuit/measurement.h"
#include "qintuit/quantum_core.h"

namespace qintuit {

using Basis = std::vector<std::vector<Amplitude>>;

/// Non-negative values m(a_n), one per basis vector.
struct FrameAssignment {
    Basis basis;
    std::vector<double> values;
};

constexpr double ORTHONORMAL_TOLERANCE = 1e-9;

/// Throws NonOrthonormalBasis unless every <b_i|b_j> is within tol of delta_ij,
/// and DimensionMismatch for ragged or non-square bases.
void check_orthonormal(const Basis &basis, double tol = ORTHONORMAL_TOLERANCE);

/// m_n = |<b_n|psi>|^2.
FrameAssignment born_assignment(const StateVector &psi, const Basis &basis);

/// |sum_n m_n - 1| <= tol.
bool check_additivity(std::span<const double> values, double tol = 1e-9);
inline bool check_additivity(const FrameAssignment &fa, double tol = 1e-9) {
    return check_additivity(fa.values, tol);
}

/// Every pairwise product m_i * m_j (i != j) is zero. Values must lie within
/// tol of 0 or 1, otherwise NonBooleanValue is thrown.
bool check_exclusivity(std::span<const double> values, double tol = 1e-9);

/// The post-measurement 0/1 value of each outcome atom, in sample-space order.
std::vector<double> record_values(const MeasurementRecord &record, const SampleSpace &space);

/// The computational basis of dimension `dim`.
Basis standard_basis(size_t dim);

/// Gram-Schmidt on `dim` vectors with Gaussian real and imaginary parts.
Basis random_orthonormal_basis(size_t dim, Rng &rng);

/// Normalized state with Gaussian real and imaginary parts.
StateVector random_state(size_t dim, Rng &rng);

}  // namespace qintuit

#endif
