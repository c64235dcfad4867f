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

#ifndef QINTUIT_QUANTUM_CORE_H
#define QINTUIT_QUANTUM_CORE_H

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <string>
#include <vector>

namespace qintuit {

using Amplitude = std::complex<double>;

/// Slack allowed on |sum |c_n|^2 - 1| for every state the library accepts or returns.
constexpr double NORM_TOLERANCE = 1e-9;
constexpr double SCHMIDT_TOLERANCE = 1e-9;

/// The set of possible outcome labels of a measurement. Non-empty, labels distinct.
class SampleSpace {
   public:
    explicit SampleSpace(std::vector<std::string> labels);

    /// Labels "a1".."aN".
    static SampleSpace numbered(size_t n);

    size_t size() const noexcept {
        return labels_.size();
    }
    const std::vector<std::string> &labels() const noexcept {
        return labels_;
    }
    const std::string &operator[](size_t k) const {
        return labels_[k];
    }
    /// Position of `label`, or size() when absent.
    size_t index_of(const std::string &label) const;

    bool operator==(const SampleSpace &other) const = default;

   private:
    std::vector<std::string> labels_;
};

/// A normalized pure state of the measured system, expanded in the eigenbasis
/// of the measured observable. Immutable once constructed.
class StateVector {
   public:
    /// Throws DimensionMismatch, DuplicateLabel or NormViolation.
    StateVector(std::vector<Amplitude> amplitudes, std::vector<std::string> labels);
    /// Uses the labels of SampleSpace::numbered.
    explicit StateVector(std::vector<Amplitude> amplitudes);

    size_t size() const noexcept {
        return amplitudes_.size();
    }
    std::span<const Amplitude> amplitudes() const noexcept {
        return amplitudes_;
    }
    const Amplitude &operator[](size_t k) const {
        return amplitudes_[k];
    }
    const SampleSpace &space() const noexcept {
        return space_;
    }
    /// |c_n|^2 for every n.
    std::vector<double> probabilities() const;

   private:
    std::vector<Amplitude> amplitudes_;
    SampleSpace space_;
};

/// Amplitudes of the measured system plus apparatus in the product basis
/// |a_n>|M_k>. Row n is the system index, column k the pointer index, and
/// column 0 is the ready state |M_0>.
class CompositeState {
   public:
    explicit CompositeState(Eigen::MatrixXcd amplitudes);

    const Eigen::MatrixXcd &amplitudes() const noexcept {
        return amplitudes_;
    }
    size_t system_dimension() const noexcept {
        return static_cast<size_t>(amplitudes_.rows());
    }
    size_t apparatus_dimension() const noexcept {
        return static_cast<size_t>(amplitudes_.cols());
    }

   private:
    Eigen::MatrixXcd amplitudes_;
};

double squared_norm(std::span<const Amplitude> amplitudes);
/// Euclidean distance between two amplitude lists of equal length.
double distance(std::span<const Amplitude> a, std::span<const Amplitude> b);

/// |c_n|^2 (0-based n). Throws IndexOutOfRange.
double born_probability(const StateVector &state, size_t n);

/// Applies the two-level swapping operator
///     S = e^{i phi1}|a1><a2|e^{-i phi2} + e^{i phi2}|a2><a1|e^{-i phi1}.
/// Throws DimensionMismatch unless the state has exactly two components.
StateVector apply_swap(const StateVector &state, double phi1, double phi2);

/// The linear pointer map (sum_n c_n |a_n>)|M_0> -> sum_n c_n |a_n>|M_n>, applied
/// to an arbitrary (not necessarily normalized) amplitude list.
Eigen::MatrixXcd pointer_map(std::span<const Amplitude> amplitudes);

/// Premeasurement entangling evolution of the system with a ready apparatus.
CompositeState premeasurement_evolve(const StateVector &state);

/// Singular values of the amplitude matrix, descending.
std::vector<double> schmidt_coefficients(const CompositeState &state);

/// Number of Schmidt coefficients exceeding `tol`. 1 means a product state.
size_t schmidt_rank(const CompositeState &state, double tol = SCHMIDT_TOLERANCE);

}  // namespace qintuit

#endif
