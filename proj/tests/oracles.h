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

// Test-only reference implementations. None of these call into the code paths
// they are used to check.

#ifndef QINTUIT_TESTS_ORACLES_H
#define QINTUIT_TESTS_ORACLES_H

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qintuit/kripke.h"
#include "qintuit/logic.h"

namespace oracle {

using qintuit::Connective;
using qintuit::KripkeModel;
using qintuit::Proposition;
using qintuit::World;

/// Valuation over labels a1..aN from the bits of `mask` (bit k -> a_{k+1}).
inline qintuit::Valuation mask_valuation(size_t n, uint64_t mask) {
    qintuit::Valuation v;
    for (size_t k = 0; k < n; k++) {
        v["a" + std::to_string(k + 1)] = (mask >> k) & 1;
    }
    return v;
}

inline bool one_hot(uint64_t mask) {
    return mask != 0 && (mask & (mask - 1)) == 0;
}

/// Forcing straight from the textbook clauses, one world at a time, no memo.
inline bool forces(const KripkeModel &m, World w, const Proposition &p) {
    auto above = [&](auto pred) {
        for (World v = 0; v < m.size(); v++) {
            if (m.leq(w, v) && pred(v)) {
                return true;
            }
        }
        return false;
    };
    switch (p.connective()) {
        case Connective::Atom:
        case Connective::UndecidedAtom:
            return m.forced_atoms(w).count(p.label()) > 0;
        case Connective::And:
            return oracle::forces(m, w, p.lhs()) && oracle::forces(m, w, p.rhs());
        case Connective::Or:
            return oracle::forces(m, w, p.lhs()) || oracle::forces(m, w, p.rhs());
        case Connective::Xor:
            return oracle::forces(m, w, qintuit::desugar_xor(p));
        case Connective::Not:
            return !above([&](World v) { return oracle::forces(m, v, p.lhs()); });
        case Connective::Implies:
            return !above([&](World v) { return oracle::forces(m, v, p.lhs()) && !oracle::forces(m, v, p.rhs()); });
        case Connective::Possibly:
            return above([&](World v) { return oracle::forces(m, v, p.lhs()); });
        case Connective::Necessarily:
            return !above([&](World v) { return !oracle::forces(m, v, p.lhs()); });
    }
    return false;
}

/// Exhaustive minimax weight search: every composition of every total T with
/// parts >= 1, smallest T winning ties. Exponential; only for tiny N and D.
inline std::vector<uint64_t> best_weights(const std::vector<double> &p, uint64_t max_denominator) {
    size_t n = p.size();
    std::vector<uint64_t> best;
    double best_err = INFINITY;
    for (uint64_t total = n; total <= max_denominator; total++) {
        std::vector<uint64_t> w(n, 1);
        // Enumerate compositions: w[0..n-2] free, w[n-1] determined.
        while (true) {
            uint64_t partial = 0;
            for (size_t k = 0; k + 1 < n; k++) {
                partial += w[k];
            }
            if (partial < total) {
                w[n - 1] = total - partial;
                double err = 0;
                for (size_t k = 0; k < n; k++) {
                    err = std::max(err, std::abs(static_cast<double>(w[k]) / static_cast<double>(total) - p[k]));
                }
                if (err < best_err) {
                    best_err = err;
                    best = w;
                }
            }
            size_t k = 0;
            while (k + 1 < n) {
                w[k]++;
                if (w[k] < total) {
                    break;
                }
                w[k] = 1;
                k++;
            }
            if (k + 1 >= n) {
                break;
            }
        }
    }
    return best;
}

/// Singular values as square roots of the eigenvalues of A A^dagger, descending.
inline std::vector<double> singular_values_via_gram(const Eigen::MatrixXcd &a) {
    Eigen::MatrixXcd gram = a * a.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram);
    std::vector<double> out;
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); k++) {
        out.push_back(std::sqrt(std::max(0.0, solver.eigenvalues()[k])));
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

struct FormulaOptions {
    size_t max_depth = 6;
    bool allow_possibly = true;
    bool allow_necessarily = true;
    bool allow_xor = true;
};

/// Random formula over `atoms`, depth at most options.max_depth.
inline Proposition random_formula(std::mt19937_64 &rng, const std::vector<Proposition> &atoms, FormulaOptions options) {
    std::uniform_int_distribution<int> pick(0, 9);
    if (options.max_depth == 0 || pick(rng) < 2) {
        return atoms[std::uniform_int_distribution<size_t>(0, atoms.size() - 1)(rng)];
    }
    FormulaOptions sub = options;
    sub.max_depth--;
    while (true) {
        switch (pick(rng)) {
            case 0:
            case 1:
                return qintuit::lnot(random_formula(rng, atoms, sub));
            case 2:
                return qintuit::land(random_formula(rng, atoms, sub), random_formula(rng, atoms, sub));
            case 3:
                return qintuit::lor(random_formula(rng, atoms, sub), random_formula(rng, atoms, sub));
            case 4:
                return qintuit::limplies(random_formula(rng, atoms, sub), random_formula(rng, atoms, sub));
            case 5:
                if (options.allow_xor) {
                    return qintuit::lxor(random_formula(rng, atoms, sub), random_formula(rng, atoms, sub));
                }
                break;
            case 6:
                if (options.allow_possibly) {
                    return qintuit::possibly(random_formula(rng, atoms, sub));
                }
                break;
            case 7:
                if (options.allow_necessarily) {
                    return qintuit::necessarily(random_formula(rng, atoms, sub));
                }
                break;
            default:
                return atoms[std::uniform_int_distribution<size_t>(0, atoms.size() - 1)(rng)];
        }
    }
}

/// Random rooted finite partial order with monotone forcing. World 0 is the
/// root; edges only go from lower to higher indices, so the order is acyclic.
inline KripkeModel random_model(std::mt19937_64 &rng, size_t max_worlds, const std::vector<std::string> &atoms) {
    size_t n = std::uniform_int_distribution<size_t>(1, max_worlds)(rng);
    qintuit::KripkeModelSpec spec;
    for (size_t w = 0; w < n; w++) {
        spec.worlds.push_back("w" + std::to_string(w));
    }
    spec.root = "w0";
    spec.atoms = atoms;
    std::bernoulli_distribution coin(0.35);
    std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
    for (size_t b = 1; b < n; b++) {
        // Every non-root world gets at least one parent so the root precedes it.
        size_t parent = std::uniform_int_distribution<size_t>(0, b - 1)(rng);
        below[parent][b] = true;
        for (size_t a = 0; a < b; a++) {
            if (coin(rng)) {
                below[a][b] = true;
            }
        }
    }
    std::vector<std::vector<std::string>> forced(n);
    for (size_t w = 0; w < n; w++) {
        for (const auto &atom : atoms) {
            if (coin(rng)) {
                forced[w].push_back(atom);
            }
        }
    }
    // Propagate upward in index order, which is a topological order.
    for (size_t b = 0; b < n; b++) {
        for (size_t a = 0; a < b; a++) {
            if (below[a][b]) {
                spec.order.emplace_back(spec.worlds[a], spec.worlds[b]);
                for (const auto &atom : forced[a]) {
                    if (std::find(forced[b].begin(), forced[b].end(), atom) == forced[b].end()) {
                        forced[b].push_back(atom);
                    }
                }
            }
        }
    }
    for (size_t w = 0; w < n; w++) {
        spec.forcing.emplace_back(spec.worlds[w], forced[w]);
    }
    return KripkeModel(spec);
}

}  // namespace oracle

#endif
