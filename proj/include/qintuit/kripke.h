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

#ifndef QINTUIT_KRIPKE_H
#define QINTUIT_KRIPKE_H

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qintuit/logic.h"
#include "qintuit/quantum_core.h"

namespace qintuit {

using World = size_t;

/// Unvalidated description of a finite Kripke model, as read from a file.
struct KripkeModelSpec {
    std::vector<std::string> worlds;
    std::string root;
    /// Generating pairs (w, w') meaning w <= w'. The model uses the
    /// reflexive-transitive closure.
    std::vector<std::pair<std::string, std::string>> order;
    /// Atoms forced at each world, keyed by world name. Worlds not listed force nothing.
    std::vector<std::pair<std::string, std::vector<std::string>>> forcing;
    /// Declared plain atoms. Atoms mentioned in `forcing` are added automatically.
    std::vector<std::string> atoms;
    /// Declared undecided atoms.
    std::vector<std::string> undecided;
};

/// A finite intuitionistic Kripke model: worlds partially ordered by <=, a
/// least world (the root), and monotone atomic forcing. Accessibility for the
/// modal operators is the same order, which is reflexive and hence serial.
///
/// Immutable after construction; construction rejects anything that is not a
/// partial order with a least root, and any atom forced at w but not at some
/// w' >= w.
class KripkeModel {
   public:
    /// Throws InvalidModel (with a diagnostic naming the offending worlds and
    /// atom) or UnknownWorld.
    explicit KripkeModel(const KripkeModelSpec &spec);

    size_t size() const noexcept {
        return names_.size();
    }
    World root() const noexcept {
        return root_;
    }
    const std::string &name(World w) const;
    /// Throws UnknownWorld.
    World world(const std::string &name) const;

    bool leq(World a, World b) const {
        return leq_[a * size() + b];
    }
    const std::vector<World> &successors(World w) const {
        return successors_[w];
    }
    bool is_maximal(World w) const {
        return successors_[w].size() == 1;
    }
    bool forces_atom(World w, const std::string &atom) const {
        return forcing_[w].contains(atom);
    }
    const std::set<std::string> &forced_atoms(World w) const {
        return forcing_[w];
    }
    const Vocabulary &vocabulary() const noexcept {
        return vocabulary_;
    }
    const KripkeModelSpec &spec() const noexcept {
        return spec_;
    }

   private:
    KripkeModelSpec spec_;
    std::vector<std::string> names_;
    World root_ = 0;
    std::vector<bool> leq_;
    std::vector<std::vector<World>> successors_;
    std::vector<std::set<std::string>> forcing_;
    Vocabulary vocabulary_;
};

/// Root world plus one leaf per outcome; leaf n forces exactly the n-th
/// outcome atom, the root forces nothing. Leaves are worlds 1..N in the order
/// of the sample space.
KripkeModel measurement_frame(const SampleSpace &space);

/// World of measurement_frame(space) standing for outcome `n` (0-based).
inline World leaf_world(size_t n) {
    return n + 1;
}

inline constexpr const char *PI_HC_ATOM = "pi_hc";

/// Root plus a single witness world forcing the undecided atom pi_hc: there is
/// evidence that the atom can hold, but no proof that it holds at the root.
KripkeModel pi_hc_frame();

/// Set of worlds forcing `p`, indexed by world. Intuitionistic clauses:
///   w forces ~p     iff no w' >= w forces p
///   w forces p -> q iff every w' >= w forcing p also forces q
///   w forces <>p    iff some w' >= w forces p
///   w forces []p    iff every w' >= w forces p
/// And, Or and Xor are pointwise (Xor as its Or/And/Not expansion).
/// Throws UnknownAtom for atoms the model does not declare.
std::vector<bool> forcing_set(const KripkeModel &m, const Proposition &p);

/// Whether world `w` forces `p`. Throws UnknownWorld, UnknownAtom.
bool forces(const KripkeModel &m, World w, const Proposition &p);

/// Three-valued reading at world `w`: True if w forces p, False if w forces
/// ~p, Undecided otherwise.
TruthValue3 eval3_at(const KripkeModel &m, World w, const Proposition &p);

/// eval3_at the root.
TruthValue3 eval3(const KripkeModel &m, const Proposition &p);

/// The classical valuation recorded at a maximal world: each declared atom is
/// true iff forced there. Throws NotMaximalWorld.
Valuation post_valuation(const KripkeModel &m, World leaf);

}  // namespace qintuit

#endif
