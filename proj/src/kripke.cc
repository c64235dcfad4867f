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

#include "qintuit/kripke.h"

#include <map>
#include <unordered_map>

#include "qintuit/error.h"

using namespace qintuit;

KripkeModel::KripkeModel(const KripkeModelSpec &spec) : spec_(spec), names_(spec.worlds) {
    size_t n = names_.size();
    if (n == 0) {
        throw Error(ErrorCode::InvalidModel, "a model needs at least one world");
    }
    std::map<std::string, World> index;
    for (World w = 0; w < n; w++) {
        if (!index.emplace(names_[w], w).second) {
            throw Error(ErrorCode::InvalidModel, "world '" + names_[w] + "' is listed twice");
        }
    }
    root_ = world(spec.root);

    leq_.assign(n * n, false);
    for (World w = 0; w < n; w++) {
        leq_[w * n + w] = true;
    }
    for (const auto &[a, b] : spec.order) {
        leq_[world(a) * n + world(b)] = true;
    }
    for (World k = 0; k < n; k++) {
        for (World i = 0; i < n; i++) {
            if (!leq_[i * n + k]) {
                continue;
            }
            for (World j = 0; j < n; j++) {
                if (leq_[k * n + j]) {
                    leq_[i * n + j] = true;
                }
            }
        }
    }
    for (World a = 0; a < n; a++) {
        for (World b = a + 1; b < n; b++) {
            if (leq(a, b) && leq(b, a)) {
                throw Error(
                    ErrorCode::InvalidModel,
                    "order is not antisymmetric: '" + names_[a] + "' and '" + names_[b] + "' precede each other");
            }
        }
        if (!leq(root_, a)) {
            throw Error(ErrorCode::InvalidModel, "root '" + spec.root + "' does not precede '" + names_[a] + "'");
        }
    }
    successors_.resize(n);
    for (World a = 0; a < n; a++) {
        for (World b = 0; b < n; b++) {
            if (leq(a, b)) {
                successors_[a].push_back(b);
            }
        }
    }

    forcing_.resize(n);
    vocabulary_.atoms.insert(spec.atoms.begin(), spec.atoms.end());
    vocabulary_.undecided.insert(spec.undecided.begin(), spec.undecided.end());
    for (const auto &label : vocabulary_.undecided) {
        if (vocabulary_.atoms.contains(label)) {
            throw Error(ErrorCode::InvalidModel, "atom '" + label + "' declared both decided and undecided");
        }
    }
    for (const auto &[name, atoms] : spec.forcing) {
        World w = world(name);
        for (const auto &atom : atoms) {
            forcing_[w].insert(atom);
            if (!vocabulary_.declares(atom)) {
                vocabulary_.atoms.insert(atom);
            }
        }
    }
    for (World a = 0; a < n; a++) {
        for (World b : successors_[a]) {
            for (const auto &atom : forcing_[a]) {
                if (!forcing_[b].contains(atom)) {
                    throw Error(
                        ErrorCode::InvalidModel,
                        "forcing is not monotone: '" + names_[a] + "' <= '" + names_[b] + "' but atom '" + atom +
                            "' is forced at '" + names_[a] + "' and not at '" + names_[b] + "'");
                }
            }
        }
    }
}

const std::string &KripkeModel::name(World w) const {
    if (w >= names_.size()) {
        throw Error(ErrorCode::UnknownWorld, "world index " + std::to_string(w) + " out of range");
    }
    return names_[w];
}

World KripkeModel::world(const std::string &name) const {
    for (World w = 0; w < names_.size(); w++) {
        if (names_[w] == name) {
            return w;
        }
    }
    throw Error(ErrorCode::UnknownWorld, "no world named '" + name + "'");
}

KripkeModel qintuit::measurement_frame(const SampleSpace &space) {
    KripkeModelSpec spec;
    spec.worlds.push_back("root");
    spec.root = "root";
    for (size_t n = 0; n < space.size(); n++) {
        std::string leaf = "leaf" + std::to_string(n + 1);
        spec.worlds.push_back(leaf);
        spec.order.emplace_back("root", leaf);
        spec.forcing.push_back({leaf, {space[n]}});
    }
    spec.atoms = space.labels();
    return KripkeModel(spec);
}

KripkeModel qintuit::pi_hc_frame() {
    KripkeModelSpec spec;
    spec.worlds = {"root", "witness"};
    spec.root = "root";
    spec.order = {{"root", "witness"}};
    spec.forcing = {{"witness", {PI_HC_ATOM}}};
    spec.undecided = {PI_HC_ATOM};
    return KripkeModel(spec);
}

namespace {

using WorldSet = std::vector<bool>;

class ForcingEvaluator {
   public:
    explicit ForcingEvaluator(const KripkeModel &m) : m_(m) {
    }

    const WorldSet &eval(const Proposition &p) {
        auto it = memo_.find(p.node_id());
        if (it != memo_.end()) {
            return it->second;
        }
        WorldSet result = compute(p);
        return memo_.emplace(p.node_id(), std::move(result)).first->second;
    }

   private:
    WorldSet compute(const Proposition &p) {
        size_t n = m_.size();
        WorldSet out(n, false);
        switch (p.connective()) {
            case Connective::Atom:
            case Connective::UndecidedAtom: {
                if (!m_.vocabulary().declares(p.label())) {
                    throw Error(ErrorCode::UnknownAtom, "atom '" + p.label() + "' is not declared by the model");
                }
                for (World w = 0; w < n; w++) {
                    out[w] = m_.forces_atom(w, p.label());
                }
                return out;
            }
            case Connective::Not: {
                WorldSet a = eval(p.lhs());
                for (World w = 0; w < n; w++) {
                    out[w] = none_above(w, a);
                }
                return out;
            }
            case Connective::Possibly: {
                WorldSet a = eval(p.lhs());
                for (World w = 0; w < n; w++) {
                    out[w] = !none_above(w, a);
                }
                return out;
            }
            case Connective::Necessarily: {
                WorldSet a = eval(p.lhs());
                for (World w = 0; w < n; w++) {
                    bool all = true;
                    for (World v : m_.successors(w)) {
                        all = all && a[v];
                    }
                    out[w] = all;
                }
                return out;
            }
            default:
                break;
        }
        WorldSet a = eval(p.lhs());
        WorldSet b = eval(p.rhs());
        switch (p.connective()) {
            case Connective::And:
                for (World w = 0; w < n; w++) {
                    out[w] = a[w] && b[w];
                }
                return out;
            case Connective::Or:
                for (World w = 0; w < n; w++) {
                    out[w] = a[w] || b[w];
                }
                return out;
            case Connective::Xor:
                // (a | b) & (~a | ~b)
                for (World w = 0; w < n; w++) {
                    out[w] = (a[w] || b[w]) && (none_above(w, a) || none_above(w, b));
                }
                return out;
            case Connective::Implies:
                for (World w = 0; w < n; w++) {
                    bool all = true;
                    for (World v : m_.successors(w)) {
                        all = all && (!a[v] || b[v]);
                    }
                    out[w] = all;
                }
                return out;
            default:
                throw std::logic_error("unhandled connective");
        }
    }

    bool none_above(World w, const WorldSet &s) const {
        for (World v : m_.successors(w)) {
            if (s[v]) {
                return false;
            }
        }
        return true;
    }

    const KripkeModel &m_;
    std::unordered_map<const void *, WorldSet> memo_;
};

}  // namespace

std::vector<bool> qintuit::forcing_set(const KripkeModel &m, const Proposition &p) {
    ForcingEvaluator evaluator(m);
    return evaluator.eval(p);
}

bool qintuit::forces(const KripkeModel &m, World w, const Proposition &p) {
    m.name(w);
    return forcing_set(m, p)[w];
}

TruthValue3 qintuit::eval3_at(const KripkeModel &m, World w, const Proposition &p) {
    m.name(w);
    ForcingEvaluator evaluator(m);
    if (evaluator.eval(p)[w]) {
        return TruthValue3::True;
    }
    Proposition negation = lnot(p);
    if (evaluator.eval(negation)[w]) {
        return TruthValue3::False;
    }
    return TruthValue3::Undecided;
}

TruthValue3 qintuit::eval3(const KripkeModel &m, const Proposition &p) {
    return eval3_at(m, m.root(), p);
}

Valuation qintuit::post_valuation(const KripkeModel &m, World leaf) {
    m.name(leaf);
    if (!m.is_maximal(leaf)) {
        throw Error(ErrorCode::NotMaximalWorld, "world '" + m.name(leaf) + "' has strict successors");
    }
    Valuation result;
    for (const auto &atom : m.vocabulary().atoms) {
        result[atom] = m.forces_atom(leaf, atom);
    }
    for (const auto &atom : m.vocabulary().undecided) {
        result[atom] = m.forces_atom(leaf, atom);
    }
    return result;
}
