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

#ifndef QINTUIT_LOGIC_H
#define QINTUIT_LOGIC_H

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace qintuit {

enum class Connective {
    Atom,
    // An atom standing for a statement that cannot be settled by computation,
    // e.g. existence of the apparatus ready state. Never forced by the
    // measurement frames.
    UndecidedAtom,
    Not,
    And,
    Or,
    Xor,
    Implies,
    Possibly,
    Necessarily,
};

bool is_binary(Connective c);
bool is_unary(Connective c);

/// An immutable propositional formula. Copies share structure.
class Proposition {
   public:
    static Proposition atom(std::string label);
    static Proposition undecided(std::string label);

    static Proposition unary(Connective c, const Proposition &operand);
    static Proposition binary(Connective c, const Proposition &lhs, const Proposition &rhs);

    Connective connective() const noexcept {
        return node_->connective;
    }
    /// Only meaningful for atoms.
    const std::string &label() const noexcept {
        return node_->label;
    }
    /// Operand of a unary node, left operand of a binary node.
    const Proposition &lhs() const;
    const Proposition &rhs() const;

    bool is_atomic() const noexcept {
        return connective() == Connective::Atom || connective() == Connective::UndecidedAtom;
    }

    /// Structural equality.
    bool operator==(const Proposition &other) const;

    /// Identity of the shared node; used as a memo key by evaluators.
    const void *node_id() const noexcept {
        return node_.get();
    }

   private:
    struct Node {
        Connective connective;
        std::string label;
        std::vector<Proposition> operands;
    };
    explicit Proposition(std::shared_ptr<const Node> node) : node_(std::move(node)) {
    }
    static Proposition make(Connective c, std::vector<Proposition> operands);

    std::shared_ptr<const Node> node_;
};

inline Proposition lnot(const Proposition &p) {
    return Proposition::unary(Connective::Not, p);
}
inline Proposition land(const Proposition &p, const Proposition &q) {
    return Proposition::binary(Connective::And, p, q);
}
inline Proposition lor(const Proposition &p, const Proposition &q) {
    return Proposition::binary(Connective::Or, p, q);
}
inline Proposition lxor(const Proposition &p, const Proposition &q) {
    return Proposition::binary(Connective::Xor, p, q);
}
inline Proposition limplies(const Proposition &p, const Proposition &q) {
    return Proposition::binary(Connective::Implies, p, q);
}
inline Proposition possibly(const Proposition &p) {
    return Proposition::unary(Connective::Possibly, p);
}
inline Proposition necessarily(const Proposition &p) {
    return Proposition::unary(Connective::Necessarily, p);
}

enum class TruthValue3 { True, False, Undecided };

std::string_view to_string(TruthValue3 value);

/// Labels an input text may mention. Labels in `undecided` parse as
/// UndecidedAtom nodes; every other declared label parses as a plain atom.
struct Vocabulary {
    std::set<std::string> atoms;
    std::set<std::string> undecided;

    bool declares(const std::string &label) const {
        return atoms.contains(label) || undecided.contains(label);
    }
};

/// Parses the ASCII surface syntax. Precedence from loosest to tightest:
/// `->` (right associative), `|`, `^`, `&` (left associative), then the prefix
/// operators `~`, `<>`, `[]`. Atoms match [A-Za-z][A-Za-z0-9_]*.
///
/// Without a vocabulary every label is a plain atom. With one, undeclared
/// labels throw UnknownAtom. Malformed input throws SyntaxError.
Proposition parse(std::string_view text, const std::optional<Vocabulary> &vocabulary = std::nullopt);

/// Canonical form: every binary node parenthesized, prefix operators
/// unparenthesized. parse(print(p)) == p given the matching vocabulary.
std::string print(const Proposition &p);

/// Replaces every Xor(a, b) by (a | b) & (~a | ~b).
Proposition desugar_xor(const Proposition &p);

/// Atom labels in order of first appearance (left to right).
std::vector<std::string> atom_labels(const Proposition &p);
/// Number of atom occurrences.
size_t atom_count(const Proposition &p);
size_t node_count(const Proposition &p, Connective c);
size_t depth(const Proposition &p);

using Valuation = std::map<std::string, bool>;

/// Two-valued evaluation. Both modal operators collapse to the identity, which
/// is their meaning on a single reflexive world. Throws UnknownAtom for
/// unassigned atoms.
bool eval_classical(const Proposition &p, const Valuation &valuation);

}  // namespace qintuit

#endif
