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

#include "qintuit/logic.h"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "qintuit/error.h"

using namespace qintuit;

bool qintuit::is_binary(Connective c) {
    return c == Connective::And || c == Connective::Or || c == Connective::Xor || c == Connective::Implies;
}

bool qintuit::is_unary(Connective c) {
    return c == Connective::Not || c == Connective::Possibly || c == Connective::Necessarily;
}

Proposition Proposition::make(Connective c, std::vector<Proposition> operands) {
    return Proposition(std::make_shared<const Node>(Node{c, "", std::move(operands)}));
}

Proposition Proposition::atom(std::string label) {
    return Proposition(std::make_shared<const Node>(Node{Connective::Atom, std::move(label), {}}));
}

Proposition Proposition::undecided(std::string label) {
    return Proposition(std::make_shared<const Node>(Node{Connective::UndecidedAtom, std::move(label), {}}));
}

Proposition Proposition::unary(Connective c, const Proposition &operand) {
    if (!is_unary(c)) {
        throw std::invalid_argument("not a unary connective");
    }
    return make(c, {operand});
}

Proposition Proposition::binary(Connective c, const Proposition &lhs, const Proposition &rhs) {
    if (!is_binary(c)) {
        throw std::invalid_argument("not a binary connective");
    }
    return make(c, {lhs, rhs});
}

const Proposition &Proposition::lhs() const {
    if (node_->operands.empty()) {
        throw std::logic_error("atoms have no operands");
    }
    return node_->operands[0];
}

const Proposition &Proposition::rhs() const {
    if (node_->operands.size() < 2) {
        throw std::logic_error("only binary connectives have a right operand");
    }
    return node_->operands[1];
}

bool Proposition::operator==(const Proposition &other) const {
    if (node_ == other.node_) {
        return true;
    }
    if (node_->connective != other.node_->connective || node_->label != other.node_->label ||
        node_->operands.size() != other.node_->operands.size()) {
        return false;
    }
    for (size_t k = 0; k < node_->operands.size(); k++) {
        if (!(node_->operands[k] == other.node_->operands[k])) {
            return false;
        }
    }
    return true;
}

std::string_view qintuit::to_string(TruthValue3 value) {
    switch (value) {
        case TruthValue3::True:
            return "true";
        case TruthValue3::False:
            return "false";
        case TruthValue3::Undecided:
            return "undecided";
    }
    return "?";
}

namespace {

enum class TokenKind { Ident, Not, Possibly, Necessarily, And, Or, Xor, Implies, LParen, RParen, End };

struct Token {
    TokenKind kind;
    std::string_view text;
    size_t column;
};

std::string describe(const Token &t) {
    if (t.kind == TokenKind::End) {
        return "end of input";
    }
    return "'" + std::string(t.text) + "'";
}

class Lexer {
   public:
    explicit Lexer(std::string_view text) : text_(text) {
    }

    std::vector<Token> tokenize() {
        std::vector<Token> out;
        while (true) {
            while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
                pos_++;
            }
            if (pos_ == text_.size()) {
                out.push_back({TokenKind::End, {}, pos_ + 1});
                return out;
            }
            size_t start = pos_;
            char c = text_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c))) {
                while (pos_ < text_.size() &&
                       (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                    pos_++;
                }
                out.push_back({TokenKind::Ident, text_.substr(start, pos_ - start), start + 1});
                continue;
            }
            auto two = [&](char next, TokenKind kind) {
                if (pos_ + 1 < text_.size() && text_[pos_ + 1] == next) {
                    pos_ += 2;
                    out.push_back({kind, text_.substr(start, 2), start + 1});
                    return;
                }
                throw SyntaxError(start + 1, std::string("expected '") + c + next + "'");
            };
            switch (c) {
                case '~':
                    pos_++;
                    out.push_back({TokenKind::Not, text_.substr(start, 1), start + 1});
                    break;
                case '&':
                    pos_++;
                    out.push_back({TokenKind::And, text_.substr(start, 1), start + 1});
                    break;
                case '|':
                    pos_++;
                    out.push_back({TokenKind::Or, text_.substr(start, 1), start + 1});
                    break;
                case '^':
                    pos_++;
                    out.push_back({TokenKind::Xor, text_.substr(start, 1), start + 1});
                    break;
                case '(':
                    pos_++;
                    out.push_back({TokenKind::LParen, text_.substr(start, 1), start + 1});
                    break;
                case ')':
                    pos_++;
                    out.push_back({TokenKind::RParen, text_.substr(start, 1), start + 1});
                    break;
                case '<':
                    two('>', TokenKind::Possibly);
                    break;
                case '[':
                    two(']', TokenKind::Necessarily);
                    break;
                case '-':
                    two('>', TokenKind::Implies);
                    break;
                default:
                    throw SyntaxError(start + 1, std::string("unexpected character '") + c + "'");
            }
        }
    }

   private:
    std::string_view text_;
    size_t pos_ = 0;
};

class Parser {
   public:
    Parser(std::vector<Token> tokens, const std::optional<Vocabulary> &vocabulary)
        : tokens_(std::move(tokens)), vocabulary_(vocabulary) {
    }

    Proposition parse_all() {
        Proposition result = parse_implies();
        if (peek().kind != TokenKind::End) {
            throw SyntaxError(peek().column, "unexpected " + describe(peek()));
        }
        return result;
    }

   private:
    const Token &peek() const {
        return tokens_[pos_];
    }
    bool accept(TokenKind kind) {
        if (peek().kind == kind) {
            pos_++;
            return true;
        }
        return false;
    }

    Proposition parse_implies() {
        Proposition lhs = parse_left_assoc(0);
        if (accept(TokenKind::Implies)) {
            return limplies(lhs, parse_implies());
        }
        return lhs;
    }

    // Levels: 0 = '|', 1 = '^', 2 = '&'.
    Proposition parse_left_assoc(int level) {
        static constexpr TokenKind tokens[] = {TokenKind::Or, TokenKind::Xor, TokenKind::And};
        static constexpr Connective connectives[] = {Connective::Or, Connective::Xor, Connective::And};
        auto next = [&]() {
            return level == 2 ? parse_unary() : parse_left_assoc(level + 1);
        };
        Proposition result = next();
        while (accept(tokens[level])) {
            result = Proposition::binary(connectives[level], result, next());
        }
        return result;
    }

    Proposition parse_unary() {
        if (accept(TokenKind::Not)) {
            return lnot(parse_unary());
        }
        if (accept(TokenKind::Possibly)) {
            return possibly(parse_unary());
        }
        if (accept(TokenKind::Necessarily)) {
            return necessarily(parse_unary());
        }
        return parse_primary();
    }

    Proposition parse_primary() {
        const Token &t = peek();
        if (t.kind == TokenKind::Ident) {
            pos_++;
            return make_atom(t);
        }
        if (t.kind == TokenKind::LParen) {
            pos_++;
            Proposition inner = parse_implies();
            if (!accept(TokenKind::RParen)) {
                throw SyntaxError(peek().column, "expected ')' but found " + describe(peek()));
            }
            return inner;
        }
        throw SyntaxError(t.column, "expected an atom or '(' but found " + describe(t));
    }

    Proposition make_atom(const Token &t) {
        std::string label(t.text);
        if (!vocabulary_.has_value()) {
            return Proposition::atom(std::move(label));
        }
        if (vocabulary_->undecided.contains(label)) {
            return Proposition::undecided(std::move(label));
        }
        if (vocabulary_->atoms.contains(label)) {
            return Proposition::atom(std::move(label));
        }
        throw Error(
            ErrorCode::UnknownAtom, "atom '" + label + "' at column " + std::to_string(t.column) + " is not declared");
    }

    std::vector<Token> tokens_;
    const std::optional<Vocabulary> &vocabulary_;
    size_t pos_ = 0;
};

const char *binary_symbol(Connective c) {
    switch (c) {
        case Connective::And:
            return " & ";
        case Connective::Or:
            return " | ";
        case Connective::Xor:
            return " ^ ";
        case Connective::Implies:
            return " -> ";
        default:
            return " ? ";
    }
}

void print_into(const Proposition &p, std::string &out) {
    switch (p.connective()) {
        case Connective::Atom:
        case Connective::UndecidedAtom:
            out += p.label();
            return;
        case Connective::Not:
            out += '~';
            print_into(p.lhs(), out);
            return;
        case Connective::Possibly:
            out += "<>";
            print_into(p.lhs(), out);
            return;
        case Connective::Necessarily:
            out += "[]";
            print_into(p.lhs(), out);
            return;
        default:
            out += '(';
            print_into(p.lhs(), out);
            out += binary_symbol(p.connective());
            print_into(p.rhs(), out);
            out += ')';
            return;
    }
}

void collect_labels(const Proposition &p, std::vector<std::string> &out) {
    if (p.is_atomic()) {
        if (std::find(out.begin(), out.end(), p.label()) == out.end()) {
            out.push_back(p.label());
        }
        return;
    }
    collect_labels(p.lhs(), out);
    if (is_binary(p.connective())) {
        collect_labels(p.rhs(), out);
    }
}

}  // namespace

Proposition qintuit::parse(std::string_view text, const std::optional<Vocabulary> &vocabulary) {
    return Parser(Lexer(text).tokenize(), vocabulary).parse_all();
}

std::string qintuit::print(const Proposition &p) {
    std::string out;
    print_into(p, out);
    return out;
}

Proposition qintuit::desugar_xor(const Proposition &p) {
    Connective c = p.connective();
    if (p.is_atomic()) {
        return p;
    }
    if (is_unary(c)) {
        return Proposition::unary(c, desugar_xor(p.lhs()));
    }
    Proposition a = desugar_xor(p.lhs());
    Proposition b = desugar_xor(p.rhs());
    if (c == Connective::Xor) {
        return land(lor(a, b), lor(lnot(a), lnot(b)));
    }
    return Proposition::binary(c, a, b);
}

std::vector<std::string> qintuit::atom_labels(const Proposition &p) {
    std::vector<std::string> out;
    collect_labels(p, out);
    return out;
}

size_t qintuit::atom_count(const Proposition &p) {
    if (p.is_atomic()) {
        return 1;
    }
    size_t total = atom_count(p.lhs());
    if (is_binary(p.connective())) {
        total += atom_count(p.rhs());
    }
    return total;
}

size_t qintuit::node_count(const Proposition &p, Connective c) {
    size_t total = p.connective() == c ? 1 : 0;
    if (p.is_atomic()) {
        return total;
    }
    total += node_count(p.lhs(), c);
    if (is_binary(p.connective())) {
        total += node_count(p.rhs(), c);
    }
    return total;
}

size_t qintuit::depth(const Proposition &p) {
    if (p.is_atomic()) {
        return 0;
    }
    size_t d = depth(p.lhs());
    if (is_binary(p.connective())) {
        d = std::max(d, depth(p.rhs()));
    }
    return d + 1;
}

bool qintuit::eval_classical(const Proposition &p, const Valuation &valuation) {
    switch (p.connective()) {
        case Connective::Atom:
        case Connective::UndecidedAtom: {
            auto it = valuation.find(p.label());
            if (it == valuation.end()) {
                throw Error(ErrorCode::UnknownAtom, "no value assigned to atom '" + p.label() + "'");
            }
            return it->second;
        }
        case Connective::Not:
            return !eval_classical(p.lhs(), valuation);
        case Connective::Possibly:
        case Connective::Necessarily:
            return eval_classical(p.lhs(), valuation);
        case Connective::And:
            return eval_classical(p.lhs(), valuation) && eval_classical(p.rhs(), valuation);
        case Connective::Or:
            return eval_classical(p.lhs(), valuation) || eval_classical(p.rhs(), valuation);
        case Connective::Xor:
            return eval_classical(p.lhs(), valuation) != eval_classical(p.rhs(), valuation);
        case Connective::Implies:
            return !eval_classical(p.lhs(), valuation) || eval_classical(p.rhs(), valuation);
    }
    return false;
}
