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

#include <random>

#include "gtest/gtest.h"
#include "oracles.h"
#include "qintuit/error.h"

using namespace qintuit;

static const Proposition a1 = Proposition::atom("a1");
static const Proposition a2 = Proposition::atom("a2");
static const Proposition a3 = Proposition::atom("a3");

TEST(parse, grammar_cases) {
    ASSERT_EQ(parse("a1 ^ a2"), lxor(a1, a2));
    ASSERT_EQ(parse("(a1 | a2) & (~a1 | ~a2)"), land(lor(a1, a2), lor(lnot(a1), lnot(a2))));
    ASSERT_EQ(parse("<>pi_hc"), possibly(Proposition::atom("pi_hc")));
    ASSERT_EQ(parse("[]a1 -> <>a1"), limplies(necessarily(a1), possibly(a1)));
}

TEST(parse, precedence_and_associativity) {
    // implies < or < xor < and < unary
    ASSERT_EQ(parse("a1 | a2 ^ a3 & ~a1"), lor(a1, lxor(a2, land(a3, lnot(a1)))));
    ASSERT_EQ(parse("a1 -> a2 -> a3"), limplies(a1, limplies(a2, a3)));
    ASSERT_EQ(parse("a1 | a2 | a3"), lor(lor(a1, a2), a3));
    ASSERT_EQ(parse("a1 ^ a2 ^ a3"), lxor(lxor(a1, a2), a3));
    ASSERT_EQ(parse("~<>[]a1"), lnot(possibly(necessarily(a1))));
    ASSERT_EQ(parse("  ( a1\t)  "), a1);
}

TEST(parse, reports_error_column) {
    try {
        parse("a1 |");
        FAIL();
    } catch (const SyntaxError &e) {
        ASSERT_EQ(e.column(), 5);
    }
    auto column = [](const char *text) -> size_t {
        try {
            parse(text);
        } catch (const SyntaxError &e) {
            return e.column();
        }
        return 0;
    };
    ASSERT_EQ(column(""), 1);
    ASSERT_EQ(column("(a1 & a2"), 9);
    ASSERT_EQ(column("a1 a2"), 4);
    ASSERT_EQ(column("a1 $ a2"), 4);
    ASSERT_EQ(column("a1 - a2"), 4);
    ASSERT_EQ(column("1a"), 1);
    ASSERT_EQ(column("a1 & )"), 6);
}

TEST(parse, vocabulary) {
    Vocabulary v{{"a1", "a2"}, {"m0_exists"}};
    Proposition p = parse("a1 & m0_exists", v);
    ASSERT_EQ(p.rhs().connective(), Connective::UndecidedAtom);
    ASSERT_EQ(p.lhs().connective(), Connective::Atom);
    try {
        parse("a1 | a3", v);
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.code(), ErrorCode::UnknownAtom);
    }
}

TEST(print, canonical_forms) {
    ASSERT_EQ(print(lxor(a1, a2)), "(a1 ^ a2)");
    ASSERT_EQ(print(lnot(lnot(lor(a1, a2)))), "~~(a1 | a2)");
    ASSERT_EQ(print(possibly(Proposition::undecided("pi_hc"))), "<>pi_hc");
    ASSERT_EQ(print(limplies(necessarily(a1), a2)), "([]a1 -> a2)");
}

TEST(print, round_trips_random_formulas) {
    std::mt19937_64 rng(41);
    std::vector<Proposition> atoms{a1, a2, a3, Proposition::undecided("pi_hc"), Proposition::atom("x_9")};
    Vocabulary v{{"a1", "a2", "a3", "x_9"}, {"pi_hc"}};
    for (int k = 0; k < 1000; k++) {
        Proposition p = oracle::random_formula(rng, atoms, {.max_depth = 8});
        ASSERT_LE(depth(p), 8);
        ASSERT_EQ(parse(print(p), v), p) << print(p);
    }
}

TEST(desugar_xor, examples) {
    ASSERT_EQ(desugar_xor(lxor(a1, a2)), land(lor(a1, a2), lor(lnot(a1), lnot(a2))));
    ASSERT_EQ(desugar_xor(a1), a1);

    Proposition nested = lxor(lxor(a1, a2), a3);
    Proposition out = desugar_xor(nested);
    ASSERT_EQ(node_count(out, Connective::Xor), 0);
    for (uint64_t mask = 0; mask < 8; mask++) {
        auto v = oracle::mask_valuation(3, mask);
        ASSERT_EQ(eval_classical(out, v), eval_classical(nested, v));
        // Three-way parity.
        ASSERT_EQ(eval_classical(out, v), std::popcount(mask) % 2 == 1);
    }
}

TEST(desugar_xor, preserves_classical_semantics) {
    std::mt19937_64 rng(43);
    std::vector<Proposition> atoms;
    for (size_t k = 1; k <= 12; k++) {
        atoms.push_back(Proposition::atom("a" + std::to_string(k)));
    }
    for (int k = 0; k < 60; k++) {
        size_t n = 1 + k % 12;
        std::vector<Proposition> pool(atoms.begin(), atoms.begin() + static_cast<long>(n));
        Proposition p = oracle::random_formula(rng, pool, {.max_depth = 5});
        Proposition q = desugar_xor(p);
        ASSERT_EQ(node_count(q, Connective::Xor), 0);
        for (uint64_t mask = 0; mask < (uint64_t{1} << n); mask++) {
            auto v = oracle::mask_valuation(n, mask);
            ASSERT_EQ(eval_classical(p, v), eval_classical(q, v)) << print(p);
        }
    }
}

TEST(eval_classical, connectives) {
    Valuation v{{"a1", true}, {"a2", false}};
    ASSERT_TRUE(eval_classical(lxor(a1, a2), v));
    ASSERT_FALSE(eval_classical(limplies(a1, a2), v));
    ASSERT_TRUE(eval_classical(limplies(a2, a1), v));
    ASSERT_TRUE(eval_classical(possibly(a1), v));
    ASSERT_FALSE(eval_classical(necessarily(a2), v));
    ASSERT_THROW(eval_classical(a3, v), Error);
}

TEST(Proposition, structure_helpers) {
    Proposition p = land(lor(a1, a2), lnot(a1));
    ASSERT_EQ(atom_labels(p), (std::vector<std::string>{"a1", "a2"}));
    ASSERT_EQ(atom_count(p), 3);
    ASSERT_EQ(depth(p), 2);
    ASSERT_FALSE(Proposition::atom("a") == Proposition::undecided("a"));
    ASSERT_THROW(a1.lhs(), std::logic_error);
}
