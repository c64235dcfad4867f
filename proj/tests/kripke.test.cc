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

#include <random>

#include "gtest/gtest.h"
#include "oracles.h"
#include "qintuit/error.h"

using namespace qintuit;

static const Proposition a1 = Proposition::atom("a1");
static const Proposition a2 = Proposition::atom("a2");

static ErrorCode code_of(auto &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an Error";
    return ErrorCode::InvalidConfig;
}

TEST(measurement_frame, structure) {
    KripkeModel m = measurement_frame(SampleSpace::numbered(2));
    ASSERT_EQ(m.size(), 3);
    ASSERT_TRUE(m.forced_atoms(m.root()).empty());
    ASSERT_EQ(m.forced_atoms(leaf_world(0)), (std::set<std::string>{"a1"}));
    ASSERT_EQ(m.forced_atoms(leaf_world(1)), (std::set<std::string>{"a2"}));
    ASSERT_TRUE(m.leq(m.root(), leaf_world(1)));
    ASSERT_FALSE(m.leq(leaf_world(0), leaf_world(1)));
    ASSERT_TRUE(m.is_maximal(leaf_world(0)));
    ASSERT_FALSE(m.is_maximal(m.root()));

    KripkeModel single = measurement_frame(SampleSpace::numbered(1));
    ASSERT_EQ(single.size(), 2);
    ASSERT_TRUE(single.forced_atoms(single.root()).empty());

    KripkeModel four = measurement_frame(SampleSpace::numbered(4));
    ASSERT_EQ(four.size(), 5);
    for (World w = 1; w < 5; w++) {
        ASSERT_EQ(four.forced_atoms(w).size(), 1);
    }
}

TEST(KripkeModel, rejects_invalid_descriptions) {
    KripkeModelSpec nonmonotone{
        {"r", "x", "y"}, "r", {{"r", "x"}, {"x", "y"}}, {{"x", {"p"}}}, {}, {}};
    try {
        KripkeModel m(nonmonotone);
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.code(), ErrorCode::InvalidModel);
        std::string what = e.what();
        ASSERT_NE(what.find("'x'"), std::string::npos);
        ASSERT_NE(what.find("'y'"), std::string::npos);
        ASSERT_NE(what.find("'p'"), std::string::npos);
    }

    KripkeModelSpec cycle{{"r", "x", "y"}, "r", {{"r", "x"}, {"x", "y"}, {"y", "x"}}, {}, {}, {}};
    ASSERT_EQ(code_of([&] { KripkeModel m(cycle); }), ErrorCode::InvalidModel);

    KripkeModelSpec unrooted{{"r", "x"}, "r", {}, {}, {}, {}};
    ASSERT_EQ(code_of([&] { KripkeModel m(unrooted); }), ErrorCode::InvalidModel);

    KripkeModelSpec ghost{{"r"}, "r", {{"r", "z"}}, {}, {}, {}};
    ASSERT_EQ(code_of([&] { KripkeModel m(ghost); }), ErrorCode::UnknownWorld);

    KripkeModelSpec dup{{"r", "r"}, "r", {}, {}, {}, {}};
    ASSERT_EQ(code_of([&] { KripkeModel m(dup); }), ErrorCode::InvalidModel);

    KripkeModelSpec empty{};
    ASSERT_EQ(code_of([&] { KripkeModel m(empty); }), ErrorCode::InvalidModel);
}

TEST(KripkeModel, closes_order_transitively) {
    KripkeModelSpec chain{{"r", "x", "y"}, "r", {{"r", "x"}, {"x", "y"}}, {{"y", {"p"}}}, {}, {}};
    KripkeModel m(chain);
    ASSERT_TRUE(m.leq(0, 2));
    ASSERT_EQ(m.successors(0).size(), 3);
}

TEST(forces, examples) {
    KripkeModel m = measurement_frame(SampleSpace::numbered(2));
    ASSERT_TRUE(forces(m, leaf_world(0), a1));
    ASSERT_FALSE(forces(m, m.root(), land(lnot(a1), lnot(a2))));
    ASSERT_TRUE(forces(m, m.root(), lnot(land(lnot(a1), lnot(a2)))));
    ASSERT_TRUE(forces(m, m.root(), lnot(lnot(lor(a1, a2)))));
    ASSERT_FALSE(forces(m, m.root(), lor(a1, a2)));

    // The same judgments from the clause-by-clause oracle.
    for (World w = 0; w < m.size(); w++) {
        ASSERT_EQ(oracle::forces(m, w, lnot(lnot(lor(a1, a2)))), true);
    }
    ASSERT_FALSE(oracle::forces(m, m.root(), lor(a1, a2)));

    ASSERT_EQ(code_of([&] { forces(m, 7, a1); }), ErrorCode::UnknownWorld);
    ASSERT_EQ(code_of([&] { forces(m, 0, Proposition::atom("a9")); }), ErrorCode::UnknownAtom);
}

TEST(forces, modal_operators) {
    KripkeModel m = measurement_frame(SampleSpace::numbered(2));
    ASSERT_TRUE(forces(m, m.root(), possibly(a1)));
    ASSERT_FALSE(forces(m, m.root(), necessarily(lor(a1, a2))));
    for (World w = 0; w < m.size(); w++) {
        ASSERT_FALSE(forces(m, w, possibly(land(a1, lnot(a1)))));
    }
    // Leaves see only themselves.
    ASSERT_TRUE(forces(m, leaf_world(0), necessarily(a1)));
    ASSERT_FALSE(forces(m, leaf_world(1), possibly(a1)));
}

TEST(eval3, headline_values) {
    KripkeModel m = measurement_frame(SampleSpace::numbered(2));
    ASSERT_EQ(eval3(m, lor(a1, a2)), TruthValue3::Undecided);
    ASSERT_EQ(eval3(m, land(lnot(a1), lnot(a2))), TruthValue3::False);
    ASSERT_EQ(eval3(m, lor(a1, lnot(a1))), TruthValue3::Undecided);
    ASSERT_EQ(eval3(m, lnot(lnot(lor(a1, a2)))), TruthValue3::True);
    ASSERT_EQ(eval3(m, land(lnot(lnot(a1)), lnot(lnot(a2)))), TruthValue3::False);
    ASSERT_EQ(eval3(m, lxor(a1, a2)), TruthValue3::Undecided);
}

TEST(eval3, pi_hc_frame) {
    KripkeModel m = pi_hc_frame();
    Proposition pi = Proposition::undecided(PI_HC_ATOM);
    ASSERT_EQ(eval3(m, pi), TruthValue3::Undecided);
    ASSERT_EQ(eval3(m, possibly(pi)), TruthValue3::True);
    ASSERT_EQ(eval3(m, lnot(pi)), TruthValue3::False);
    ASSERT_EQ(eval3(m, lor(pi, lnot(pi))), TruthValue3::Undecided);
    ASSERT_EQ(eval3(m, lnot(lnot(pi))), TruthValue3::True);
    ASSERT_EQ(eval3(m, necessarily(lnot(pi))), TruthValue3::False);
}

TEST(eval3, undecided_atom_without_witness_is_refuted) {
    // With no world forcing it, Heyting negation of the atom holds at the root.
    KripkeModelSpec bare{{"root", "leaf"}, "root", {{"root", "leaf"}}, {}, {}, {PI_HC_ATOM}};
    KripkeModel m(bare);
    Proposition pi = Proposition::undecided(PI_HC_ATOM);
    ASSERT_TRUE(forces(m, m.root(), lnot(pi)));
    ASSERT_EQ(eval3(m, pi), TruthValue3::False);
}

TEST(post_valuation, examples) {
    KripkeModel m = measurement_frame(SampleSpace::numbered(2));
    Valuation v = post_valuation(m, leaf_world(0));
    ASSERT_EQ(v, (Valuation{{"a1", true}, {"a2", false}}));
    ASSERT_TRUE(eval_classical(lor(a1, lnot(a1)), v));
    ASSERT_TRUE(eval_classical(land(lor(a1, a2), lor(lnot(a1), lnot(a2))), post_valuation(m, leaf_world(1))));
    ASSERT_EQ(code_of([&] { post_valuation(m, m.root()); }), ErrorCode::NotMaximalWorld);
}

TEST(forcing_set, agrees_with_oracle_on_random_models) {
    std::mt19937_64 rng(47);
    std::vector<std::string> labels{"p", "q", "r"};
    std::vector<Proposition> atoms;
    for (const auto &l : labels) {
        atoms.push_back(Proposition::atom(l));
    }
    for (int k = 0; k < 300; k++) {
        KripkeModel m = oracle::random_model(rng, 8, labels);
        Proposition p = oracle::random_formula(rng, atoms, {.max_depth = 5});
        auto fast = forcing_set(m, p);
        for (World w = 0; w < m.size(); w++) {
            ASSERT_EQ(fast[w], oracle::forces(m, w, p)) << print(p);
        }
    }
}

TEST(forcing_set, soundness_properties) {
    std::mt19937_64 rng(53);
    std::vector<std::string> labels{"p", "q", "r"};
    std::vector<Proposition> atoms;
    for (const auto &l : labels) {
        atoms.push_back(Proposition::atom(l));
    }
    for (int k = 0; k < 300; k++) {
        KripkeModel m = oracle::random_model(rng, 8, labels);
        Proposition p = oracle::random_formula(rng, atoms, {.max_depth = 6});
        Proposition mono = oracle::random_formula(rng, atoms, {.max_depth = 6, .allow_possibly = false});
        auto fp = forcing_set(m, p);
        auto fnp = forcing_set(m, lnot(p));
        auto fnnp = forcing_set(m, lnot(lnot(mono)));
        auto fmono = forcing_set(m, mono);
        auto lem = forcing_set(m, lor(p, lnot(p)));
        auto seriality = forcing_set(m, limplies(necessarily(p), possibly(p)));
        auto reflexivity = forcing_set(m, limplies(necessarily(p), p));
        for (World w = 0; w < m.size(); w++) {
            ASSERT_FALSE(fp[w] && fnp[w]);
            if (fmono[w]) {
                ASSERT_TRUE(fnnp[w]) << print(mono);
            }
            ASSERT_TRUE(seriality[w]);
            ASSERT_TRUE(reflexivity[w]);
            if (m.is_maximal(w)) {
                ASSERT_TRUE(lem[w]);
            }
            for (World v : m.successors(w)) {
                if (fmono[w]) {
                    ASSERT_TRUE(fmono[v]) << print(mono);
                }
            }
        }
    }
}

TEST(forcing_set, possibly_is_not_monotone) {
    KripkeModel m = measurement_frame(SampleSpace::numbered(2));
    ASSERT_TRUE(forces(m, m.root(), possibly(a1)));
    ASSERT_FALSE(forces(m, leaf_world(1), possibly(a1)));
    // Which also breaks p -> ~~p once p contains <>.
    ASSERT_TRUE(forces(m, leaf_world(1), lnot(possibly(a1))));
    ASSERT_FALSE(forces(m, m.root(), lnot(lnot(possibly(a1)))));
}

TEST(forcing_set, double_negation_elimination_fails_at_root) {
    for (size_t n = 2; n <= 6; n++) {
        SampleSpace space = SampleSpace::numbered(n);
        KripkeModel m = measurement_frame(space);
        Proposition any = Proposition::atom(space[0]);
        for (size_t k = 1; k < n; k++) {
            any = lor(any, Proposition::atom(space[k]));
        }
        ASSERT_TRUE(forces(m, m.root(), lnot(lnot(any))));
        ASSERT_FALSE(forces(m, m.root(), any));
    }
}
