/* Copyright 2026 The Cirquent Kernel Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "cirquent/semantics.hpp"

#include <gtest/gtest.h>

#include "support.hpp"

namespace cirquent {
namespace {

using testing::N;
using testing::P;

const char* kOneAtomBlass = "((!P | !P) & (!P | !P)) | ((P | P) & (P | P))";

TEST(EvalModel, EdgeCases) {
  Model m{{Atom::general("P"), false}};
  EXPECT_TRUE(eval_model(Cirquent(), m));
  EXPECT_FALSE(eval_model(make_cirquent({}, {{}}), m));
  EXPECT_FALSE(eval_model(make_cirquent({P("P")}, {{}}), Model{{Atom::general("P"), true}}));
  for (bool v : {false, true}) {
    EXPECT_TRUE(eval_model(make_cirquent({N("P"), P("P")}, {{1, 2}}),
                           Model{{Atom::general("P"), v}}));
  }
  EXPECT_THROW(eval_model(P("Q"), m), Error);
  EXPECT_TRUE(eval_model(parse_formula("$T | P"), m));
  EXPECT_FALSE(eval_model(parse_formula("$F & P"), m));
}

TEST(EvalSituation, OccurrenceLevelTruth) {
  EXPECT_TRUE(eval_situation(parse_formula("P & !P"), situation_from_string("10")));
  EXPECT_FALSE(eval_situation(parse_formula("!P | P"), situation_from_string("10")));
  EXPECT_TRUE(eval_situation(parse_formula("!P | P"), situation_from_string("00")));
  EXPECT_THROW(eval_situation(parse_formula("!P | P"), situation_from_string("1")), Error);
  EXPECT_EQ(situation_length(parse_formula("P | $T | !Q")), 2u);
  EXPECT_EQ(situation_to_string(situation_from_string("0110")), "0110");
}

TEST(Tautology, Examples) {
  EXPECT_TRUE(is_tautology(parse_formula(kOneAtomBlass)));
  EXPECT_TRUE(is_tautology(parse_formula("!P | (P & P)")));
  EXPECT_FALSE(is_tautology(parse_formula("!P | (P & Q)")));
  EXPECT_TRUE(is_tautology(Cirquent()));
  EXPECT_FALSE(is_tautology(make_cirquent({}, {{}})));
  EXPECT_TRUE(is_tautology(parse_formula("$T")));
  EXPECT_FALSE(is_tautology(parse_formula("$F | $F")));
  EXPECT_TRUE(is_tautology(parse_formula("!p | p")));
}

TEST(Tautology, AtomCap) {
  std::string text = "A0";
  for (int k = 1; k <= 20; ++k) text += " | A" + std::to_string(k);
  EXPECT_THROW(is_tautology(parse_formula(text)), CapExceeded);
  Limits wide;
  wide.max_atoms = 21;
  EXPECT_FALSE(is_tautology(parse_formula(text), wide));
  // Large tables beyond one machine word agree with the oracle.
  std::string taut = "!A0 | A0";
  for (int k = 1; k <= 9; ++k) taut += " | (A" + std::to_string(k) + " & !A" + std::to_string(k) + ")";
  EXPECT_TRUE(is_tautology(parse_formula(taut)));
  EXPECT_FALSE(is_tautology(parse_formula("(" + taut + ") & A3")));
}

TEST(Binarity, Examples) {
  Cirquent fig3 = make_cirquent(
      {N("P"), parse_formula("(Q & R) | P"), parse_formula("!Q | !R")}, {{1, 2}, {2, 3}});
  EXPECT_EQ(binarity(fig3), Binarity::normal_binary);
  EXPECT_TRUE(is_tautology(fig3));
  EXPECT_EQ(binarity(parse_formula("!P | (P & P)")), Binarity::not_binary);
  EXPECT_EQ(binarity(parse_formula("!P | !P")), Binarity::binary);
  EXPECT_EQ(binarity(parse_formula("$T | $T | $T | P")), Binarity::normal_binary);
  EXPECT_EQ(std::string(to_string(Binarity::binary)), "binary");
}

TEST(NormalizeBinary, Examples) {
  auto [c, sigma] = normalize_binary(parse_formula("!P | !P"));
  EXPECT_EQ(c, parse_formula("!P | !_g1", ParseOptions{true}));
  EXPECT_EQ(sigma.image(Atom::general("_g1")), P("P"));
  EXPECT_EQ(substitute(sigma, c), parse_formula("!P | !P"));

  Formula normal = parse_formula("!P | (P & Q)");
  auto [same, id] = normalize_binary(normal);
  EXPECT_EQ(same, normal);
  EXPECT_TRUE(id.empty());

  Formula b = parse_formula("(P & P) | X");
  auto [d, tau] = normalize_binary(b);
  EXPECT_EQ(d, parse_formula("(P & _g1) | X", ParseOptions{true}));
  EXPECT_EQ(is_tautology(d), is_tautology(b));
  EXPECT_THROW(normalize_binary(parse_formula("P | P | P")), Error);
}

TEST(FreshAtoms, SkipsTakenNames) {
  Cirquent c = parse_cirquent("[ _g1 | _g3 ] {1}", ParseOptions{true});
  FreshAtoms fresh = FreshAtoms::general_for(c);
  EXPECT_EQ(fresh.next().name, "_g2");
  EXPECT_EQ(fresh.next().name, "_g4");
  EXPECT_EQ(FreshAtoms::elementary_for(c).next(), Atom::elementary("_e1"));
}

// Property suites.

TEST(Properties, TautologyAgreesWithOracle) {
  testing::Rng rng(31);
  testing::FormulaShape shape;
  shape.atoms = testing::general_atoms(4);
  shape.atoms.push_back(Atom::elementary("p"));
  shape.atoms.push_back(Atom::top());
  for (int trial = 0; trial < 3000; ++trial) {
    Cirquent c = testing::random_cirquent(rng, shape, 4, 3, 4);
    EXPECT_EQ(is_tautology(c), testing::naive_tautology(c)) << to_string(c);
    bool all_groups = true;
    for (const Group& g : c.structure()) {
      all_groups = all_groups && is_tautology(Cirquent(c.pool(), {g}));
    }
    EXPECT_EQ(is_tautology(c), all_groups);
  }
}

TEST(Properties, ModelsAreSituations) {
  testing::Rng rng(32);
  testing::FormulaShape shape;
  shape.atoms = testing::general_atoms(3);
  for (int trial = 0; trial < 2000; ++trial) {
    Cirquent c = testing::random_cirquent(rng, shape, 4, 3, 4);
    Model m;
    for (const Atom& a : shape.atoms) m[a] = testing::coin(rng);
    OSituation s;
    for (const Formula& f : c.pool()) {
      for (const OLiteral& ol : oliterals(f)) s.push_back(m.at(ol.atom));
    }
    EXPECT_EQ(eval_situation(c, s), eval_model(c, m));
    EXPECT_EQ(eval_model(c, m), testing::naive_eval(c, [&](const Atom& a) { return m.at(a); }));
  }
}

TEST(Properties, NormalizationOfBinaryTautologies) {
  // All pools of at most three formulas with at most two oliterals over three
  // atoms, with one or two nonempty groups. Pools are enumerated up to
  // permutation, which the group enumeration makes redundant.
  std::vector<Formula> literals;
  for (const Atom& a : testing::general_atoms(3)) {
    literals.push_back(Formula::literal(a));
    literals.push_back(Formula::literal(a, true));
  }
  std::vector<Formula> small;
  for (std::size_t leaves : {1, 2}) {
    testing::for_each_formula(literals, leaves, [&](const Formula& f) { small.push_back(f); });
  }
  std::size_t checked = 0;
  std::vector<Formula> pool;
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    const Cirquent bare(pool, {});
    if (binarity(bare) != Binarity::not_binary && !pool.empty()) {
      const std::size_t n = pool.size();
      const std::size_t subsets = (std::size_t{1} << n) - 1;
      for (std::size_t a = 1; a <= subsets; ++a) {
        for (std::size_t b = a; b <= subsets; ++b) {
          std::vector<Group> s;
          for (std::size_t mask : {a, b}) {
            if (mask == a && !s.empty()) continue;
            Group g;
            for (std::size_t k = 0; k < n; ++k) {
              if ((mask >> k) & 1) g.push_back(k + 1);
            }
            s.push_back(g);
          }
          Cirquent c(pool, s);
          auto [d, sigma] = normalize_binary(c);
          ASSERT_EQ(binarity(d), Binarity::normal_binary);
          ASSERT_EQ(substitute(sigma, d), c);
          ASSERT_TRUE(sigma.is_atomic_level());
          if (testing::naive_tautology(c)) {
            ASSERT_TRUE(testing::naive_tautology(d)) << to_string(c);
          }
          ++checked;
        }
      }
    }
    if (pool.size() == 3) return;
    for (std::size_t k = from; k < small.size(); ++k) {
      pool.push_back(small[k]);
      extend(k);
      pool.pop_back();
    }
  };
  extend(0);
  EXPECT_GT(checked, 10000u);
}

}  // namespace
}  // namespace cirquent
