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

#include "cirquent/cirquent.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "cirquent/inference.hpp"
#include "cirquent/render.hpp"
#include "support.hpp"

namespace cirquent {
namespace {

using testing::N;
using testing::P;

// The running example: pool ⟨F,G,H,F⟩, structure ⟨{1},{2,3},{3,4}⟩.
Cirquent running_example() {
  return make_cirquent({P("F"), P("G"), P("H"), P("F")}, {{1}, {2, 3}, {3, 4}});
}

TEST(Make, RunningExampleAndBounds) {
  Cirquent c = running_example();
  EXPECT_EQ(c.pool_size(), 4u);
  EXPECT_EQ(c.group(3), (Group{3, 4}));
  EXPECT_EQ(make_cirquent({}, {}), Cirquent());
  EXPECT_THROW(make_cirquent({P("F")}, {{2}}), IndexError);
  EXPECT_THROW(make_cirquent({P("F")}, {{0}}), IndexError);
  // Groups are sets.
  EXPECT_EQ(make_cirquent({P("F"), P("G")}, {{2, 1, 2}}).group(1), (Group{1, 2}));
}

TEST(Embed, Singleton) {
  Formula f = parse_formula("!F | (F & F)");
  Cirquent c = embed_formula(f);
  EXPECT_EQ(c, make_cirquent({f}, {{1}}));
  EXPECT_EQ(c.formula(1), f);
  EXPECT_EQ(embed_formula(P("P")), make_cirquent({P("P")}, {{1}}));
}

TEST(MergeOgroups, Examples) {
  EXPECT_EQ(merge_ogroups(running_example(), 2),
            make_cirquent({P("F"), P("G"), P("H"), P("F")}, {{1}, {2, 3, 4}}));
  EXPECT_EQ(merge_ogroups(make_cirquent({P("F")}, {{1}, {1}}), 1),
            make_cirquent({P("F")}, {{1}}));
  EXPECT_EQ(merge_ogroups(make_cirquent({}, {{}, {}}), 1), make_cirquent({}, {{}}));
  EXPECT_THROW(merge_ogroups(running_example(), 3), IndexError);
  EXPECT_THROW(merge_ogroups(running_example(), 0), IndexError);
}

TEST(MergeOformulas, Examples) {
  EXPECT_EQ(merge_oformulas(running_example(), 1, P("H")),
            make_cirquent({P("H"), P("H"), P("F")}, {{1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(merge_oformulas(make_cirquent({P("A"), P("B"), P("C")}, {{3}}), 1, P("D")),
            make_cirquent({P("D"), P("C")}, {{2}}));
  EXPECT_THROW(merge_oformulas(running_example(), 4, P("H")), IndexError);
}

TEST(MergeOformulas, ReindexingMatchesOracle) {
  // Pool of length 5, merge at 2: indices 2,3 map to 2 and indices above 3
  // decrement by one.
  std::vector<Formula> pool{P("A"), P("B"), P("C"), P("D"), P("E")};
  Cirquent c = make_cirquent(pool, {{1, 5}, {3}, {2, 4}, {4, 5}});
  Cirquent m = merge_oformulas(c, 2, P("X"));
  auto oracle = [](std::size_t k) -> std::size_t { return k <= 2 ? k : k - 1; };
  ASSERT_EQ(m.group_count(), c.group_count());
  for (std::size_t g = 1; g <= c.group_count(); ++g) {
    Group expected;
    for (std::size_t k : c.group(g)) expected.push_back(oracle(k));
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    EXPECT_EQ(m.group(g), expected);
  }
}

TEST(Primitive, Examples) {
  EXPECT_TRUE(is_primitive(make_cirquent({P("A"), P("B"), P("C"), P("D")}, {{1, 2}, {3, 4}})));
  EXPECT_FALSE(is_primitive(running_example()));
  EXPECT_TRUE(is_primitive(Cirquent()));
}

TEST(Sequents, RoundTrips) {
  Sequent s({N("F"), P("F")});
  EXPECT_EQ(sequent_to_cirquent(s), make_cirquent({N("F"), P("F")}, {{1, 2}}));
  EXPECT_EQ(cirquent_group_to_sequent(sequent_to_cirquent(s), 1), s);
  Cirquent c = make_cirquent({P("E"), P("F"), P("G")}, {{1, 3}, {2}});
  EXPECT_EQ(cirquent_group_to_sequent(c, 1), Sequent({P("E"), P("G")}));
  EXPECT_THROW(cirquent_group_to_sequent(running_example(), 1), Error);
  EXPECT_THROW(Sequent({}), Error);
}

TEST(Text, RoundTrip) {
  Cirquent c = running_example();
  EXPECT_EQ(to_string(c), "[ F ; G ; H ; F ] {1} {2 3} {3 4}");
  EXPECT_EQ(parse_cirquent(to_string(c)), c);
  EXPECT_EQ(to_string(Cirquent()), "[]");
  EXPECT_EQ(parse_cirquent("[]"), Cirquent());
  EXPECT_EQ(parse_cirquent("  [ ] {} "), make_cirquent({}, {{}}));
  EXPECT_EQ(parse_cirquent("[!P;P]{2 1}"), make_cirquent({N("P"), P("P")}, {{1, 2}}));
  EXPECT_THROW(parse_cirquent("[ P ] {2}"), ParseError);
  EXPECT_THROW(parse_cirquent("[ P ; ] {1}"), ParseError);
  EXPECT_THROW(parse_cirquent("P {1}"), ParseError);
  EXPECT_EQ(to_string(parse_sequent("!P , P & Q")), "!P , P & Q");
}

TEST(Render, AsciiRunningExample) {
  const std::string art = render(running_example(), RenderFormat::ascii);
  std::istringstream in(art);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  ASSERT_GE(lines.size(), 4u);
  EXPECT_EQ(lines[0].find_first_not_of('-'), std::string::npos);
  EXPECT_EQ(lines[1], "F   G   H   F");
  EXPECT_EQ(std::count(lines.back().begin(), lines.back().end(), '*'), 3);
  // Deterministic.
  EXPECT_EQ(art, render(running_example(), RenderFormat::ascii));
}

TEST(Render, AsciiEmptyCirquent) { EXPECT_EQ(render(Cirquent(), RenderFormat::ascii), "----\n"); }

TEST(Render, DotCounts) {
  testing::Rng rng(5);
  testing::FormulaShape shape;
  shape.atoms = testing::general_atoms(3);
  for (int trial = 0; trial < 200; ++trial) {
    Cirquent c = testing::random_cirquent(rng, shape, 5, 4, 3);
    const std::string dot = render(c, RenderFormat::dot);
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::istringstream in(dot);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "digraph cirquent {");
    while (std::getline(in, line)) {
      if (line.find("->") != std::string::npos) {
        ++edges;
      } else if (line.find('[') != std::string::npos) {
        ++nodes;
      }
    }
    std::size_t arcs = 0;
    for (const Group& g : c.structure()) arcs += g.size();
    EXPECT_EQ(nodes, c.pool_size() + c.group_count());
    EXPECT_EQ(edges, arcs);
    EXPECT_EQ(dot.back(), '\n');
    EXPECT_EQ(dot.substr(dot.size() - 2), "}\n");
  }
}

TEST(Properties, MergesPreserveBounds) {
  testing::Rng rng(6);
  testing::FormulaShape shape;
  shape.atoms = testing::general_atoms(2);
  for (int trial = 0; trial < 500; ++trial) {
    Cirquent c = testing::random_cirquent(rng, shape, 5, 4, 2);
    if (c.group_count() >= 2) {
      Cirquent m = merge_ogroups(c, testing::uniform(rng, 1, c.group_count() - 1));
      EXPECT_NO_THROW(Cirquent(m.pool(), m.structure()));
    }
    if (c.pool_size() >= 2) {
      Cirquent m = merge_oformulas(c, testing::uniform(rng, 1, c.pool_size() - 1), P("Z"));
      EXPECT_NO_THROW(Cirquent(m.pool(), m.structure()));
    }
  }
}

TEST(Properties, SequentsArePrimitiveAndPrimitiveCirquentsAreMixedSequents) {
  testing::Rng rng(7);
  testing::FormulaShape shape;
  shape.atoms = testing::general_atoms(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = testing::uniform(rng, 1, 5);
    std::vector<Formula> fs;
    for (std::size_t k = 0; k < n; ++k) fs.push_back(testing::random_formula(rng, shape, 2));
    EXPECT_TRUE(is_primitive(sequent_to_cirquent(Sequent(fs))));

    // A primitive cirquent without empty or homeless parts, regrouped as the
    // mix of its groups' sequents, equals the original up to oformula order.
    std::vector<std::size_t> owner(n);
    const std::size_t m = testing::uniform(rng, 1, n);
    for (std::size_t k = 0; k < n; ++k) owner[k] = k < m ? k : testing::uniform(rng, 0, m - 1);
    std::vector<Group> s(m);
    for (std::size_t k = 0; k < n; ++k) s[owner[k]].push_back(k + 1);
    Cirquent c(fs, s);
    Cirquent mixed;
    for (std::size_t g = 1; g <= m; ++g) {
      mixed = apply(RuleApp::mix(), mixed, sequent_to_cirquent(cirquent_group_to_sequent(c, g)));
    }
    std::vector<std::string> a;
    std::vector<std::string> b;
    for (std::size_t g = 1; g <= m; ++g) {
      std::string ga;
      for (std::size_t k : c.group(g)) ga += to_string(c.formula(k)) + ";";
      a.push_back(ga);
      std::string gb;
      for (std::size_t k : mixed.group(g)) gb += to_string(mixed.formula(k)) + ";";
      b.push_back(gb);
    }
    EXPECT_EQ(a, b);
    EXPECT_EQ(mixed.pool_size(), c.pool_size());
  }
}

}  // namespace
}  // namespace cirquent
