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

// Random generators and independent oracles shared by the test binaries.

#ifndef CIRQUENT_TESTS_SUPPORT_HPP_
#define CIRQUENT_TESTS_SUPPORT_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cirquent/cirquent.hpp"
#include "cirquent/formula.hpp"
#include "cirquent/inference.hpp"
#include "cirquent/resource.hpp"

namespace cirquent::testing {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng) { return uniform(rng, 0, 1) == 1; }

inline Formula P(const std::string& name) { return Formula::literal(Atom::general(name)); }
inline Formula N(const std::string& name) { return Formula::literal(Atom::general(name), true); }
inline Formula p(const std::string& name) { return Formula::literal(Atom::elementary(name)); }

inline std::vector<Atom> general_atoms(std::size_t n) {
  static const char* kNames[] = {"P", "Q", "R", "S", "T", "U", "V", "W", "X", "Y"};
  std::vector<Atom> out;
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(Atom::general(k < 10 ? kNames[k] : "A" + std::to_string(k)));
  }
  return out;
}

struct FormulaShape {
  std::vector<Atom> atoms;
  std::vector<Kind> connectives{Kind::conj, Kind::disj};
};

// Random formula with exactly `leaves` oliterals.
inline Formula random_formula(Rng& rng, const FormulaShape& shape, std::size_t leaves) {
  if (leaves <= 1) {
    const Atom& a = shape.atoms[uniform(rng, 0, shape.atoms.size() - 1)];
    return Formula::literal(a, coin(rng));
  }
  const std::size_t left = uniform(rng, 1, leaves - 1);
  const Kind k = shape.connectives[uniform(rng, 0, shape.connectives.size() - 1)];
  return Formula::make(k, random_formula(rng, shape, left),
                       random_formula(rng, shape, leaves - left));
}

inline Cirquent random_cirquent(Rng& rng, const FormulaShape& shape, std::size_t max_pool,
                                std::size_t max_groups, std::size_t max_leaves) {
  const std::size_t n = uniform(rng, 0, max_pool);
  std::vector<Formula> pool;
  for (std::size_t i = 0; i < n; ++i) {
    pool.push_back(random_formula(rng, shape, uniform(rng, 1, max_leaves)));
  }
  const std::size_t m = uniform(rng, 0, max_groups);
  std::vector<Group> structure;
  for (std::size_t g = 0; g < m; ++g) {
    Group grp;
    for (std::size_t i = 1; i <= n; ++i) {
      if (uniform(rng, 0, 2) == 0) grp.push_back(i);
    }
    structure.push_back(grp);
  }
  return Cirquent(std::move(pool), std::move(structure));
}

// Every choice-free formula built from the given literals with exactly
// `leaves` oliterals, each shape and leaf assignment once.
inline void for_each_formula(const std::vector<Formula>& literals, std::size_t leaves,
                             const std::function<void(const Formula&)>& fn) {
  if (leaves == 1) {
    for (const Formula& l : literals) fn(l);
    return;
  }
  for (std::size_t left = 1; left < leaves; ++left) {
    for_each_formula(literals, left, [&](const Formula& a) {
      for_each_formula(literals, leaves - left, [&](const Formula& b) {
        fn(Formula::conj(a, b));
        fn(Formula::disj(a, b));
      });
    });
  }
}

// Independent truth evaluation by direct recursion over an assignment
// function; shares no code with the bit-parallel tables.
inline bool naive_eval(const Formula& f, const std::function<bool(const Atom&)>& value) {
  if (f.is_literal()) {
    if (f.atom().sort == AtomSort::top) return true;
    if (f.atom().sort == AtomSort::bottom) return false;
    return value(f.atom()) != f.negative();
  }
  const bool l = naive_eval(f.left(), value);
  const bool r = naive_eval(f.right(), value);
  return f.kind() == Kind::conj ? (l && r) : (l || r);
}

inline bool naive_eval(const Cirquent& c, const std::function<bool(const Atom&)>& value) {
  for (const Group& g : c.structure()) {
    bool any = false;
    for (std::size_t k : g) any = any || naive_eval(c.pool()[k - 1], value);
    if (!any) return false;
  }
  return true;
}

inline bool naive_tautology(const Cirquent& c) {
  std::vector<Atom> atoms;
  for (const Formula& f : c.pool()) {
    for_each_literal(f, [&](const Formula& lit) {
      if (lit.atom().is_logical()) return;
      for (const Atom& a : atoms) {
        if (a == lit.atom()) return;
      }
      atoms.push_back(lit.atom());
    });
  }
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << atoms.size()); ++m) {
    auto value = [&](const Atom& a) {
      for (std::size_t k = 0; k < atoms.size(); ++k) {
        if (atoms[k] == a) return ((m >> k) & 1) != 0;
      }
      return false;
    };
    if (!naive_eval(c, value)) return false;
  }
  return true;
}

// A valid rule application: the rule, its premises and its conclusion.
struct Application {
  RuleApp rule;
  std::vector<Cirquent> premises;
  Cirquent conclusion;
  bool conservative = false;
};

// Random valid application, drawn either forward (random premises and
// parameters until one applies) or backward (a random element of
// backward_premises for a random conclusion and family).
inline Application random_application(Rng& rng, const FormulaShape& shape) {
  static const RuleFamily kFamilies[] = {
      RuleFamily::axiom,       RuleFamily::mix,         RuleFamily::exchange,
      RuleFamily::weakening,   RuleFamily::duplication, RuleFamily::contraction,
      RuleFamily::disj_intro,  RuleFamily::conj_intro};
  for (;;) {
    if (coin(rng)) {
      Cirquent c = random_cirquent(rng, shape, 4, 4, 3);
      const RuleFamily fam = kFamilies[uniform(rng, 0, 7)];
      BackwardOptions opts;
      opts.max_results = 64;
      auto infs = backward_premises(c, fam, System::ccc(), opts);
      if (infs.empty()) continue;
      Inference& inf = infs[uniform(rng, 0, infs.size() - 1)];
      return {inf.rule, inf.premises, c, inf.conservative};
    }
    Cirquent a = random_cirquent(rng, shape, 4, 4, 3);
    const std::size_t n = a.pool_size();
    const std::size_t m = a.group_count();
    RuleApp r;
    std::vector<Cirquent> premises{a};
    switch (uniform(rng, 0, 9)) {
      case 0: r = RuleApp::axiom_id(random_formula(rng, shape, uniform(rng, 1, 3))); premises.clear(); break;
      case 1: r = RuleApp::mix(); premises.push_back(random_cirquent(rng, shape, 3, 3, 3)); break;
      case 2: r = RuleApp::exch_f(uniform(rng, 1, n + 1)); break;
      case 3: r = RuleApp::exch_g(uniform(rng, 1, m + 1)); break;
      case 4: r = RuleApp::weak_pool(uniform(rng, 1, n + 1), random_formula(rng, shape, 2)); break;
      case 5: r = RuleApp::weak_group(uniform(rng, 1, m + 1), uniform(rng, 1, n + 1)); break;
      case 6: r = RuleApp::dup_down(uniform(rng, 1, m + 1)); break;
      case 7: r = RuleApp::dup_up(uniform(rng, 1, m + 1)); break;
      case 8: r = RuleApp::disj_intro(uniform(rng, 1, n + 1)); break;
      default: r = RuleApp::conj_intro(uniform(rng, 1, n + 1)); break;
    }
    try {
      Cirquent c = apply_rule(r, premises);
      return {r, premises, c, false};
    } catch (const Error&) {
    }
  }
}

// Random model over `atoms`.
inline std::function<bool(const Atom&)> random_model(Rng& rng, const std::vector<Atom>& atoms) {
  std::vector<std::pair<Atom, bool>> values;
  for (const Atom& a : atoms) values.emplace_back(a, coin(rng));
  return [values](const Atom& a) {
    for (const auto& [b, v] : values) {
      if (a == b) return v;
    }
    return false;
  };
}

// Random monotone resource: the ≤-upward closure of random seed situations.
inline Resource random_resource(Rng& rng, std::size_t ports, std::size_t types = 2) {
  const std::vector<Atom> atoms = general_atoms(types);
  Interface iface;
  for (std::size_t i = 0; i < ports; ++i) {
    iface.push_back({atoms[uniform(rng, 0, types - 1)], coin(rng) ? Gender::input : Gender::output});
  }
  const auto n = static_cast<unsigned>(ports);
  BitTable t(n, false);
  const std::size_t seeds = uniform(rng, 0, 3);
  for (std::size_t k = 0; k < seeds; ++k) t.set(uniform(rng, 0, t.rows() - 1), true);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t r = 0; r < t.rows(); ++r) {
      if (!t.get(r)) continue;
      for (std::size_t i = 0; i < ports; ++i) {
        const std::size_t bit = std::size_t{1} << (ports - 1 - i);
        const bool set = (r & bit) != 0;
        if (iface[i].is_input() == set && !t.get(r ^ bit)) {
          t.set(r ^ bit, true);
          changed = true;
        }
      }
    }
  }
  return Resource(std::move(iface), std::move(t));
}

}  // namespace cirquent::testing

#endif  // CIRQUENT_TESTS_SUPPORT_HPP_
