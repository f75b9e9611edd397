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

// The CL2 system: elementarization, stability, Rules (a), (b), (c) and a
// terminating backward prover.

#ifndef CIRQUENT_CL2_HPP_
#define CIRQUENT_CL2_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cirquent/cirquent.hpp"
#include "cirquent/error.hpp"
#include "cirquent/formula.hpp"
#include "cirquent/proof_io.hpp"
#include "cirquent/semantics.hpp"

namespace cirquent {

// Replaces surface general atoms by ⊥ when positive and ⊤ when negative
// (so every surface general literal becomes $F), surface ⊔-subformulas by
// $F and surface ⊓-subformulas by $T.
inline Formula elementarize(const Formula& f) {
  switch (f.kind()) {
    case Kind::literal:
      if (!f.atom().is_general()) return f;
      return f.negative() ? Formula::literal(Atom::top(), true) : Formula::literal(Atom::bottom());
    case Kind::ch_disj: return Formula::literal(Atom::bottom());
    case Kind::ch_conj: return Formula::literal(Atom::top());
    default: return Formula::make(f.kind(), elementarize(f.left()), elementarize(f.right()));
  }
}

inline bool is_stable(const Formula& f, const Limits& limits = {}) {
  return is_tautology(elementarize(f), limits);
}

// Paths of surface occurrences satisfying `pred`, in preorder.
template <typename Pred>
std::vector<OccRef> surface_occurrences(const Formula& f, Pred pred) {
  std::vector<OccRef> out;
  OccRef path;
  auto walk = [&](auto& self, const Formula& g) -> void {
    if (pred(g)) out.push_back(path);
    if (g.is_literal() || g.is_choice()) return;
    path.push_back(Step::left);
    self(self, g.left());
    path.back() = Step::right;
    self(self, g.right());
    path.pop_back();
  };
  walk(walk, f);
  return out;
}

inline std::size_t choice_count(const Formula& f) {
  if (f.is_literal()) return 0;
  return (f.is_choice() ? 1 : 0) + choice_count(f.left()) + choice_count(f.right());
}

inline std::size_t general_occurrences(const Formula& f) {
  std::size_t n = 0;
  for_each_literal(f, [&](const Formula& lit) { n += lit.atom().is_general() ? 1 : 0; });
  return n;
}

// Strictly decreases along every backward step.
inline std::size_t cl2_measure(const Formula& f) { return choice_count(f) + general_occurrences(f); }

enum class Cl2Tag : std::uint8_t { a, b, c };

struct Cl2Rule {
  Cl2Tag tag = Cl2Tag::a;
  OccRef path;    // (b): the ⊔-occurrence; (c): the negative occurrence
  int choice = 0; // (b): 1 or 2
  OccRef path2;   // (c): the positive occurrence
  std::optional<Atom> fresh;

  friend bool operator==(const Cl2Rule&, const Cl2Rule&) = default;
};

inline std::string to_string(const Cl2Rule& r) {
  switch (r.tag) {
    case Cl2Tag::a: return "RULE_A";
    case Cl2Tag::b: return "RULE_B " + path_to_string(r.path) + " " + std::to_string(r.choice);
    case Cl2Tag::c:
      return "RULE_C " + path_to_string(r.path) + " " + path_to_string(r.path2) + " " +
             r.fresh->name;
  }
  return "?";
}

struct Cl2Inference {
  Cl2Rule rule;
  std::vector<Formula> premises;
};

namespace detail {

inline std::set<std::string> atom_names(const Formula& f) {
  std::set<std::string> names;
  for_each_literal(f, [&](const Formula& lit) { names.insert(lit.atom().name); });
  return names;
}

inline bool is_surface(const Formula& f, const OccRef& path) {
  const Formula* cur = &f;
  for (Step s : path) {
    if (cur->is_literal() || cur->is_choice()) return false;
    cur = s == Step::left ? &cur->left() : &cur->right();
  }
  return true;
}

inline std::vector<Formula> rule_a_premises(const Formula& f) {
  std::vector<Formula> out;
  for (const OccRef& p :
       surface_occurrences(f, [](const Formula& g) { return g.kind() == Kind::ch_conj; })) {
    const Formula& g = subformula_at(f, p);
    for (const Formula* side : {&g.left(), &g.right()}) {
      Formula h = replace_at(f, p, *side);
      if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(std::move(h));
    }
  }
  return out;
}

}  // namespace detail

// Premises of `r` with conclusion `f`; throws RuleError if `r` does not apply.
inline std::vector<Formula> cl2_premises(const Formula& f, const Cl2Rule& r,
                                         const Limits& limits = {}) {
  switch (r.tag) {
    case Cl2Tag::a:
      if (!is_stable(f, limits)) throw RuleError("RULE_A: the conclusion is not stable");
      return detail::rule_a_premises(f);
    case Cl2Tag::b: {
      if (!detail::is_surface(f, r.path)) throw RuleError("RULE_B: not a surface occurrence");
      const Formula& g = subformula_at(f, r.path);
      if (g.kind() != Kind::ch_disj) throw RuleError("RULE_B: not a choice disjunction");
      if (r.choice != 1 && r.choice != 2) throw RuleError("RULE_B: choice must be 1 or 2");
      return {replace_at(f, r.path, r.choice == 1 ? g.left() : g.right())};
    }
    case Cl2Tag::c: {
      if (!detail::is_surface(f, r.path) || !detail::is_surface(f, r.path2)) {
        throw RuleError("RULE_C: not a surface occurrence");
      }
      const Formula& n = subformula_at(f, r.path);
      const Formula& p = subformula_at(f, r.path2);
      if (!n.is_literal() || !p.is_literal() || !n.atom().is_general() || !(n.atom() == p.atom()) ||
          !n.negative() || p.negative()) {
        throw RuleError("RULE_C: needs a negative and a positive occurrence of one general atom");
      }
      if (!r.fresh || r.fresh->sort != AtomSort::elementary) {
        throw RuleError("RULE_C: the new atom must be nonlogical elementary");
      }
      if (detail::atom_names(f).count(r.fresh->name) != 0) {
        throw RuleError("RULE_C: atom " + r.fresh->name + " occurs in the conclusion");
      }
      Formula h = replace_at(f, r.path, Formula::literal(*r.fresh, true));
      return {replace_at(h, r.path2, Formula::literal(*r.fresh))};
    }
  }
  throw RuleError("unknown CL2 rule");
}

// Every inference with conclusion `f`: (a) if stable, then all (b) choices,
// then all (c) pairings (negative occurrence first) with one fresh atom.
inline std::vector<Cl2Inference> backward_cl2(const Formula& f, const Limits& limits = {}) {
  std::vector<Cl2Inference> out;
  if (is_stable(f, limits)) out.push_back({Cl2Rule{}, detail::rule_a_premises(f)});
  for (const OccRef& p :
       surface_occurrences(f, [](const Formula& g) { return g.kind() == Kind::ch_disj; })) {
    for (int i : {1, 2}) {
      Cl2Rule r{Cl2Tag::b, p, i, {}, std::nullopt};
      out.push_back({r, cl2_premises(f, r, limits)});
    }
  }
  const std::vector<OccRef> lits = surface_occurrences(
      f, [](const Formula& g) { return g.is_literal() && g.atom().is_general(); });
  if (!lits.empty()) {
    const Atom fresh = FreshAtoms::elementary_for(embed_formula(f)).next();
    for (const OccRef& n : lits) {
      const Formula& nl = subformula_at(f, n);
      if (!nl.negative()) continue;
      for (const OccRef& p : lits) {
        const Formula& pl = subformula_at(f, p);
        if (pl.negative() || !(pl.atom() == nl.atom())) continue;
        Cl2Rule r{Cl2Tag::c, n, 0, p, fresh};
        out.push_back({r, cl2_premises(f, r, limits)});
      }
    }
  }
  return out;
}

struct Cl2Derivation {
  Formula conclusion;
  Cl2Rule rule;
  std::vector<Cl2Derivation> premises;
};

inline std::size_t derivation_size(const Cl2Derivation& d) {
  std::size_t n = 1;
  for (const Cl2Derivation& p : d.premises) n += derivation_size(p);
  return n;
}

// Violations of a derivation: each node's premises must be exactly those its
// rule yields from its conclusion.
inline std::vector<Violation> check_cl2_derivation(const Cl2Derivation& d,
                                                   const Limits& limits = {}) {
  std::vector<Violation> out;
  std::vector<std::size_t> path;
  auto rec = [&](auto& self, const Cl2Derivation& q) -> void {
    try {
      std::vector<Formula> want = cl2_premises(q.conclusion, q.rule, limits);
      std::vector<Formula> got;
      for (const Cl2Derivation& p : q.premises) got.push_back(p.conclusion);
      if (want != got) out.push_back({path, to_string(q.rule) + ": premises do not match"});
    } catch (const Error& e) {
      out.push_back({path, e.what()});
    }
    for (std::size_t k = 0; k < q.premises.size(); ++k) {
      path.push_back(k);
      self(self, q.premises[k]);
      path.pop_back();
    }
  };
  rec(rec, d);
  return out;
}

namespace detail {

class Cl2Search {
 public:
  explicit Cl2Search(const Limits& limits) : limits_(limits) {}

  std::optional<Cl2Derivation> prove(const Formula& f) {
    auto it = memo_.find(f);
    if (it != memo_.end()) return it->second;
    std::optional<Cl2Derivation> result = search(f);
    memo_.emplace(f, result);
    return result;
  }

 private:
  std::optional<Cl2Derivation> search(const Formula& f) {
    // Sound prune: a provable choice-free formula is a classical tautology,
    // since (a) and (c) both preserve classical validity downward.
    if (choice_count(f) == 0 && !is_tautology(f, limits_)) return std::nullopt;
    for (Cl2Inference& inf : backward_cl2(f, limits_)) {
      std::vector<Cl2Derivation> subs;
      bool ok = true;
      for (const Formula& h : inf.premises) {
        if (cl2_measure(h) >= cl2_measure(f)) throw Error("internal: CL2 measure did not decrease");
        std::optional<Cl2Derivation> d = prove(h);
        if (!d) {
          ok = false;
          break;
        }
        subs.push_back(std::move(*d));
      }
      if (ok) return Cl2Derivation{f, std::move(inf.rule), std::move(subs)};
    }
    return std::nullopt;
  }

  Limits limits_;
  std::map<Formula, std::optional<Cl2Derivation>> memo_;
};

}  // namespace detail

// Complete backward search; each step lowers the number of choice
// connectives plus general-atom occurrences.
inline std::optional<Cl2Derivation> prove_cl2(const Formula& f, const Limits& limits = {}) {
  if (f.oliteral_count() > limits.max_oliterals) {
    throw CapExceeded(std::to_string(f.oliteral_count()) + " oliterals exceed the cap of " +
                      std::to_string(limits.max_oliterals));
  }
  detail::Cl2Search search(limits);
  return search.prove(f);
}

// Derivation files: `N: TAG args [from ids] expect <formula>`, premises
// first, the root last.
inline std::string write_cl2_derivation(const Cl2Derivation& d) {
  std::string out;
  std::size_t next = 1;
  auto rec = [&](auto& self, const Cl2Derivation& q) -> std::size_t {
    std::vector<std::size_t> ids;
    for (const Cl2Derivation& p : q.premises) ids.push_back(self(self, p));
    const std::size_t id = next++;
    out += std::to_string(id) + ": " + to_string(q.rule);
    if (!ids.empty()) {
      out += " from";
      for (std::size_t k : ids) out += " " + std::to_string(k);
    }
    out += " expect " + to_string(q.conclusion) + "\n";
    return id;
  };
  rec(rec, d);
  return out;
}

inline Cl2Derivation read_cl2_derivation(std::string_view text) {
  std::map<std::size_t, Cl2Derivation> nodes;
  std::size_t last = 0;
  for (const auto& [no, line] : detail::content_lines(text)) {
    detail::LineReader r(line, no);
    const std::size_t id = r.number();
    r.expect_char(':');
    if (nodes.count(id) != 0) r.fail("duplicate id " + std::to_string(id));
    const std::string tag = r.word();
    Cl2Rule rule;
    try {
      if (tag == "RULE_A") {
        rule.tag = Cl2Tag::a;
      } else if (tag == "RULE_B") {
        rule.tag = Cl2Tag::b;
        rule.path = path_from_string(r.word());
        rule.choice = static_cast<int>(r.number());
      } else if (tag == "RULE_C") {
        rule.tag = Cl2Tag::c;
        rule.path = path_from_string(r.word());
        rule.path2 = path_from_string(r.word());
        Formula a = parse_formula(r.word(), ParseOptions{true});
        if (!a.is_literal() || a.negative()) r.fail("RULE_C needs an atom");
        rule.fresh = a.atom();
      } else {
        r.fail("unknown CL2 rule tag '" + tag + "'");
      }
    } catch (const ParseError& e) {
      r.fail(e.what());
    }
    std::vector<Cl2Derivation> premises;
    if (r.peek_word("from")) {
      r.word();
      while (!r.at_end() && !r.peek_word("expect")) {
        const std::size_t ref = r.number();
        auto it = nodes.find(ref);
        if (it == nodes.end()) {
          r.fail("reference to undefined or already used id " + std::to_string(ref));
        }
        premises.push_back(std::move(it->second));
        nodes.erase(it);
      }
    }
    if (!r.peek_word("expect")) r.fail("expected 'expect <formula>'");
    r.word();
    Formula conclusion = r.formula();
    if (!r.at_end()) r.fail("unexpected trailing text");
    nodes.emplace(id, Cl2Derivation{std::move(conclusion), std::move(rule), std::move(premises)});
    last = id;
  }
  auto root = nodes.find(last);
  if (root == nodes.end()) throw ParseError(0, "empty derivation file");
  return std::move(root->second);
}

}  // namespace cirquent

#endif  // CIRQUENT_CL2_HPP_
