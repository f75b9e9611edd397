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

// Rule applications, systems, proof trees and proof checking.

#ifndef CIRQUENT_INFERENCE_HPP_
#define CIRQUENT_INFERENCE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cirquent/cirquent.hpp"
#include "cirquent/error.hpp"
#include "cirquent/formula.hpp"

namespace cirquent {

enum class RuleFamily : std::uint8_t {
  axiom,
  mix,
  exchange,
  weakening,
  duplication,
  contraction,
  disj_intro,
  conj_intro,
};

enum class RuleTag : std::uint8_t {
  axiom_empty,
  axiom_id,
  axiom_top,
  mix,
  exch_f,
  exch_g,
  weak_pool,
  weak_group,
  dup_down,
  dup_up,
  contract,
  disj_intro,
  conj_intro,
};

inline RuleFamily family_of(RuleTag t) {
  switch (t) {
    case RuleTag::axiom_empty:
    case RuleTag::axiom_id:
    case RuleTag::axiom_top: return RuleFamily::axiom;
    case RuleTag::mix: return RuleFamily::mix;
    case RuleTag::exch_f:
    case RuleTag::exch_g: return RuleFamily::exchange;
    case RuleTag::weak_pool:
    case RuleTag::weak_group: return RuleFamily::weakening;
    case RuleTag::dup_down:
    case RuleTag::dup_up: return RuleFamily::duplication;
    case RuleTag::contract: return RuleFamily::contraction;
    case RuleTag::disj_intro: return RuleFamily::disj_intro;
    case RuleTag::conj_intro: return RuleFamily::conj_intro;
  }
  return RuleFamily::axiom;
}

inline std::size_t arity_of(RuleTag t) {
  switch (family_of(t)) {
    case RuleFamily::axiom: return 0;
    case RuleFamily::mix: return 2;
    default: return 1;
  }
}

// A rule with its parameters. `index` is the oformula or ogroup the rule acts
// on; WeakGroup(g, i) stores g in `index` and i in `index2`.
struct RuleApp {
  RuleTag tag = RuleTag::axiom_empty;
  std::size_t index = 0;
  std::size_t index2 = 0;
  std::optional<Formula> formula;

  static RuleApp of(RuleTag tag, std::size_t index = 0, std::size_t index2 = 0,
                    std::optional<Formula> formula = std::nullopt) {
    RuleApp r;
    r.tag = tag;
    r.index = index;
    r.index2 = index2;
    r.formula = std::move(formula);
    return r;
  }
  static RuleApp axiom_empty() { return of(RuleTag::axiom_empty); }
  static RuleApp axiom_id(Formula f) { return of(RuleTag::axiom_id, 0, 0, std::move(f)); }
  static RuleApp axiom_top() { return of(RuleTag::axiom_top); }
  static RuleApp mix() { return of(RuleTag::mix); }
  static RuleApp exch_f(std::size_t i) { return of(RuleTag::exch_f, i); }
  static RuleApp exch_g(std::size_t i) { return of(RuleTag::exch_g, i); }
  static RuleApp weak_pool(std::size_t i, Formula f) {
    return of(RuleTag::weak_pool, i, 0, std::move(f));
  }
  static RuleApp weak_group(std::size_t g, std::size_t i) {
    return of(RuleTag::weak_group, g, i);
  }
  static RuleApp dup_down(std::size_t g) { return of(RuleTag::dup_down, g); }
  static RuleApp dup_up(std::size_t g) { return of(RuleTag::dup_up, g); }
  static RuleApp contract(std::size_t i) { return of(RuleTag::contract, i); }
  static RuleApp disj_intro(std::size_t i) { return of(RuleTag::disj_intro, i); }
  static RuleApp conj_intro(std::size_t i) { return of(RuleTag::conj_intro, i); }

  RuleFamily family() const { return family_of(tag); }
  std::size_t arity() const { return arity_of(tag); }

  friend bool operator==(const RuleApp&, const RuleApp&) = default;
};

// Proof-file spelling of a rule application, e.g. `WEAK_G 2 3`.
inline std::string to_string(const RuleApp& r) {
  auto n = [](std::size_t v) { return std::to_string(v); };
  switch (r.tag) {
    case RuleTag::axiom_empty: return "EMPTY";
    case RuleTag::axiom_id: return "ID " + to_string(*r.formula);
    case RuleTag::axiom_top: return "TOP";
    case RuleTag::mix: return "MIX";
    case RuleTag::exch_f: return "EXCH_F " + n(r.index);
    case RuleTag::exch_g: return "EXCH_G " + n(r.index);
    case RuleTag::weak_pool: return "WEAK_P " + n(r.index) + " " + to_string(*r.formula);
    case RuleTag::weak_group: return "WEAK_G " + n(r.index) + " " + n(r.index2);
    case RuleTag::dup_down: return "DUP_DOWN " + n(r.index);
    case RuleTag::dup_up: return "DUP_UP " + n(r.index);
    case RuleTag::contract: return "CONTR " + n(r.index);
    case RuleTag::disj_intro: return "DISJ " + n(r.index);
    case RuleTag::conj_intro: return "CONJ " + n(r.index);
  }
  return "?";
}

// A set of rule families plus the variant flags.
struct System {
  std::uint16_t families = 0;
  bool primitive_only = false;
  bool elementary_contraction_only = false;
  bool top_axiom = false;

  static constexpr std::uint16_t bit(RuleFamily f) {
    return static_cast<std::uint16_t>(1u << static_cast<unsigned>(f));
  }

  bool allows(RuleFamily f) const { return (families & bit(f)) != 0; }

  // Whether `tag` may occur in a proof of this system.
  bool admits(RuleTag tag) const {
    if (tag == RuleTag::axiom_top) return top_axiom;
    return allows(family_of(tag));
  }

  static System ccc() { return {0xff}; }
  static System cl5() {
    return {static_cast<std::uint16_t>(0xff & ~bit(RuleFamily::contraction))};
  }
  static System cl6() { return {0xff, false, true, true}; }

  System primitive() const {
    System s = *this;
    s.primitive_only = true;
    return s;
  }

  // Letters A M E W D C plus `|` (or `v`) and `&` (or `^`).
  static System from_letters(std::string_view letters) {
    System s;
    for (char ch : letters) {
      switch (ch) {
        case 'A': s.families |= bit(RuleFamily::axiom); break;
        case 'M': s.families |= bit(RuleFamily::mix); break;
        case 'E': s.families |= bit(RuleFamily::exchange); break;
        case 'W': s.families |= bit(RuleFamily::weakening); break;
        case 'D': s.families |= bit(RuleFamily::duplication); break;
        case 'C': s.families |= bit(RuleFamily::contraction); break;
        case '|':
        case 'v': s.families |= bit(RuleFamily::disj_intro); break;
        case '&':
        case '^': s.families |= bit(RuleFamily::conj_intro); break;
        default:
          throw ParseError(0, std::string("unknown rule letter '") + ch + "'");
      }
    }
    return s;
  }

  friend bool operator==(const System&, const System&) = default;
};

// ---------------------------------------------------------------------------
// Forward application

namespace detail {

inline void require(bool ok, const std::string& message) {
  if (!ok) throw RuleError(message);
}

inline void require_index(bool ok, const char* rule) {
  if (!ok) throw IndexError(std::string(rule) + ": index out of range");
}

inline Cirquent mix(const Cirquent& a, const Cirquent& b) {
  std::vector<Formula> pool = a.pool();
  pool.insert(pool.end(), b.pool().begin(), b.pool().end());
  std::vector<Group> s = a.structure();
  const std::size_t shift = a.pool_size();
  for (Group g : b.structure()) {
    for (std::size_t& k : g) k += shift;
    s.push_back(std::move(g));
  }
  return Cirquent(std::move(pool), std::move(s), Cirquent::Unchecked{});
}

inline Cirquent swap_oformulas(const Cirquent& c, std::size_t i) {
  std::vector<Formula> pool = c.pool();
  std::swap(pool[i - 1], pool[i]);
  std::vector<Group> s = c.structure();
  for (Group& g : s) {
    const bool has_i = group_contains(g, i);
    const bool has_j = group_contains(g, i + 1);
    if (has_i != has_j) {
      for (std::size_t& k : g) {
        if (k == i) {
          k = i + 1;
        } else if (k == i + 1) {
          k = i;
        }
      }
    }
  }
  return Cirquent(std::move(pool), std::move(s), Cirquent::Unchecked{});
}

inline Cirquent swap_ogroups(const Cirquent& c, std::size_t i) {
  std::vector<Group> s = c.structure();
  std::swap(s[i - 1], s[i]);
  return Cirquent(c.pool(), std::move(s), Cirquent::Unchecked{});
}

inline Cirquent insert_oformula(const Cirquent& c, std::size_t i, const Formula& f) {
  std::vector<Formula> pool = c.pool();
  pool.insert(pool.begin() + static_cast<std::ptrdiff_t>(i - 1), f);
  std::vector<Group> s = c.structure();
  for (Group& g : s) {
    for (std::size_t& k : g) {
      if (k >= i) ++k;
    }
  }
  return Cirquent(std::move(pool), std::move(s), Cirquent::Unchecked{});
}

inline Cirquent remove_oformula(const Cirquent& c, std::size_t i) {
  std::vector<Formula> pool = c.pool();
  pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(i - 1));
  std::vector<Group> s = c.structure();
  for (Group& g : s) {
    Group ng;
    for (std::size_t k : g) {
      if (k < i) {
        ng.push_back(k);
      } else if (k > i) {
        ng.push_back(k - 1);
      }
    }
    g = std::move(ng);
  }
  return Cirquent(std::move(pool), std::move(s), Cirquent::Unchecked{});
}

inline Cirquent with_group(const Cirquent& c, std::size_t g, Group grp) {
  std::vector<Group> s = c.structure();
  s[g - 1] = std::move(grp);
  return Cirquent(c.pool(), std::move(s), Cirquent::Unchecked{});
}

inline Cirquent conj_intro(const Cirquent& c, std::size_t i) {
  require_index(i >= 1 && i < c.pool_size(), "ConjIntro");
  const std::size_t j = i + 1;
  const std::size_t n = c.group_count();
  for (std::size_t g = 0; g < n; ++g) {
    const Group& grp = c.structure()[g];
    require(!(group_contains(grp, i) && group_contains(grp, j)),
            "ConjIntro: ogroup " + std::to_string(g + 1) +
                " contains both F and G");
  }
  std::vector<Group> s;
  s.reserve(n);
  for (std::size_t g = 0; g < n; ++g) {
    const Group& grp = c.structure()[g];
    if (group_contains(grp, i)) {
      require(g + 1 < n && group_contains(c.structure()[g + 1], j),
              "ConjIntro: ogroup " + std::to_string(g + 1) +
                  " contains F but is not immediately followed by an ogroup "
                  "containing G");
      s.push_back(group_union(grp, c.structure()[g + 1]));
      ++g;
    } else {
      require(!group_contains(grp, j),
              "ConjIntro: ogroup " + std::to_string(g + 1) +
                  " contains G but is not immediately preceded by an ogroup "
                  "containing F");
      s.push_back(grp);
    }
  }
  Cirquent merged(c.pool(), std::move(s), Cirquent::Unchecked{});
  return merge_oformulas(merged, i,
                         Formula::conj(c.pool()[i - 1], c.pool()[j - 1]));
}

}  // namespace detail

// Conclusion of `r` applied to `premises`. Throws IndexError or RuleError.
inline Cirquent apply_rule(const RuleApp& r, const std::vector<Cirquent>& premises,
                      bool elementary_contraction_only = false) {
  if (premises.size() != r.arity()) {
    throw RuleError(to_string(r) + ": expected " + std::to_string(r.arity()) +
                    " premise(s), got " + std::to_string(premises.size()));
  }
  if ((r.tag == RuleTag::axiom_id || r.tag == RuleTag::weak_pool) && !r.formula) {
    throw RuleError("rule requires a formula parameter");
  }
  switch (r.tag) {
    case RuleTag::axiom_empty:
      return Cirquent();
    case RuleTag::axiom_id:
      return Cirquent({negate(*r.formula), *r.formula}, {Group{1, 2}},
                      Cirquent::Unchecked{});
    case RuleTag::axiom_top:
      return Cirquent({Formula::literal(Atom::top())}, {Group{1}},
                      Cirquent::Unchecked{});
    case RuleTag::mix:
      return detail::mix(premises[0], premises[1]);
    default:
      break;
  }
  const Cirquent& c = premises[0];
  const std::size_t i = r.index;
  switch (r.tag) {
    case RuleTag::exch_f:
      detail::require_index(i >= 1 && i < c.pool_size(), "ExchF");
      return detail::swap_oformulas(c, i);
    case RuleTag::exch_g:
      detail::require_index(i >= 1 && i < c.group_count(), "ExchG");
      return detail::swap_ogroups(c, i);
    case RuleTag::weak_pool:
      detail::require_index(i >= 1 && i <= c.pool_size() + 1, "WeakPool");
      return detail::insert_oformula(c, i, *r.formula);
    case RuleTag::weak_group: {
      detail::require_index(i >= 1 && i <= c.group_count(), "WeakGroup");
      const std::size_t k = r.index2;
      detail::require_index(k >= 1 && k <= c.pool_size(), "WeakGroup");
      Group grp = c.structure()[i - 1];
      detail::require(!group_contains(grp, k),
                      "WeakGroup: the arc already exists");
      grp.insert(std::lower_bound(grp.begin(), grp.end(), k), k);
      return detail::with_group(c, i, std::move(grp));
    }
    case RuleTag::dup_down: {
      detail::require_index(i >= 1 && i <= c.group_count(), "DupDown");
      std::vector<Group> s = c.structure();
      s.insert(s.begin() + static_cast<std::ptrdiff_t>(i), s[i - 1]);
      return Cirquent(c.pool(), std::move(s), Cirquent::Unchecked{});
    }
    case RuleTag::dup_up: {
      detail::require_index(i >= 1 && i < c.group_count(), "DupUp");
      detail::require(c.structure()[i - 1] == c.structure()[i],
                      "DupUp: the two ogroups are not identical");
      std::vector<Group> s = c.structure();
      s.erase(s.begin() + static_cast<std::ptrdiff_t>(i));
      return Cirquent(c.pool(), std::move(s), Cirquent::Unchecked{});
    }
    case RuleTag::contract:
      detail::require_index(i >= 1 && i < c.pool_size(), "Contract");
      detail::require(c.pool()[i - 1] == c.pool()[i],
                      "Contract: the two oformulas differ");
      detail::require(!elementary_contraction_only || is_elementary(c.pool()[i - 1]),
                      "Contract: only elementary formulas may be contracted");
      return merge_oformulas(c, i, c.pool()[i - 1]);
    case RuleTag::disj_intro:
      detail::require_index(i >= 1 && i < c.pool_size(), "DisjIntro");
      return merge_oformulas(c, i, Formula::disj(c.pool()[i - 1], c.pool()[i]));
    case RuleTag::conj_intro:
      return detail::conj_intro(c, i);
    default:
      break;
  }
  throw RuleError("unknown rule");
}

inline Cirquent apply(const RuleApp& r) { return apply_rule(r, {}); }
inline Cirquent apply(const RuleApp& r, const Cirquent& c) { return apply_rule(r, {c}); }
inline Cirquent apply(const RuleApp& r, const Cirquent& a, const Cirquent& b) {
  return apply_rule(r, {a, b});
}

// ---------------------------------------------------------------------------
// Proofs

struct Proof {
  Cirquent conclusion;
  RuleApp rule;
  std::vector<Proof> premises;
};

// Node whose conclusion is computed from the premises by `r`.
inline Proof derive(const RuleApp& r, std::vector<Proof> premises,
                    bool elementary_contraction_only = false) {
  std::vector<Cirquent> cs;
  cs.reserve(premises.size());
  for (const Proof& p : premises) cs.push_back(p.conclusion);
  Cirquent c = apply_rule(r, cs, elementary_contraction_only);
  return Proof{std::move(c), r, std::move(premises)};
}

inline Proof derive(const RuleApp& r, Proof premise) {
  std::vector<Proof> ps;
  ps.push_back(std::move(premise));
  return derive(r, std::move(ps));
}

inline Proof leaf(const RuleApp& r) { return derive(r, std::vector<Proof>{}); }

inline std::size_t proof_size(const Proof& p) {
  std::size_t n = 1;
  for (const Proof& q : p.premises) n += proof_size(q);
  return n;
}

inline bool proof_uses(const Proof& p, RuleTag tag) {
  if (p.rule.tag == tag) return true;
  for (const Proof& q : p.premises) {
    if (proof_uses(q, tag)) return true;
  }
  return false;
}

struct Violation {
  // Premise indices (0-based) from the root to the offending node.
  std::vector<std::size_t> path;
  std::string reason;
};

inline std::string to_string(const Violation& v) {
  std::string out = "at root";
  for (std::size_t k : v.path) out += "." + std::to_string(k + 1);
  return out + ": " + v.reason;
}

namespace detail {

inline void check_node(const Proof& p, const System& s, std::vector<std::size_t>& path,
                       std::vector<Violation>& out) {
  if (!s.admits(p.rule.tag)) {
    out.push_back({path, to_string(p.rule) + ": rule not allowed in this system"});
  }
  if (s.primitive_only && !is_primitive(p.conclusion)) {
    out.push_back({path, "cirquent is not primitive"});
  }
  std::vector<Cirquent> cs;
  for (const Proof& q : p.premises) cs.push_back(q.conclusion);
  try {
    Cirquent got = apply_rule(p.rule, cs, s.elementary_contraction_only);
    if (!(got == p.conclusion)) {
      out.push_back({path, to_string(p.rule) + ": conclusion should be " +
                               to_string(got) + ", found " + to_string(p.conclusion)});
    }
  } catch (const Error& e) {
    out.push_back({path, e.what()});
  }
  for (std::size_t k = 0; k < p.premises.size(); ++k) {
    path.push_back(k);
    check_node(p.premises[k], s, path, out);
    path.pop_back();
  }
}

}  // namespace detail

// Empty result means the proof is valid in `s`.
inline std::vector<Violation> check_proof(const Proof& p, const System& s) {
  std::vector<Violation> out;
  std::vector<std::size_t> path;
  detail::check_node(p, s, path, out);
  return out;
}

inline Proof substitute_proof(const Proof& p, const Substitution& sigma) {
  Proof q;
  q.conclusion = substitute(sigma, p.conclusion);
  q.rule = p.rule;
  if (q.rule.formula) q.rule.formula = substitute(sigma, *q.rule.formula);
  q.premises.reserve(p.premises.size());
  for (const Proof& r : p.premises) q.premises.push_back(substitute_proof(r, sigma));
  return q;
}

// ---------------------------------------------------------------------------
// Backward premise generation

struct Inference {
  RuleApp rule;
  std::vector<Cirquent> premises;
  // Set on ∨/∧ introductions whose premise keeps every co-member of the
  // introduced formula in each split ogroup.
  bool conservative = false;
};

struct BackwardOptions {
  std::size_t max_results = 4096;
};

namespace detail {

class Backward {
 public:
  Backward(const Cirquent& c, const System& s, const BackwardOptions& o,
           std::vector<Inference>& out)
      : c_(c), s_(s), o_(o), out_(out) {}

  bool full() const { return out_.size() >= o_.max_results; }

  void emit(RuleApp r, std::vector<Cirquent> premises, bool conservative = false) {
    if (full()) return;
    if (s_.primitive_only) {
      for (const Cirquent& p : premises) {
        if (!is_primitive(p)) return;
      }
    }
    out_.push_back({std::move(r), std::move(premises), conservative});
  }

  void axioms() {
    if (c_.pool_size() == 0 && c_.group_count() == 0) emit(RuleApp::axiom_empty(), {});
    if (c_.pool_size() == 2 && c_.group_count() == 1 && c_.structure()[0] == Group{1, 2} &&
        c_.pool()[0] == negate(c_.pool()[1])) {
      emit(RuleApp::axiom_id(c_.pool()[1]), {});
    }
    if (s_.top_axiom && c_.pool_size() == 1 && c_.group_count() == 1 &&
        c_.structure()[0] == Group{1} && c_.pool()[0].is_literal() &&
        c_.pool()[0].atom().sort == AtomSort::top) {
      emit(RuleApp::axiom_top(), {});
    }
  }

  void mixes() {
    const std::size_t n = c_.pool_size();
    const std::size_t m = c_.group_count();
    for (std::size_t k = 0; k <= n; ++k) {
      for (std::size_t h = 0; h <= m; ++h) {
        bool ok = true;
        for (std::size_t g = 0; g < m && ok; ++g) {
          for (std::size_t idx : c_.structure()[g]) {
            if ((g < h) != (idx <= k)) {
              ok = false;
              break;
            }
          }
        }
        if (!ok) continue;
        std::vector<Formula> p1(c_.pool().begin(), c_.pool().begin() + static_cast<std::ptrdiff_t>(k));
        std::vector<Formula> p2(c_.pool().begin() + static_cast<std::ptrdiff_t>(k), c_.pool().end());
        std::vector<Group> s1(c_.structure().begin(), c_.structure().begin() + static_cast<std::ptrdiff_t>(h));
        std::vector<Group> s2;
        for (std::size_t g = h; g < m; ++g) {
          Group grp = c_.structure()[g];
          for (std::size_t& idx : grp) idx -= k;
          s2.push_back(std::move(grp));
        }
        emit(RuleApp::mix(),
             {Cirquent(std::move(p1), std::move(s1), Cirquent::Unchecked{}),
              Cirquent(std::move(p2), std::move(s2), Cirquent::Unchecked{})});
      }
    }
  }

  void exchanges() {
    for (std::size_t i = 1; i < c_.pool_size(); ++i) {
      emit(RuleApp::exch_f(i), {swap_oformulas(c_, i)});
    }
    for (std::size_t i = 1; i < c_.group_count(); ++i) {
      emit(RuleApp::exch_g(i), {swap_ogroups(c_, i)});
    }
  }

  void weakenings() {
    for (std::size_t g = 1; g <= c_.group_count(); ++g) {
      for (std::size_t k : c_.structure()[g - 1]) {
        Group grp;
        for (std::size_t x : c_.structure()[g - 1]) {
          if (x != k) grp.push_back(x);
        }
        emit(RuleApp::weak_group(g, k), {with_group(c_, g, std::move(grp))});
      }
    }
    for (std::size_t i = 1; i <= c_.pool_size(); ++i) {
      if (is_homeless(c_, i)) {
        emit(RuleApp::weak_pool(i, c_.pool()[i - 1]), {remove_oformula(c_, i)});
      }
    }
  }

  void duplications() {
    for (std::size_t g = 1; g < c_.group_count(); ++g) {
      if (c_.structure()[g - 1] == c_.structure()[g]) {
        std::vector<Group> s = c_.structure();
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(g));
        emit(RuleApp::dup_down(g), {Cirquent(c_.pool(), std::move(s), Cirquent::Unchecked{})});
      }
    }
    for (std::size_t g = 1; g <= c_.group_count(); ++g) {
      std::vector<Group> s = c_.structure();
      s.insert(s.begin() + static_cast<std::ptrdiff_t>(g), s[g - 1]);
      emit(RuleApp::dup_up(g), {Cirquent(c_.pool(), std::move(s), Cirquent::Unchecked{})});
    }
  }

  // Premises splitting oformula i into (a, b) at positions i, i+1. Each ogroup
  // containing i receives one of {i}, {i+1}, {i, i+1}, enumerated with the
  // conservative choice {i, i+1} first.
  template <typename Make>
  void split_oformula(std::size_t i, const Formula& a, const Formula& b, Make make) {
    std::vector<Formula> pool = c_.pool();
    pool[i - 1] = a;
    pool.insert(pool.begin() + static_cast<std::ptrdiff_t>(i), b);
    std::vector<Group> shifted = c_.structure();
    std::vector<std::size_t> holders;
    for (std::size_t g = 0; g < shifted.size(); ++g) {
      Group ng;
      bool has = false;
      for (std::size_t k : shifted[g]) {
        if (k < i) {
          ng.push_back(k);
        } else if (k == i) {
          has = true;
        } else {
          ng.push_back(k + 1);
        }
      }
      shifted[g] = std::move(ng);
      if (has) holders.push_back(g);
    }
    std::vector<int> choice(holders.size(), 0);
    for (;;) {
      if (full()) return;
      std::vector<Group> s = shifted;
      bool conservative = true;
      for (std::size_t h = 0; h < holders.size(); ++h) {
        Group& grp = s[holders[h]];
        if (choice[h] != 2) grp.push_back(i);
        if (choice[h] != 1) grp.push_back(i + 1);
        std::sort(grp.begin(), grp.end());
        if (choice[h] != 0) conservative = false;
      }
      make(Cirquent(pool, std::move(s), Cirquent::Unchecked{}), conservative);
      std::size_t h = 0;
      while (h < choice.size() && choice[h] == 2) choice[h++] = 0;
      if (h == choice.size()) return;
      ++choice[h];
    }
  }

  void contractions() {
    for (std::size_t i = 1; i <= c_.pool_size(); ++i) {
      const Formula& f = c_.pool()[i - 1];
      if (s_.elementary_contraction_only && !is_elementary(f)) continue;
      split_oformula(i, f, f, [&](Cirquent p, bool) {
        emit(RuleApp::contract(i), {std::move(p)});
      });
    }
  }

  void disj_intros() {
    for (std::size_t i = 1; i <= c_.pool_size(); ++i) {
      const Formula& f = c_.pool()[i - 1];
      if (f.kind() != Kind::disj) continue;
      split_oformula(i, f.left(), f.right(), [&](Cirquent p, bool conservative) {
        emit(RuleApp::disj_intro(i), {std::move(p)}, conservative);
      });
    }
  }

  // Each ogroup Γ containing F∧G becomes Γ^F, Γ^G; every other member of Γ
  // goes to both (tried first), to Γ^F only, or to Γ^G only.
  void conj_intros() {
    for (std::size_t i = 1; i <= c_.pool_size(); ++i) {
      const Formula& f = c_.pool()[i - 1];
      if (f.kind() != Kind::conj) continue;
      std::vector<Formula> pool = c_.pool();
      pool[i - 1] = f.left();
      pool.insert(pool.begin() + static_cast<std::ptrdiff_t>(i), f.right());
      auto shift = [&](std::size_t k) { return k > i ? k + 1 : k; };
      struct Slot {
        std::size_t group;
        std::size_t member;  // shifted index
      };
      std::vector<Slot> slots;
      for (std::size_t g = 0; g < c_.group_count(); ++g) {
        const Group& grp = c_.structure()[g];
        if (!group_contains(grp, i)) continue;
        for (std::size_t k : grp) {
          if (k != i) slots.push_back({g, shift(k)});
        }
      }
      std::vector<int> choice(slots.size(), 0);
      for (;;) {
        if (full()) return;
        std::vector<Group> s;
        bool conservative = true;
        std::size_t slot = 0;
        for (std::size_t g = 0; g < c_.group_count(); ++g) {
          const Group& grp = c_.structure()[g];
          if (!group_contains(grp, i)) {
            Group ng;
            for (std::size_t k : grp) ng.push_back(shift(k));
            s.push_back(std::move(ng));
            continue;
          }
          Group gf{i};
          Group gg{i + 1};
          for (; slot < slots.size() && slots[slot].group == g; ++slot) {
            const int ch = choice[slot];
            if (ch != 2) gf.push_back(slots[slot].member);
            if (ch != 1) gg.push_back(slots[slot].member);
            if (ch != 0) conservative = false;
          }
          std::sort(gf.begin(), gf.end());
          std::sort(gg.begin(), gg.end());
          s.push_back(std::move(gf));
          s.push_back(std::move(gg));
        }
        emit(RuleApp::conj_intro(i), {Cirquent(pool, std::move(s), Cirquent::Unchecked{})},
             conservative);
        std::size_t h = 0;
        while (h < choice.size() && choice[h] == 2) choice[h++] = 0;
        if (h == choice.size()) break;
        ++choice[h];
      }
    }
  }

 private:
  const Cirquent& c_;
  const System& s_;
  const BackwardOptions& o_;
  std::vector<Inference>& out_;
};

}  // namespace detail

// All applications of rules of `family` (as permitted by `s`) concluding `c`,
// up to `options.max_results`.
inline std::vector<Inference> backward_premises(const Cirquent& c, RuleFamily family,
                                                const System& s,
                                                const BackwardOptions& options = {}) {
  std::vector<Inference> out;
  if (!s.allows(family) && !(family == RuleFamily::axiom && s.top_axiom)) return out;
  detail::Backward b(c, s, options, out);
  switch (family) {
    case RuleFamily::axiom:
      b.axioms();
      if (!s.allows(RuleFamily::axiom)) {
        std::erase_if(out, [](const Inference& inf) {
          return inf.rule.tag != RuleTag::axiom_top;
        });
      }
      break;
    case RuleFamily::mix: b.mixes(); break;
    case RuleFamily::exchange: b.exchanges(); break;
    case RuleFamily::weakening: b.weakenings(); break;
    case RuleFamily::duplication: b.duplications(); break;
    case RuleFamily::contraction: b.contractions(); break;
    case RuleFamily::disj_intro: b.disj_intros(); break;
    case RuleFamily::conj_intro: b.conj_intros(); break;
  }
  return out;
}

// Premise of the conservative ∨- or ∧-introduction that concludes `c` at the
// compound oformula i: every ogroup containing F∨G gets both F and G; every
// ogroup Γ containing F∧G becomes Γ^F, Γ^G, each keeping all other members.
inline Inference conservative_premise(const Cirquent& c, std::size_t i) {
  if (i < 1 || i > c.pool_size()) throw IndexError("conservative_premise: index out of range");
  const Formula& f = c.pool()[i - 1];
  if (f.kind() != Kind::disj && f.kind() != Kind::conj) {
    throw RuleError("conservative_premise: oformula is not a conjunction or disjunction");
  }
  const bool conj = f.kind() == Kind::conj;
  std::vector<Formula> pool;
  pool.reserve(c.pool_size() + 1);
  for (std::size_t k = 1; k <= c.pool_size(); ++k) {
    if (k == i) {
      pool.push_back(f.left());
      pool.push_back(f.right());
    } else {
      pool.push_back(c.pool()[k - 1]);
    }
  }
  std::vector<Group> s;
  s.reserve(c.group_count() * (conj ? 2 : 1));
  for (const Group& grp : c.structure()) {
    Group rest;
    bool has = false;
    for (std::size_t k : grp) {
      if (k == i) {
        has = true;
      } else {
        rest.push_back(k > i ? k + 1 : k);
      }
    }
    if (!has) {
      s.push_back(std::move(rest));
    } else if (!conj) {
      rest.insert(std::lower_bound(rest.begin(), rest.end(), i), {i, i + 1});
      s.push_back(std::move(rest));
    } else {
      Group gf = rest;
      gf.insert(std::lower_bound(gf.begin(), gf.end(), i), i);
      rest.insert(std::lower_bound(rest.begin(), rest.end(), i + 1), i + 1);
      s.push_back(std::move(gf));
      s.push_back(std::move(rest));
    }
  }
  Inference inf;
  inf.rule = conj ? RuleApp::conj_intro(i) : RuleApp::disj_intro(i);
  inf.premises.push_back(Cirquent(std::move(pool), std::move(s), Cirquent::Unchecked{}));
  inf.conservative = true;
  return inf;
}

}  // namespace cirquent

#endif  // CIRQUENT_INFERENCE_HPP_
