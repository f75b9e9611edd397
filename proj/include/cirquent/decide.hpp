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

// Decision procedures and provers: binary-instance decision by literal
// coupling, the constructive CCC and CL5 provers, the affine sequent prover
// and the translation of sequent proofs into primitive cirquent proofs.

#ifndef CIRQUENT_DECIDE_HPP_
#define CIRQUENT_DECIDE_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cirquent/cirquent.hpp"
#include "cirquent/error.hpp"
#include "cirquent/formula.hpp"
#include "cirquent/inference.hpp"
#include "cirquent/proof_io.hpp"
#include "cirquent/semantics.hpp"

namespace cirquent {

// ---------------------------------------------------------------------------
// Couplings and binary instances

// Pairs of (negative, positive) positions in the global sequence of
// non-logical oliterals, 1-based.
struct Coupling {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  friend bool operator==(const Coupling&, const Coupling&) = default;
};

// A normal binary tautology `normal` with σ(normal) = the decided cirquent.
struct BinaryInstance {
  Cirquent normal;
  Coupling coupling;
  Substitution sigma;
};

namespace detail {

// Non-logical oliterals of `c` in global order.
struct LiteralSite {
  Atom atom;
  bool negative;
};

inline std::vector<LiteralSite> literal_sites(const Cirquent& c) {
  std::vector<LiteralSite> out;
  for (const Formula& f : c.pool()) {
    for_each_literal(f, [&](const Formula& lit) {
      if (!lit.atom().is_logical()) out.push_back({lit.atom(), lit.negative()});
    });
  }
  return out;
}

// Occurrence-to-variable map for is_tautology_over.
struct MappedOccurrences {
  const std::vector<unsigned>* ids;
  std::size_t next = 0;
  unsigned operator()(const Formula&) { return (*ids)[next++]; }
};

// All maximum matchings between `negs` and `poss`, each as a list of
// (negative, positive) pairs sorted by negative position, in lexicographic
// order.
inline std::vector<std::vector<std::pair<std::size_t, std::size_t>>> maximum_matchings(
    const std::vector<std::size_t>& negs, const std::vector<std::size_t>& poss) {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out;
  const bool negs_side = negs.size() <= poss.size();
  const std::vector<std::size_t>& small = negs_side ? negs : poss;
  const std::vector<std::size_t>& large = negs_side ? poss : negs;
  std::vector<bool> used(large.size(), false);
  std::vector<std::pair<std::size_t, std::size_t>> cur;
  auto rec = [&](auto& self, std::size_t k) -> void {
    if (k == small.size()) {
      auto m = cur;
      std::sort(m.begin(), m.end());
      out.push_back(std::move(m));
      return;
    }
    for (std::size_t j = 0; j < large.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      cur.push_back(negs_side ? std::make_pair(small[k], large[j])
                              : std::make_pair(large[j], small[k]));
      self(self, k + 1);
      cur.pop_back();
      used[j] = false;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

inline void check_literal_caps(const std::vector<LiteralSite>& sites, const Limits& limits) {
  if (sites.size() > limits.max_oliterals) {
    throw CapExceeded(std::to_string(sites.size()) + " oliterals exceed the cap of " +
                      std::to_string(limits.max_oliterals));
  }
  std::map<Atom, std::size_t> count;
  for (const LiteralSite& s : sites) {
    if (++count[s.atom] > limits.max_occurrences_per_atom) {
      throw CapExceeded("atom " + s.atom.name + " has more than " +
                        std::to_string(limits.max_occurrences_per_atom) + " occurrences");
    }
  }
}

inline Formula rename_occurrences(const Formula& f, const std::vector<Atom>& names,
                                  std::size_t& next) {
  if (f.is_literal()) {
    if (f.atom().is_logical()) return f;
    return Formula::literal(names[next++], f.negative());
  }
  Formula l = rename_occurrences(f.left(), names, next);
  Formula r = rename_occurrences(f.right(), names, next);
  return Formula::make(f.kind(), std::move(l), std::move(r));
}

}  // namespace detail

// Searches couplings atom by atom (first-occurrence order), trying only
// maximum matchings: coupling more pairs yields a substitution instance, so a
// maximum extension of any successful partial matching also succeeds.
inline std::optional<BinaryInstance> decide_binary_instance(const Cirquent& c,
                                                            const Limits& limits = {}) {
  const std::vector<detail::LiteralSite> sites = detail::literal_sites(c);
  detail::check_literal_caps(sites, limits);
  // An instance of a tautology is a tautology.
  Limits wide = limits;
  wide.max_atoms = std::max(limits.max_atoms, limits.max_oliterals);
  if (!is_tautology(c, wide)) return std::nullopt;

  std::vector<Atom> atoms;
  std::vector<std::vector<std::vector<std::pair<std::size_t, std::size_t>>>> options;
  for (const detail::LiteralSite& s : sites) {
    if (std::find(atoms.begin(), atoms.end(), s.atom) == atoms.end()) atoms.push_back(s.atom);
  }
  for (const Atom& a : atoms) {
    std::vector<std::size_t> negs;
    std::vector<std::size_t> poss;
    for (std::size_t k = 0; k < sites.size(); ++k) {
      if (sites[k].atom == a) (sites[k].negative ? negs : poss).push_back(k + 1);
    }
    options.push_back(detail::maximum_matchings(negs, poss));
  }

  std::vector<std::size_t> choice(atoms.size(), 0);
  std::vector<unsigned> ids(sites.size());
  for (;;) {
    // Variables: one per coupled pair, one per uncoupled oliteral.
    std::fill(ids.begin(), ids.end(), ~0u);
    unsigned vars = 0;
    for (std::size_t a = 0; a < atoms.size(); ++a) {
      for (const auto& [n, p] : options[a][choice[a]]) {
        ids[n - 1] = vars;
        ids[p - 1] = vars;
        ++vars;
      }
    }
    for (unsigned& id : ids) {
      if (id == ~0u) id = vars++;
    }
    if (is_tautology_over(c, vars, detail::MappedOccurrences{&ids})) {
      BinaryInstance out;
      FreshAtoms fresh = FreshAtoms::general_for(c);
      std::vector<Atom> by_var;
      for (unsigned v = 0; v < vars; ++v) by_var.push_back(fresh.next());
      std::vector<Atom> names;
      for (std::size_t k = 0; k < sites.size(); ++k) {
        names.push_back(by_var[ids[k]]);
        out.sigma.set(by_var[ids[k]], Formula::literal(sites[k].atom));
      }
      std::vector<Formula> pool;
      std::size_t next = 0;
      for (const Formula& f : c.pool()) pool.push_back(detail::rename_occurrences(f, names, next));
      out.normal = Cirquent(std::move(pool), c.structure(), Cirquent::Unchecked{});
      for (std::size_t a = 0; a < atoms.size(); ++a) {
        for (const auto& pr : options[a][choice[a]]) out.coupling.pairs.push_back(pr);
      }
      std::sort(out.coupling.pairs.begin(), out.coupling.pairs.end());
      return out;
    }
    std::size_t a = atoms.size();
    while (a > 0 && choice[a - 1] + 1 == options[a - 1].size()) choice[--a] = 0;
    if (a == 0) return std::nullopt;
    ++choice[a - 1];
  }
}

inline std::optional<BinaryInstance> decide_binary_instance(const Formula& f,
                                                            const Limits& limits = {}) {
  return decide_binary_instance(embed_formula(f), limits);
}

// ---------------------------------------------------------------------------
// Constructive provers

namespace detail {

// Rule applications read from the conclusion upward; `top` is the premise of
// the last one.
struct Spine {
  Cirquent top;
  std::vector<RuleApp> rules;

  void step(RuleApp r, Cirquent premise) {
    rules.push_back(std::move(r));
    top = std::move(premise);
  }

  Proof finish(Proof p, bool elementary_contraction_only = false) const {
    for (auto it = rules.rbegin(); it != rules.rend(); ++it) {
      std::vector<Proof> ps;
      ps.push_back(std::move(p));
      p = derive(*it, std::move(ps), elementary_contraction_only);
    }
    return p;
  }
};

inline void reject_logical_atoms(const Cirquent& c, const char* who) {
  for (const Formula& f : c.pool()) {
    for_each_literal(f, [&](const Formula& lit) {
      if (lit.atom().is_logical()) {
        throw Error(std::string(who) + ": logical atoms are not supported");
      }
    });
  }
}

// Conservative ∨/∧-introductions, leftmost non-homeless compound first,
// until the cirquent is essentially literal.
inline void introduce_conservatively(Spine& sp) {
  for (;;) {
    std::size_t target = 0;
    for (std::size_t i = 1; i <= sp.top.pool_size(); ++i) {
      if (!sp.top.pool()[i - 1].is_literal() && !is_homeless(sp.top, i)) {
        target = i;
        break;
      }
    }
    if (target == 0) return;
    Inference inf = conservative_premise(sp.top, target);
    sp.step(inf.rule, std::move(inf.premises[0]));
  }
}

// Weakens each ogroup of an essentially literal tautology down to its
// lexicographically least complementary pair and drops homeless oformulas.
inline void weaken_to_pairs(Spine& sp) {
  for (std::size_t g = 1; g <= sp.top.group_count(); ++g) {
    const Group grp = sp.top.structure()[g - 1];
    std::size_t a = 0;
    std::size_t b = 0;
    for (std::size_t x = 0; x < grp.size() && a == 0; ++x) {
      for (std::size_t y = x + 1; y < grp.size(); ++y) {
        if (sp.top.pool()[grp[x] - 1] == negate(sp.top.pool()[grp[y] - 1])) {
          a = grp[x];
          b = grp[y];
          break;
        }
      }
    }
    if (a == 0) throw Error("internal: ogroup without a complementary pair");
    for (std::size_t k : grp) {
      if (k == a || k == b) continue;
      Group smaller;
      for (std::size_t x : sp.top.structure()[g - 1]) {
        if (x != k) smaller.push_back(x);
      }
      sp.step(RuleApp::weak_group(g, k), detail::with_group(sp.top, g, std::move(smaller)));
    }
  }
  for (std::size_t i = sp.top.pool_size(); i >= 1; --i) {
    if (is_homeless(sp.top, i)) {
      sp.step(RuleApp::weak_pool(i, sp.top.pool()[i - 1]), detail::remove_oformula(sp.top, i));
    }
  }
}

// Splits every oformula shared by several ogroups by backward contraction;
// the last ogroup containing it receives the new copy.
inline void separate_by_contraction(Spine& sp) {
  for (std::size_t i = 1; i <= sp.top.pool_size();) {
    std::size_t holders = 0;
    std::size_t last = 0;
    for (std::size_t g = 0; g < sp.top.group_count(); ++g) {
      if (group_contains(sp.top.structure()[g], i)) {
        ++holders;
        last = g;
      }
    }
    if (holders < 2) {
      ++i;
      continue;
    }
    Cirquent widened = detail::insert_oformula(sp.top, i + 1, sp.top.pool()[i - 1]);
    std::vector<Group> s = widened.structure();
    Group& grp = s[last];
    std::replace(grp.begin(), grp.end(), i, i + 1);
    std::sort(grp.begin(), grp.end());
    sp.step(RuleApp::contract(i),
            Cirquent(widened.pool(), std::move(s), Cirquent::Unchecked{}));
  }
}

// Collapses identical ogroups by backward ogroup exchange and downward
// duplication.
inline void separate_by_duplication(Spine& sp) {
  for (;;) {
    std::size_t g = 0;
    std::size_t h = 0;
    const auto& s = sp.top.structure();
    for (std::size_t x = 0; x < s.size() && h == 0; ++x) {
      for (std::size_t y = x + 1; y < s.size(); ++y) {
        if (s[x] == s[y]) {
          g = x + 1;
          h = y + 1;
          break;
        }
      }
    }
    if (h == 0) return;
    for (; h > g + 1; --h) sp.step(RuleApp::exch_g(h - 1), detail::swap_ogroups(sp.top, h - 1));
    std::vector<Group> fewer = sp.top.structure();
    fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(g));
    sp.step(RuleApp::dup_down(g), Cirquent(sp.top.pool(), std::move(fewer), Cirquent::Unchecked{}));
  }
}

// Proof of a primitive cirquent whose ogroups are complementary pairs
// covering the pool: identity axioms, mixes, then oformula exchanges.
inline Proof close_with_axioms(const Cirquent& c) {
  if (c.group_count() == 0) return leaf(RuleApp::axiom_empty());
  std::optional<Proof> p;
  std::vector<std::size_t> origin;  // target pool position of each current oformula
  for (const Group& g : c.structure()) {
    if (g.size() != 2) throw Error("internal: ogroup is not a pair");
    Proof ax = leaf(RuleApp::axiom_id(c.pool()[g[1] - 1]));
    if (!p) {
      p = std::move(ax);
    } else {
      std::vector<Proof> ps;
      ps.push_back(std::move(*p));
      ps.push_back(std::move(ax));
      p = derive(RuleApp::mix(), std::move(ps));
    }
    origin.push_back(g[0]);
    origin.push_back(g[1]);
  }
  // Bubble sort on target positions.
  for (std::size_t pass = 0; pass < origin.size(); ++pass) {
    for (std::size_t k = 0; k + 1 < origin.size(); ++k) {
      if (origin[k] > origin[k + 1]) {
        p = derive(RuleApp::exch_f(k + 1), std::move(*p));
        std::swap(origin[k], origin[k + 1]);
      }
    }
  }
  return std::move(*p);
}

}  // namespace detail

// CCC proof of a tautology, or nothing for a non-tautology.
inline std::optional<Proof> prove_ccc(const Cirquent& c, const Limits& limits = {}) {
  detail::reject_logical_atoms(c, "prove_ccc");
  if (!is_tautology(c, limits)) return std::nullopt;
  detail::Spine sp{c, {}};
  detail::introduce_conservatively(sp);
  detail::weaken_to_pairs(sp);
  detail::separate_by_contraction(sp);
  Proof p = sp.finish(detail::close_with_axioms(sp.top));
  if (!(p.conclusion == c)) throw Error("internal: prove_ccc reached a different conclusion");
  return p;
}

// CL5 proof of a normal binary tautology; no contraction.
inline Proof prove_normal_binary(const Cirquent& d) {
  detail::Spine sp{d, {}};
  detail::introduce_conservatively(sp);
  detail::weaken_to_pairs(sp);
  detail::separate_by_duplication(sp);
  return sp.finish(detail::close_with_axioms(sp.top));
}

// CL5 proof of an instance of a binary tautology, or nothing.
inline std::optional<Proof> prove_cl5(const Cirquent& c, const Limits& limits = {}) {
  detail::reject_logical_atoms(c, "prove_cl5");
  std::optional<BinaryInstance> bi = decide_binary_instance(c, limits);
  if (!bi) return std::nullopt;
  Proof p = substitute_proof(prove_normal_binary(bi->normal), bi->sigma);
  if (!(p.conclusion == c)) throw Error("internal: prove_cl5 reached a different conclusion");
  return p;
}

// ---------------------------------------------------------------------------
// Sequent calculus

enum class SequentRuleTag { axiom, exchange, weakening, contraction, disj_intro, conj_intro };

struct SequentRule {
  SequentRuleTag tag = SequentRuleTag::axiom;
  std::size_t index = 0;
  std::optional<Formula> formula;

  friend bool operator==(const SequentRule&, const SequentRule&) = default;
};

struct SequentProof {
  Sequent conclusion;
  SequentRule rule;
  std::vector<SequentProof> premises;
};

inline std::string to_string(const SequentRule& r) {
  const std::string i = std::to_string(r.index);
  switch (r.tag) {
    case SequentRuleTag::axiom: return "AX " + to_string(*r.formula);
    case SequentRuleTag::exchange: return "EXCH " + i;
    case SequentRuleTag::weakening: return "WEAK " + i + " " + to_string(*r.formula);
    case SequentRuleTag::contraction: return "CONTR " + i;
    case SequentRuleTag::disj_intro: return "DISJ " + i;
    case SequentRuleTag::conj_intro: return "CONJ " + i;
  }
  return "?";
}

// Conclusion of `r` from the premise sequents. Exchange, contraction and ∨
// act on positions i, i+1; weakening inserts at position i; ∧ joins Γ,F and
// G,Δ with F∧G at position i = |Γ|+1.
inline Sequent apply_sequent_rule(const SequentRule& r, const std::vector<Sequent>& premises) {
  const std::size_t arity =
      r.tag == SequentRuleTag::axiom ? 0 : (r.tag == SequentRuleTag::conj_intro ? 2 : 1);
  if (premises.size() != arity) throw RuleError(to_string(r) + ": wrong number of premises");
  if ((r.tag == SequentRuleTag::axiom || r.tag == SequentRuleTag::weakening) && !r.formula) {
    throw RuleError("rule requires a formula parameter");
  }
  if (r.tag == SequentRuleTag::axiom) return Sequent({negate(*r.formula), *r.formula});
  const std::size_t i = r.index;
  if (r.tag == SequentRuleTag::conj_intro) {
    const auto& a = premises[0].formulas();
    const auto& b = premises[1].formulas();
    if (i != a.size()) throw RuleError(to_string(r) + ": F must end the left premise");
    std::vector<Formula> out(a.begin(), a.end() - 1);
    out.push_back(Formula::conj(a.back(), b.front()));
    out.insert(out.end(), b.begin() + 1, b.end());
    return Sequent(std::move(out));
  }
  std::vector<Formula> fs = premises[0].formulas();
  auto need = [&](bool ok) {
    if (!ok) throw IndexError(to_string(r) + ": index out of range");
  };
  switch (r.tag) {
    case SequentRuleTag::exchange:
      need(i >= 1 && i < fs.size());
      std::swap(fs[i - 1], fs[i]);
      break;
    case SequentRuleTag::weakening:
      need(i >= 1 && i <= fs.size() + 1);
      fs.insert(fs.begin() + static_cast<std::ptrdiff_t>(i - 1), *r.formula);
      break;
    case SequentRuleTag::contraction:
      need(i >= 1 && i < fs.size());
      if (!(fs[i - 1] == fs[i])) throw RuleError("CONTR: the two formulas differ");
      fs.erase(fs.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    case SequentRuleTag::disj_intro:
      need(i >= 1 && i < fs.size());
      fs[i - 1] = Formula::disj(fs[i - 1], fs[i]);
      fs.erase(fs.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    default:
      break;
  }
  return Sequent(std::move(fs));
}

inline SequentProof derive_sequent(const SequentRule& r, std::vector<SequentProof> premises) {
  std::vector<Sequent> ss;
  for (const SequentProof& p : premises) ss.push_back(p.conclusion);
  Sequent c = apply_sequent_rule(r, ss);
  return SequentProof{std::move(c), r, std::move(premises)};
}

// Violations of a sequent proof; contraction is rejected unless allowed.
inline std::vector<Violation> check_sequent_proof(const SequentProof& p,
                                                  bool allow_contraction = false) {
  std::vector<Violation> out;
  std::vector<std::size_t> path;
  auto rec = [&](auto& self, const SequentProof& q) -> void {
    if (!allow_contraction && q.rule.tag == SequentRuleTag::contraction) {
      out.push_back({path, "contraction is not allowed"});
    }
    std::vector<Sequent> ss;
    for (const SequentProof& r : q.premises) ss.push_back(r.conclusion);
    try {
      Sequent got = apply_sequent_rule(q.rule, ss);
      if (!(got == q.conclusion)) {
        out.push_back({path, to_string(q.rule) + ": conclusion should be " + to_string(got)});
      }
    } catch (const Error& e) {
      out.push_back({path, e.what()});
    }
    for (std::size_t k = 0; k < q.premises.size(); ++k) {
      path.push_back(k);
      self(self, q.premises[k]);
      path.pop_back();
    }
  };
  rec(rec, p);
  return out;
}

namespace detail {

// Appends exchanges so that the conclusion reads `target` (a permutation).
inline SequentProof reorder(SequentProof p, const std::vector<Formula>& target) {
  std::vector<Formula> cur = p.conclusion.formulas();
  for (std::size_t t = 0; t < target.size(); ++t) {
    std::size_t at = t;
    while (!(cur[at] == target[t])) ++at;
    for (; at > t; --at) {
      SequentRule r{SequentRuleTag::exchange, at, std::nullopt};
      std::vector<SequentProof> ps;
      ps.push_back(std::move(p));
      p = derive_sequent(r, std::move(ps));
      std::swap(cur[at - 1], cur[at]);
    }
  }
  return p;
}

inline std::vector<Formula> without(std::vector<Formula> fs, std::size_t k) {
  fs.erase(fs.begin() + static_cast<std::ptrdiff_t>(k));
  return fs;
}

// Backward affine search on multisets (sorted vectors), memoized per query.
class AffineSearch {
 public:
  std::optional<SequentProof> prove(std::vector<Formula> ms) {
    std::sort(ms.begin(), ms.end());
    auto it = memo_.find(ms);
    if (it != memo_.end()) return it->second;
    std::optional<SequentProof> result = search(ms);
    memo_.emplace(std::move(ms), result);
    return result;
  }

 private:
  std::optional<SequentProof> search(const std::vector<Formula>& ms) {
    const std::size_t n = ms.size();
    if (n == 2 && ms[0] == negate(ms[1])) {
      return derive_sequent({SequentRuleTag::axiom, 0, ms[1]}, {});
    }
    // Disjunctions are invertible in the affine calculus.
    for (std::size_t k = 0; k < n; ++k) {
      if (ms[k].kind() != Kind::disj) continue;
      std::vector<Formula> rest = without(ms, k);
      std::vector<Formula> premise = rest;
      premise.push_back(ms[k].left());
      premise.push_back(ms[k].right());
      std::optional<SequentProof> sub = prove(premise);
      if (!sub) return std::nullopt;
      std::vector<Formula> order = rest;
      order.push_back(ms[k].left());
      order.push_back(ms[k].right());
      std::vector<SequentProof> ps;
      ps.push_back(reorder(std::move(*sub), order));
      return derive_sequent({SequentRuleTag::disj_intro, n, std::nullopt}, std::move(ps));
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (ms[k].kind() != Kind::conj) continue;
      if (k > 0 && ms[k] == ms[k - 1]) continue;
      const std::vector<Formula> rest = without(ms, k);
      const std::size_t m = rest.size();
      for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        std::vector<Formula> left;
        std::vector<Formula> right;
        for (std::size_t j = 0; j < m; ++j) ((mask >> j) & 1 ? right : left).push_back(rest[j]);
        std::vector<Formula> lp = left;
        lp.push_back(ms[k].left());
        std::optional<SequentProof> a = prove(lp);
        if (!a) continue;
        std::vector<Formula> rp = right;
        rp.push_back(ms[k].right());
        std::optional<SequentProof> b = prove(rp);
        if (!b) continue;
        std::vector<Formula> lo = left;
        lo.push_back(ms[k].left());
        std::vector<Formula> ro{ms[k].right()};
        ro.insert(ro.end(), right.begin(), right.end());
        std::vector<SequentProof> ps;
        ps.push_back(reorder(std::move(*a), lo));
        ps.push_back(reorder(std::move(*b), ro));
        return derive_sequent({SequentRuleTag::conj_intro, lo.size(), std::nullopt},
                              std::move(ps));
      }
    }
    if (n >= 2) {
      for (std::size_t k = 0; k < n; ++k) {
        if (k > 0 && ms[k] == ms[k - 1]) continue;
        std::vector<Formula> rest = without(ms, k);
        std::optional<SequentProof> sub = prove(rest);
        if (!sub) continue;
        std::vector<SequentProof> ps;
        ps.push_back(std::move(*sub));
        return derive_sequent({SequentRuleTag::weakening, n, ms[k]}, std::move(ps));
      }
    }
    return std::nullopt;
  }

  std::map<std::vector<Formula>, std::optional<SequentProof>> memo_;
};

}  // namespace detail

// Complete backward search in affine logic (no contraction). Every backward
// premise has fewer symbols, so the search terminates.
inline std::optional<SequentProof> prove_affine(const Sequent& s, const Limits& limits = {}) {
  std::size_t leaves = 0;
  for (const Formula& f : s.formulas()) {
    if (!is_choice_free(f)) throw Error("prove_affine: choice connectives are not supported");
    leaves += f.oliteral_count();
  }
  if (leaves > limits.max_oliterals) {
    throw CapExceeded(std::to_string(leaves) + " oliterals exceed the cap of " +
                      std::to_string(limits.max_oliterals));
  }
  const auto& fs = s.formulas();
  if (fs.size() == 2 && fs[0] == negate(fs[1])) {
    return derive_sequent({SequentRuleTag::axiom, 0, fs[1]}, {});
  }
  detail::AffineSearch search;
  std::optional<SequentProof> p = search.prove(s.formulas());
  if (!p) return std::nullopt;
  return detail::reorder(std::move(*p), s.formulas());
}

// Primitive cirquent proof of the one-group cirquent of p's conclusion.
inline Proof translate_sequent_proof(const SequentProof& p) {
  if (auto v = check_sequent_proof(p, true); !v.empty()) {
    throw RuleError("invalid sequent proof: " + to_string(v.front()));
  }
  auto rec = [](auto& self, const SequentProof& q) -> Proof {
    std::vector<Proof> ps;
    for (const SequentProof& r : q.premises) ps.push_back(self(self, r));
    const std::size_t i = q.rule.index;
    switch (q.rule.tag) {
      case SequentRuleTag::axiom: return leaf(RuleApp::axiom_id(*q.rule.formula));
      case SequentRuleTag::exchange: return derive(RuleApp::exch_f(i), std::move(ps));
      case SequentRuleTag::contraction: return derive(RuleApp::contract(i), std::move(ps));
      case SequentRuleTag::disj_intro: return derive(RuleApp::disj_intro(i), std::move(ps));
      case SequentRuleTag::weakening: {
        Proof w = derive(RuleApp::weak_pool(i, *q.rule.formula), std::move(ps));
        return derive(RuleApp::weak_group(1, i), std::move(w));
      }
      case SequentRuleTag::conj_intro: {
        Proof m = derive(RuleApp::mix(), std::move(ps));
        return derive(RuleApp::conj_intro(i), std::move(m));
      }
    }
    throw Error("unknown sequent rule");
  };
  return rec(rec, p);
}

// Sequent proof files use the proof-file layout with tags AX F, EXCH i,
// WEAK i F, CONTR i, DISJ i, CONJ i and `expect <sequent>`.
inline std::string write_sequent_proof(const SequentProof& p) {
  std::string out;
  std::size_t next = 1;
  auto rec = [&](auto& self, const SequentProof& q) -> std::size_t {
    std::vector<std::size_t> ids;
    for (const SequentProof& r : q.premises) ids.push_back(self(self, r));
    const std::size_t id = next++;
    out += std::to_string(id) + ": " + to_string(q.rule);
    if (!ids.empty()) {
      out += " from";
      for (std::size_t k : ids) out += " " + std::to_string(k);
    }
    out += " expect " + to_string(q.conclusion) + "\n";
    return id;
  };
  rec(rec, p);
  return out;
}

inline SequentProof read_sequent_proof(std::string_view text) {
  std::map<std::size_t, SequentProof> nodes;
  std::size_t last = 0;
  for (const auto& [no, line] : detail::content_lines(text)) {
    detail::LineReader r(line, no);
    const std::size_t id = r.number();
    r.expect_char(':');
    if (nodes.count(id) != 0) r.fail("duplicate id " + std::to_string(id));
    const std::string tag = r.word();
    SequentRule rule;
    if (tag == "AX") {
      rule = {SequentRuleTag::axiom, 0, r.formula()};
    } else if (tag == "EXCH") {
      rule = {SequentRuleTag::exchange, r.number(), std::nullopt};
    } else if (tag == "WEAK") {
      const std::size_t i = r.number();
      rule = {SequentRuleTag::weakening, i, r.formula()};
    } else if (tag == "CONTR") {
      rule = {SequentRuleTag::contraction, r.number(), std::nullopt};
    } else if (tag == "DISJ") {
      rule = {SequentRuleTag::disj_intro, r.number(), std::nullopt};
    } else if (tag == "CONJ") {
      rule = {SequentRuleTag::conj_intro, r.number(), std::nullopt};
    } else {
      r.fail("unknown sequent rule tag '" + tag + "'");
    }
    std::vector<SequentProof> premises;
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
    std::optional<Sequent> expected;
    if (r.peek_word("expect")) {
      r.word();
      try {
        expected = parse_sequent(r.rest(), ParseOptions{true});
      } catch (const ParseError& e) {
        r.fail(std::string("bad expect clause: ") + e.what());
      }
    }
    if (!r.at_end()) r.fail("unexpected trailing text");
    if (expected) {
      nodes.emplace(id, SequentProof{std::move(*expected), std::move(rule), std::move(premises)});
    } else {
      try {
        nodes.emplace(id, derive_sequent(rule, std::move(premises)));
      } catch (const Error& e) {
        throw RuleError("line " + std::to_string(no) + ": " + e.what());
      }
    }
    last = id;
  }
  auto root = nodes.find(last);
  if (root == nodes.end()) throw ParseError(0, "empty sequent proof file");
  return std::move(root->second);
}

}  // namespace cirquent

#endif  // CIRQUENT_DECIDE_HPP_
