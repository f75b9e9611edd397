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

// Classical truth, occurrence-level situations, tautologicity and binarity.

#ifndef CIRQUENT_SEMANTICS_HPP_
#define CIRQUENT_SEMANTICS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cirquent/cirquent.hpp"
#include "cirquent/error.hpp"
#include "cirquent/formula.hpp"

namespace cirquent {

using Model = std::map<Atom, bool>;

// One bit per non-logical oatom, in oliteral order.
using OSituation = std::vector<bool>;

inline OSituation situation_from_string(std::string_view bits) {
  OSituation s;
  for (char c : bits) {
    if (c != '0' && c != '1') throw ParseError(s.size(), "situation bits must be 0 or 1");
    s.push_back(c == '1');
  }
  return s;
}

inline std::string situation_to_string(const OSituation& s) {
  std::string out;
  for (bool b : s) out += b ? '1' : '0';
  return out;
}

// ---------------------------------------------------------------------------
// Bit-parallel truth tables. Row r assigns variable k the bit (n-1-k) of r, so
// variable 0 is the leftmost bit and rows ascend in bit-string order.

class BitTable {
 public:
  BitTable() = default;
  BitTable(unsigned vars, bool value) : vars_(vars) {
    words_.assign(word_count(vars), value ? ~std::uint64_t{0} : 0);
    if (value) trim();
  }

  static BitTable variable(unsigned vars, unsigned k) {
    static constexpr std::uint64_t kPattern[6] = {
        0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
        0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
    BitTable t(vars, false);
    const unsigned shift = vars - 1 - k;
    for (std::size_t w = 0; w < t.words_.size(); ++w) {
      if (shift < 6) {
        t.words_[w] = kPattern[shift];
      } else {
        t.words_[w] = ((w >> (shift - 6)) & 1) ? ~std::uint64_t{0} : 0;
      }
    }
    t.trim();
    return t;
  }

  unsigned vars() const { return vars_; }
  std::size_t rows() const { return std::size_t{1} << vars_; }

  bool get(std::size_t row) const { return (words_[row >> 6] >> (row & 63)) & 1; }
  void set(std::size_t row, bool v) {
    if (v) {
      words_[row >> 6] |= std::uint64_t{1} << (row & 63);
    } else {
      words_[row >> 6] &= ~(std::uint64_t{1} << (row & 63));
    }
  }

  BitTable& operator&=(const BitTable& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }
  BitTable& operator|=(const BitTable& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  void flip() {
    for (std::uint64_t& w : words_) w = ~w;
    trim();
  }

  bool all() const {
    BitTable full(vars_, true);
    return words_ == full.words_;
  }
  bool none() const {
    for (std::uint64_t w : words_) {
      if (w) return false;
    }
    return true;
  }

  friend bool operator==(const BitTable&, const BitTable&) = default;

 private:
  static std::size_t word_count(unsigned vars) {
    return vars <= 6 ? 1 : (std::size_t{1} << (vars - 6));
  }
  void trim() {
    if (vars_ < 6) words_[0] &= (std::uint64_t{1} << (1u << vars_)) - 1;
  }

  unsigned vars_ = 0;
  std::vector<std::uint64_t> words_;
};

namespace detail {

// Table of `f`; `var_of(literal)` gives the variable of a non-logical literal.
template <typename VarOf>
BitTable formula_table(const Formula& f, unsigned vars, VarOf& var_of) {
  if (f.is_literal()) {
    if (f.atom().is_logical()) return BitTable(vars, f.atom().sort == AtomSort::top);
    BitTable t = BitTable::variable(vars, var_of(f));
    if (f.negative()) t.flip();
    return t;
  }
  if (f.is_choice()) throw Error("classical evaluation of a choice connective");
  BitTable l = formula_table(f.left(), vars, var_of);
  BitTable r = formula_table(f.right(), vars, var_of);
  if (f.kind() == Kind::conj) {
    l &= r;
  } else {
    l |= r;
  }
  return l;
}

// Single-word variant for at most six variables.
template <typename VarOf>
std::uint64_t formula_word(const Formula& f, unsigned vars, VarOf& var_of) {
  static constexpr std::uint64_t kPattern[6] = {
      0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
      0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
  if (f.is_literal()) {
    if (f.atom().is_logical()) return f.atom().sort == AtomSort::top ? ~std::uint64_t{0} : 0;
    const std::uint64_t v = kPattern[vars - 1 - static_cast<unsigned>(var_of(f))];
    return f.negative() ? ~v : v;
  }
  if (f.is_choice()) throw Error("classical evaluation of a choice connective");
  const std::uint64_t l = formula_word(f.left(), vars, var_of);
  const std::uint64_t r = formula_word(f.right(), vars, var_of);
  return f.kind() == Kind::conj ? (l & r) : (l | r);
}

inline std::uint64_t row_mask(unsigned vars) {
  return vars >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1u << vars)) - 1;
}

// Variable lookup by atom identity (models).
struct AtomVars {
  const std::vector<Atom>* atoms;
  unsigned operator()(const Formula& lit) const {
    for (unsigned k = 0; k < atoms->size(); ++k) {
      if ((*atoms)[k] == lit.atom()) return k;
    }
    throw Error("atom " + lit.atom().name + " is not assigned");
  }
};

// Variable lookup by occurrence (situations).
struct OccurrenceVars {
  unsigned next = 0;
  unsigned operator()(const Formula&) { return next++; }
};

inline void check_atom_cap(std::size_t n, const Limits& limits) {
  if (n > limits.max_atoms) {
    throw CapExceeded(std::to_string(n) + " atoms exceed the cap of " +
                      std::to_string(limits.max_atoms));
  }
}

}  // namespace detail

// Truth table of `c` over the given variables: each group is the disjunction
// of its members and the cirquent the conjunction of its groups.
template <typename VarOf>
BitTable cirquent_table(const Cirquent& c, unsigned vars, VarOf var_of) {
  std::vector<BitTable> tables;
  tables.reserve(c.pool_size());
  for (const Formula& f : c.pool()) tables.push_back(detail::formula_table(f, vars, var_of));
  BitTable result(vars, true);
  for (const Group& g : c.structure()) {
    BitTable gt(vars, false);
    for (std::size_t k : g) gt |= tables[k - 1];
    result &= gt;
  }
  return result;
}

inline std::size_t situation_length(const Formula& f) {
  std::size_t n = 0;
  for_each_literal(f, [&](const Formula& lit) { n += lit.atom().is_logical() ? 0 : 1; });
  return n;
}

inline std::size_t situation_length(const Cirquent& c) {
  std::size_t n = 0;
  for (const Formula& f : c.pool()) n += situation_length(f);
  return n;
}

// ---------------------------------------------------------------------------
// Point evaluation

namespace detail {

template <typename Leaf>
bool eval_formula(const Formula& f, Leaf& leaf) {
  if (f.is_literal()) {
    if (f.atom().is_logical()) return f.atom().sort == AtomSort::top;
    return leaf(f) != f.negative();
  }
  if (f.is_choice()) throw Error("classical evaluation of a choice connective");
  const bool l = eval_formula(f.left(), leaf);
  const bool r = eval_formula(f.right(), leaf);
  return f.kind() == Kind::conj ? (l && r) : (l || r);
}

template <typename Leaf>
bool eval_cirquent(const Cirquent& c, Leaf& leaf) {
  std::vector<bool> value;
  value.reserve(c.pool_size());
  for (const Formula& f : c.pool()) value.push_back(eval_formula(f, leaf));
  for (const Group& g : c.structure()) {
    bool any = false;
    for (std::size_t k : g) any = any || value[k - 1];
    if (!any) return false;
  }
  return true;
}

struct ModelLeaf {
  const Model* m;
  bool operator()(const Formula& lit) const {
    auto it = m->find(lit.atom());
    if (it == m->end()) throw Error("model does not assign atom " + lit.atom().name);
    return it->second;
  }
};

struct SituationLeaf {
  const OSituation* s;
  std::size_t next = 0;
  bool operator()(const Formula&) { return (*s)[next++]; }
};

}  // namespace detail

inline bool eval_model(const Formula& f, const Model& m) {
  detail::ModelLeaf leaf{&m};
  return detail::eval_formula(f, leaf);
}

inline bool eval_model(const Cirquent& c, const Model& m) {
  detail::ModelLeaf leaf{&m};
  return detail::eval_cirquent(c, leaf);
}

inline bool eval_situation(const Formula& f, const OSituation& s) {
  if (s.size() != situation_length(f)) throw Error("situation length mismatch");
  detail::SituationLeaf leaf{&s};
  return detail::eval_formula(f, leaf);
}

inline bool eval_situation(const Cirquent& c, const OSituation& s) {
  if (s.size() != situation_length(c)) throw Error("situation length mismatch");
  detail::SituationLeaf leaf{&s};
  return detail::eval_cirquent(c, leaf);
}

// ---------------------------------------------------------------------------
// Tautologicity

// Tautologicity of `c` where `var_of(literal)` numbers each non-logical
// literal occurrence (called in oliteral order) among `vars` variables.
template <typename VarOf>
bool is_tautology_over(const Cirquent& c, unsigned vars, VarOf var_of) {
  if (vars <= 6) {
    // Groups are checked one by one; a cirquent is tautological iff each of
    // its groups is.
    const std::uint64_t mask = detail::row_mask(vars);
    std::uint64_t stack[16];
    std::vector<std::uint64_t> heap;
    std::uint64_t* value = stack;
    if (c.pool_size() > 16) {
      heap.resize(c.pool_size());
      value = heap.data();
    }
    for (std::size_t k = 0; k < c.pool_size(); ++k) {
      const Formula& f = c.pool()[k];
      value[k] = vars == 0 ? (detail::eval_formula(f, var_of) ? mask : 0)
                           : detail::formula_word(f, vars, var_of) & mask;
    }
    for (const Group& g : c.structure()) {
      std::uint64_t acc = 0;
      for (std::size_t k : g) acc |= value[k - 1];
      if (acc != mask) return false;
    }
    return true;
  }
  return cirquent_table(c, vars, var_of).all();
}

inline bool is_tautology(const Cirquent& c, const Limits& limits = {}) {
  const std::vector<Atom> atoms = atoms_of(c);
  detail::check_atom_cap(atoms.size(), limits);
  return is_tautology_over(c, static_cast<unsigned>(atoms.size()), detail::AtomVars{&atoms});
}

inline bool is_tautology(const Formula& f, const Limits& limits = {}) {
  return is_tautology(embed_formula(f), limits);
}

// ---------------------------------------------------------------------------
// Binarity

enum class Binarity { not_binary, binary, normal_binary };

inline const char* to_string(Binarity b) {
  switch (b) {
    case Binarity::not_binary: return "not_binary";
    case Binarity::binary: return "binary";
    case Binarity::normal_binary: return "normal_binary";
  }
  return "?";
}

// Logical atoms are not counted.
inline Binarity binarity(const Cirquent& c) {
  std::map<Atom, std::pair<int, int>> count;  // (negative, positive)
  for (const Formula& f : c.pool()) {
    for_each_literal(f, [&](const Formula& lit) {
      if (lit.atom().is_logical()) return;
      auto& [neg, pos] = count[lit.atom()];
      (lit.negative() ? neg : pos) += 1;
    });
  }
  bool normal = true;
  for (const auto& [atom, np] : count) {
    const int total = np.first + np.second;
    if (total > 2) return Binarity::not_binary;
    if (total == 2 && np.first != 1) normal = false;
  }
  return normal ? Binarity::normal_binary : Binarity::binary;
}

inline Binarity binarity(const Formula& f) { return binarity(embed_formula(f)); }

// Generator of atoms `<prefix><n>` that do not occur in a given object.
class FreshAtoms {
 public:
  FreshAtoms(AtomSort sort, std::set<std::string> taken)
      : sort_(sort), taken_(std::move(taken)) {}

  static FreshAtoms general_for(const Cirquent& c) {
    return FreshAtoms(AtomSort::general, names_in(c));
  }
  static FreshAtoms elementary_for(const Cirquent& c) {
    return FreshAtoms(AtomSort::elementary, names_in(c));
  }

  Atom next() {
    const char* prefix = sort_ == AtomSort::general ? "_g" : "_e";
    for (;;) {
      std::string name = prefix + std::to_string(++counter_);
      if (taken_.insert(name).second) return Atom{name, sort_};
    }
  }

  static std::set<std::string> names_in(const Cirquent& c) {
    std::set<std::string> names;
    for (const Formula& f : c.pool()) {
      for_each_literal(f, [&](const Formula& lit) { names.insert(lit.atom().name); });
    }
    return names;
  }

 private:
  AtomSort sort_;
  std::set<std::string> taken_;
  std::size_t counter_ = 0;
};

namespace detail {

inline Formula rename_second_occurrences(const Formula& f, std::map<Atom, int>& seen_neg,
                                         std::map<Atom, int>& seen_pos, FreshAtoms& fresh,
                                         const std::map<Atom, std::pair<int, int>>& count,
                                         Substitution& sigma) {
  if (f.is_literal()) {
    if (f.atom().is_logical()) return f;
    const auto& np = count.at(f.atom());
    const int same_sign = f.negative() ? np.first : np.second;
    int& seen = f.negative() ? seen_neg[f.atom()] : seen_pos[f.atom()];
    ++seen;
    if (same_sign == 2 && seen == 2) {
      Atom q = fresh.next();
      sigma.set(q, Formula::literal(f.atom()));
      return Formula::literal(q, f.negative());
    }
    return f;
  }
  Formula l = rename_second_occurrences(f.left(), seen_neg, seen_pos, fresh, count, sigma);
  Formula r = rename_second_occurrences(f.right(), seen_neg, seen_pos, fresh, count, sigma);
  return Formula::make(f.kind(), std::move(l), std::move(r));
}

}  // namespace detail

// For binary `b`, a normal binary cirquent c and an atomic-level σ with
// σ(c) = b: the second of two same-sign occurrences of an atom is renamed to a
// fresh `_g` atom.
inline std::pair<Cirquent, Substitution> normalize_binary(const Cirquent& b) {
  if (binarity(b) == Binarity::not_binary) throw Error("normalize_binary: input is not binary");
  std::map<Atom, std::pair<int, int>> count;
  for (const Formula& f : b.pool()) {
    for_each_literal(f, [&](const Formula& lit) {
      if (lit.atom().is_logical()) return;
      auto& [neg, pos] = count[lit.atom()];
      (lit.negative() ? neg : pos) += 1;
    });
  }
  FreshAtoms fresh = FreshAtoms::general_for(b);
  std::map<Atom, int> seen_neg;
  std::map<Atom, int> seen_pos;
  Substitution sigma;
  std::vector<Formula> pool;
  for (const Formula& f : b.pool()) {
    pool.push_back(
        detail::rename_second_occurrences(f, seen_neg, seen_pos, fresh, count, sigma));
  }
  return {Cirquent(std::move(pool), b.structure(), Cirquent::Unchecked{}), sigma};
}

inline std::pair<Formula, Substitution> normalize_binary(const Formula& f) {
  auto [c, sigma] = normalize_binary(embed_formula(f));
  return {c.pool()[0], sigma};
}

}  // namespace cirquent

#endif  // CIRQUENT_SEMANTICS_HPP_
