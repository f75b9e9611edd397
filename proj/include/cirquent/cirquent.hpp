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

#ifndef CIRQUENT_CIRQUENT_HPP_
#define CIRQUENT_CIRQUENT_HPP_

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <iterator>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cirquent/error.hpp"
#include "cirquent/formula.hpp"

namespace cirquent {

// Sorted set of 1-based pool indices.
using Group = std::vector<std::size_t>;

inline bool group_contains(const Group& g, std::size_t i) {
  return std::binary_search(g.begin(), g.end(), i);
}

inline Group group_union(const Group& a, const Group& b) {
  Group out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

class Cirquent {
 public:
  struct Unchecked {};

  Cirquent() = default;

  // Sorts and deduplicates each group; throws IndexError on a bad index.
  Cirquent(std::vector<Formula> pool, std::vector<Group> structure)
      : pool_(std::move(pool)), structure_(std::move(structure)) {
    for (Group& g : structure_) {
      std::sort(g.begin(), g.end());
      g.erase(std::unique(g.begin(), g.end()), g.end());
      if (!g.empty() && (g.front() < 1 || g.back() > pool_.size())) {
        throw IndexError("group index out of range 1.." +
                         std::to_string(pool_.size()));
      }
    }
  }

  // Caller guarantees sorted, in-range groups.
  Cirquent(std::vector<Formula> pool, std::vector<Group> structure, Unchecked)
      : pool_(std::move(pool)), structure_(std::move(structure)) {}

  const std::vector<Formula>& pool() const { return pool_; }
  const std::vector<Group>& structure() const { return structure_; }
  std::size_t pool_size() const { return pool_.size(); }
  std::size_t group_count() const { return structure_.size(); }

  const Formula& formula(std::size_t i) const {
    if (i < 1 || i > pool_.size()) throw IndexError("oformula index out of range");
    return pool_[i - 1];
  }
  const Group& group(std::size_t g) const {
    if (g < 1 || g > structure_.size()) throw IndexError("ogroup index out of range");
    return structure_[g - 1];
  }

  friend bool operator==(const Cirquent&, const Cirquent&) = default;

 private:
  std::vector<Formula> pool_;
  std::vector<Group> structure_;
};

inline Cirquent make_cirquent(std::vector<Formula> pool, std::vector<Group> structure) {
  return Cirquent(std::move(pool), std::move(structure));
}

inline Cirquent embed_formula(const Formula& f) {
  return Cirquent({f}, {Group{1}}, Cirquent::Unchecked{});
}

// Replaces ogroups i and i+1 by their union.
inline Cirquent merge_ogroups(const Cirquent& c, std::size_t i) {
  if (i < 1 || i >= c.group_count()) throw IndexError("merge_ogroups: index out of range");
  std::vector<Group> s;
  s.reserve(c.group_count() - 1);
  for (std::size_t g = 0; g < c.group_count(); ++g) {
    if (g + 1 == i) {
      s.push_back(group_union(c.structure()[g], c.structure()[g + 1]));
      ++g;
    } else {
      s.push_back(c.structure()[g]);
    }
  }
  return Cirquent(c.pool(), std::move(s), Cirquent::Unchecked{});
}

// Replaces oformulas i and i+1 by h and redirects their arcs to it.
inline Cirquent merge_oformulas(const Cirquent& c, std::size_t i, const Formula& h) {
  if (i < 1 || i >= c.pool_size()) throw IndexError("merge_oformulas: index out of range");
  std::vector<Formula> pool;
  pool.reserve(c.pool_size() - 1);
  for (std::size_t k = 1; k <= c.pool_size(); ++k) {
    if (k == i) {
      pool.push_back(h);
    } else if (k != i + 1) {
      pool.push_back(c.pool()[k - 1]);
    }
  }
  std::vector<Group> s;
  s.reserve(c.group_count());
  for (const Group& g : c.structure()) {
    Group ng;
    ng.reserve(g.size());
    for (std::size_t k : g) {
      std::size_t m = k <= i ? k : k - 1;
      if (ng.empty() || ng.back() != m) ng.push_back(m);
    }
    s.push_back(std::move(ng));
  }
  return Cirquent(std::move(pool), std::move(s), Cirquent::Unchecked{});
}

inline bool is_homeless(const Cirquent& c, std::size_t i) {
  for (const Group& g : c.structure()) {
    if (group_contains(g, i)) return false;
  }
  return true;
}

// No pool index occurs in two distinct ogroups.
inline bool is_primitive(const Cirquent& c) {
  std::vector<char> seen(c.pool_size() + 1, 0);
  for (const Group& g : c.structure()) {
    for (std::size_t k : g) {
      if (seen[k]) return false;
      seen[k] = 1;
    }
  }
  return true;
}

// Every non-homeless oformula is a literal.
inline bool is_essentially_literal(const Cirquent& c) {
  for (std::size_t i = 1; i <= c.pool_size(); ++i) {
    if (!c.pool()[i - 1].is_literal() && !is_homeless(c, i)) return false;
  }
  return true;
}

// Distinct non-logical atoms of the pool in order of first occurrence.
inline std::vector<Atom> atoms_of(const Cirquent& c) {
  std::vector<Atom> out;
  for (const Formula& f : c.pool()) {
    for_each_literal(f, [&](const Formula& lit) {
      if (lit.atom().is_logical()) return;
      if (std::find(out.begin(), out.end(), lit.atom()) == out.end()) {
        out.push_back(lit.atom());
      }
    });
  }
  return out;
}

inline std::size_t oliteral_count(const Cirquent& c) {
  std::size_t n = 0;
  for (const Formula& f : c.pool()) n += f.oliteral_count();
  return n;
}

inline Cirquent substitute(const Substitution& sigma, const Cirquent& c) {
  std::vector<Formula> pool;
  pool.reserve(c.pool_size());
  for (const Formula& f : c.pool()) pool.push_back(substitute(sigma, f));
  return Cirquent(std::move(pool), c.structure(), Cirquent::Unchecked{});
}

// ---------------------------------------------------------------------------
// Sequents

class Sequent {
 public:
  explicit Sequent(std::vector<Formula> formulas) : formulas_(std::move(formulas)) {
    if (formulas_.empty()) throw Error("a sequent must be nonempty");
  }
  const std::vector<Formula>& formulas() const { return formulas_; }
  std::size_t size() const { return formulas_.size(); }
  const Formula& operator[](std::size_t i) const { return formulas_[i]; }
  friend bool operator==(const Sequent&, const Sequent&) = default;

 private:
  std::vector<Formula> formulas_;
};

inline Cirquent sequent_to_cirquent(const Sequent& s) {
  Group all(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) all[k] = k + 1;
  return Cirquent(s.formulas(), {std::move(all)}, Cirquent::Unchecked{});
}

inline Sequent cirquent_group_to_sequent(const Cirquent& c, std::size_t g) {
  if (!is_primitive(c)) throw Error("cirquent_group_to_sequent: cirquent is not primitive");
  const Group& grp = c.group(g);
  std::vector<Formula> fs;
  for (std::size_t k : grp) fs.push_back(c.pool()[k - 1]);
  return Sequent(std::move(fs));
}

// ---------------------------------------------------------------------------
// Text forms: `[ F1 ; F2 ] {1 2} {2}` and `F1 , F2`.

inline std::string to_string(const Cirquent& c) {
  std::string out = "[";
  for (std::size_t i = 0; i < c.pool_size(); ++i) {
    out += i == 0 ? " " : " ; ";
    out += to_string(c.pool()[i]);
  }
  out += c.pool_size() == 0 ? "]" : " ]";
  for (const Group& g : c.structure()) {
    out += " {";
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(g[k]);
    }
    out += '}';
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Cirquent& c) {
  return os << to_string(c);
}

inline std::string to_string(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += " , ";
    out += to_string(s[i]);
  }
  return out;
}

inline Cirquent parse_cirquent(std::string_view text, ParseOptions options = {}) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos >= text.size() || text[pos] != '[') throw ParseError(pos, "expected '['");
  ++pos;
  std::vector<Formula> pool;
  skip();
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    for (;;) {
      pool.push_back(parse_formula_prefix(text, pos, options));
      skip();
      if (pos < text.size() && text[pos] == ';') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ']') {
        ++pos;
        break;
      }
      throw ParseError(pos, "expected ';' or ']'");
    }
  }
  std::vector<Group> structure;
  for (;;) {
    skip();
    if (pos >= text.size()) break;
    if (text[pos] != '{') throw ParseError(pos, "expected '{'");
    ++pos;
    Group g;
    for (;;) {
      skip();
      if (pos < text.size() && text[pos] == '}') {
        ++pos;
        break;
      }
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw ParseError(pos, "expected index or '}'");
      }
      const std::size_t start = pos;
      std::size_t v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (v > 1000000) throw ParseError(start, "index too large");
        ++pos;
      }
      if (v < 1 || v > pool.size()) {
        throw ParseError(start, "group index " + std::to_string(v) + " out of range");
      }
      g.push_back(v);
    }
    structure.push_back(std::move(g));
  }
  return Cirquent(std::move(pool), std::move(structure));
}

inline Sequent parse_sequent(std::string_view text, ParseOptions options = {}) {
  std::vector<Formula> fs;
  std::size_t pos = 0;
  for (;;) {
    fs.push_back(parse_formula_prefix(text, pos, options));
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    if (text[pos] != ',') throw ParseError(pos, "expected ','");
    ++pos;
  }
  return Sequent(std::move(fs));
}

}  // namespace cirquent

#endif  // CIRQUENT_CIRQUENT_HPP_
