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

// Negation-normal formulas over general and elementary atoms with the
// parallel (&, |) and choice (*, +) connectives.

#ifndef CIRQUENT_FORMULA_HPP_
#define CIRQUENT_FORMULA_HPP_

#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cirquent/error.hpp"

namespace cirquent {

enum class AtomSort : std::uint8_t { general, elementary, top, bottom };

struct Atom {
  std::string name;
  AtomSort sort = AtomSort::general;

  static Atom general(std::string n) { return {std::move(n), AtomSort::general}; }
  static Atom elementary(std::string n) {
    return {std::move(n), AtomSort::elementary};
  }
  static Atom top() { return {"$T", AtomSort::top}; }
  static Atom bottom() { return {"$F", AtomSort::bottom}; }

  bool is_logical() const {
    return sort == AtomSort::top || sort == AtomSort::bottom;
  }
  bool is_general() const { return sort == AtomSort::general; }

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

enum class Kind : std::uint8_t { literal, conj, disj, ch_conj, ch_disj };

enum class Step : std::uint8_t { left, right };

// Path from a formula root to one of its subformula occurrences.
using OccRef = std::vector<Step>;

class Formula {
 public:
  // Literal over `atom`; a negated logical atom becomes the dual constant.
  static Formula literal(const Atom& atom, bool negative = false);
  static Formula make(Kind kind, Formula left, Formula right);

  static Formula conj(Formula l, Formula r) {
    return make(Kind::conj, std::move(l), std::move(r));
  }
  static Formula disj(Formula l, Formula r) {
    return make(Kind::disj, std::move(l), std::move(r));
  }
  static Formula ch_conj(Formula l, Formula r) {
    return make(Kind::ch_conj, std::move(l), std::move(r));
  }
  static Formula ch_disj(Formula l, Formula r) {
    return make(Kind::ch_disj, std::move(l), std::move(r));
  }

  Kind kind() const;
  bool is_literal() const { return kind() == Kind::literal; }
  bool is_choice() const { return kind() == Kind::ch_conj || kind() == Kind::ch_disj; }
  bool negative() const;
  const Atom& atom() const;
  const Formula& left() const;
  const Formula& right() const;
  std::size_t oliteral_count() const;
  // Atoms, negation signs and binary connectives.
  std::size_t symbol_count() const;
  std::size_t hash() const;
  bool same_node(const Formula& other) const { return node_ == other.node_; }

  friend bool operator==(const Formula& a, const Formula& b);
  // Structural total order, used for canonical multisets.
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node;
  Formula() = default;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Kind kind = Kind::literal;
  bool negative = false;
  Atom atom;
  Formula left;
  Formula right;
  std::size_t oliterals = 0;
  std::size_t symbols = 0;
  std::size_t hash = 0;
};

inline Formula Formula::literal(const Atom& atom, bool negative) {
  if (atom.is_logical() && negative) {
    return literal(atom.sort == AtomSort::top ? Atom::bottom() : Atom::top());
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::literal;
  n->negative = negative;
  n->atom = atom;
  n->oliterals = 1;
  n->symbols = negative ? 2 : 1;
  n->hash = std::hash<std::string>{}(atom.name) * 31 +
            static_cast<std::size_t>(atom.sort) * 7 + (negative ? 1 : 0);
  return Formula(std::move(n));
}

inline Formula Formula::make(Kind kind, Formula left, Formula right) {
  if (kind == Kind::literal) throw Error("Formula::make: literal kind");
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->oliterals = left.oliteral_count() + right.oliteral_count();
  n->symbols = left.symbol_count() + right.symbol_count() + 1;
  n->hash = (left.hash() * 1000003u) ^
            (right.hash() + 0x9e3779b97f4a7c15u + (static_cast<std::size_t>(kind) << 6));
  n->left = std::move(left);
  n->right = std::move(right);
  return Formula(std::move(n));
}

inline Kind Formula::kind() const { return node_->kind; }
inline bool Formula::negative() const { return node_->negative; }
inline const Atom& Formula::atom() const { return node_->atom; }
inline const Formula& Formula::left() const { return node_->left; }
inline const Formula& Formula::right() const { return node_->right; }
inline std::size_t Formula::oliteral_count() const { return node_->oliterals; }
inline std::size_t Formula::symbol_count() const { return node_->symbols; }
inline std::size_t Formula::hash() const { return node_->hash; }

inline bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const Formula::Node& x = *a.node_;
  const Formula::Node& y = *b.node_;
  if (x.hash != y.hash || x.kind != y.kind || x.oliterals != y.oliterals) return false;
  if (x.kind == Kind::literal) return x.negative == y.negative && x.atom == y.atom;
  return x.left == y.left && x.right == y.right;
}

inline std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const Formula::Node& x = *a.node_;
  const Formula::Node& y = *b.node_;
  if (auto c = x.kind <=> y.kind; c != 0) return c;
  if (x.kind == Kind::literal) {
    if (auto c = x.atom <=> y.atom; c != 0) return c;
    return x.negative <=> y.negative;
  }
  if (auto c = x.left <=> y.left; c != 0) return c;
  return x.right <=> y.right;
}

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

inline Formula negate(const Formula& f) {
  switch (f.kind()) {
    case Kind::literal:
      return Formula::literal(f.atom(), !f.negative());
    case Kind::conj:
      return Formula::disj(negate(f.left()), negate(f.right()));
    case Kind::disj:
      return Formula::conj(negate(f.left()), negate(f.right()));
    case Kind::ch_conj:
      return Formula::ch_disj(negate(f.left()), negate(f.right()));
    case Kind::ch_disj:
      return Formula::ch_conj(negate(f.left()), negate(f.right()));
  }
  return f;
}

// ---------------------------------------------------------------------------
// Printing

namespace detail {

inline int precedence(Kind k) {
  switch (k) {
    case Kind::disj: return 1;
    case Kind::conj: return 2;
    case Kind::ch_disj: return 3;
    case Kind::ch_conj: return 4;
    case Kind::literal: return 5;
  }
  return 5;
}

inline const char* symbol(Kind k) {
  switch (k) {
    case Kind::disj: return " | ";
    case Kind::conj: return " & ";
    case Kind::ch_disj: return " + ";
    case Kind::ch_conj: return " * ";
    case Kind::literal: return "";
  }
  return "";
}

inline void print_to(const Formula& f, std::string& out) {
  if (f.is_literal()) {
    if (f.negative()) out += '!';
    out += f.atom().name;
    return;
  }
  const int p = precedence(f.kind());
  const bool wrap_left = precedence(f.left().kind()) < p;
  const bool wrap_right = precedence(f.right().kind()) <= p;
  if (wrap_left) out += '(';
  print_to(f.left(), out);
  if (wrap_left) out += ')';
  out += symbol(f.kind());
  if (wrap_right) out += '(';
  print_to(f.right(), out);
  if (wrap_right) out += ')';
}

}  // namespace detail

inline std::string to_string(const Formula& f) {
  std::string out;
  detail::print_to(f, out);
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Formula& f) {
  return os << to_string(f);
}

// ---------------------------------------------------------------------------
// Parsing

struct ParseOptions {
  // Admit the reserved fresh-atom names `_g<n>` and `_e<n>`.
  bool allow_reserved = false;
};

namespace detail {

class FormulaParser {
 public:
  FormulaParser(std::string_view text, std::size_t pos, ParseOptions options)
      : text_(text), pos_(pos), options_(options) {}

  Formula parse_implication() {
    Formula lhs = parse_binary(1);
    const std::size_t before = pos_;
    skip_space();
    if (text_.substr(pos_, 2) == "->") {
      pos_ += 2;
      Formula rhs = parse_implication();
      return Formula::disj(negate(lhs), rhs);
    }
    pos_ = before;
    return lhs;
  }

  std::size_t position() const { return pos_; }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

 private:
  static std::optional<Kind> op_kind(char c) {
    switch (c) {
      case '|': return Kind::disj;
      case '&': return Kind::conj;
      case '+': return Kind::ch_disj;
      case '*': return Kind::ch_conj;
      default: return std::nullopt;
    }
  }

  // Precedence climbing over the four left-associative connectives.
  Formula parse_binary(int level) {
    if (level > 4) return parse_unary();
    Formula lhs = parse_binary(level + 1);
    for (;;) {
      const std::size_t before = pos_;
      skip_space();
      auto k = pos_ < text_.size() ? op_kind(text_[pos_]) : std::nullopt;
      if (!k || precedence(*k) != level) {
        pos_ = before;
        break;
      }
      ++pos_;
      Formula rhs = parse_binary(level + 1);
      lhs = Formula::make(*k, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Formula parse_unary() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    const char c = text_[pos_];
    if (c == '!') {
      ++pos_;
      return negate(parse_unary());
    }
    if (c == '(') {
      ++pos_;
      Formula inner = parse_implication();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') {
        throw ParseError(pos_, "expected ')'");
      }
      ++pos_;
      return inner;
    }
    return Formula::literal(parse_atom());
  }

  Atom parse_atom() {
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c == '$') {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == 'T') {
        pos_ += 2;
        return Atom::top();
      }
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == 'F') {
        pos_ += 2;
        return Atom::bottom();
      }
      throw ParseError(start, "expected $T or $F");
    }
    auto is_word = [](char ch) {
      return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
    };
    if (std::isupper(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && is_word(text_[pos_])) ++pos_;
      return Atom::general(std::string(text_.substr(start, pos_ - start)));
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() &&
             (std::islower(static_cast<unsigned char>(text_[pos_])) ||
              std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        ++pos_;
      }
      return Atom::elementary(std::string(text_.substr(start, pos_ - start)));
    }
    if (c == '_' && pos_ + 2 < text_.size() &&
        (text_[pos_ + 1] == 'g' || text_[pos_ + 1] == 'e') &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 2]))) {
      pos_ += 2;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      if (!options_.allow_reserved) {
        throw ParseError(start, "reserved atom name");
      }
      std::string name(text_.substr(start, pos_ - start));
      return name[1] == 'g' ? Atom::general(std::move(name))
                            : Atom::elementary(std::move(name));
    }
    throw ParseError(start, std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_;
  ParseOptions options_;
};

}  // namespace detail

// Parses a formula starting at `pos` and stops at the first token that cannot
// continue it; `pos` is left just past the formula.
inline Formula parse_formula_prefix(std::string_view text, std::size_t& pos,
                                    ParseOptions options = {}) {
  detail::FormulaParser parser(text, pos, options);
  Formula f = parser.parse_implication();
  pos = parser.position();
  return f;
}

inline Formula parse_formula(std::string_view text, ParseOptions options = {}) {
  detail::FormulaParser parser(text, 0, options);
  Formula f = parser.parse_implication();
  parser.skip_space();
  if (parser.position() != text.size()) {
    throw ParseError(parser.position(), "unexpected trailing input");
  }
  return f;
}

// ---------------------------------------------------------------------------
// Traversal and predicates

struct OLiteral {
  OccRef path;
  bool negative = false;
  Atom atom;
};

template <typename Fn>
void for_each_literal(const Formula& f, Fn&& fn) {
  if (f.is_literal()) {
    fn(f);
    return;
  }
  for_each_literal(f.left(), fn);
  for_each_literal(f.right(), fn);
}

inline std::vector<OLiteral> oliterals(const Formula& f) {
  std::vector<OLiteral> out;
  OccRef path;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    if (g.is_literal()) {
      out.push_back({path, g.negative(), g.atom()});
      return;
    }
    path.push_back(Step::left);
    walk(g.left());
    path.back() = Step::right;
    walk(g.right());
    path.pop_back();
  };
  walk(f);
  return out;
}

// Distinct non-logical atoms in order of first occurrence.
inline std::vector<Atom> atoms_of(const Formula& f) {
  std::vector<Atom> out;
  for_each_literal(f, [&](const Formula& lit) {
    if (lit.atom().is_logical()) return;
    for (const Atom& a : out) {
      if (a == lit.atom()) return;
    }
    out.push_back(lit.atom());
  });
  return out;
}

inline bool is_choice_free(const Formula& f) {
  if (f.is_literal()) return true;
  if (f.is_choice()) return false;
  return is_choice_free(f.left()) && is_choice_free(f.right());
}

// No elementary atoms (logical ones included) and no choice connectives.
inline bool is_cl5_formula(const Formula& f) {
  if (f.is_literal()) return f.atom().is_general();
  if (f.is_choice()) return false;
  return is_cl5_formula(f.left()) && is_cl5_formula(f.right());
}

// No general atoms and no choice connectives.
inline bool is_elementary(const Formula& f) {
  if (f.is_literal()) return !f.atom().is_general();
  if (f.is_choice()) return false;
  return is_elementary(f.left()) && is_elementary(f.right());
}

inline const Formula& subformula_at(const Formula& f, const OccRef& path) {
  const Formula* cur = &f;
  for (Step s : path) {
    if (cur->is_literal()) throw IndexError("occurrence path leaves the formula");
    cur = s == Step::left ? &cur->left() : &cur->right();
  }
  return *cur;
}

inline Formula replace_at(const Formula& f, const OccRef& path,
                          const Formula& replacement, std::size_t depth = 0) {
  if (depth == path.size()) return replacement;
  if (f.is_literal()) throw IndexError("occurrence path leaves the formula");
  if (path[depth] == Step::left) {
    return Formula::make(f.kind(), replace_at(f.left(), path, replacement, depth + 1),
                         f.right());
  }
  return Formula::make(f.kind(), f.left(),
                       replace_at(f.right(), path, replacement, depth + 1));
}

inline std::string path_to_string(const OccRef& path) {
  if (path.empty()) return ".";
  std::string s;
  for (Step st : path) s += st == Step::left ? 'L' : 'R';
  return s;
}

inline OccRef path_from_string(std::string_view s) {
  OccRef path;
  if (s == ".") return path;
  for (char c : s) {
    if (c == 'L') {
      path.push_back(Step::left);
    } else if (c == 'R') {
      path.push_back(Step::right);
    } else {
      throw ParseError(0, "bad occurrence path '" + std::string(s) + "'");
    }
  }
  return path;
}

// ---------------------------------------------------------------------------
// Substitutions

class Substitution {
 public:
  Substitution() = default;

  // Binds `atom` to `image`; identity bindings are dropped.
  void set(const Atom& atom, const Formula& image) {
    if (atom.is_logical()) throw Error("logical atoms cannot be substituted");
    if (image.is_literal() && !image.negative() && image.atom() == atom) {
      map_.erase(atom);
      return;
    }
    map_.insert_or_assign(atom, image);
  }

  const Formula* find(const Atom& atom) const {
    auto it = map_.find(atom);
    return it == map_.end() ? nullptr : &it->second;
  }

  Formula image(const Atom& atom) const {
    const Formula* f = find(atom);
    return f ? *f : Formula::literal(atom);
  }

  bool empty() const { return map_.empty(); }
  const std::map<Atom, Formula>& entries() const { return map_; }

  // Every image is a positive literal.
  bool is_atomic_level() const {
    for (const auto& [atom, f] : map_) {
      if (!f.is_literal() || f.negative()) return false;
    }
    return true;
  }

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::map<Atom, Formula> map_;
};

inline Formula substitute(const Substitution& sigma, const Formula& f) {
  if (sigma.empty()) return f;
  if (f.is_literal()) {
    const Formula* img = sigma.find(f.atom());
    if (!img) return f;
    return f.negative() ? negate(*img) : *img;
  }
  Formula l = substitute(sigma, f.left());
  Formula r = substitute(sigma, f.right());
  if (l.same_node(f.left()) && r.same_node(f.right())) return f;
  return Formula::make(f.kind(), std::move(l), std::move(r));
}

// (second ∘ first)(P) = second(first(P)).
inline Substitution compose(const Substitution& second, const Substitution& first) {
  Substitution out;
  for (const auto& [atom, img] : second.entries()) {
    if (!first.find(atom)) out.set(atom, img);
  }
  for (const auto& [atom, img] : first.entries()) {
    out.set(atom, substitute(second, img));
  }
  return out;
}

namespace detail {

inline bool match_into(const Formula& pattern, const Formula& target,
                       std::map<Atom, Formula>& binding) {
  if (pattern.is_literal()) {
    if (pattern.atom().is_logical()) return pattern == target;
    Formula image = pattern.negative() ? negate(target) : target;
    auto [it, inserted] = binding.try_emplace(pattern.atom(), image);
    return inserted || it->second == image;
  }
  if (pattern.kind() != target.kind()) return false;
  return match_into(pattern.left(), target.left(), binding) &&
         match_into(pattern.right(), target.right(), binding);
}

}  // namespace detail

// The substitution on the atoms of `pattern` taking it to `target`, if any.
inline std::optional<Substitution> match_instance(const Formula& pattern,
                                                  const Formula& target) {
  std::map<Atom, Formula> binding;
  if (!detail::match_into(pattern, target, binding)) return std::nullopt;
  Substitution sigma;
  for (const auto& [atom, img] : binding) sigma.set(atom, img);
  return sigma;
}

}  // namespace cirquent

#endif  // CIRQUENT_FORMULA_HPP_
