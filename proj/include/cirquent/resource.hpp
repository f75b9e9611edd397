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

// Abstract resources: interfaces, monotone truth functions, the resource
// operations, denotations of formulas and cirquents, representation by
// literal cirquents, and triviality via arrangements.

#ifndef CIRQUENT_RESOURCE_HPP_
#define CIRQUENT_RESOURCE_HPP_

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cirquent/cirquent.hpp"
#include "cirquent/decide.hpp"
#include "cirquent/error.hpp"
#include "cirquent/formula.hpp"
#include "cirquent/inference.hpp"
#include "cirquent/semantics.hpp"

namespace cirquent {

enum class Gender : std::uint8_t { input, output };

struct Port {
  Atom atom;
  Gender gender = Gender::output;

  bool is_input() const { return gender == Gender::input; }
  friend bool operator==(const Port&, const Port&) = default;
};

using Interface = std::vector<Port>;

inline Port make_port(const Atom& atom, Gender gender) {
  if (!atom.is_general()) throw Error("ports are built from general atoms, not " + atom.name);
  return Port{atom, gender};
}

inline std::string to_string(const Port& p) { return (p.is_input() ? "-" : "") + p.atom.name; }

inline Interface reversed(Interface ports) {
  for (Port& p : ports) p.gender = p.is_input() ? Gender::output : Gender::input;
  return ports;
}

// s ≤_I s': outputs may only rise and inputs may only fall.
inline bool leq(const Interface& ports, const OSituation& s, const OSituation& t) {
  if (s.size() != ports.size() || t.size() != ports.size()) {
    throw Error("situation length does not match the interface");
  }
  for (std::size_t i = 0; i < ports.size(); ++i) {
    if (ports[i].is_input() ? (t[i] > s[i]) : (s[i] > t[i])) return false;
  }
  return true;
}

namespace detail {

// Row index of a situation: oport 1 is the leftmost (most significant) bit.
inline std::size_t row_of(const OSituation& s) {
  std::size_t r = 0;
  for (bool b : s) r = (r << 1) | (b ? 1 : 0);
  return r;
}

inline OSituation situation_of(std::size_t row, std::size_t n) {
  OSituation s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = (row >> (n - 1 - i)) & 1;
  return s;
}

inline std::size_t port_bit(std::size_t n, std::size_t i) { return std::size_t{1} << (n - 1 - i); }

// Row reached from `row` by moving oport i one step up in ≤_I, if possible.
inline std::optional<std::size_t> cover(const Interface& ports, std::size_t row, std::size_t i) {
  const std::size_t bit = port_bit(ports.size(), i);
  const bool set = (row & bit) != 0;
  if (ports[i].is_input() == set) return row ^ bit;
  return std::nullopt;
}

inline void check_port_cap(std::size_t n, const Limits& limits) {
  if (n > limits.max_ports) {
    throw CapExceeded(std::to_string(n) + " ports exceed the cap of " +
                      std::to_string(limits.max_ports));
  }
}

}  // namespace detail

// An interface with a monotone truth function over all its situations.
class Resource {
 public:
  // The constant 1.
  Resource() : truth_(0, true) {}

  // Throws unless `truth` covers every situation and is monotone.
  Resource(Interface ports, BitTable truth) : ports_(std::move(ports)), truth_(std::move(truth)) {
    if (truth_.vars() != ports_.size()) throw Error("truth table size does not match the interface");
    if (auto bad = first_monotonicity_violation()) {
      throw Error("truth function is not monotone: " +
                  situation_to_string(detail::situation_of(bad->first, ports_.size())) +
                  " is true but " +
                  situation_to_string(detail::situation_of(bad->second, ports_.size())) +
                  " is false");
    }
  }

  const Interface& ports() const { return ports_; }
  std::size_t port_count() const { return ports_.size(); }
  const BitTable& table() const { return truth_; }
  std::size_t rows() const { return truth_.rows(); }

  bool truth(std::size_t row) const { return truth_.get(row); }
  bool truth(const OSituation& s) const {
    if (s.size() != ports_.size()) throw Error("situation length does not match the interface");
    return truth_.get(detail::row_of(s));
  }

  // First covering pair (row, larger row) with truth 1 then 0.
  std::optional<std::pair<std::size_t, std::size_t>> first_monotonicity_violation() const {
    for (std::size_t r = 0; r < rows(); ++r) {
      if (!truth_.get(r)) continue;
      for (std::size_t i = 0; i < ports_.size(); ++i) {
        auto up = detail::cover(ports_, r, i);
        if (up && !truth_.get(*up)) return std::make_pair(r, *up);
      }
    }
    return std::nullopt;
  }

  friend bool operator==(const Resource&, const Resource&) = default;

 private:
  Interface ports_;
  BitTable truth_;
};

inline Resource one() { return Resource(); }
inline Resource zero() { return Resource({}, BitTable(0, false)); }

enum class ResourceOp : std::uint8_t { neg, conj, disj, impl };

namespace detail {

template <typename Fn>
Resource combine_tables(const Resource& a, const Resource& b, Interface left, Fn fn,
                        const Limits& limits) {
  const std::size_t n2 = b.port_count();
  Interface ports = std::move(left);
  ports.insert(ports.end(), b.ports().begin(), b.ports().end());
  check_port_cap(ports.size(), limits);
  BitTable t(static_cast<unsigned>(ports.size()), false);
  for (std::size_t r1 = 0; r1 < a.rows(); ++r1) {
    for (std::size_t r2 = 0; r2 < b.rows(); ++r2) {
      if (fn(a.truth(r1), b.truth(r2))) t.set((r1 << n2) | r2, true);
    }
  }
  return Resource(std::move(ports), std::move(t));
}

}  // namespace detail

inline Resource neg(const Resource& a) {
  BitTable t = a.table();
  t.flip();
  return Resource(reversed(a.ports()), std::move(t));
}

inline Resource conj(const Resource& a, const Resource& b, const Limits& limits = {}) {
  return detail::combine_tables(a, b, a.ports(), [](bool x, bool y) { return x && y; }, limits);
}

inline Resource disj(const Resource& a, const Resource& b, const Limits& limits = {}) {
  return detail::combine_tables(a, b, a.ports(), [](bool x, bool y) { return x || y; }, limits);
}

inline Resource impl(const Resource& a, const Resource& b, const Limits& limits = {}) {
  return detail::combine_tables(a, b, reversed(a.ports()), [](bool x, bool y) { return !x || y; },
                                limits);
}

inline Resource combine(ResourceOp op, const std::vector<Resource>& args, const Limits& limits = {}) {
  const std::size_t arity = op == ResourceOp::neg ? 1 : 2;
  if (args.size() != arity) throw Error("wrong number of resource operands");
  switch (op) {
    case ResourceOp::neg: return neg(args[0]);
    case ResourceOp::conj: return conj(args[0], args[1], limits);
    case ResourceOp::disj: return disj(args[0], args[1], limits);
    case ResourceOp::impl: return impl(args[0], args[1], limits);
  }
  throw Error("unknown resource operation");
}

// Resource with one output port of type `atom`: true iff the oport is.
inline Resource atomic(const Atom& atom) {
  BitTable t(1, false);
  t.set(1, true);
  return Resource({make_port(atom, Gender::output)}, std::move(t));
}

// ---------------------------------------------------------------------------
// Denotations

inline Port port_of_literal(const Formula& lit) {
  return make_port(lit.atom(), lit.negative() ? Gender::input : Gender::output);
}

inline Formula literal_of_port(const Port& p) { return Formula::literal(p.atom, p.is_input()); }

inline Resource cirquent_to_resource(const Cirquent& c, const Limits& limits = {}) {
  Interface ports;
  for (const Formula& f : c.pool()) {
    for_each_literal(f, [&](const Formula& lit) { ports.push_back(port_of_literal(lit)); });
  }
  detail::check_port_cap(ports.size(), limits);
  const auto n = static_cast<unsigned>(ports.size());
  return Resource(std::move(ports), cirquent_table(c, n, detail::OccurrenceVars{}));
}

inline Resource formula_to_resource(const Formula& f, const Limits& limits = {}) {
  if (!is_cl5_formula(f)) throw Error("resource denotations are defined for CL5-formulas only");
  return cirquent_to_resource(embed_formula(f), limits);
}

// Situations that are false while every ≤-larger situation is true, in
// ascending bit-string order.
inline std::vector<OSituation> critical_situations(const Resource& a) {
  std::vector<OSituation> out;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (a.truth(r)) continue;
    bool critical = true;
    for (std::size_t i = 0; i < a.port_count() && critical; ++i) {
      auto up = detail::cover(a.ports(), r, i);
      critical = !up || a.truth(*up);
    }
    if (critical) out.push_back(detail::situation_of(r, a.port_count()));
  }
  return out;
}

// Literal cirquent representing `a`: one oliteral per oport and one ogroup
// per critical situation holding the oliterals false in it.
inline Cirquent represent(const Resource& a) {
  std::vector<Formula> pool;
  for (const Port& p : a.ports()) pool.push_back(literal_of_port(p));
  std::vector<Group> structure;
  for (const OSituation& s : critical_situations(a)) {
    Group g;
    for (std::size_t i = 0; i < s.size(); ++i) {
      // An output literal is false when its oport is 0, an input one when 1.
      if (s[i] == a.ports()[i].is_input()) g.push_back(i + 1);
    }
    structure.push_back(std::move(g));
  }
  return Cirquent(std::move(pool), std::move(structure), Cirquent::Unchecked{});
}

// ---------------------------------------------------------------------------
// Arrangements

// 1-based (oinput, ooutput) pair.
struct Allocation {
  std::size_t input = 0;
  std::size_t output = 0;

  friend bool operator==(const Allocation&, const Allocation&) = default;
  friend auto operator<=>(const Allocation&, const Allocation&) = default;
};

using Arrangement = std::vector<Allocation>;

inline void check_arrangement_types(const Resource& a, const Arrangement& arr) {
  for (const Allocation& al : arr) {
    if (al.input < 1 || al.input > a.port_count() || al.output < 1 ||
        al.output > a.port_count()) {
      throw IndexError("allocation oport out of range 1.." + std::to_string(a.port_count()));
    }
    const Port& x = a.ports()[al.input - 1];
    const Port& y = a.ports()[al.output - 1];
    if (!x.is_input() || y.is_input() || !(x.atom == y.atom)) {
      throw Error("allocation " + std::to_string(al.input) + " -> " + std::to_string(al.output) +
                  " must join an oinput to an ooutput of the same type");
    }
  }
}

inline bool is_monogamous(const Arrangement& arr) {
  std::vector<std::size_t> used;
  for (const Allocation& al : arr) {
    for (std::size_t k : {al.input, al.output}) {
      if (std::find(used.begin(), used.end(), k) != used.end()) return false;
      used.push_back(k);
    }
  }
  return true;
}

inline bool is_consistent(const OSituation& s, const Arrangement& arr) {
  for (const Allocation& al : arr) {
    if (s.at(al.input - 1) && !s.at(al.output - 1)) return false;
  }
  return true;
}

// True in every situation consistent with `arr`.
inline bool is_trivializing(const Resource& a, const Arrangement& arr) {
  check_arrangement_types(a, arr);
  const auto n = static_cast<unsigned>(a.port_count());
  BitTable falsified = a.table();
  falsified.flip();
  for (const Allocation& al : arr) {
    BitTable ok = BitTable::variable(n, static_cast<unsigned>(al.input - 1));
    ok.flip();
    ok |= BitTable::variable(n, static_cast<unsigned>(al.output - 1));
    falsified &= ok;
  }
  return falsified.none();
}

struct ArrangementChecks {
  bool monogamous = false;
  bool trivializing = false;
};

inline ArrangementChecks arrangement_checks(const Resource& a, const Arrangement& arr) {
  return {is_monogamous(arr), is_trivializing(a, arr)};
}

// Every possible allocation, by input then output.
inline Arrangement greedy_arrangement(const Resource& a) {
  Arrangement out;
  for (std::size_t i = 0; i < a.port_count(); ++i) {
    if (!a.ports()[i].is_input()) continue;
    for (std::size_t j = 0; j < a.port_count(); ++j) {
      if (!a.ports()[j].is_input() && a.ports()[j].atom == a.ports()[i].atom) {
        out.push_back({i + 1, j + 1});
      }
    }
  }
  return out;
}

// First monogamous trivializing arrangement. Only maximum matchings per port
// type are tried: adding allocations removes consistent situations, so any
// trivializing arrangement extends to a maximum one.
inline std::optional<Arrangement> is_trivial(const Resource& a, const Limits& limits = {}) {
  detail::check_port_cap(a.port_count(), limits);
  std::vector<Atom> types;
  for (const Port& p : a.ports()) {
    if (std::find(types.begin(), types.end(), p.atom) == types.end()) types.push_back(p.atom);
  }
  std::vector<std::vector<std::vector<std::pair<std::size_t, std::size_t>>>> options;
  for (const Atom& t : types) {
    std::vector<std::size_t> ins;
    std::vector<std::size_t> outs;
    for (std::size_t i = 0; i < a.port_count(); ++i) {
      if (a.ports()[i].atom == t) (a.ports()[i].is_input() ? ins : outs).push_back(i + 1);
    }
    options.push_back(detail::maximum_matchings(ins, outs));
  }
  std::vector<std::size_t> choice(types.size(), 0);
  for (;;) {
    Arrangement arr;
    for (std::size_t t = 0; t < types.size(); ++t) {
      for (const auto& [x, y] : options[t][choice[t]]) arr.push_back({x, y});
    }
    std::sort(arr.begin(), arr.end());
    if (is_trivializing(a, arr)) return arr;
    std::size_t t = types.size();
    while (t > 0 && choice[t - 1] + 1 == options[t - 1].size()) choice[--t] = 0;
    if (t == 0) return std::nullopt;
    ++choice[t - 1];
  }
}

inline std::optional<Arrangement> is_trivial(const Cirquent& c, const Limits& limits = {}) {
  return is_trivial(cirquent_to_resource(c, limits), limits);
}

// Monogamous trivializing arrangement for the conclusion of a CL5 proof.
// Each node carries a normal binary tautology D over private atoms and a
// substitution σ with σ(D) = the node's conclusion; coupled oliterals are the
// positionwise matches between the two images of each atom of D that occurs
// twice.
inline Arrangement extract_arrangement(const Proof& p) {
  if (auto v = check_proof(p, System::cl5()); !v.empty()) {
    throw RuleError("not a CL5 proof: " + to_string(v.front()));
  }
  const Resource target = cirquent_to_resource(p.conclusion);
  std::size_t counter = 0;
  auto fresh = [&counter] { return Atom::general("_a" + std::to_string(++counter)); };
  struct Carried {
    Cirquent d;
    Substitution sigma;
  };
  auto rec = [&](auto& self, const Proof& q) -> Carried {
    std::vector<Carried> below;
    for (const Proof& r : q.premises) below.push_back(self(self, r));
    Carried out;
    RuleApp rule = q.rule;
    if (rule.tag == RuleTag::axiom_id || rule.tag == RuleTag::weak_pool) {
      const Atom a = fresh();
      out.sigma.set(a, *rule.formula);
      rule.formula = Formula::literal(a);
    }
    std::vector<Cirquent> ds;
    for (Carried& b : below) {
      ds.push_back(b.d);
      for (const auto& [atom, image] : b.sigma.entries()) out.sigma.set(atom, image);
    }
    out.d = apply_rule(rule, ds);
    return out;
  };
  Carried root = rec(rec, p);
  if (!(substitute(root.sigma, root.d) == p.conclusion)) {
    throw Error("internal: carried instance does not reproduce the conclusion");
  }

  // Position in the conclusion's oliteral sequence of each D oliteral.
  struct Site {
    std::size_t start;
    bool negative;
  };
  std::map<Atom, std::vector<Site>> sites;
  std::size_t next = 1;
  for (const Formula& f : root.d.pool()) {
    for_each_literal(f, [&](const Formula& lit) {
      sites[lit.atom()].push_back({next, lit.negative()});
      next += root.sigma.image(lit.atom()).oliteral_count();
    });
  }
  Arrangement arr;
  for (const auto& [atom, where] : sites) {
    if (where.size() != 2) continue;
    const Formula image = root.sigma.image(atom);
    const std::vector<OLiteral> lits = oliterals(image);
    const Site& neg_site = where[0].negative ? where[0] : where[1];
    const Site& pos_site = where[0].negative ? where[1] : where[0];
    for (std::size_t k = 0; k < lits.size(); ++k) {
      if (lits[k].atom.is_logical()) continue;
      // The negated copy carries the opposite sign at each position.
      const std::size_t in_neg = neg_site.start + k;
      const std::size_t in_pos = pos_site.start + k;
      if (lits[k].negative) {
        arr.push_back({in_pos, in_neg});
      } else {
        arr.push_back({in_neg, in_pos});
      }
    }
  }
  std::sort(arr.begin(), arr.end());
  const ArrangementChecks checks = arrangement_checks(target, arr);
  if (!checks.monogamous || !checks.trivializing) {
    throw Error("internal: extracted arrangement failed verification");
  }
  return arr;
}

// ---------------------------------------------------------------------------
// Text formats

inline std::string write_resource(const Resource& a) {
  std::string out = "resource { ports: [";
  for (std::size_t i = 0; i < a.port_count(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(a.ports()[i]);
  }
  out += "]; true: [";
  bool first = true;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (!a.truth(r)) continue;
    if (!first) out += ", ";
    first = false;
    const std::string s = situation_to_string(detail::situation_of(r, a.port_count()));
    out += s.empty() ? "eps" : s;
  }
  return out + "] }\n";
}

namespace detail {

class ResourceReader {
 public:
  explicit ResourceReader(std::string_view text) : text_(text) {}

  Resource read() {
    keyword("resource");
    punct('{');
    keyword("ports");
    punct(':');
    punct('[');
    Interface ports;
    if (!peek(']')) {
      do {
        const bool input = peek('-');
        if (input) ++pos_;
        ports.push_back(make_port(Atom::general(name()), input ? Gender::input : Gender::output));
      } while (take(','));
    }
    punct(']');
    punct(';');
    keyword("true");
    punct(':');
    punct('[');
    if (ports.size() > 24) fail("too many ports");
    BitTable t(static_cast<unsigned>(ports.size()), false);
    if (!peek(']')) {
      do {
        const std::size_t at = pos_;
        std::string bits = name();
        if (bits == "eps") bits.clear();
        if (bits.size() != ports.size() ||
            bits.find_first_not_of("01") != std::string::npos) {
          pos_ = at;
          fail("situation must have " + std::to_string(ports.size()) + " bits");
        }
        t.set(row_of(situation_from_string(bits)), true);
      } while (take(','));
    }
    punct(']');
    take(';');
    punct('}');
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing text");
    return Resource(std::move(ports), std::move(t));
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool take(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void punct(char c) {
    if (!take(c)) fail(std::string("expected '") + c + "'");
  }
  std::string name() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }
  void keyword(std::string_view k) {
    const std::size_t at = pos_;
    if (name() != k) {
      pos_ = at;
      fail("expected '" + std::string(k) + "'");
    }
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Parses the resource text format; a non-monotone table is rejected with its
// first violating covering pair.
inline Resource read_resource(std::string_view text) {
  return detail::ResourceReader(text).read();
}

inline std::string write_arrangement(const Arrangement& arr) {
  std::string out;
  for (const Allocation& al : arr) {
    out += "alloc " + std::to_string(al.input) + " -> " + std::to_string(al.output) + "\n";
  }
  return out;
}

inline Arrangement read_arrangement(std::string_view text) {
  Arrangement out;
  for (const auto& [no, line] : detail::content_lines(text)) {
    detail::LineReader r(line, no);
    if (r.word() != "alloc") r.fail("expected 'alloc'");
    Allocation al;
    al.input = r.number();
    r.expect_char('-');
    r.expect_char('>');
    al.output = r.number();
    if (!r.at_end()) r.fail("unexpected trailing text");
    out.push_back(al);
  }
  return out;
}

}  // namespace cirquent

#endif  // CIRQUENT_RESOURCE_HPP_
