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

// Line-oriented proof files:
//
//   <id>: <TAG> <params> [from <id> [<id>]] [expect <cirquent>]
//
// Lines are written in post-order, so the last line is the root.

#ifndef CIRQUENT_PROOF_IO_HPP_
#define CIRQUENT_PROOF_IO_HPP_

#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cirquent/cirquent.hpp"
#include "cirquent/error.hpp"
#include "cirquent/inference.hpp"

namespace cirquent {

namespace detail {

inline std::size_t write_node(const Proof& p, std::size_t& next, std::string& out) {
  std::vector<std::size_t> ids;
  for (const Proof& q : p.premises) ids.push_back(write_node(q, next, out));
  const std::size_t id = next++;
  out += std::to_string(id) + ": " + to_string(p.rule);
  if (!ids.empty()) {
    out += " from";
    for (std::size_t k : ids) out += " " + std::to_string(k);
  }
  out += " expect " + to_string(p.conclusion) + "\n";
  return id;
}

// Cursor over one line of a line-oriented file.
class LineReader {
 public:
  LineReader(std::string_view line, std::size_t line_no)
      : line_(line), line_no_(line_no) {}

  void skip_space() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) {
      ++pos_;
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= line_.size();
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(pos_, "line " + std::to_string(line_no_) + ": " + what);
  }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < line_.size() && !std::isspace(static_cast<unsigned char>(line_[pos_])) &&
           line_[pos_] != ':') {
      ++pos_;
    }
    if (start == pos_) fail("expected a token");
    return std::string(line_.substr(start, pos_ - start));
  }

  bool peek_word(std::string_view w) {
    skip_space();
    if (line_.substr(pos_, w.size()) != w) return false;
    const std::size_t end = pos_ + w.size();
    return end == line_.size() || std::isspace(static_cast<unsigned char>(line_[end]));
  }

  std::size_t number() {
    skip_space();
    const std::size_t start = pos_;
    std::size_t v = 0;
    while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_]))) {
      v = v * 10 + static_cast<std::size_t>(line_[pos_] - '0');
      if (v > 100000000) fail("number too large");
      ++pos_;
    }
    if (start == pos_) fail("expected a number");
    return v;
  }

  void expect_char(char c) {
    skip_space();
    if (pos_ >= line_.size() || line_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Formula formula() {
    skip_space();
    try {
      return parse_formula_prefix(line_, pos_, ParseOptions{true});
    } catch (const ParseError& e) {
      throw ParseError(e.position(), "line " + std::to_string(line_no_) + ": " + e.what());
    }
  }

  std::string_view rest() {
    skip_space();
    std::string_view r = line_.substr(pos_);
    pos_ = line_.size();
    return r;
  }

 private:
  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

// Splits text into (line number, content) pairs, dropping blanks and `#` comments.
inline std::vector<std::pair<std::size_t, std::string>> content_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t k = line.find_first_not_of(" \t");
    if (k == std::string::npos || line[k] == '#') continue;
    out.emplace_back(no, line);
  }
  return out;
}

inline RuleApp read_rule(LineReader& r) {
  const std::string tag = r.word();
  if (tag == "EMPTY") return RuleApp::axiom_empty();
  if (tag == "ID") return RuleApp::axiom_id(r.formula());
  if (tag == "TOP") return RuleApp::axiom_top();
  if (tag == "MIX") return RuleApp::mix();
  if (tag == "EXCH_F") return RuleApp::exch_f(r.number());
  if (tag == "EXCH_G") return RuleApp::exch_g(r.number());
  if (tag == "WEAK_P") {
    const std::size_t i = r.number();
    return RuleApp::weak_pool(i, r.formula());
  }
  if (tag == "WEAK_G") {
    const std::size_t g = r.number();
    return RuleApp::weak_group(g, r.number());
  }
  if (tag == "DUP_DOWN") return RuleApp::dup_down(r.number());
  if (tag == "DUP_UP") return RuleApp::dup_up(r.number());
  if (tag == "CONTR") return RuleApp::contract(r.number());
  if (tag == "DISJ") return RuleApp::disj_intro(r.number());
  if (tag == "CONJ") return RuleApp::conj_intro(r.number());
  r.fail("unknown rule tag '" + tag + "'");
}

}  // namespace detail

inline std::string write_proof(const Proof& p) {
  std::string out;
  std::size_t next = 1;
  detail::write_node(p, next, out);
  return out;
}

// Reads a proof file. A node's conclusion is its `expect` clause when present
// (so that check_proof can compare it with the recomputed one) and otherwise
// the result of applying its rule.
inline Proof read_proof(std::string_view text) {
  std::map<std::size_t, Proof> nodes;
  std::set<std::size_t> seen;
  std::size_t last = 0;
  for (const auto& [no, line] : detail::content_lines(text)) {
    detail::LineReader r(line, no);
    const std::size_t id = r.number();
    r.expect_char(':');
    if (!seen.insert(id).second) r.fail("duplicate id " + std::to_string(id));
    RuleApp rule = detail::read_rule(r);
    std::vector<Proof> premises;
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
    std::optional<Cirquent> expected;
    if (r.peek_word("expect")) {
      r.word();
      std::string_view rest = r.rest();
      try {
        expected = parse_cirquent(rest, ParseOptions{true});
      } catch (const ParseError& e) {
        r.fail(std::string("bad expect clause: ") + e.what());
      }
    }
    if (!r.at_end()) r.fail("unexpected trailing text");
    Proof node;
    if (expected) {
      node = Proof{std::move(*expected), std::move(rule), std::move(premises)};
    } else {
      try {
        node = derive(rule, std::move(premises));
      } catch (const Error& e) {
        throw RuleError("line " + std::to_string(no) + ": " + e.what());
      }
    }
    nodes.emplace(id, std::move(node));
    last = id;
  }
  if (nodes.empty()) throw ParseError(0, "empty proof file");
  auto root = nodes.find(last);
  if (root == nodes.end()) throw ParseError(0, "the last line is not the root");
  return std::move(root->second);
}

}  // namespace cirquent

#endif  // CIRQUENT_PROOF_IO_HPP_
