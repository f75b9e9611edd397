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

// cirq: command-line front end for the cirquent kernel.
//
// Exit codes: 0 success/provable/true, 1 unprovable/false/invalid,
// 2 parse or usage error, 3 cap exceeded.

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cirquent/cirquent.hpp"
#include "cirquent/cl2.hpp"
#include "cirquent/decide.hpp"
#include "cirquent/error.hpp"
#include "cirquent/formula.hpp"
#include "cirquent/inference.hpp"
#include "cirquent/proof_io.hpp"
#include "cirquent/render.hpp"
#include "cirquent/resource.hpp"
#include "cirquent/semantics.hpp"

namespace {

using namespace cirquent;

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;
constexpr int kCap = 3;

enum class InputKind { automatic, formula, cirquent, sequent };

struct Options {
  InputKind kind = InputKind::automatic;
  Limits limits;
};

// An argument naming an existing file, or `-`, is read; anything else is
// taken as literal text.
std::string load(const std::string& arg) {
  if (arg == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg, std::ios::binary);
    if (!in) throw Error("cannot read " + arg);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

bool looks_like_cirquent(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '[';
}

InputKind resolve(InputKind kind, const std::string& text, InputKind fallback) {
  if (kind != InputKind::automatic) return kind;
  return looks_like_cirquent(text) ? InputKind::cirquent : fallback;
}

Cirquent read_cirquent_input(const Options& o, const std::string& text) {
  switch (resolve(o.kind, text, InputKind::formula)) {
    case InputKind::cirquent: return parse_cirquent(text);
    case InputKind::sequent: return sequent_to_cirquent(parse_sequent(text));
    default: return embed_formula(parse_formula(text));
  }
}

Formula read_formula_input(const Options& o, const std::string& text) {
  if (resolve(o.kind, text, InputKind::formula) != InputKind::formula) {
    throw Error("this command takes a formula");
  }
  return parse_formula(text);
}

Sequent read_sequent_input(const Options& o, const std::string& text) {
  if (resolve(o.kind, text, InputKind::sequent) == InputKind::cirquent) {
    throw Error("this command takes a sequent");
  }
  return parse_sequent(text);
}

bool all_elementary(const Cirquent& c) {
  for (const Formula& f : c.pool()) {
    if (!is_elementary(f)) return false;
  }
  return true;
}

int report(const std::vector<Violation>& v) {
  if (v.empty()) {
    std::cout << "VALID\n";
    return kOk;
  }
  std::cout << "INVALID\n";
  for (const Violation& x : v) std::cout << to_string(x) << '\n';
  return kNo;
}

int unprovable() {
  std::cout << "UNPROVABLE\n";
  return kNo;
}

int run_prove(const Options& o, const std::string& system, const std::string& input) {
  const std::string text = load(input);
  if (system == "affine") {
    auto p = prove_affine(read_sequent_input(o, text), o.limits);
    if (!p) return unprovable();
    std::cout << write_sequent_proof(*p);
    return kOk;
  }
  if (system == "cl2") {
    auto d = prove_cl2(read_formula_input(o, text), o.limits);
    if (!d) return unprovable();
    std::cout << write_cl2_derivation(*d);
    return kOk;
  }
  const Cirquent c = read_cirquent_input(o, text);
  std::optional<Proof> p;
  if (system == "ccc") {
    p = prove_ccc(c, o.limits);
  } else if (system == "cl5") {
    p = prove_cl5(c, o.limits);
  } else {
    // CL6 admits contraction on elementary oformulas only; with every oformula
    // elementary the CCC prover is complete for it, otherwise only the CL5
    // fragment is searched and a failure is not definitive.
    if (all_elementary(c)) {
      p = prove_ccc(c, o.limits);
    } else {
      p = prove_cl5(c, o.limits);
      if (!p) {
        std::cout << "UNKNOWN\n";
        return kNo;
      }
    }
  }
  if (!p) return unprovable();
  std::cout << write_proof(*p);
  return kOk;
}

int run_check(const std::string& system, bool primitive, const std::string& input) {
  const std::string text = load(input);
  if (system == "affine") return report(check_sequent_proof(read_sequent_proof(text)));
  if (system == "cl2") return report(check_cl2_derivation(read_cl2_derivation(text)));
  System s = system == "ccc" ? System::ccc() : system == "cl5" ? System::cl5() : System::cl6();
  if (primitive) s = s.primitive();
  return report(check_proof(read_proof(text), s));
}

std::string bits(std::size_t row, std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) out += ((row >> (n - 1 - i)) & 1) ? '1' : '0';
  return n == 0 ? "eps" : out;
}

void print_arrangement(const Arrangement& arr) { std::cout << write_arrangement(arr); }

int run_decide(const Options& o, const std::string& question, const std::string& input) {
  const std::string text = load(input);
  const Cirquent c = read_cirquent_input(o, text);
  if (question == "tautology") {
    const bool t = is_tautology(c, o.limits);
    std::cout << (t ? "TRUE\n" : "FALSE\n");
    return t ? kOk : kNo;
  }
  if (question == "binary-instance") {
    auto bi = decide_binary_instance(c, o.limits);
    if (!bi) {
      std::cout << "FALSE\n";
      return kNo;
    }
    std::cout << "TRUE\nnormal: " << to_string(bi->normal) << "\ncoupling:";
    for (const auto& [neg, pos] : bi->coupling.pairs) std::cout << ' ' << neg << '-' << pos;
    std::cout << "\nsubstitution:";
    for (const auto& [atom, image] : bi->sigma.entries()) {
      std::cout << ' ' << atom.name << ":=" << to_string(image);
    }
    std::cout << '\n';
    return kOk;
  }
  auto arr = is_trivial(c, o.limits);
  if (!arr) {
    std::cout << "FALSE\n";
    return kNo;
  }
  std::cout << "TRUE\n";
  print_arrangement(*arr);
  return kOk;
}

Resource read_resource_input(const Options& o, const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  if (o.kind == InputKind::automatic && pos != std::string::npos &&
      text.compare(pos, 8, "resource") == 0) {
    return read_resource(text);
  }
  return cirquent_to_resource(read_cirquent_input(o, text), o.limits);
}

int run_resource(const Options& o, const std::string& action, const std::string& input) {
  const Resource a = read_resource_input(o, load(input));
  if (action == "table") {
    std::cout << "ports:";
    for (const Port& p : a.ports()) std::cout << ' ' << to_string(p);
    std::cout << '\n';
    for (std::size_t r = 0; r < a.rows(); ++r) {
      std::cout << bits(r, a.port_count()) << ' ' << (a.truth(r) ? 1 : 0) << '\n';
    }
    return kOk;
  }
  if (action == "represent") {
    std::cout << to_string(represent(a)) << '\n';
    return kOk;
  }
  auto arr = is_trivial(a, o.limits);
  if (!arr) {
    std::cout << "FALSE\n";
    return kNo;
  }
  std::cout << "TRUE\n";
  print_arrangement(*arr);
  return kOk;
}

int run_extract(const std::string& input) {
  const Proof p = read_proof(load(input));
  Arrangement arr;
  try {
    arr = extract_arrangement(p);
  } catch (const RuleError& e) {
    std::cout << "INVALID\n" << e.what() << '\n';
    return kNo;
  }
  print_arrangement(arr);
  return kOk;
}

int run_render(const Options& o, const std::string& format, const std::string& input) {
  const Cirquent c = read_cirquent_input(o, load(input));
  std::cout << render(c, format == "dot" ? RenderFormat::dot : RenderFormat::ascii);
  return kOk;
}

int run_convert(const Options& o, const std::string& action, const std::string& input) {
  const std::string text = load(input);
  if (action == "sequent-to-cirquent") {
    std::cout << to_string(sequent_to_cirquent(read_sequent_input(o, text))) << '\n';
    return kOk;
  }
  std::cout << write_proof(translate_sequent_proof(read_sequent_proof(text)));
  return kOk;
}

int run_parse(const Options& o, const std::string& input) {
  const std::string text = load(input);
  std::string out;
  switch (resolve(o.kind, text, InputKind::formula)) {
    case InputKind::cirquent: out = "cirquent " + to_string(parse_cirquent(text)); break;
    case InputKind::sequent: out = "sequent " + to_string(parse_sequent(text)); break;
    default: out = "formula " + to_string(parse_formula(text)); break;
  }
  std::cout << out << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cirquent calculus kernel"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Options o;
  const std::map<std::string, InputKind> kinds{{"auto", InputKind::automatic},
                                               {"formula", InputKind::formula},
                                               {"cirquent", InputKind::cirquent},
                                               {"sequent", InputKind::sequent}};
  app.add_option("--kind", o.kind, "input kind (default: `[` selects cirquent)")
      ->transform(CLI::CheckedTransformer(kinds));
  app.add_option("--max-atoms", o.limits.max_atoms, "atom cap");
  app.add_option("--max-oliterals", o.limits.max_oliterals, "oliteral cap");
  app.add_option("--max-ports", o.limits.max_ports, "port cap");

  std::string input;
  std::string mode;
  bool primitive = false;

  auto* prove = app.add_subcommand("prove", "search for a proof");
  prove->add_option("--system", mode)
      ->required()
      ->check(CLI::IsMember({"ccc", "cl5", "cl6-check", "affine", "cl2"}));
  prove->add_option("input", input)->required();

  auto* check = app.add_subcommand("check", "check a proof file");
  check->add_option("--system", mode)
      ->required()
      ->check(CLI::IsMember({"ccc", "cl5", "cl6", "affine", "cl2"}));
  check->add_flag("--primitive", primitive, "admit only primitive cirquents");
  check->add_option("proof", input)->required();

  auto* decide = app.add_subcommand("decide", "answer a semantic question");
  decide->add_option("--question", mode)
      ->required()
      ->check(CLI::IsMember({"tautology", "binary-instance", "trivial"}));
  decide->add_option("input", input)->required();

  auto* resource = app.add_subcommand("resource", "resource semantics");
  resource->add_option("action", mode)
      ->required()
      ->check(CLI::IsMember({"table", "represent", "trivial"}));
  resource->add_option("input", input)->required();

  auto* extract = app.add_subcommand("extract-arrangement", "arrangement of a CL5 proof");
  extract->add_option("proof", input)->required();

  auto* rend = app.add_subcommand("render", "draw a cirquent");
  mode = "ascii";
  rend->add_option("--format", mode)->check(CLI::IsMember({"ascii", "dot"}));
  rend->add_option("input", input)->required();

  auto* convert = app.add_subcommand("convert", "sequent conversions");
  convert->add_option("action", mode)
      ->required()
      ->check(CLI::IsMember({"sequent-to-cirquent", "translate-proof"}));
  convert->add_option("input", input)->required();

  auto* parse = app.add_subcommand("parse", "parse and print canonically");
  parse->add_option("expr", input)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (prove->parsed()) return run_prove(o, mode, input);
    if (check->parsed()) return run_check(mode, primitive, input);
    if (decide->parsed()) return run_decide(o, mode, input);
    if (resource->parsed()) return run_resource(o, mode, input);
    if (extract->parsed()) return run_extract(input);
    if (rend->parsed()) return run_render(o, mode, input);
    if (convert->parsed()) return run_convert(o, mode, input);
    return run_parse(o, input);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCap;
  } catch (const ParseError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
