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

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cirquent/formula.hpp"
#include "support.hpp"

namespace cirquent {
namespace {

struct Result {
  int code = -1;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char ch : s) {
    if (ch == '\'') {
      q += "'\\''";
    } else {
      q += ch;
    }
  }
  return q + "'";
}

Result run(const std::vector<std::string>& args) {
  std::string cmd = quote(CIRQ_BINARY);
  for (const std::string& a : args) cmd += " " + quote(a);
  cmd += " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("cirq_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::ofstream(path_) << contents;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

constexpr const char* kBlass = "((!P|!Q)&(!R|!S))|((P|R)&(Q|S))";

TEST(Cli, BlassProofChecks) {
  Result p = run({"prove", "--system", "cl5", kBlass});
  ASSERT_EQ(p.code, 0);
  ASSERT_FALSE(p.out.empty());
  EXPECT_EQ(p.out.back(), '\n');
  EXPECT_EQ(p.out.find("CONTR"), std::string::npos);
  TempFile f(p.out);
  EXPECT_EQ(run({"check", "--system", "cl5", f.path()}).out, "VALID\n");
  EXPECT_EQ(run({"check", "--system", "cl5", f.path()}).code, 0);
  Result arr = run({"extract-arrangement", f.path()});
  EXPECT_EQ(arr.code, 0);
  EXPECT_EQ(arr.out, "alloc 1 -> 5\nalloc 2 -> 7\nalloc 3 -> 6\nalloc 4 -> 8\n");
}

TEST(Cli, TrivialityOfContraction) {
  Result r = run({"decide", "--question", "trivial", "!P | (P & P)"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "FALSE\n");
  EXPECT_EQ(run({"decide", "--question", "tautology", "!P | (P & P)"}).code, 0);
  EXPECT_EQ(run({"decide", "--question", "binary-instance", "P & P -> P"}).code, 0);
}

TEST(Cli, GeneratorTable) {
  Result r = run({"resource", "table", "!Fuel | Power"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "ports: -Fuel Power\n00 1\n01 1\n10 0\n11 1\n");
}

TEST(Cli, Represent) {
  Result r = run({"resource", "represent",
                  "resource { ports: [P, Q, R]; true: [011, 101, 110, 111] }"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "[ P ; Q ; R ] {1 2} {1 3} {2 3}\n");
  EXPECT_EQ(run({"resource", "trivial", "!P | P"}).out, "TRUE\nalloc 1 -> 2\n");
}

TEST(Cli, ContractionNeedsCcc) {
  Result ccc = run({"prove", "--system", "ccc", "!P | (P & P)"});
  ASSERT_EQ(ccc.code, 0);
  TempFile f(ccc.out);
  EXPECT_EQ(run({"check", "--system", "ccc", f.path()}).code, 0);
  Result cl5 = run({"check", "--system", "cl5", f.path()});
  EXPECT_EQ(cl5.code, 1);
  EXPECT_EQ(cl5.out.rfind("INVALID\n", 0), 0u);
  Result no = run({"prove", "--system", "cl5", "!P | (P & P)"});
  EXPECT_EQ(no.code, 1);
  EXPECT_EQ(no.out, "UNPROVABLE\n");
}

TEST(Cli, AffineAndTranslation) {
  EXPECT_EQ(run({"prove", "--system", "affine", "(!P | (P & P)) & (!Q | Q)"}).out, "UNPROVABLE\n");
  Result a = run({"prove", "--system", "affine", "P & P -> P"});
  ASSERT_EQ(a.code, 0);
  TempFile sp(a.out);
  EXPECT_EQ(run({"check", "--system", "affine", sp.path()}).code, 0);
  Result t = run({"convert", "translate-proof", sp.path()});
  ASSERT_EQ(t.code, 0);
  TempFile cp(t.out);
  EXPECT_EQ(run({"check", "--system", "cl5", "--primitive", cp.path()}).code, 0);
  EXPECT_EQ(run({"convert", "sequent-to-cirquent", "P , !P | Q"}).out, "[ P ; !P | Q ] {1 2}\n");
}

TEST(Cli, Cl2) {
  Result d = run({"prove", "--system", "cl2", "(P * Q) -> P"});
  ASSERT_EQ(d.code, 0);
  TempFile f(d.out);
  EXPECT_EQ(run({"check", "--system", "cl2", f.path()}).code, 0);
  EXPECT_EQ(run({"prove", "--system", "cl2", "P -> P & P"}).out, "UNPROVABLE\n");
}

TEST(Cli, Cl6Check) {
  Result r = run({"prove", "--system", "cl6-check", "!p | (p & p)"});
  ASSERT_EQ(r.code, 0);
  TempFile f(r.out);
  EXPECT_EQ(run({"check", "--system", "cl6", f.path()}).code, 0);
  EXPECT_EQ(run({"check", "--system", "cl5", f.path()}).code, 1);
  EXPECT_EQ(run({"prove", "--system", "cl6-check", "!P | (P & P)"}).out, "UNKNOWN\n");
}

TEST(Cli, RenderAndParse) {
  Result ascii = run({"render", "[ P ; !P ] {1 2}"});
  EXPECT_EQ(ascii.code, 0);
  EXPECT_FALSE(ascii.out.empty());
  Result dot = run({"render", "--format", "dot", "[ P ; !P ] {1 2}"});
  EXPECT_EQ(dot.out.rfind("digraph", 0), 0u);
  EXPECT_EQ(run({"parse", "(P & Q) | R"}).out, "formula P & Q | R\n");
  EXPECT_EQ(run({"parse", " [P;Q] {1}"}).out, "cirquent [ P ; Q ] {1}\n");
  EXPECT_EQ(run({"--kind", "sequent", "parse", "P,Q"}).out, "sequent P , Q\n");
  TempFile f("P -> Q\n");
  EXPECT_EQ(run({"parse", f.path()}).out, "formula !P | Q\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"parse", "P &"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"prove", "P"}).code, 2);
  EXPECT_EQ(run({"prove", "--system", "lk", "P"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"--max-atoms", "1", "decide", "--question", "tautology", "P | Q"}).code, 3);
  EXPECT_EQ(run({"decide", "--question", "tautology", "--max-atoms", "1", "P | Q"}).code, 3);
  EXPECT_EQ(run({"--max-ports", "2", "resource", "table", "P | Q | R"}).code, 3);
  EXPECT_EQ(run({"--max-oliterals", "2", "prove", "--system", "cl5", "!P | P | Q"}).code, 3);
  TempFile bad("1: ID P expect [ P ] {1}\n");
  EXPECT_EQ(run({"check", "--system", "cl5", bad.path()}).code, 1);
}

// Property suites.

TEST(CliProperties, ProveOutputsCheck) {
  testing::Rng rng(91);
  testing::FormulaShape shape;
  shape.atoms = testing::general_atoms(2);
  const std::vector<std::string> systems{"ccc", "cl5", "affine", "cl2"};
  int proved = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::string f = to_string(testing::random_formula(rng, shape, testing::uniform(rng, 2, 5)));
    for (const std::string& s : systems) {
      Result p = run({"prove", "--system", s, f});
      ASSERT_TRUE(p.code == 0 || p.code == 1) << s << ' ' << f;
      if (p.code != 0) continue;
      ++proved;
      TempFile file(p.out);
      EXPECT_EQ(run({"check", "--system", s, file.path()}).code, 0) << s << ' ' << f;
    }
  }
  EXPECT_GT(proved, 10);
}

TEST(CliProperties, BinaryInstanceAgreesWithTriviality) {
  testing::Rng rng(92);
  testing::FormulaShape shape;
  shape.atoms = testing::general_atoms(2);
  for (int trial = 0; trial < 40; ++trial) {
    const std::string f = to_string(testing::random_formula(rng, shape, testing::uniform(rng, 2, 6)));
    EXPECT_EQ(run({"decide", "--question", "binary-instance", f}).code,
              run({"decide", "--question", "trivial", f}).code)
        << f;
  }
}

}  // namespace
}  // namespace cirquent
