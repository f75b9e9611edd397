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

#ifndef CIRQUENT_ERROR_HPP_
#define CIRQUENT_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cirquent {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text. `position` is a 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("parse error at " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// An index outside the bounds of a pool, structure or formula.
class IndexError : public Error {
 public:
  using Error::Error;
};

// A rule applied where its side conditions do not hold.
class RuleError : public Error {
 public:
  using Error::Error;
};

// A configured size cap was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Configurable caps shared by the exhaustive procedures.
struct Limits {
  std::size_t max_atoms = 20;
  std::size_t max_oliterals = 24;
  std::size_t max_occurrences_per_atom = 8;
  std::size_t max_ports = 16;
};

}  // namespace cirquent

#endif  // CIRQUENT_ERROR_HPP_
