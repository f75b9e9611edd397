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

#ifndef CIRQUENT_RENDER_HPP_
#define CIRQUENT_RENDER_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <vector>

#include "cirquent/cirquent.hpp"

namespace cirquent {

enum class RenderFormat { ascii, dot };

namespace detail {

inline void put_glyph(std::string& row, std::size_t col, char glyph) {
  if (row.size() <= col) row.resize(col + 1, ' ');
  char& cell = row[col];
  if (cell == ' ' || cell == glyph) {
    cell = glyph;
  } else {
    cell = 'X';
  }
}

inline void rstrip(std::string& s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
}

// Horizontal line, oformulas beneath it, arc rows, then one `*` per ogroup.
inline std::string render_ascii(const Cirquent& c) {
  if (c.pool_size() == 0 && c.group_count() == 0) return "----\n";
  std::vector<long> centre;
  std::string texts;
  for (const Formula& f : c.pool()) {
    if (!texts.empty()) texts += "   ";
    const std::string t = to_string(f);
    centre.push_back(static_cast<long>(texts.size() + t.size() / 2));
    texts += t;
  }
  std::vector<long> marker;
  long next_free = 0;
  for (const Group& g : c.structure()) {
    long x = next_free;
    if (!g.empty()) {
      long sum = 0;
      for (std::size_t k : g) sum += centre[k - 1];
      x = std::max(next_free, sum / static_cast<long>(g.size()));
    }
    marker.push_back(x);
    next_free = x + 2;
  }
  long max_dx = 0;
  for (std::size_t g = 0; g < c.group_count(); ++g) {
    for (std::size_t k : c.structure()[g]) {
      max_dx = std::max(max_dx, std::labs(marker[g] - centre[k - 1]));
    }
  }
  const long rows = std::clamp(max_dx / 2, 1L, 12L);
  std::vector<std::string> arc_rows(static_cast<std::size_t>(rows));
  for (std::size_t g = 0; g < c.group_count(); ++g) {
    for (std::size_t k : c.structure()[g]) {
      const long fx = centre[k - 1];
      const long gx = marker[g];
      const char glyph = gx == fx ? '|' : (gx > fx ? '\\' : '/');
      for (long r = 1; r <= rows; ++r) {
        const double t = static_cast<double>(r) / static_cast<double>(rows + 1);
        const long x = fx + std::lround(static_cast<double>(gx - fx) * t);
        put_glyph(arc_rows[static_cast<std::size_t>(r - 1)],
                  static_cast<std::size_t>(x), glyph);
      }
    }
  }
  std::string markers;
  for (long x : marker) put_glyph(markers, static_cast<std::size_t>(x), '*');

  const std::size_t width = std::max<std::size_t>(
      {4, texts.size(), markers.size()});
  std::string out(width, '-');
  out += '\n';
  out += texts;
  out += '\n';
  for (std::string& row : arc_rows) {
    rstrip(row);
    out += row;
    out += '\n';
  }
  out += markers;
  out += '\n';
  return out;
}

inline std::string render_dot(const Cirquent& c) {
  std::string out = "digraph cirquent {\n";
  for (std::size_t i = 1; i <= c.pool_size(); ++i) {
    out += "  f" + std::to_string(i) + " [shape=box, label=\"" +
           to_string(c.pool()[i - 1]) + "\"];\n";
  }
  for (std::size_t g = 1; g <= c.group_count(); ++g) {
    out += "  g" + std::to_string(g) + " [shape=point];\n";
  }
  for (std::size_t g = 1; g <= c.group_count(); ++g) {
    for (std::size_t k : c.structure()[g - 1]) {
      out += "  g" + std::to_string(g) + " -> f" + std::to_string(k) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace detail

inline std::string render(const Cirquent& c, RenderFormat format) {
  return format == RenderFormat::ascii ? detail::render_ascii(c)
                                       : detail::render_dot(c);
}

}  // namespace cirquent

#endif  // CIRQUENT_RENDER_HPP_
