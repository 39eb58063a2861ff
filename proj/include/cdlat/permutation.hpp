#pragma once

#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cdlat/errors.hpp"

namespace cdlat {

// Image list over {0..degree-1}: point i maps to perm[i].
using Permutation = std::vector<std::uint32_t>;

inline Permutation identity_permutation(std::size_t degree) {
  Permutation p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<std::uint32_t>(i);
  return p;
}

inline bool is_bijection(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (auto image : p) {
    if (image >= p.size() || seen[image]) return false;
    seen[image] = true;
  }
  return true;
}

// Function composition a o b: apply `b`, then `a`.
inline Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

// Parses cycle notation with 1-based points, e.g. "(1 2 3)(4 5)". Cycles
// multiply as functions (the rightmost acts first); omitted points are
// fixed. "()" and the empty string are the identity.
inline Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation result = identity_permutation(degree);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw InvalidPermutation("expected '(' at offset " + std::to_string(pos) + " in \"" +
                               std::string(text) + "\"");
    ++pos;
    std::vector<std::uint32_t> cycle;
    while (true) {
      skip_space();
      if (pos >= text.size()) throw InvalidPermutation("unterminated cycle in \"" + std::string(text) + "\"");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw InvalidPermutation("unexpected character '" + std::string(1, text[pos]) +
                                 "' in cycle \"" + std::string(text) + "\"");
      std::uint64_t point = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        point = point * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (point > degree) break;
        ++pos;
      }
      if (point == 0 || point > degree)
        throw InvalidPermutation("point out of range 1.." + std::to_string(degree) + " in \"" +
                                 std::string(text) + "\"");
      cycle.push_back(static_cast<std::uint32_t>(point - 1));
    }
    Permutation cyc = identity_permutation(degree);
    std::vector<bool> used(degree, false);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (used[cycle[k]])
        throw InvalidPermutation("point " + std::to_string(cycle[k] + 1) + " repeated in a cycle of \"" +
                                 std::string(text) + "\"");
      used[cycle[k]] = true;
      cyc[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
    result = compose(result, cyc);
    skip_space();
  }
  return result;
}

struct GeneratorFile {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

// Text format: first significant line `degree: <d>`, then one generator per
// line in cycle notation; `#` starts a comment.
inline GeneratorFile parse_generator_text(std::string_view text) {
  GeneratorFile out;
  bool have_degree = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      if (end == text.size()) break;
      continue;
    }
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    if (!have_degree) {
      constexpr std::string_view key = "degree:";
      if (line.compare(0, key.size(), key) != 0)
        throw InvalidPermutation("line " + std::to_string(line_no) + ": expected `degree: <d>`");
      std::istringstream in(line.substr(key.size()));
      long long d = -1;
      if (!(in >> d) || d < 1)
        throw InvalidPermutation("line " + std::to_string(line_no) + ": degree must be a positive integer");
      std::string rest;
      if (in >> rest) throw InvalidPermutation("line " + std::to_string(line_no) + ": trailing text after degree");
      out.degree = static_cast<std::size_t>(d);
      have_degree = true;
    } else {
      try {
        out.generators.push_back(parse_cycles(line, out.degree));
      } catch (const InvalidPermutation& e) {
        throw InvalidPermutation("line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    if (end == text.size()) break;
  }
  if (!have_degree) throw InvalidPermutation("generator file has no `degree:` line");
  return out;
}

inline GeneratorFile read_generator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidSpec("cannot open generator file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_generator_text(buf.str());
}

}  // namespace cdlat
