#pragma once

// Test-only helpers: random inputs and an independent reference walk that
// uses Boost.Multiprecision instead of GMP.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "icgr/icgr.hpp"

namespace icgr::testing {

using RefInt = boost::multiprecision::cpp_int;

inline Sequence random_sequence(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> base(0, 3);
  Sequence s(n);
  for (auto& b : s) b = static_cast<Nucleotide>(base(rng));
  return s;
}

inline Sequence seq(const std::string& text) { return parse_sequence(text); }

/// Literal corner lookup by symbol, independent of the enum bit layout.
inline std::pair<int, int> reference_corner(char symbol) {
  switch (symbol) {
    case 'A': return {1, 1};
    case 'T': return {-1, 1};
    case 'C': return {-1, -1};
    case 'G': return {1, -1};
  }
  throw std::logic_error("not a base");
}

/// p_1 = corner, p_i = p_{i-1} + 2^(i-1) * corner, evaluated in cpp_int.
inline std::vector<std::pair<RefInt, RefInt>> reference_walk(const std::string& text) {
  std::vector<std::pair<RefInt, RefInt>> points;
  RefInt x = 0, y = 0, power = 1;
  for (char c : text) {
    const auto [cx, cy] = reference_corner(c);
    x += power * cx;
    y += power * cy;
    points.emplace_back(x, y);
    power *= 2;
  }
  return points;
}

inline std::string decimal(const RefInt& v) { return v.str(); }
inline std::string decimal(const BigInt& v) { return v.get_str(); }

}  // namespace icgr::testing
