#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace icgr {

/// A DNA base. The underlying value packs the corner signs: bit 0 is set
/// when the x corner is +1, bit 1 when the y corner is +1.
///
///     T(-1, 1) ---- A(1, 1)
///        |             |
///     C(-1,-1) ---- G(1,-1)
enum class Nucleotide : std::uint8_t {
  C = 0b00,
  G = 0b01,
  T = 0b10,
  A = 0b11,
};

using Sequence = std::vector<Nucleotide>;

struct Corner {
  int x;
  int y;
  friend constexpr bool operator==(Corner, Corner) = default;
};

constexpr bool x_bit(Nucleotide n) noexcept {
  return (static_cast<std::uint8_t>(n) & 0b01) != 0;
}
constexpr bool y_bit(Nucleotide n) noexcept {
  return (static_cast<std::uint8_t>(n) & 0b10) != 0;
}

constexpr Nucleotide from_bits(bool x_positive, bool y_positive) noexcept {
  return static_cast<Nucleotide>((x_positive ? 0b01 : 0) | (y_positive ? 0b10 : 0));
}

constexpr Corner corner(Nucleotide n) noexcept {
  return {x_bit(n) ? 1 : -1, y_bit(n) ? 1 : -1};
}

constexpr char to_char(Nucleotide n) noexcept {
  constexpr std::array<char, 4> symbols{'C', 'G', 'T', 'A'};
  return symbols[static_cast<std::uint8_t>(n)];
}

/// Sentinel returned by lookup tables for bytes that are not a base.
inline constexpr std::uint8_t kNotABase = 0xff;

/// Case-insensitive byte -> Nucleotide table; kNotABase for anything else.
inline constexpr std::array<std::uint8_t, 256> kBaseTable = [] {
  std::array<std::uint8_t, 256> table{};
  table.fill(kNotABase);
  table['A'] = table['a'] = static_cast<std::uint8_t>(Nucleotide::A);
  table['C'] = table['c'] = static_cast<std::uint8_t>(Nucleotide::C);
  table['G'] = table['g'] = static_cast<std::uint8_t>(Nucleotide::G);
  table['T'] = table['t'] = static_cast<std::uint8_t>(Nucleotide::T);
  return table;
}();

/// Parses a string of bases (any case). Throws InvalidSymbol naming
/// `record` and the 1-based position of the first non-ACGT byte.
Sequence parse_sequence(std::string_view text, std::string_view record = {});

std::string to_string(const Sequence& sequence);

}  // namespace icgr
