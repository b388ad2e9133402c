#include "icgr/nucleotide.hpp"

#include "icgr/errors.hpp"

namespace icgr {

Sequence parse_sequence(std::string_view text, std::string_view record) {
  Sequence out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto byte = static_cast<unsigned char>(text[i]);
    const std::uint8_t v = kBaseTable[byte];
    if (v == kNotABase) throw InvalidSymbol(std::string(record), i + 1, byte, 0);
    out.push_back(static_cast<Nucleotide>(v));
  }
  return out;
}

std::string to_string(const Sequence& sequence) {
  std::string s;
  s.reserve(sequence.size());
  for (Nucleotide n : sequence) s.push_back(to_char(n));
  return s;
}

}  // namespace icgr
