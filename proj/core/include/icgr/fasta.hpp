#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "icgr/nucleotide.hpp"

namespace icgr {

struct SequenceRecord {
  std::string name;
  Sequence sequence;
  std::size_t source_line = 0;  // line of the '>' header, 1-based; 0 if synthesized

  // Diagnostics metadata does not take part in equality.
  friend bool operator==(const SequenceRecord& a, const SequenceRecord& b) {
    return a.name == b.name && a.sequence == b.sequence;
  }
};

inline constexpr std::size_t kDefaultFastaWidth = 70;

/// Single-pass FASTA reader. Lowercase bases are folded to uppercase,
/// CR/LF endings, trailing whitespace and blank lines are tolerated. Any
/// other byte in a sequence line (N, IUPAC codes, U, ...) is rejected.
class FastaReader {
 public:
  explicit FastaReader(std::istream& in) : in_(in) {}

  /// Next record, or nullopt at end of input.
  /// Throws MalformedFasta or InvalidSymbol.
  std::optional<SequenceRecord> next();

 private:
  bool read_line(std::string& line);

  std::istream& in_;
  std::size_t line_no_ = 0;
  std::optional<std::string> pending_header_;
  std::size_t pending_line_ = 0;
};

std::vector<SequenceRecord> parse_fasta(std::istream& in);
std::vector<SequenceRecord> parse_fasta(std::string_view text);

void write_fasta(std::ostream& out, std::span<const SequenceRecord> records,
                 std::size_t width = kDefaultFastaWidth);
std::string write_fasta(std::span<const SequenceRecord> records,
                        std::size_t width = kDefaultFastaWidth);

}  // namespace icgr
