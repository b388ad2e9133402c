#include "icgr/fasta.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "icgr/errors.hpp"

namespace icgr {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

bool FastaReader::read_line(std::string& line) {
  if (!std::getline(in_, line)) return false;
  ++line_no_;
  return true;
}

std::optional<SequenceRecord> FastaReader::next() {
  std::string line;
  if (!pending_header_) {
    // Skip leading blank lines; anything else before a header is an error.
    while (read_line(line)) {
      const std::string_view t = trim(line);
      if (t.empty()) continue;
      if (t.front() != '>') throw MalformedFasta(line_no_, "sequence data before first header");
      pending_header_ = std::string(t.substr(1));
      pending_line_ = line_no_;
      break;
    }
    if (!pending_header_) return std::nullopt;
  }

  SequenceRecord record;
  record.name = std::string(trim(*pending_header_));
  record.source_line = pending_line_;
  pending_header_.reset();
  if (record.name.empty()) throw MalformedFasta(record.source_line, "empty record name");

  while (read_line(line)) {
    const std::string_view t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '>') {
      pending_header_ = std::string(t.substr(1));
      pending_line_ = line_no_;
      break;
    }
    for (char ch : t) {
      const auto byte = static_cast<unsigned char>(ch);
      const std::uint8_t v = kBaseTable[byte];
      if (v == kNotABase) {
        throw InvalidSymbol(record.name, record.sequence.size() + 1, byte, line_no_);
      }
      record.sequence.push_back(static_cast<Nucleotide>(v));
    }
  }
  return record;
}

std::vector<SequenceRecord> parse_fasta(std::istream& in) {
  FastaReader reader(in);
  std::vector<SequenceRecord> records;
  while (auto record = reader.next()) records.push_back(std::move(*record));
  return records;
}

std::vector<SequenceRecord> parse_fasta(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_fasta(in);
}

void write_fasta(std::ostream& out, std::span<const SequenceRecord> records, std::size_t width) {
  if (width == 0) throw Error("FASTA line width must be at least 1");
  std::string line;
  for (const SequenceRecord& record : records) {
    out << '>' << record.name << '\n';
    const Sequence& seq = record.sequence;
    for (std::size_t start = 0; start < seq.size(); start += width) {
      const std::size_t end = std::min(seq.size(), start + width);
      line.clear();
      for (std::size_t i = start; i < end; ++i) line.push_back(to_char(seq[i]));
      line.push_back('\n');
      out << line;
    }
  }
}

std::string write_fasta(std::span<const SequenceRecord> records, std::size_t width) {
  std::ostringstream out;
  write_fasta(out, records, width);
  return out.str();
}

}  // namespace icgr
