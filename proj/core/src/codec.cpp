#include "icgr/codec.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "icgr/errors.hpp"
#include "icgr/parallel.hpp"

namespace icgr {

namespace {

struct BlockJob {
  std::size_t record;
  std::size_t block;
};

std::size_t block_count(std::uint64_t length, std::uint32_t block_size) {
  return length == 0 ? 1 : static_cast<std::size_t>((length + block_size - 1) / block_size);
}

std::span<const Nucleotide> block_slice(const Sequence& seq, std::uint32_t block_size,
                                        std::size_t block) {
  const std::size_t start = std::min(seq.size(), block * static_cast<std::size_t>(block_size));
  const std::size_t len = std::min<std::size_t>(block_size, seq.size() - start);
  return std::span<const Nucleotide>(seq).subspan(start, len);
}

void require_block_size(std::uint32_t block_size) {
  if (block_size == 0) throw BadLayout("block size must be at least 1");
}

Sequence decode_block(const EncodedRecord& record, std::size_t block) {
  try {
    return decode(record.blocks[block]);
  } catch (const InvalidTriInteger& e) {
    throw InvalidBlock(record.name, block + 1, e);
  }
}

std::string_view trim(std::string_view s) {
  auto space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && space(s.front())) s.remove_prefix(1);
  while (!s.empty() && space(s.back())) s.remove_suffix(1);
  return s;
}

template <typename UInt>
bool parse_unsigned(std::string_view token, UInt& out) {
  if (token.empty()) return false;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

bool parse_signed_big(std::string_view token, BigInt& out) {
  std::string_view digits = token;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty()) return false;
  for (char c : digits) {
    if (c < '0' || c > '9') return false;
  }
  return out.set_str(std::string(token), 10) == 0;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

struct TextHeader {
  std::string name;
  std::uint32_t block_size = 0;
  std::uint64_t blocks = 0;
};

TextHeader parse_header(std::string_view line, std::size_t line_no) {
  if (line.empty() || line.front() != '>') throw ParseError(line_no, "expected '>' record header");
  std::string_view rest = trim(line.substr(1));

  auto take_last = [&](std::string_view key) {
    const std::size_t cut = rest.find_last_of(" \t");
    const std::string_view token = cut == std::string_view::npos ? rest : rest.substr(cut + 1);
    if (token.substr(0, key.size()) != key) {
      throw ParseError(line_no, "header is missing '" + std::string(key) + "'");
    }
    rest = cut == std::string_view::npos ? std::string_view{} : trim(rest.substr(0, cut));
    return token.substr(key.size());
  };

  TextHeader header;
  if (!parse_unsigned(take_last("blocks="), header.blocks)) {
    throw ParseError(line_no, "bad block count");
  }
  if (!parse_unsigned(take_last("block_size="), header.block_size)) {
    throw ParseError(line_no, "bad block size");
  }
  header.name = std::string(rest);
  if (header.name.empty()) throw ParseError(line_no, "empty record name");
  return header;
}

}  // namespace

std::uint64_t EncodedRecord::length() const noexcept {
  std::uint64_t total = 0;
  for (const TriInteger& t : blocks) total += t.n;
  return total;
}

void check_layout(const EncodedRecord& record) {
  require_block_size(record.block_size);
  const std::string where = "record '" + record.name + "': ";
  if (record.blocks.empty()) throw BadLayout(where + "no blocks");
  const std::size_t last = record.blocks.size() - 1;
  for (std::size_t i = 0; i < last; ++i) {
    if (record.blocks[i].n != record.block_size) {
      throw BadLayout(where + "block " + std::to_string(i + 1) + " holds " +
                      std::to_string(record.blocks[i].n) + " bases, expected " +
                      std::to_string(record.block_size));
    }
  }
  const std::uint64_t tail = record.blocks[last].n;
  if (tail > record.block_size || (tail == 0 && last != 0)) {
    throw BadLayout(where + "final block holds " + std::to_string(tail) + " bases");
  }
}

EncodedRecord chunk_encode(const SequenceRecord& record, std::uint32_t block_size,
                           unsigned threads) {
  require_block_size(block_size);
  EncodedRecord out{record.name, block_size, {}};
  out.blocks.resize(block_count(record.sequence.size(), block_size));
  parallel_for(out.blocks.size(), threads, [&](std::size_t b) {
    out.blocks[b] = encode(block_slice(record.sequence, block_size, b));
  });
  return out;
}

SequenceRecord decode_record(const EncodedRecord& record, unsigned threads) {
  check_layout(record);
  SequenceRecord out{record.name, Sequence(record.length()), 0};
  parallel_for(record.blocks.size(), threads, [&](std::size_t b) {
    const Sequence part = decode_block(record, b);
    std::copy(part.begin(), part.end(),
              out.sequence.begin() + static_cast<std::ptrdiff_t>(b * record.block_size));
  });
  return out;
}

std::vector<EncodedRecord> encode_records(std::span<const SequenceRecord> records,
                                          std::uint32_t block_size, unsigned threads) {
  require_block_size(block_size);
  std::vector<EncodedRecord> out(records.size());
  std::vector<BlockJob> jobs;
  for (std::size_t r = 0; r < records.size(); ++r) {
    out[r].name = records[r].name;
    out[r].block_size = block_size;
    out[r].blocks.resize(block_count(records[r].sequence.size(), block_size));
    for (std::size_t b = 0; b < out[r].blocks.size(); ++b) jobs.push_back({r, b});
  }
  parallel_for(jobs.size(), threads, [&](std::size_t j) {
    const BlockJob job = jobs[j];
    out[job.record].blocks[job.block] =
        encode(block_slice(records[job.record].sequence, block_size, job.block));
  });
  return out;
}

std::vector<SequenceRecord> decode_records(std::span<const EncodedRecord> records,
                                           unsigned threads) {
  std::vector<SequenceRecord> out(records.size());
  std::vector<BlockJob> jobs;
  for (std::size_t r = 0; r < records.size(); ++r) {
    check_layout(records[r]);
    out[r].name = records[r].name;
    out[r].sequence.resize(records[r].length());
    for (std::size_t b = 0; b < records[r].blocks.size(); ++b) jobs.push_back({r, b});
  }
  parallel_for(jobs.size(), threads, [&](std::size_t j) {
    const BlockJob job = jobs[j];
    const EncodedRecord& rec = records[job.record];
    const Sequence part = decode_block(rec, job.block);
    std::copy(part.begin(), part.end(),
              out[job.record].sequence.begin() +
                  static_cast<std::ptrdiff_t>(job.block * rec.block_size));
  });
  return out;
}

std::vector<MutationEvent> diff_records(const EncodedRecord& a, const EncodedRecord& b) {
  check_layout(a);
  check_layout(b);
  if (a.length() != b.length()) throw LengthMismatch(a.length(), b.length());

  if (a.block_size != b.block_size || a.blocks.size() != b.blocks.size()) {
    const SequenceRecord da = decode_record(a);
    const SequenceRecord db = decode_record(b);
    return diff(da.sequence, db.sequence);
  }

  std::vector<MutationEvent> events;
  for (std::size_t i = 0; i < a.blocks.size(); ++i) {
    std::vector<MutationEvent> local;
    try {
      local = diff(a.blocks[i], b.blocks[i]);
    } catch (const InvalidTriInteger& e) {
      const bool first_bad = !validate(a.blocks[i]);
      throw InvalidBlock(first_bad ? a.name : b.name, i + 1, e);
    }
    const std::uint64_t offset = static_cast<std::uint64_t>(i) * a.block_size;
    for (MutationEvent& ev : local) {
      ev.position += offset;
      events.push_back(ev);
    }
  }
  return events;
}

void write_text(std::ostream& out, std::span<const EncodedRecord> records) {
  for (const EncodedRecord& record : records) {
    out << '>' << record.name << " block_size=" << record.block_size
        << " blocks=" << record.blocks.size() << '\n';
    for (const TriInteger& t : record.blocks) {
      out << t.n << ' ' << t.x.get_str() << ' ' << t.y.get_str() << '\n';
    }
  }
}

std::string write_text(std::span<const EncodedRecord> records) {
  std::ostringstream out;
  write_text(out, records);
  return out.str();
}

std::vector<EncodedRecord> read_text(std::istream& in) {
  std::vector<EncodedRecord> records;
  std::string raw;
  std::size_t line_no = 0;

  auto next_line = [&](std::string_view& line) {
    while (std::getline(in, raw)) {
      ++line_no;
      line = trim(raw);
      if (!line.empty()) return true;
    }
    return false;
  };

  std::string_view line;
  while (next_line(line)) {
    const TextHeader header = parse_header(line, line_no);
    EncodedRecord record{header.name, header.block_size, {}};
    for (std::uint64_t b = 0; b < header.blocks; ++b) {
      if (!next_line(line)) {
        throw ParseError(line_no, "record '" + header.name + "' expects " +
                                      std::to_string(header.blocks) + " blocks, found " +
                                      std::to_string(b));
      }
      const auto tokens = split_ws(line);
      TriInteger t;
      if (tokens.size() != 3 || !parse_unsigned(tokens[0], t.n) ||
          !parse_signed_big(tokens[1], t.x) || !parse_signed_big(tokens[2], t.y)) {
        throw ParseError(line_no, "expected block line \"n X Y\"");
      }
      if (const Verdict v = validate(t); !v) {
        throw InvalidBlock(record.name, static_cast<std::size_t>(b) + 1,
                           InvalidTriInteger(v.reason, v.position, v.axis));
      }
      record.blocks.push_back(std::move(t));
    }
    check_layout(record);
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<EncodedRecord> read_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_text(in);
}

}  // namespace icgr
