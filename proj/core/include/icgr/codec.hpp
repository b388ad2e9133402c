#pragma once

// Persistent tri-integer formats.
//
// Text (.icgr.txt), one record after another:
//
//     >name block_size=B blocks=K
//     n X Y            (K lines, decimal, '-' for negatives)
//
// Binary (.icgr), all integers little-endian:
//
//     "ICGR"  u8 version=1  u32 record_count
//     per record: u16 name_len, name bytes, u32 block_size, u32 block_count
//     per block:  u32 n, ceil(n/8) bytes of x-sign bits, ceil(n/8) bytes of
//                 y-sign bits (LSB-first, bit i-1 is position i)

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "icgr/fasta.hpp"
#include "icgr/icgr.hpp"

namespace icgr {

inline constexpr std::uint32_t kDefaultBlockSize = 1024;
inline constexpr std::uint8_t kFormatVersion = 1;
inline constexpr std::string_view kMagic = "ICGR";

/// A named sequence stored as consecutive independently encoded blocks.
/// Every block but the last holds exactly block_size bases. An empty
/// sequence is stored as the single block (0, 0, 0).
struct EncodedRecord {
  std::string name;
  std::uint32_t block_size = kDefaultBlockSize;
  std::vector<TriInteger> blocks;

  std::uint64_t length() const noexcept;

  friend bool operator==(const EncodedRecord&, const EncodedRecord&) = default;
};

/// Throws BadLayout if the block lengths do not match block_size.
void check_layout(const EncodedRecord& record);

EncodedRecord chunk_encode(const SequenceRecord& record, std::uint32_t block_size,
                           unsigned threads = 1);

/// Decodes and concatenates the blocks. Throws InvalidBlock.
SequenceRecord decode_record(const EncodedRecord& record, unsigned threads = 1);

/// Batch forms; work is spread over all blocks of all records and results
/// come back in input order.
std::vector<EncodedRecord> encode_records(std::span<const SequenceRecord> records,
                                          std::uint32_t block_size, unsigned threads = 1);
std::vector<SequenceRecord> decode_records(std::span<const EncodedRecord> records,
                                           unsigned threads = 1);

/// Substitutions between two encoded records of equal total length. Blocks
/// are compared directly when both records share a layout; otherwise both
/// are decoded first. Positions are 1-based over the whole record.
std::vector<MutationEvent> diff_records(const EncodedRecord& a, const EncodedRecord& b);

void write_text(std::ostream& out, std::span<const EncodedRecord> records);
std::string write_text(std::span<const EncodedRecord> records);

/// Throws ParseError, InvalidBlock, BadLayout.
std::vector<EncodedRecord> read_text(std::istream& in);
std::vector<EncodedRecord> read_text(std::string_view text);

void write_binary(std::ostream& out, std::span<const EncodedRecord> records);
std::string write_binary(std::span<const EncodedRecord> records);

/// Throws BadMagic, UnsupportedVersion, TruncatedInput, TrailingData,
/// InvalidBlock, BadLayout.
std::vector<EncodedRecord> read_binary(std::istream& in);
std::vector<EncodedRecord> read_binary(std::string_view bytes);

bool has_binary_magic(std::string_view bytes) noexcept;

/// Exact size in bytes of write_binary(records).
std::uint64_t binary_size(std::span<const EncodedRecord> records);

struct CompressionStats {
  std::uint64_t n_total = 0;
  std::uint64_t blocks = 0;
  /// sum over blocks of bit_length(n) + bit_length(|X|) + bit_length(|Y|)
  std::uint64_t bits_text = 0;
  /// sign-bit payload of the binary container: 16 * ceil(n / 8) per block
  std::uint64_t bits_binary = 0;
  /// the whole binary container, headers included
  std::uint64_t bits_container = 0;

  double bits_per_nt_text() const noexcept;
  double bits_per_nt_binary() const noexcept;
  double bits_per_nt_container() const noexcept;
};

/// Throws EmptyInput for an empty record list.
CompressionStats stats(std::span<const EncodedRecord> records);
CompressionStats stats(const EncodedRecord& record);

}  // namespace icgr
