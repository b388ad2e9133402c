#include "icgr/codec.hpp"
#include "icgr/errors.hpp"

namespace icgr {

namespace {

std::uint64_t bit_length(std::uint64_t v) {
  std::uint64_t bits = 0;
  while (v != 0) {
    ++bits;
    v >>= 1;
  }
  return bits;
}

double ratio(std::uint64_t bits, std::uint64_t n) {
  return n == 0 ? 0.0 : static_cast<double>(bits) / static_cast<double>(n);
}

}  // namespace

double CompressionStats::bits_per_nt_text() const noexcept { return ratio(bits_text, n_total); }
double CompressionStats::bits_per_nt_binary() const noexcept {
  return ratio(bits_binary, n_total);
}
double CompressionStats::bits_per_nt_container() const noexcept {
  return ratio(bits_container, n_total);
}

CompressionStats stats(std::span<const EncodedRecord> records) {
  if (records.empty()) throw EmptyInput();
  CompressionStats s;
  for (const EncodedRecord& record : records) {
    for (const TriInteger& t : record.blocks) {
      s.n_total += t.n;
      ++s.blocks;
      s.bits_text += bit_length(t.n) + icgr::bit_length(t.x) + icgr::bit_length(t.y);
      s.bits_binary += 16 * packed_size(t.n);
    }
  }
  s.bits_container = 8 * binary_size(records);
  return s;
}

CompressionStats stats(const EncodedRecord& record) {
  return stats(std::span<const EncodedRecord>(&record, 1));
}

}  // namespace icgr
