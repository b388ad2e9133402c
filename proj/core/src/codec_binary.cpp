#include <cstring>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "icgr/codec.hpp"
#include "icgr/errors.hpp"

namespace icgr {

namespace {

constexpr std::size_t kFileHeaderBytes = 4 + 1 + 4;
constexpr std::size_t kRecordFixedBytes = 2 + 4 + 4;
constexpr std::size_t kBlockFixedBytes = 4;
constexpr std::size_t kMaxNameBytes = 0xffff;

class ByteWriter {
 public:
  explicit ByteWriter(std::string& out) : out_(out) {}

  void u8(std::uint8_t v) { out_.push_back(static_cast<char>(v)); }
  void u16(std::uint16_t v) {
    for (int i = 0; i < 2; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void bytes(std::span<const std::uint8_t> data) {
    out_.append(reinterpret_cast<const char*>(data.data()), data.size());
  }
  void bytes(std::string_view data) { out_.append(data); }

 private:
  std::string& out_;
};

class ByteReader {
 public:
  explicit ByteReader(std::string_view data) : data_(data) {}

  std::uint64_t offset() const noexcept { return pos_; }
  bool at_end() const noexcept { return pos_ == data_.size(); }

  std::uint8_t u8() { return static_cast<std::uint8_t>(take(1)[0]); }
  std::uint16_t u16() {
    const std::string_view b = take(2);
    return static_cast<std::uint16_t>(byte(b, 0) | (byte(b, 1) << 8));
  }
  std::uint32_t u32() {
    const std::string_view b = take(4);
    return byte(b, 0) | (byte(b, 1) << 8) | (byte(b, 2) << 16) | (byte(b, 3) << 24);
  }
  std::string_view take(std::size_t n) {
    if (data_.size() - pos_ < n) throw TruncatedInput(pos_);
    const std::string_view out = data_.substr(pos_, n);
    pos_ += n;
    return out;
  }
  std::vector<std::uint8_t> take_bytes(std::size_t n) {
    const std::string_view b = take(n);
    return {b.begin(), b.end()};
  }

 private:
  static std::uint32_t byte(std::string_view b, std::size_t i) {
    return static_cast<std::uint8_t>(b[i]);
  }

  std::string_view data_;
  std::uint64_t pos_ = 0;
};

}  // namespace

bool has_binary_magic(std::string_view bytes) noexcept {
  return bytes.substr(0, kMagic.size()) == kMagic;
}

std::uint64_t binary_size(std::span<const EncodedRecord> records) {
  std::uint64_t total = kFileHeaderBytes;
  for (const EncodedRecord& record : records) {
    total += kRecordFixedBytes + record.name.size();
    for (const TriInteger& t : record.blocks) total += kBlockFixedBytes + 2 * packed_size(t.n);
  }
  return total;
}

void write_binary(std::ostream& out, std::span<const EncodedRecord> records) {
  const std::string bytes = write_binary(records);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

std::string write_binary(std::span<const EncodedRecord> records) {
  std::string buffer;
  buffer.reserve(binary_size(records));
  ByteWriter w(buffer);
  w.bytes(kMagic);
  w.u8(kFormatVersion);
  w.u32(static_cast<std::uint32_t>(records.size()));
  for (const EncodedRecord& record : records) {
    check_layout(record);
    if (record.name.size() > kMaxNameBytes) {
      throw Error("record name longer than 65535 bytes: '" + record.name.substr(0, 32) + "...'");
    }
    w.u16(static_cast<std::uint16_t>(record.name.size()));
    w.bytes(record.name);
    w.u32(record.block_size);
    w.u32(static_cast<std::uint32_t>(record.blocks.size()));
    for (std::size_t b = 0; b < record.blocks.size(); ++b) {
      PackedSigns packed;
      try {
        packed = to_packed(record.blocks[b]);
      } catch (const InvalidTriInteger& e) {
        throw InvalidBlock(record.name, b + 1, e);
      }
      w.u32(static_cast<std::uint32_t>(packed.n));
      w.bytes(packed.x);
      w.bytes(packed.y);
    }
  }
  return buffer;
}

std::vector<EncodedRecord> read_binary(std::string_view bytes) {
  ByteReader r(bytes);
  if (bytes.size() < kMagic.size() || !has_binary_magic(bytes)) throw BadMagic();
  r.take(kMagic.size());
  const unsigned version = r.u8();
  if (version != kFormatVersion) throw UnsupportedVersion(version);

  const std::uint32_t count = r.u32();
  std::vector<EncodedRecord> records;
  for (std::uint32_t i = 0; i < count; ++i) {
    EncodedRecord record;
    const std::uint16_t name_len = r.u16();
    record.name = std::string(r.take(name_len));
    record.block_size = r.u32();
    const std::uint32_t blocks = r.u32();
    for (std::uint32_t b = 0; b < blocks; ++b) {
      PackedSigns packed;
      packed.n = r.u32();
      packed.x = r.take_bytes(packed_size(packed.n));
      packed.y = r.take_bytes(packed_size(packed.n));
      // Non-zero padding bits produce an out-of-range coordinate here.
      TriInteger tri = to_tri_integer(packed);
      if (const Verdict v = validate(tri); !v) {
        throw InvalidBlock(record.name, b + 1, InvalidTriInteger(v.reason, v.position, v.axis));
      }
      record.blocks.push_back(std::move(tri));
    }
    check_layout(record);
    records.push_back(std::move(record));
  }
  if (!r.at_end()) throw TrailingData(r.offset());
  return records;
}

std::vector<EncodedRecord> read_binary(std::istream& in) {
  const std::string bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return read_binary(std::string_view(bytes));
}

}  // namespace icgr
