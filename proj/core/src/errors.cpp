#include "icgr/errors.hpp"

#include <sstream>

namespace icgr {

const char* to_string(InvalidReason reason) noexcept {
  switch (reason) {
    case InvalidReason::NonZeroEmpty:
      return "non-zero coordinate for empty sequence";
    case InvalidReason::Parity:
      return "parity";
    case InvalidReason::Magnitude:
      return "magnitude";
  }
  return "unknown";
}

namespace {

std::string invalid_message(InvalidReason reason, std::uint64_t position, char axis) {
  std::ostringstream os;
  os << "invalid tri-integer: " << to_string(reason) << " violation in " << axis
     << " at position " << position;
  return os.str();
}

}  // namespace

InvalidTriInteger::InvalidTriInteger(InvalidReason reason, std::uint64_t position,
                                     char axis)
    : Error(invalid_message(reason, position, axis)),
      reason_(reason),
      position_(position),
      axis_(axis) {}

InvalidTriInteger::InvalidTriInteger(const std::string& message, InvalidReason reason,
                                     std::uint64_t position, char axis)
    : Error(message), reason_(reason), position_(position), axis_(axis) {}

LengthMismatch::LengthMismatch(std::uint64_t a, std::uint64_t b)
    : Error("length mismatch: " + std::to_string(a) + " vs " + std::to_string(b)),
      a_(a),
      b_(b) {}

InvalidResolution::InvalidResolution(int k)
    : Error("invalid FCGR resolution k=" + std::to_string(k) + " (expected 1..16)") {}

MalformedFasta::MalformedFasta(std::size_t line, const std::string& what)
    : Error("malformed FASTA at line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::string symbol_message(const std::string& record, std::uint64_t position,
                           unsigned char byte, std::size_t line) {
  std::ostringstream os;
  os << "invalid symbol ";
  if (byte >= 0x20 && byte < 0x7f) {
    os << '\'' << static_cast<char>(byte) << '\'';
  } else {
    os << "0x" << std::hex << static_cast<unsigned>(byte) << std::dec;
  }
  os << " in record '" << record << "' at position " << position;
  if (line != 0) os << " (line " << line << ')';
  return os.str();
}

}  // namespace

InvalidSymbol::InvalidSymbol(std::string record, std::uint64_t position,
                             unsigned char byte, std::size_t line)
    : Error(symbol_message(record, position, byte, line)),
      record_(std::move(record)),
      position_(position),
      byte_(byte),
      line_(line) {}

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error("parse error at line " + std::to_string(line) + ": " + what), line_(line) {}

InvalidBlock::InvalidBlock(std::string record, std::size_t block,
                           const InvalidTriInteger& cause)
    : InvalidTriInteger("record '" + record + "' block " + std::to_string(block) + ": " +
                            cause.what(),
                        cause.reason(), cause.position(), cause.axis()),
      record_(std::move(record)),
      block_(block) {}

UnsupportedVersion::UnsupportedVersion(unsigned version)
    : Error("unsupported ICGR container version " + std::to_string(version)),
      version_(version) {}

TruncatedInput::TruncatedInput(std::uint64_t offset)
    : Error("truncated input at byte offset " + std::to_string(offset)), offset_(offset) {}

TrailingData::TrailingData(std::uint64_t offset)
    : Error("unexpected trailing data at byte offset " + std::to_string(offset)),
      offset_(offset) {}

}  // namespace icgr
