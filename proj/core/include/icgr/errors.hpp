#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace icgr {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Why a tri-integer is not the image of any DNA sequence.
enum class InvalidReason {
  NonZeroEmpty,  // n = 0 but a coordinate is non-zero
  Parity,        // coordinate or residual is even
  Magnitude,     // |coordinate| exceeds 2^i - 1
};

const char* to_string(InvalidReason reason) noexcept;

/// Raised by decode when a residual fails the parity or magnitude check.
/// `position` is the 1-based index at which the residual was rejected
/// (0 for a non-empty coordinate pair attached to n = 0).
class InvalidTriInteger : public Error {
 public:
  InvalidTriInteger(InvalidReason reason, std::uint64_t position, char axis);

  InvalidReason reason() const noexcept { return reason_; }
  std::uint64_t position() const noexcept { return position_; }
  char axis() const noexcept { return axis_; }

 protected:
  InvalidTriInteger(const std::string& message, InvalidReason reason, std::uint64_t position,
                    char axis);

 private:
  InvalidReason reason_;
  std::uint64_t position_;
  char axis_;
};

class ZeroCoordinate : public Error {
 public:
  ZeroCoordinate() : Error("zero coordinate has no quadrant") {}
};

class LengthMismatch : public Error {
 public:
  LengthMismatch(std::uint64_t a, std::uint64_t b);
  std::uint64_t first() const noexcept { return a_; }
  std::uint64_t second() const noexcept { return b_; }

 private:
  std::uint64_t a_;
  std::uint64_t b_;
};

class EmptySequence : public Error {
 public:
  EmptySequence() : Error("empty sequence") {}
};

class InvalidResolution : public Error {
 public:
  explicit InvalidResolution(int k);
};

/// Structural FASTA problem, e.g. sequence data before the first header.
class MalformedFasta : public Error {
 public:
  MalformedFasta(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A byte outside {A, C, G, T} after case folding.
class InvalidSymbol : public Error {
 public:
  InvalidSymbol(std::string record, std::uint64_t position, unsigned char byte,
                std::size_t line);

  const std::string& record() const noexcept { return record_; }
  std::uint64_t position() const noexcept { return position_; }
  unsigned char byte() const noexcept { return byte_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string record_;
  std::uint64_t position_;
  unsigned char byte_;
  std::size_t line_;
};

/// Syntax error in the text tri-integer format.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A stored block does not hold a valid tri-integer. `block` is 1-based.
class InvalidBlock : public InvalidTriInteger {
 public:
  InvalidBlock(std::string record, std::size_t block, const InvalidTriInteger& cause);

  const std::string& record() const noexcept { return record_; }
  std::size_t block() const noexcept { return block_; }

 private:
  std::string record_;
  std::size_t block_;
};

/// Block layout inconsistent with the record header.
class BadLayout : public Error {
 public:
  using Error::Error;
};

class BadMagic : public Error {
 public:
  BadMagic() : Error("not an ICGR container (bad magic)") {}
};

class UnsupportedVersion : public Error {
 public:
  explicit UnsupportedVersion(unsigned version);
  unsigned version() const noexcept { return version_; }

 private:
  unsigned version_;
};

class TruncatedInput : public Error {
 public:
  explicit TruncatedInput(std::uint64_t offset);
  std::uint64_t offset() const noexcept { return offset_; }

 private:
  std::uint64_t offset_;
};

class TrailingData : public Error {
 public:
  explicit TrailingData(std::uint64_t offset);
  std::uint64_t offset() const noexcept { return offset_; }

 private:
  std::uint64_t offset_;
};

class EmptyInput : public Error {
 public:
  EmptyInput() : Error("no records") {}
};

}  // namespace icgr
