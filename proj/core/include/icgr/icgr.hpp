#pragma once

// Integer chaos game representation.
//
// A sequence S(1..n) is mapped to the integer walk
//
//     p_1 = corner(S(1)),   p_i = p_{i-1} + 2^(i-1) * corner(S(i)),
//
// and stored as the tri-integer (n, p_n.x, p_n.y). Because |p_{i-1}| < 2^(i-1),
// the sign pair of p_i equals the corner of S(i), which makes the walk
// invertible from its final point alone.

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "icgr/errors.hpp"
#include "icgr/nucleotide.hpp"

namespace icgr {

using BigInt = mpz_class;

struct TriInteger {
  std::uint64_t n = 0;
  BigInt x = 0;
  BigInt y = 0;

  friend bool operator==(const TriInteger& a, const TriInteger& b) {
    return a.n == b.n && a.x == b.x && a.y == b.y;
  }
};

struct IntPoint {
  BigInt x;
  BigInt y;

  friend bool operator==(const IntPoint& a, const IntPoint& b) {
    return a.x == b.x && a.y == b.y;
  }
};

/// points[i - 1] holds p_i.
using IntTrajectory = std::vector<IntPoint>;

struct MutationEvent {
  std::uint64_t position;  // 1-based
  Nucleotide from;
  Nucleotide to;

  friend bool operator==(const MutationEvent&, const MutationEvent&) = default;
};

struct Verdict {
  bool valid = true;
  InvalidReason reason = InvalidReason::Parity;
  char axis = 'x';
  std::uint64_t position = 0;

  explicit operator bool() const noexcept { return valid; }
};

/// The sign vectors of a sequence, one bit per position, LSB-first:
/// bit (i - 1) of the x stream is 1 iff corner(S(i)).x = +1. Both streams
/// hold ceil(n / 8) bytes; padding bits are zero.
struct PackedSigns {
  std::uint64_t n = 0;
  std::vector<std::uint8_t> x;
  std::vector<std::uint8_t> y;

  friend bool operator==(const PackedSigns&, const PackedSigns&) = default;
};

constexpr std::uint64_t packed_size(std::uint64_t n) noexcept { return (n + 7) / 8; }

PackedSigns pack(std::span<const Nucleotide> sequence);
Sequence unpack(const PackedSigns& packed);

/// X = 2 * Bx - (2^n - 1), likewise Y. Set padding bits yield an
/// out-of-range (invalid) tri-integer rather than an error.
TriInteger to_tri_integer(const PackedSigns& packed);

/// Inverse of to_tri_integer. Throws InvalidTriInteger unless validate(tri).
PackedSigns to_packed(const TriInteger& tri);

/// Encodes via sign packing and a single affine transform per axis.
TriInteger encode(std::span<const Nucleotide> sequence);

/// Encodes by summing signed powers of two directly.
TriInteger encode_closed_form(std::span<const Nucleotide> sequence);

/// Every intermediate point of the walk, computed by the step recurrence.
IntTrajectory encode_trajectory(std::span<const Nucleotide> sequence);

/// Accepts exactly the image of encode: (0, 0, 0), or n >= 1 with both
/// coordinates odd and of magnitude at most 2^n - 1.
Verdict validate(const TriInteger& tri);

/// Recovers the unique sequence whose encoding is `tri`.
/// Throws InvalidTriInteger (with the rejecting position) otherwise.
Sequence decode(const TriInteger& tri);

struct DecodeTrace {
  Sequence sequence;
  IntTrajectory residuals;  // residuals[i - 1] = p_i
};

/// Walks back from p_n one position at a time, checking each residual and
/// reading the base from its quadrant before subtracting 2^(i-1) * corner.
/// Quadratic in n; meant for inspection and cross-checking.
DecodeTrace decode_stepwise(const TriInteger& tri);

/// (+,+) -> A, (-,+) -> T, (-,-) -> C, (+,-) -> G. Throws ZeroCoordinate.
Nucleotide nucleotide_from_signs(const BigInt& px, const BigInt& py);
Nucleotide nucleotide_from_signs(std::int64_t px, std::int64_t py);

/// Positions at which the sequences encoded by `a` and `b` differ.
/// Throws LengthMismatch when a.n != b.n and InvalidTriInteger for invalid input.
std::vector<MutationEvent> diff(const TriInteger& a, const TriInteger& b);

/// Same contract over plain sequences.
std::vector<MutationEvent> diff(std::span<const Nucleotide> a, std::span<const Nucleotide> b);

/// Number of bits in |v|; 0 for v = 0.
std::uint64_t bit_length(const BigInt& v);

}  // namespace icgr
