#include "icgr/icgr.hpp"

#include <algorithm>

namespace icgr {

namespace {

BigInt power_of_two(std::uint64_t exponent) {
  BigInt p;
  mpz_setbit(p.get_mpz_t(), exponent);
  return p;
}

bool test_bit(const std::vector<std::uint8_t>& bytes, std::uint64_t i) {
  return ((bytes[i >> 3] >> (i & 7)) & 1u) != 0;
}

BigInt import_bits(const std::vector<std::uint8_t>& bytes) {
  BigInt b;
  if (!bytes.empty()) {
    mpz_import(b.get_mpz_t(), bytes.size(), -1, 1, 0, 0, bytes.data());
  }
  return b;
}

// 2 * bits - (2^n - 1)
BigInt signed_from_bits(const std::vector<std::uint8_t>& bytes, std::uint64_t n) {
  BigInt v = import_bits(bytes);
  v <<= 1;
  v += 1;
  v -= power_of_two(n);
  return v;
}

// (v + 2^n - 1) / 2, written LSB-first into ceil(n/8) bytes.
std::vector<std::uint8_t> bits_from_signed(const BigInt& v, std::uint64_t n) {
  BigInt b = v + power_of_two(n) - 1;
  b >>= 1;
  std::vector<std::uint8_t> out(packed_size(n), 0);
  if (sgn(b) != 0) {
    std::size_t count = 0;
    mpz_export(out.data(), &count, -1, 1, 0, 0, b.get_mpz_t());
  }
  return out;
}

// Parity then magnitude: |v| <= 2^i - 1 iff bit_length(v) <= i.
bool check_residual(const BigInt& v, std::uint64_t i, char axis, Verdict& verdict) {
  if (mpz_even_p(v.get_mpz_t())) {
    verdict = {false, InvalidReason::Parity, axis, i};
    return false;
  }
  if (bit_length(v) > i) {
    verdict = {false, InvalidReason::Magnitude, axis, i};
    return false;
  }
  return true;
}

void throw_if_invalid(const Verdict& verdict) {
  if (!verdict) throw InvalidTriInteger(verdict.reason, verdict.position, verdict.axis);
}

}  // namespace

std::uint64_t bit_length(const BigInt& v) {
  if (sgn(v) == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

PackedSigns pack(std::span<const Nucleotide> sequence) {
  PackedSigns p;
  p.n = sequence.size();
  p.x.assign(packed_size(p.n), 0);
  p.y.assign(packed_size(p.n), 0);
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const auto mask = static_cast<std::uint8_t>(1u << (i & 7));
    if (x_bit(sequence[i])) p.x[i >> 3] |= mask;
    if (y_bit(sequence[i])) p.y[i >> 3] |= mask;
  }
  return p;
}

Sequence unpack(const PackedSigns& packed) {
  Sequence out(packed.n);
  for (std::uint64_t i = 0; i < packed.n; ++i) {
    out[i] = from_bits(test_bit(packed.x, i), test_bit(packed.y, i));
  }
  return out;
}

TriInteger to_tri_integer(const PackedSigns& packed) {
  return {packed.n, signed_from_bits(packed.x, packed.n), signed_from_bits(packed.y, packed.n)};
}

PackedSigns to_packed(const TriInteger& tri) {
  throw_if_invalid(validate(tri));
  return {tri.n, bits_from_signed(tri.x, tri.n), bits_from_signed(tri.y, tri.n)};
}

TriInteger encode(std::span<const Nucleotide> sequence) {
  return to_tri_integer(pack(sequence));
}

TriInteger encode_closed_form(std::span<const Nucleotide> sequence) {
  // Split each sum into its positive and negative power-of-two terms.
  BigInt x_pos, x_neg, y_pos, y_neg;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const Corner c = corner(sequence[i]);
    mpz_setbit((c.x > 0 ? x_pos : x_neg).get_mpz_t(), i);
    mpz_setbit((c.y > 0 ? y_pos : y_neg).get_mpz_t(), i);
  }
  return {sequence.size(), x_pos - x_neg, y_pos - y_neg};
}

IntTrajectory encode_trajectory(std::span<const Nucleotide> sequence) {
  IntTrajectory points;
  points.reserve(sequence.size());
  BigInt px = 0, py = 0;
  BigInt step = 1;  // 2^(i-1)
  for (Nucleotide base : sequence) {
    const Corner c = corner(base);
    if (c.x > 0) px += step; else px -= step;
    if (c.y > 0) py += step; else py -= step;
    points.push_back({px, py});
    step <<= 1;
  }
  return points;
}

Verdict validate(const TriInteger& tri) {
  if (tri.n == 0) {
    if (sgn(tri.x) != 0) return {false, InvalidReason::NonZeroEmpty, 'x', 0};
    if (sgn(tri.y) != 0) return {false, InvalidReason::NonZeroEmpty, 'y', 0};
    return {};
  }
  Verdict verdict;
  if (!check_residual(tri.x, tri.n, 'x', verdict)) return verdict;
  if (!check_residual(tri.y, tri.n, 'y', verdict)) return verdict;
  return {};
}

Sequence decode(const TriInteger& tri) {
  return unpack(to_packed(tri));
}

DecodeTrace decode_stepwise(const TriInteger& tri) {
  DecodeTrace trace;
  if (tri.n == 0) {
    throw_if_invalid(validate(tri));
    return trace;
  }
  trace.sequence.resize(tri.n);
  trace.residuals.resize(tri.n);
  BigInt px = tri.x, py = tri.y;
  for (std::uint64_t i = tri.n; i >= 1; --i) {
    Verdict verdict;
    if (!check_residual(px, i, 'x', verdict) || !check_residual(py, i, 'y', verdict)) {
      throw_if_invalid(verdict);
    }
    trace.residuals[i - 1] = {px, py};
    const Nucleotide base = nucleotide_from_signs(px, py);
    trace.sequence[i - 1] = base;
    const BigInt step = power_of_two(i - 1);
    const Corner c = corner(base);
    if (c.x > 0) px -= step; else px += step;
    if (c.y > 0) py -= step; else py += step;
  }
  return trace;
}

Nucleotide nucleotide_from_signs(const BigInt& px, const BigInt& py) {
  const int sx = sgn(px), sy = sgn(py);
  if (sx == 0 || sy == 0) throw ZeroCoordinate();
  return from_bits(sx > 0, sy > 0);
}

Nucleotide nucleotide_from_signs(std::int64_t px, std::int64_t py) {
  if (px == 0 || py == 0) throw ZeroCoordinate();
  return from_bits(px > 0, py > 0);
}

std::vector<MutationEvent> diff(const TriInteger& a, const TriInteger& b) {
  if (a.n != b.n) throw LengthMismatch(a.n, b.n);
  const PackedSigns pa = to_packed(a);
  const PackedSigns pb = to_packed(b);
  std::vector<MutationEvent> events;
  for (std::size_t byte = 0; byte < pa.x.size(); ++byte) {
    if (pa.x[byte] == pb.x[byte] && pa.y[byte] == pb.y[byte]) continue;
    const std::uint64_t first = byte * 8;
    const std::uint64_t last = std::min<std::uint64_t>(first + 8, a.n);
    for (std::uint64_t i = first; i < last; ++i) {
      const Nucleotide from = from_bits(test_bit(pa.x, i), test_bit(pa.y, i));
      const Nucleotide to = from_bits(test_bit(pb.x, i), test_bit(pb.y, i));
      if (from != to) events.push_back({i + 1, from, to});
    }
  }
  return events;
}

std::vector<MutationEvent> diff(std::span<const Nucleotide> a, std::span<const Nucleotide> b) {
  if (a.size() != b.size()) throw LengthMismatch(a.size(), b.size());
  std::vector<MutationEvent> events;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) events.push_back({i + 1, a[i], b[i]});
  }
  return events;
}

}  // namespace icgr
