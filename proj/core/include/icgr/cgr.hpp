#pragma once

// Classical (midpoint) chaos game representation and frequency-CGR rasters.
// Visualization only: floating-point coordinates do not support decoding.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "icgr/nucleotide.hpp"

namespace icgr {

struct FloatPoint {
  double x;
  double y;
  friend bool operator==(const FloatPoint&, const FloatPoint&) = default;
};

using FloatTrajectory = std::vector<FloatPoint>;

/// p_1 = corner(S(1)) / 2, p_i = (p_{i-1} + corner(S(i))) / 2.
/// Coordinates are exact for n <= 52. Throws EmptySequence.
FloatTrajectory classical_cgr(std::span<const Nucleotide> sequence);

inline constexpr int kMinResolution = 1;
inline constexpr int kMaxResolution = 16;

/// 2^k x 2^k histogram of CGR points. Cell (cx, cy) counts the points with
/// floor(2^(k-1) * (x + 1)) = cx and floor(2^(k-1) * (y + 1)) = cy; cy = 0 is
/// the bottom (y -> -1) row. Storage is sparse, so memory follows the number
/// of occupied cells rather than 4^k.
class FcgrGrid {
 public:
  explicit FcgrGrid(int k);

  int k() const noexcept { return k_; }
  std::uint32_t side() const noexcept { return side_; }
  std::uint64_t total() const noexcept { return total_; }

  /// Throws std::out_of_range outside the grid.
  std::uint64_t at(std::uint32_t cx, std::uint32_t cy) const;
  std::uint64_t max_count() const noexcept;

  void add(std::uint32_t cx, std::uint32_t cy, std::uint64_t count = 1);

  /// Non-zero cells keyed by cy * side + cx.
  const std::map<std::uint64_t, std::uint64_t>& cells() const noexcept { return cells_; }

  friend bool operator==(const FcgrGrid&, const FcgrGrid&) = default;

 private:
  std::uint64_t index(std::uint32_t cx, std::uint32_t cy) const;

  int k_;
  std::uint32_t side_;
  std::uint64_t total_ = 0;
  std::map<std::uint64_t, std::uint64_t> cells_;
};

/// Cell of the point following `previous` after appending `base`.
/// Starting from the centre cell (2^(k-1), 2^(k-1)) this reproduces the
/// floor binning of the exact CGR point, so the cell of p_i depends only on
/// the last k bases up to position i.
constexpr std::pair<std::uint32_t, std::uint32_t> next_cell(
    std::pair<std::uint32_t, std::uint32_t> previous, Nucleotide base, int k) noexcept {
  const std::uint32_t top = 1u << (k - 1);
  return {(previous.first >> 1) | (x_bit(base) ? top : 0u),
          (previous.second >> 1) | (y_bit(base) ? top : 0u)};
}

/// Bins every CGR point of `sequence`. Throws EmptySequence, InvalidResolution.
FcgrGrid fcgr(std::span<const Nucleotide> sequence, int k);

/// Binary PGM (P5), maxval 255, one pixel per cell with the top image row
/// holding the highest y. Intensity is round-half-up of 255 * c / c_max, or
/// of 255 * ln(1 + c) / ln(1 + c_max) when `log_scale` is set.
std::string render_pgm(const FcgrGrid& grid, bool log_scale = false);

/// Streams the same bytes as render_pgm one row at a time.
void write_pgm(std::ostream& out, const FcgrGrid& grid, bool log_scale = false);

}  // namespace icgr
