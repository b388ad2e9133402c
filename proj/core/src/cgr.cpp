#include "icgr/cgr.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "icgr/errors.hpp"

namespace icgr {

FloatTrajectory classical_cgr(std::span<const Nucleotide> sequence) {
  if (sequence.empty()) throw EmptySequence();
  FloatTrajectory points;
  points.reserve(sequence.size());
  double x = 0.0, y = 0.0;
  for (Nucleotide base : sequence) {
    const Corner c = corner(base);
    x = 0.5 * (x + c.x);
    y = 0.5 * (y + c.y);
    points.push_back({x, y});
  }
  return points;
}

FcgrGrid::FcgrGrid(int k) : k_(k) {
  if (k < kMinResolution || k > kMaxResolution) throw InvalidResolution(k);
  side_ = 1u << k;
}

std::uint64_t FcgrGrid::index(std::uint32_t cx, std::uint32_t cy) const {
  if (cx >= side_ || cy >= side_) throw std::out_of_range("FCGR cell outside the grid");
  return static_cast<std::uint64_t>(cy) * side_ + cx;
}

std::uint64_t FcgrGrid::at(std::uint32_t cx, std::uint32_t cy) const {
  const auto it = cells_.find(index(cx, cy));
  return it == cells_.end() ? 0 : it->second;
}

std::uint64_t FcgrGrid::max_count() const noexcept {
  std::uint64_t peak = 0;
  for (const auto& [cell, count] : cells_) peak = std::max(peak, count);
  return peak;
}

void FcgrGrid::add(std::uint32_t cx, std::uint32_t cy, std::uint64_t count) {
  const std::uint64_t cell = index(cx, cy);
  if (count == 0) return;
  if (cells_.empty() || cell > cells_.rbegin()->first) {
    cells_.emplace_hint(cells_.end(), cell, count);  // in-order fill is amortized O(1)
  } else {
    cells_[cell] += count;
  }
  total_ += count;
}

namespace {

// 4^10 cells of scratch space, 8 MiB.
constexpr int kDenseFcgrLimit = 10;

}  // namespace

FcgrGrid fcgr(std::span<const Nucleotide> sequence, int k) {
  FcgrGrid grid(k);
  if (sequence.empty()) throw EmptySequence();
  // Count in a flat table first; map insertion per point is the slow part.
  const std::uint32_t centre = 1u << (k - 1);
  const std::uint32_t side = grid.side();
  std::pair<std::uint32_t, std::uint32_t> cell{centre, centre};
  if (k <= kDenseFcgrLimit) {
    std::vector<std::uint64_t> dense(static_cast<std::size_t>(side) * side, 0);
    for (Nucleotide base : sequence) {
      cell = next_cell(cell, base, k);
      ++dense[static_cast<std::size_t>(cell.second) * side + cell.first];
    }
    for (std::size_t i = 0; i < dense.size(); ++i) {
      if (dense[i] != 0) grid.add(i % side, i / side, dense[i]);
    }
  } else {
    std::unordered_map<std::uint64_t, std::uint64_t> sparse;
    for (Nucleotide base : sequence) {
      cell = next_cell(cell, base, k);
      ++sparse[static_cast<std::uint64_t>(cell.second) * side + cell.first];
    }
    for (const auto& [i, count] : sparse) grid.add(i % side, i / side, count);
  }
  return grid;
}

namespace {

std::string pgm_header(std::uint32_t side) {
  return "P5\n" + std::to_string(side) + " " + std::to_string(side) + "\n255\n";
}

// Calls emit(row_bytes) for each image row, top (highest cy) first.
template <typename Emit>
void pgm_rows(const FcgrGrid& grid, bool log_scale, Emit&& emit) {
  const std::uint32_t side = grid.side();
  const std::uint64_t peak = grid.max_count();
  const double log_peak = std::log1p(static_cast<double>(peak));
  const auto& cells = grid.cells();
  std::string row(side, '\0');
  for (std::uint32_t r = 0; r < side; ++r) {
    const std::uint64_t first = static_cast<std::uint64_t>(side - 1 - r) * side;
    std::fill(row.begin(), row.end(), '\0');
    for (auto it = cells.lower_bound(first); it != cells.end() && it->first < first + side; ++it) {
      const std::uint64_t c = it->second;
      std::uint64_t level;
      if (log_scale) {
        level = static_cast<std::uint64_t>(
            std::floor(255.0 * std::log1p(static_cast<double>(c)) / log_peak + 0.5));
      } else {
        // floor(255 c / peak + 1/2); exact while counts stay below 2^55.
        level = (510 * c + peak) / (2 * peak);
      }
      row[it->first - first] = static_cast<char>(std::min<std::uint64_t>(level, 255));
    }
    emit(row);
  }
}

}  // namespace

std::string render_pgm(const FcgrGrid& grid, bool log_scale) {
  std::string out = pgm_header(grid.side());
  out.reserve(out.size() + static_cast<std::size_t>(grid.side()) * grid.side());
  pgm_rows(grid, log_scale, [&](const std::string& row) { out += row; });
  return out;
}

void write_pgm(std::ostream& out, const FcgrGrid& grid, bool log_scale) {
  out << pgm_header(grid.side());
  pgm_rows(grid, log_scale, [&](const std::string& row) { out.write(row.data(), row.size()); });
}

}  // namespace icgr
