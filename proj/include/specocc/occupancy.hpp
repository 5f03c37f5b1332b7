#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "specocc/common.hpp"
#include "specocc/data_model.hpp"

namespace specocc {

// Binary spectrum status after energy-detection thresholding.
struct StatusMatrix {
  Grid<std::uint8_t> values;
  double threshold_dbm = 0;

  int n_slots() const { return values.rows(); }
  int n_bins() const { return values.cols(); }
};

// Per-slot occupancy: fraction of bins flagged occupied.
struct OccupancyVector {
  std::vector<double> values;
};

// Per-bin occupancy: fraction of slots in which the bin is occupied.
struct BinOccupancyVector {
  std::vector<double> values;
};

// Cell is 1 iff power > gamma; equality counts as idle.
StatusMatrix threshold_status(const PowerMatrix& matrix, double gamma);

OccupancyVector slot_occupancy(const StatusMatrix& status);
BinOccupancyVector bin_occupancy(const StatusMatrix& status);

// One (gamma, mean occupancy over all slots) row per threshold.
std::vector<std::pair<double, double>> occupancy_vs_threshold(const PowerMatrix& matrix,
                                                              const std::vector<double>& gammas);

}  // namespace specocc
