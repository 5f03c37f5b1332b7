#include "specocc/occupancy.hpp"

#include <cmath>

namespace specocc {

StatusMatrix threshold_status(const PowerMatrix& matrix, double gamma) {
  if (!std::isfinite(gamma)) throw ConfigError("threshold_status: gamma must be finite");
  StatusMatrix s;
  s.threshold_dbm = gamma;
  s.values = Grid<std::uint8_t>(matrix.n_slots(), matrix.n_bins());
  for (int i = 0; i < matrix.n_slots(); ++i)
    for (int j = 0; j < matrix.n_bins(); ++j)
      s.values(i, j) = matrix.values(i, j) > gamma ? 1 : 0;
  return s;
}

OccupancyVector slot_occupancy(const StatusMatrix& status) {
  if (status.values.empty()) throw Error("slot_occupancy: empty status matrix");
  OccupancyVector occ;
  occ.values.resize(status.n_slots());
  const double k = status.n_bins();
  for (int i = 0; i < status.n_slots(); ++i) {
    int sum = 0;
    for (int j = 0; j < status.n_bins(); ++j) sum += status.values(i, j);
    occ.values[i] = sum / k;
  }
  return occ;
}

BinOccupancyVector bin_occupancy(const StatusMatrix& status) {
  if (status.values.empty()) throw Error("bin_occupancy: empty status matrix");
  BinOccupancyVector occ;
  occ.values.resize(status.n_bins());
  const double n = status.n_slots();
  for (int j = 0; j < status.n_bins(); ++j) {
    int sum = 0;
    for (int i = 0; i < status.n_slots(); ++i) sum += status.values(i, j);
    occ.values[j] = sum / n;
  }
  return occ;
}

std::vector<std::pair<double, double>> occupancy_vs_threshold(
    const PowerMatrix& matrix, const std::vector<double>& gammas) {
  if (gammas.empty()) throw ConfigError("occupancy_vs_threshold: gamma list is empty");
  std::vector<std::pair<double, double>> table;
  table.reserve(gammas.size());
  for (double g : gammas) {
    const auto occ = slot_occupancy(threshold_status(matrix, g));
    double sum = 0;
    for (double v : occ.values) sum += v;
    table.emplace_back(g, sum / occ.values.size());
  }
  return table;
}

}  // namespace specocc
