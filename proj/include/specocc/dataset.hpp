#pragma once

#include <cstdint>
#include <vector>

#include "specocc/common.hpp"
#include "specocc/labeling.hpp"
#include "specocc/occupancy.hpp"

namespace specocc {

// Binary feature rows (status vectors) with their PU labels.
struct Dataset {
  Grid<std::uint8_t> features;
  std::vector<std::uint8_t> labels;

  int n() const { return features.rows(); }
  int k() const { return features.cols(); }
  void check() const;
};

Dataset make_dataset(const StatusMatrix& status, const PuLabelVector& labels);

struct TrainTestSplit {
  Dataset train;
  Dataset test;
  double ratio = 0;
};

// Chronological prefix/suffix split: first ceil(n * fraction) rows train.
TrainTestSplit split(const Dataset& dataset, double train_fraction);

struct Metrics {
  double ca = 0;
  int misdetections = 0;  // predicted 0, reference 1
  int false_alarms = 0;   // predicted 1, reference 0
  int n_test = 0;
  double fit_seconds = 0;
  double predict_seconds = 0;
};

Metrics evaluate(const std::vector<std::uint8_t>& predicted,
                 const std::vector<std::uint8_t>& reference);

}  // namespace specocc
