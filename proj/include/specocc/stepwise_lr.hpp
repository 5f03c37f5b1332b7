#pragma once

#include <string>
#include <vector>

#include "specocc/common.hpp"
#include "specocc/dataset.hpp"

namespace specocc {

struct LrModel {
  double intercept = 0;
  std::vector<double> coefficients;  // length k, zero for unselected features
  std::vector<int> selected_features;
  double final_sse = 0;
  bool intercept_only = false;  // no feature was selected
  std::vector<double> sse_history;  // SSE after each selection step

  std::string to_json() const;
  static LrModel from_json(const std::string& text);
};

struct LrOptions {
  // Selection ends early when the relative SSE improvement drops below this.
  double min_relative_improvement = 1e-4;
};

// Forward stepwise least squares: start from intercept-only, each step adds
// the feature with the largest SSE reduction. Features with singular normal
// equations are skipped.
LrModel lr_fit(const Dataset& train, int max_predictors = 15, const LrOptions& options = {});

// Regression output >= 0.5 -> 1.
std::vector<std::uint8_t> lr_predict(const LrModel& model, const Grid<std::uint8_t>& features);

}  // namespace specocc
