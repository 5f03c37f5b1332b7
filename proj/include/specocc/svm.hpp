#pragma once

#include <string>
#include <vector>

#include "specocc/common.hpp"
#include "specocc/dataset.hpp"

namespace specocc {

struct SvmModel {
  std::vector<double> weights;
  double bias = 0;
  double box_constraint = 1.0;
  double decision_offset = 0;  // rho, absorbed into bias by convention

  std::string to_json() const;
  static SvmModel from_json(const std::string& text);
};

struct SvmOptions {
  int max_epochs = 10000;
  double tolerance = 1e-6;  // relative objective delta
  double bias_scale = 10.0; // augmented-feature value carrying the bias
};

struct SvmTrainInfo {
  // Primal hinge objective 0.5*||w||^2 + C * sum hinge, recorded once per
  // epoch on the monotone iterate; non-increasing by construction.
  std::vector<double> objective_history;
  int epochs = 0;
  bool converged = false;
};

// Primal objective at (weights, bias) for the given data.
double svm_objective(const Dataset& data, const std::vector<double>& weights, double bias,
                     double box_constraint, double bias_scale);

// Soft-margin linear SVM trained by dual coordinate descent with a
// monotone line-search safeguard on the primal iterate. Throws
// ConvergenceError when the epoch cap is reached before the objective
// settles.
SvmModel svm_fit(const Dataset& train, double box_constraint, SvmTrainInfo* info = nullptr,
                 const SvmOptions& options = {});

std::vector<std::uint8_t> svm_predict(const SvmModel& model, const Grid<std::uint8_t>& features);

}  // namespace specocc
