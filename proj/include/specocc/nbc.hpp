#pragma once

#include <array>
#include <string>
#include <vector>

#include "specocc/common.hpp"
#include "specocc/dataset.hpp"

namespace specocc {

enum class NbcKernel { Bernoulli, Gaussian };

struct NbcModel {
  NbcKernel kernel = NbcKernel::Bernoulli;
  std::array<double, 2> class_priors = {0.5, 0.5};
  // Bernoulli: theta[c][j] = P(S(j)=1 | class c), Laplace-smoothed.
  std::array<std::vector<double>, 2> theta;
  // Gaussian: per-feature mean / variance per class.
  std::array<std::vector<double>, 2> mean;
  std::array<std::vector<double>, 2> variance;
  bool degenerate = false;   // training data had a single class
  std::uint8_t majority = 0; // predicted when degenerate

  std::string to_json() const;
  static NbcModel from_json(const std::string& text);
};

// Laplace smoothing constant for the Bernoulli likelihoods.
inline constexpr double kNbcSmoothing = 1.0;

NbcModel nbc_fit(const Dataset& train, NbcKernel kernel = NbcKernel::Bernoulli);

std::vector<std::uint8_t> nbc_predict(const NbcModel& model, const Grid<std::uint8_t>& features);

// Normalized posterior (p0, p1) for one feature row; ties resolve to 0 in
// nbc_predict.
std::array<double, 2> nbc_posterior(const NbcModel& model, std::span<const std::uint8_t> row);

}  // namespace specocc
