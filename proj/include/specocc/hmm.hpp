#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "specocc/common.hpp"
#include "specocc/dataset.hpp"
#include "specocc/labeling.hpp"
#include "specocc/occupancy.hpp"

namespace specocc {

// Two hidden states: 0 = PU absent, 1 = PU present.
struct HmmModel {
  std::array<std::array<double, 2>, 2> transition = {{{0.7, 0.3}, {0.3, 0.7}}};
  std::array<std::vector<double>, 2> emission;  // [state][symbol]
  std::array<double, 2> initial = {0.5, 0.5};
  int num_symbols = 2;

  void validate() const;

  std::string to_json() const;
  static HmmModel from_json(const std::string& text);
};

// Declared baseline constants for the untrained model.
HmmModel default_hmm_model(int num_symbols = 2);

// Symbol 0 when OC < split, else 1.
std::vector<int> discretize_observations(const OccupancyVector& occ, double split);

// Uniform M-bin quantization of occupancies in [0,1].
std::vector<int> discretize_observations_uniform(const OccupancyVector& occ, int num_symbols);

// log P(O | model) by the scaled forward recursion. A symbol unreachable
// from every state yields -inf rather than an exception.
double hmm_forward(const HmmModel& model, const std::vector<int>& obs);

struct ViterbiResult {
  std::vector<int> states;
  double log_prob = 0;
  bool zero_likelihood = false;
};

// Most probable state path in log domain; ties break toward state 0.
ViterbiResult hmm_viterbi(const HmmModel& model, const std::vector<int>& obs);

// Maximum-likelihood re-estimation from a labeled (state, observation)
// sequence, Laplace-smoothed with the given alpha.
HmmModel estimate_hmm(const std::vector<int>& states, const std::vector<int>& obs,
                      int num_symbols = 2, double alpha = 1.0);

// Decode obs, map state index to PU label, score against the reference.
Metrics hmm_classify(const HmmModel& model, const std::vector<int>& obs,
                     const PuLabelVector& reference);

}  // namespace specocc
