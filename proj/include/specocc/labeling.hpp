#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "specocc/common.hpp"
#include "specocc/occupancy.hpp"

namespace specocc {

struct LabelingCriteria {
  double gamma = 0;    // dBm
  double u_oc = 0.75;  // upper occupancy bound
  double l_oc = 0.40;  // lower occupancy bound
  int b_min_run = 1;   // minimum free-bin run allowing SU transmission

  // Returns human-readable warnings for soft violations of the empirical
  // guardrails (u_oc < 0.75, l_oc > 0.40); throws on hard violations.
  std::vector<std::string> validate(int k) const;

  std::string to_json() const;
  static LabelingCriteria from_json(const std::string& text);
};

struct PuLabelVector {
  std::vector<std::uint8_t> values;
};

struct CalibrationReport {
  struct GammaRecord {
    double gamma = 0;
    double l_s = 0;  // min training occupancy
    double u_s = 0;  // max training occupancy
    int in_range_count = 0;
    bool has_range = false;
    double cand_l = 0;
    double cand_u = 0;
  };
  std::vector<GammaRecord> records;
  double chosen_gamma = 0;
  double chosen_l_oc = 0;
  double chosen_u_oc = 0;
  std::vector<double> ms_grid;

  std::string to_json() const;
};

// Longest run of consecutive 0s in a status row.
int consecutive_free(std::span<const std::uint8_t> status_row);

// Four-condition PU rule:
//   OC > u_oc                         -> 1
//   OC < l_oc                         -> 0
//   l_oc <= OC <= u_oc, con <  B      -> 1
//   l_oc <= OC <= u_oc, con >= B      -> 0
PuLabelVector label_pu(const StatusMatrix& status, const OccupancyVector& occ,
                       const LabelingCriteria& criteria);

// Per-gamma: [L_s, U_s] of the occupancy vector and the widest contiguous
// ms_grid sub-range strictly inside it. Picks the gamma whose candidate
// range contains the most occupancy values. Throws CalibrationError when
// every gamma is degenerate. b_min_run is left at 1; see select_b.
std::pair<LabelingCriteria, CalibrationReport> calibrate(const PowerMatrix& matrix,
                                                         const std::vector<double>& gammas,
                                                         const std::vector<double>& ms_grid);

struct BSelection {
  int b = 1;
  bool target_met = true;
};

// Smallest B for which the fraction of in-range slots labeled PU-present
// reaches target_protection. Returns k with target_met=false when none does.
BSelection select_b(const StatusMatrix& status, const OccupancyVector& occ, double l_oc,
                    double u_oc, double target_protection);

}  // namespace specocc
