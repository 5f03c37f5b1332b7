#include "specocc/labeling.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace specocc {

using nlohmann::json;

std::vector<std::string> LabelingCriteria::validate(int k) const {
  if (!(0 <= l_oc && l_oc <= u_oc && u_oc <= 1))
    throw ConfigError("LabelingCriteria: need 0 <= l_oc <= u_oc <= 1");
  if (b_min_run < 1 || b_min_run > k)
    throw ConfigError("LabelingCriteria: b_min_run must lie in [1, k]");
  std::vector<std::string> warnings;
  if (u_oc < 0.75) warnings.push_back("u_oc below the 0.75 empirical guardrail");
  if (l_oc > 0.40) warnings.push_back("l_oc above the 0.40 empirical guardrail");
  return warnings;
}

std::string LabelingCriteria::to_json() const {
  json j;
  j["gamma"] = gamma;
  j["u_oc"] = u_oc;
  j["l_oc"] = l_oc;
  j["b_min_run"] = b_min_run;
  return j.dump(2);
}

LabelingCriteria LabelingCriteria::from_json(const std::string& text) {
  LabelingCriteria c;
  try {
    json j = json::parse(text);
    c.gamma = j.at("gamma").get<double>();
    c.u_oc = j.at("u_oc").get<double>();
    c.l_oc = j.at("l_oc").get<double>();
    c.b_min_run = j.at("b_min_run").get<int>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("LabelingCriteria JSON: ") + e.what());
  }
  return c;
}

std::string CalibrationReport::to_json() const {
  json j;
  json recs = json::array();
  for (const auto& r : records) {
    recs.push_back({{"gamma", r.gamma},
                    {"l_s", r.l_s},
                    {"u_s", r.u_s},
                    {"in_range_count", r.in_range_count},
                    {"has_range", r.has_range},
                    {"cand_l", r.cand_l},
                    {"cand_u", r.cand_u}});
  }
  j["records"] = recs;
  j["chosen_gamma"] = chosen_gamma;
  j["chosen_l_oc"] = chosen_l_oc;
  j["chosen_u_oc"] = chosen_u_oc;
  j["ms_grid"] = ms_grid;
  return j.dump(2);
}

int consecutive_free(std::span<const std::uint8_t> status_row) {
  if (status_row.empty()) throw ConfigError("consecutive_free: empty row");
  int best = 0, run = 0;
  for (std::uint8_t s : status_row) {
    run = s == 0 ? run + 1 : 0;
    best = std::max(best, run);
  }
  return best;
}

PuLabelVector label_pu(const StatusMatrix& status, const OccupancyVector& occ,
                       const LabelingCriteria& criteria) {
  if (static_cast<int>(occ.values.size()) != status.n_slots())
    throw ConfigError("label_pu: occupancy length does not match status rows");
  PuLabelVector out;
  out.values.resize(status.n_slots());
  for (int i = 0; i < status.n_slots(); ++i) {
    const double oc = occ.values[i];
    if (oc > criteria.u_oc) {
      out.values[i] = 1;  // Condition 1
    } else if (oc < criteria.l_oc) {
      out.values[i] = 0;  // Condition 4
    } else {
      const int con = consecutive_free(status.values.row(i));
      out.values[i] = con < criteria.b_min_run ? 1 : 0;  // Conditions 2 / 3
    }
  }
  return out;
}

std::pair<LabelingCriteria, CalibrationReport> calibrate(const PowerMatrix& matrix,
                                                         const std::vector<double>& gammas,
                                                         const std::vector<double>& ms_grid) {
  if (gammas.empty() || ms_grid.empty())
    throw ConfigError("calibrate: gamma list and ms_grid must be non-empty");
  std::vector<double> grid = ms_grid;
  std::sort(grid.begin(), grid.end());

  CalibrationReport report;
  report.ms_grid = grid;

  int best_idx = -1;
  for (double gamma : gammas) {
    const auto occ = slot_occupancy(threshold_status(matrix, gamma));
    CalibrationReport::GammaRecord rec;
    rec.gamma = gamma;
    rec.l_s = *std::min_element(occ.values.begin(), occ.values.end());
    rec.u_s = *std::max_element(occ.values.begin(), occ.values.end());

    // Widest contiguous run of grid values strictly inside (L_s, U_s):
    // only there can a split produce two non-empty classes. The grid is
    // sorted, so qualifying values already form one contiguous run.
    int first = -1, last = -1;
    for (int m = 0; m < static_cast<int>(grid.size()); ++m) {
      if (grid[m] > rec.l_s && grid[m] < rec.u_s) {
        if (first < 0) first = m;
        last = m;
      }
    }
    if (first >= 0) {
      rec.has_range = true;
      rec.cand_l = grid[first];
      rec.cand_u = grid[last];
      for (double v : occ.values)
        if (v > rec.cand_l && v < rec.cand_u) ++rec.in_range_count;
    }
    report.records.push_back(rec);
    if (rec.has_range &&
        (best_idx < 0 || rec.in_range_count > report.records[best_idx].in_range_count))
      best_idx = static_cast<int>(report.records.size()) - 1;
  }

  if (best_idx < 0)
    throw CalibrationError(
        "calibrate: every gamma yields a single-class labeling (no split value lies "
        "strictly inside any [L_s, U_s])");

  const auto& best = report.records[best_idx];
  report.chosen_gamma = best.gamma;
  report.chosen_l_oc = best.cand_l;
  report.chosen_u_oc = best.cand_u;

  LabelingCriteria criteria;
  criteria.gamma = best.gamma;
  criteria.l_oc = best.cand_l;
  criteria.u_oc = best.cand_u;
  criteria.b_min_run = 1;
  return {criteria, report};
}

BSelection select_b(const StatusMatrix& status, const OccupancyVector& occ, double l_oc,
                    double u_oc, double target_protection) {
  const int k = status.n_bins();
  std::vector<int> runs;
  for (int i = 0; i < status.n_slots(); ++i) {
    const double oc = occ.values[i];
    if (oc >= l_oc && oc <= u_oc) runs.push_back(consecutive_free(status.values.row(i)));
  }
  if (runs.empty()) throw CalibrationError("select_b: no slots with in-range occupancy");

  for (int b = 1; b <= k; ++b) {
    int labeled_one = 0;
    for (int r : runs)
      if (r < b) ++labeled_one;
    if (static_cast<double>(labeled_one) / runs.size() >= target_protection)
      return {b, true};
  }
  return {k, false};
}

}  // namespace specocc
