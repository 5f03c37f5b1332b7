#include "specocc/outage.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace specocc {

using nlohmann::json;

std::vector<FreeBlock> find_free_blocks(const PuLabelVector& p_eval, int out_su) {
  if (out_su < 1) throw ConfigError("find_free_blocks: out_su must be >= 1");
  std::vector<FreeBlock> blocks;
  const int n = static_cast<int>(p_eval.values.size());
  int i = 0;
  while (i < n) {
    if (p_eval.values[i] != 0) {
      ++i;
      continue;
    }
    int j = i;
    while (j < n && p_eval.values[j] == 0) ++j;
    if (j - i >= out_su) blocks.push_back({i, j - i});
    i = j;
  }
  return blocks;
}

OutageReport su_outage_probability(const PuLabelVector& p_eval, const OccupancyVector& occ,
                                   int out_su, OutageMode mode, bool inclusive_upper) {
  if (p_eval.values.size() != occ.values.size())
    throw ConfigError("su_outage_probability: label/occupancy length mismatch");
  if (out_su < 1) throw ConfigError("su_outage_probability: out_su must be >= 1");

  OutageReport report;
  report.out_su = out_su;
  report.mode = mode;
  report.free_blocks = find_free_blocks(p_eval, out_su);

  const int n = static_cast<int>(occ.values.size());
  double sum = 0;
  for (const FreeBlock& fb : report.free_blocks) {
    const int last = std::min(n - 1, fb.start + (inclusive_upper ? out_su : out_su - 1));
    double prod = 1;
    for (int i = fb.start; i <= last; ++i)
      prod *= mode == OutageMode::AsWritten ? occ.values[i] : 1.0 - occ.values[i];
    sum += prod;
  }
  if (sum > 1.0) {
    report.clamped = true;
    sum = 1.0;
  }
  report.p_transmit = sum;
  report.p_outage = 1.0 - sum;
  return report;
}

std::string OutageReport::to_json() const {
  json j;
  json blocks = json::array();
  for (const auto& b : free_blocks) blocks.push_back({{"start", b.start}, {"length", b.length}});
  j["free_blocks"] = blocks;
  j["p_transmit"] = p_transmit;
  j["p_outage"] = p_outage;
  j["out_su"] = out_su;
  j["mode"] = mode == OutageMode::AsWritten ? "as-written" : "complement";
  j["clamped"] = clamped;
  return j.dump(2);
}

}  // namespace specocc
