#pragma once

#include <string>
#include <vector>

#include "specocc/common.hpp"
#include "specocc/labeling.hpp"
#include "specocc/occupancy.hpp"

namespace specocc {

struct FreeBlock {
  int start = 0;
  int length = 0;
};

enum class OutageMode {
  AsWritten,   // P(FB) = product of OC over the block window
  Complement,  // P(FB) = product of (1 - OC), the availability reading
};

struct OutageReport {
  std::vector<FreeBlock> free_blocks;
  double p_transmit = 0;
  double p_outage = 1;
  int out_su = 1;
  OutageMode mode = OutageMode::AsWritten;
  bool clamped = false;  // raw block-probability sum exceeded 1

  std::string to_json() const;
};

// Maximal runs of predicted-free slots with length >= out_su.
std::vector<FreeBlock> find_free_blocks(const PuLabelVector& p_eval, int out_su);

// Per qualifying block starting at r, the product runs over slots
// r .. r+out_su when inclusive_upper (the literal index range, out_su+1
// factors, truncated at the vector end), else r .. r+out_su-1.
OutageReport su_outage_probability(const PuLabelVector& p_eval, const OccupancyVector& occ,
                                   int out_su, OutageMode mode = OutageMode::AsWritten,
                                   bool inclusive_upper = true);

}  // namespace specocc
