#pragma once

#include <string>
#include <vector>

#include "specocc/common.hpp"
#include "specocc/dataset.hpp"

namespace specocc {

struct DtModel {
  struct Node {
    bool leaf = true;
    std::uint8_t label = 0;   // valid when leaf
    int feature = -1;         // valid when internal
    int child[2] = {-1, -1};  // index by feature value
  };
  std::vector<Node> nodes;  // nodes[0] is the root
  int min_obs_per_node = 17;

  int depth() const;

  std::string to_json() const;
  static DtModel from_json(const std::string& text);
};

// Two-class entropy in bits from class counts.
double class_entropy(int count0, int count1);

// Greedy top-down induction maximizing information gain. A node becomes a
// leaf when its size < min_obs_per_node, it is pure, or no split has
// positive gain. Leaf label = majority class, tie -> 0.
DtModel dt_fit(const Dataset& train, int min_obs_per_node = 17);

std::vector<std::uint8_t> dt_predict(const DtModel& model, const Grid<std::uint8_t>& features);

}  // namespace specocc
