#include "specocc/dataset.hpp"

#include <cmath>

namespace specocc {

void Dataset::check() const {
  if (features.rows() != static_cast<int>(labels.size()))
    throw ConfigError("Dataset: feature row count does not match label count");
  for (std::uint8_t v : features.data())
    if (v > 1) throw ConfigError("Dataset: features must be binary");
  for (std::uint8_t v : labels)
    if (v > 1) throw ConfigError("Dataset: labels must be binary");
}

Dataset make_dataset(const StatusMatrix& status, const PuLabelVector& labels) {
  Dataset d;
  d.features = status.values;
  d.labels = labels.values;
  d.check();
  return d;
}

TrainTestSplit split(const Dataset& dataset, double train_fraction) {
  if (!(train_fraction > 0 && train_fraction < 1))
    throw ConfigError("split: train_fraction must lie in (0,1)");
  const int n = dataset.n();
  if (n < 2) throw ConfigError("split: need at least 2 rows");
  const int n1 = static_cast<int>(std::ceil(n * train_fraction));
  if (n1 <= 0 || n1 >= n) throw ConfigError("split: partition has an empty side");

  TrainTestSplit s;
  s.ratio = train_fraction;
  const int k = dataset.k();
  s.train.features = Grid<std::uint8_t>(n1, k);
  s.test.features = Grid<std::uint8_t>(n - n1, k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) {
      if (i < n1)
        s.train.features(i, j) = dataset.features(i, j);
      else
        s.test.features(i - n1, j) = dataset.features(i, j);
    }
  s.train.labels.assign(dataset.labels.begin(), dataset.labels.begin() + n1);
  s.test.labels.assign(dataset.labels.begin() + n1, dataset.labels.end());
  return s;
}

Metrics evaluate(const std::vector<std::uint8_t>& predicted,
                 const std::vector<std::uint8_t>& reference) {
  if (predicted.size() != reference.size() || predicted.empty())
    throw ConfigError("evaluate: prediction/reference length mismatch or empty");
  Metrics m;
  m.n_test = static_cast<int>(predicted.size());
  int correct = 0;
  for (size_t i = 0; i < predicted.size(); ++i) {
    if (predicted[i] == reference[i])
      ++correct;
    else if (predicted[i] == 0)
      ++m.misdetections;
    else
      ++m.false_alarms;
  }
  m.ca = static_cast<double>(correct) / m.n_test;
  return m;
}

}  // namespace specocc
