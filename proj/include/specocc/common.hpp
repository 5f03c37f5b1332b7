#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace specocc {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& msg, double objective_delta)
      : Error(msg), objective_delta(objective_delta) {}
  double objective_delta;
};

class CalibrationError : public Error {
 public:
  using Error::Error;
};

// Dense row-major 2-D grid. Immutable-by-convention once filled: the
// toolkit's pipelines never mutate a grid after construction.
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(int rows, int cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw ConfigError("Grid: negative dimensions");
  }

  T& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const T& operator()(int r, int c) const {
    return data_[static_cast<size_t>(r) * cols_ + c];
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  std::span<const T> row(int r) const {
    return std::span<const T>(data_.data() + static_cast<size_t>(r) * cols_, cols_);
  }
  std::span<T> row(int r) {
    return std::span<T>(data_.data() + static_cast<size_t>(r) * cols_, cols_);
  }

  const std::vector<T>& data() const { return data_; }
  std::vector<T>& data() { return data_; }

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

// Shortest round-trip decimal representation, used by every CSV writer so
// outputs stay byte-stable across runs.
std::string format_double(double v);

}  // namespace specocc
