#pragma once

#include <cstddef>
#include <vector>

namespace jcxy {

/// Square row-major matrix; symmetric by convention wherever it appears in this library.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0.0) {}

  int size() const { return n_; }
  double& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * n_ + c]; }
  double operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * n_ + c]; }
  double* row(int r) { return data_.data() + static_cast<std::size_t>(r) * n_; }
  const double* row(int r) const { return data_.data() + static_cast<std::size_t>(r) * n_; }
  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

 private:
  int n_ = 0;
  std::vector<double> data_;
};

}  // namespace jcxy
