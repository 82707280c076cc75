#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace malvis::nn {

/// Dense n-dimensional array of doubles, row-major.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int> shape);
  Tensor(std::vector<int> shape, std::vector<double> values);
  static Tensor scalar(double v) { return Tensor({1}, {v}); }

  const std::vector<int>& shape() const { return shape_; }
  int rank() const { return static_cast<int>(shape_.size()); }
  int dim(int i) const { return shape_[static_cast<std::size_t>(i)]; }
  long long size() const { return static_cast<long long>(v_.size()); }

  double* data() { return v_.data(); }
  const double* data() const { return v_.data(); }
  double& operator[](long long i) { return v_[static_cast<std::size_t>(i)]; }
  double operator[](long long i) const { return v_[static_cast<std::size_t>(i)]; }

  void fill(double v);
  bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }
  bool all_finite() const;

 private:
  std::vector<int> shape_;
  std::vector<double> v_;
};

long long shape_size(const std::vector<int>& shape);

}  // namespace malvis::nn
