#pragma once

#include <memory>
#include <vector>

#include "malvis/nn/graph.hpp"

namespace malvis::nn {

class Optimizer {
 public:
  explicit Optimizer(std::vector<Var> params) : params_(std::move(params)) {}
  virtual ~Optimizer() = default;
  virtual void step() = 0;
  void zero_grad() { malvis::nn::zero_grad(params_); }
  const std::vector<Var>& params() const { return params_; }

 protected:
  std::vector<Var> params_;
};

class Sgd final : public Optimizer {
 public:
  Sgd(std::vector<Var> params, double lr);
  void step() override;

 private:
  double lr_;
};

/// Bias-corrected Adam (beta1 0.9, beta2 0.999, eps 1e-8) with one shared
/// step counter.
class Adam final : public Optimizer {
 public:
  Adam(std::vector<Var> params, double lr, double beta1 = 0.9,
       double beta2 = 0.999, double eps = 1e-8);
  void step() override;
  long long steps() const { return t_; }

 private:
  double lr_, beta1_, beta2_, eps_;
  long long t_ = 0;
  std::vector<Tensor> m_, v_;
};

}  // namespace malvis::nn
