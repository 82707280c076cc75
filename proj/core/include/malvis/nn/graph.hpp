#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "malvis/nn/tensor.hpp"

namespace malvis::nn {

struct Node;
using Var = std::shared_ptr<Node>;

/// One value in a dynamically built computation graph. Gradients accumulate
/// into `grad` across backward() calls until zero_grad(), which is what makes
/// per-sample mini-batch accumulation work.
struct Node {
  Tensor value;
  Tensor grad;
  bool requires_grad = false;
  bool grad_ready = false;
  bool backward_ran = false;
  std::vector<Var> parents;
  std::function<void(Node&)> backprop;

  void ensure_grad();
};

Var constant(Tensor v);
Var parameter(Tensor v);
/// Same value, cut off from the graph (no gradient flows past it).
Var detach(const Var& x);

Var add(const Var& a, const Var& b);
Var scale(const Var& a, double s);

/// x:[m] or [b,m] times w:[m,n].
Var matmul(const Var& x, const Var& w);
/// matmul plus broadcast bias b:[n].
Var dense(const Var& x, const Var& w, const Var& b);

/// Valid convolution, stride 1. x:[h,w,c], w:[kh,kw,c,n], b:[n] -> [h-kh+1,w-kw+1,n].
Var conv2d(const Var& x, const Var& w, const Var& b);
/// 2x2 max pooling, stride 2, trailing odd row/column dropped.
Var maxpool2(const Var& x);
Var flatten(const Var& x);
Var reshape(const Var& x, std::vector<int> shape);
/// Column-wise concatenation of [b,m] with [b,n] (or [m] with [n]).
Var concat(const Var& a, const Var& b);

Var relu(const Var& x);
Var leaky_relu(const Var& x, double slope);
Var sigmoid(const Var& x);
Var tanh_act(const Var& x);
/// Max-subtracted softmax over a rank-1 tensor.
Var softmax(const Var& x);

/// Row lookup per label; gradients accumulate only into the selected rows.
Var embedding(const Var& table, const std::vector<int>& labels);

struct BatchNormState {
  Tensor running_mean;
  Tensor running_var;
};

/// Per-feature batch normalization over x:[b,n]. Training mode standardizes by
/// batch statistics (and updates the running ones); inference mode uses the
/// running statistics. Training with b < 2 is an error.
Var batchnorm(const Var& x, const Var& gamma, const Var& beta,
              BatchNormState& state, bool training, double momentum = 0.9,
              double eps = 1e-5);

/// -log(probs[target]) with probabilities clipped at 1e-12.
Var cross_entropy(const Var& probs, int target);
/// Mean binary cross entropy of predictions [b] or [b,1] against targets.
Var bce_mean(const Var& pred, const std::vector<double>& targets);

/// Reverse-mode sweep from a scalar root. A second sweep from the same root
/// without a fresh forward pass is an error.
void backward(const Var& root);
void zero_grad(const std::vector<Var>& params);

}  // namespace malvis::nn
