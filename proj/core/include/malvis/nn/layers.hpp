#pragma once

#include <random>

#include "malvis/nn/graph.hpp"

namespace malvis::nn {

/// Glorot-uniform tensor in +-sqrt(6/(fan_in+fan_out)).
Tensor glorot_uniform(const std::vector<int>& shape, int fan_in, int fan_out,
                      std::mt19937_64& rng);
Tensor normal_init(const std::vector<int>& shape, double stddev,
                   std::mt19937_64& rng);

struct DenseLayer {
  Var w, b;
  DenseLayer() = default;
  DenseLayer(int in, int out, std::mt19937_64& rng);
  Var operator()(const Var& x) const { return dense(x, w, b); }
  int in_features() const { return w->value.dim(0); }
  int out_features() const { return w->value.dim(1); }
};

struct Conv2dLayer {
  Var w, b;
  Conv2dLayer() = default;
  Conv2dLayer(int kernel_h, int kernel_w, int in_channels, int filters,
              std::mt19937_64& rng);
  Var operator()(const Var& x) const { return conv2d(x, w, b); }
};

struct BatchNormLayer {
  Var gamma, beta;
  BatchNormState state;
  double momentum = 0.9;
  double eps = 1e-5;
  BatchNormLayer() = default;
  explicit BatchNormLayer(int features);
  Var operator()(const Var& x, bool training) {
    return batchnorm(x, gamma, beta, state, training, momentum, eps);
  }
};

struct EmbeddingLayer {
  Var table;
  EmbeddingLayer() = default;
  EmbeddingLayer(int vocab, int dim, std::mt19937_64& rng);
  Var operator()(const std::vector<int>& labels) const {
    return embedding(table, labels);
  }
};

}  // namespace malvis::nn
