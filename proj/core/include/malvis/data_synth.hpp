#pragma once

#include <cstdint>
#include <vector>

#include "malvis/prs.hpp"

namespace malvis {

/// Synthetic stand-in for the behavior-count dataset: per window, a sample is
/// zero with probability 1 - sparsity, otherwise a log-normal count. Malign
/// samples are denser and heavier-tailed than benign ones.
struct SynthConfig {
  int n_benign = 0;
  int n_malign = 0;
  int j = 128;
  double benign_sparsity = 0.15;
  double malign_sparsity = 0.45;
  double benign_scale = 20.0;
  double malign_scale = 2000.0;
  double log_sigma = 1.0;
  std::uint64_t rng_seed = 0;
};

std::vector<SampleRecord> gen_dataset(const SynthConfig& config);

struct TrainTestSplit {
  std::vector<SampleRecord> train;
  std::vector<SampleRecord> test;
};

/// Balanced test set with exactly test_per_class samples per class; the
/// remainder is the training set. Deterministic under seed.
TrainTestSplit split_train_test(const std::vector<SampleRecord>& dataset,
                                int test_per_class, std::uint64_t seed);

}  // namespace malvis
