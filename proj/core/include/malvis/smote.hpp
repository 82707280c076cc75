#pragma once

#include <cstdint>
#include <vector>

#include "malvis/prs.hpp"

namespace malvis {

struct SmoteConfig {
  int k_neighbors = 5;
  std::size_t target_count = 0;  // desired minority class size
  std::uint64_t rng_seed = 0;
};

/// Interpolation kernel: a + (b - a) * alpha, rounded to the nearest
/// non-negative integer per component. Label copied from a.
SampleRecord smote_interpolate(const SampleRecord& a, const SampleRecord& b,
                               double alpha);

/// Synthetic minority oversampling: returns target_count - |minority| new
/// samples, each interpolated between a minority point (round-robin) and one
/// of its k nearest minority neighbors under Euclidean distance.
std::vector<SampleRecord> smote_oversample(
    const std::vector<SampleRecord>& minority, const SmoteConfig& config);

}  // namespace malvis
