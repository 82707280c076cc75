#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "malvis/nn/tensor.hpp"

namespace malvis::nn {

/// Versioned binary container for a model: a kind tag, scalar attributes
/// describing the layer stack, and named parameter arrays in a fixed order.
struct Checkpoint {
  std::string kind;
  std::map<std::string, std::string> attrs;
  std::vector<std::pair<std::string, Tensor>> tensors;

  const Tensor& tensor(const std::string& name) const;
  std::string attr(const std::string& name) const;
  int attr_int(const std::string& name) const;
};

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& ckpt);
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace malvis::nn
