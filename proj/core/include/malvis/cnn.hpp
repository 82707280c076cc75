#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "malvis/eval.hpp"
#include "malvis/nn/layers.hpp"
#include "malvis/prs.hpp"

namespace malvis {

struct CnnConfig {
  int epochs = 30;
  int batch_size = 32;
  double learning_rate = 1e-3;
  std::uint64_t rng_seed = 0;
  int fold_count = 5;
};

/// 64x64x1 -> conv(32,3x3)+ReLU -> pool -> conv(64,3x3)+ReLU -> pool ->
/// flatten(12544) -> dense(128)+ReLU -> dense(2)+softmax.
class CnnModel {
 public:
  static constexpr int kInputSide = 64;

  explicit CnnModel(std::uint64_t seed);

  /// image: [64,64,1] with pixel values in {0.0, 1.0}; returns probs [2].
  nn::Var forward(const nn::Tensor& image) const;
  std::vector<nn::Var> parameters() const;
  long long parameter_count() const;

  void save(const std::filesystem::path& path) const;
  static CnnModel load(const std::filesystem::path& path);

  nn::Conv2dLayer conv1, conv2;
  nn::DenseLayer fc1, fc2;
};

/// BLACK -> 1.0, WHITE -> 0.0, shape [side, side, 1].
nn::Tensor image_to_tensor(const BinaryImage& image);

struct EpochStats {
  double loss = 0.0;
  double accuracy = 0.0;
};
using TrainHistory = std::vector<EpochStats>;

/// Mini-batch cross-entropy training; continues from the model's current
/// parameters so callers can train incrementally.
TrainHistory train_cnn(CnnModel& model,
                       const std::vector<LabeledImage>& train_set,
                       const CnnConfig& config);
void write_history_csv(const TrainHistory& history,
                       const std::filesystem::path& path);

struct Prediction {
  int label = 0;
  std::array<double, 2> probs{0.0, 0.0};
};
/// Argmax of the softmax head; ties break toward class 0.
Prediction predict(const CnnModel& model, const BinaryImage& image);

EvalReport evaluate_model(const CnnModel& model,
                          const std::vector<LabeledImage>& test_set);

struct CvReport {
  std::vector<double> fold_accuracies;
  double mean_accuracy = 0.0;
};
/// Stratified k-fold cross validation; fold f trains a fresh model seeded
/// with rng_seed + f.
CvReport kfold_cv(const std::vector<LabeledImage>& dataset,
                  const CnnConfig& config);
std::string cv_report_to_json(const CvReport& report);

}  // namespace malvis
