#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <vector>

#include "malvis/nn/layers.hpp"
#include "malvis/prs.hpp"

namespace malvis {

struct CganConfig {
  int noise_dim = 100;
  int epochs = 100;
  int batch_size = 128;
  double d_learning_rate = 2e-4;
  double g_learning_rate = 2e-4;
  int label_count = 2;
  int embedding_dim = 50;
  std::vector<int> d_widths = {128, 256, 512};
  std::vector<int> g_widths = {256, 512, 1024};
  std::uint64_t rng_seed = 0;
};

/// Label-conditioned generator: noise concatenated with a projected label
/// embedding, dense stack with LeakyReLU(0.2) + batchnorm per hidden layer,
/// tanh output reshaped to a d*d image in [-1,1].
class Generator {
 public:
  Generator(int image_side, const CganConfig& config, std::mt19937_64& rng);

  /// noise: [b, noise_dim]; one label per row.
  nn::Var forward(const nn::Tensor& noise, const std::vector<int>& labels,
                  bool training);
  std::vector<nn::Var> parameters() const;

  int image_side() const { return image_side_; }
  int noise_dim() const { return noise_dim_; }

  void save(const std::filesystem::path& path) const;
  static Generator load(const std::filesystem::path& path);

  nn::EmbeddingLayer label_embedding;
  nn::DenseLayer embedding_projection;
  std::vector<nn::DenseLayer> hidden;
  std::vector<nn::BatchNormLayer> norms;
  nn::DenseLayer output;

 private:
  Generator() = default;
  int image_side_ = 0;
  int noise_dim_ = 0;
  int embedding_dim_ = 0;
  int label_count_ = 0;
  std::vector<int> widths_;
};

/// Label-conditioned discriminator: flattened [-1,1] image concatenated with
/// a projected label embedding, dense stack with LeakyReLU(0.2), sigmoid
/// output score.
class Discriminator {
 public:
  Discriminator(int image_side, const CganConfig& config, std::mt19937_64& rng);

  /// images: [b, d*d] in [-1,1] (graph node so generator gradients can flow).
  nn::Var forward(const nn::Var& images, const std::vector<int>& labels);
  std::vector<nn::Var> parameters() const;

  int image_side() const { return image_side_; }

  void save(const std::filesystem::path& path) const;
  static Discriminator load(const std::filesystem::path& path);

  nn::EmbeddingLayer label_embedding;
  nn::DenseLayer embedding_projection;
  std::vector<nn::DenseLayer> hidden;
  nn::DenseLayer output;

 private:
  Discriminator() = default;
  int image_side_ = 0;
  int embedding_dim_ = 0;
  int label_count_ = 0;
  std::vector<int> widths_;
};

struct GanTraceRow {
  long long iter = 0;
  double d_loss_real = 0.0;
  double d_loss_fake = 0.0;
  double g_loss = 0.0;
  double d_acc_real = 0.0;
  double d_acc_fake = 0.0;
};
using GanLossTrace = std::vector<GanTraceRow>;

void write_trace_csv(const GanLossTrace& trace,
                     const std::filesystem::path& path);

class DivergedTraining : public std::runtime_error {
 public:
  DivergedTraining(long long iteration, const std::string& what);
  long long iteration() const { return iteration_; }

 private:
  long long iteration_ = 0;
};

struct CganModels {
  Generator generator;
  Discriminator discriminator;
  GanLossTrace trace;
};

/// Alternating 1:1 optimization: each iteration updates D on a real batch
/// (target 1) plus a generated batch (target 0), then updates G through the
/// frozen D with target 1. Throws DivergedTraining on any non-finite loss.
CganModels train_cgan(const std::vector<LabeledImage>& images,
                      const CganConfig& config);

/// BLACK -> +1, WHITE -> -1, flattened [d*d].
nn::Tensor image_to_gan(const BinaryImage& image);
/// value > threshold -> BLACK, else WHITE.
BinaryImage binarize(const nn::Tensor& raw, double threshold = 0.0);

/// Samples noise with label 1, runs the generator in inference mode and
/// binarizes the outputs.
std::vector<BinaryImage> generate_malign(Generator& generator, int count,
                                         std::uint64_t seed);

}  // namespace malvis
