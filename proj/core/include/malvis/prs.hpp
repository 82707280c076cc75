#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

namespace malvis {

/// One tabular sample: non-negative behavior counts per time window plus a
/// class label (0 benign, 1 malign).
struct SampleRecord {
  std::vector<std::uint64_t> values;
  int label = 0;
};

enum class PadScenario { Fundamental, PadUp, S1, S2, S3, S4 };
const char* to_string(PadScenario s);

/// Geometry governing one encoding: two variables per pixel row, k pixels
/// (binary digits) per variable, optional all-white center column for the
/// scenarios where 2k = d - 1.
struct PrsLayout {
  int j_logical = 0;
  int j_effective = 0;
  int d = 0;  // image side
  int k = 0;  // pixel budget per variable
  PadScenario scenario = PadScenario::Fundamental;
  std::optional<int> center_pad_column;  // 1-based column index, S2/S4 only
};

/// Unique layout for a variable count: j < 128 pads up to the fundamental
/// 64x64 geometry, j = 128 is fundamental, j > 128 selects S1-S4 by residue.
PrsLayout derive_layout(int j);

/// Square two-color raster. Rows and columns are 0-based here; the layout's
/// center_pad_column is 1-based to match the geometry formulas.
class BinaryImage {
 public:
  BinaryImage() = default;
  explicit BinaryImage(int side);

  int side() const { return side_; }
  bool black(int row, int col) const { return px_[index(row, col)] != 0; }
  void set(int row, int col, bool black) {
    px_[index(row, col)] = black ? 1 : 0;
  }
  long long black_count() const;
  /// 1 = black, 0 = white, row-major.
  const std::vector<std::uint8_t>& raw() const { return px_; }

  bool operator==(const BinaryImage&) const = default;

 private:
  std::size_t index(int row, int col) const;
  int side_ = 0;
  std::vector<std::uint8_t> px_;
};

struct LabeledImage {
  BinaryImage image;
  int label = 0;
};

/// LSB-first binary digits of x zero-padded to length k; all ones when x
/// needs more than k digits.
std::vector<std::uint8_t> value_to_bits(std::uint64_t x, int k);

BinaryImage encode_sample(const SampleRecord& sample, const PrsLayout& layout);
std::vector<std::uint64_t> decode_sample(const BinaryImage& image,
                                         const PrsLayout& layout);

/// Binary PGM, exactly "P5\n<d> <d>\n255\n" + d*d bytes, black 0, white 255.
void write_pgm(const BinaryImage& image, const std::filesystem::path& path);
BinaryImage read_pgm(const std::filesystem::path& path);

/// Tiles images (all the same side) into a grid with a white border, for the
/// sample sheets the pipeline emits.
BinaryImage tile_grid(const std::vector<BinaryImage>& images, int columns,
                      int border = 2);

}  // namespace malvis
