#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace advmit {

/// H x W x C grid of real-valued samples in [0, 255], stored row-major with
/// interleaved channels. Samples are kept as doubles so that repeated
/// fractional adjustments do not accumulate quantization error; rounding to
/// 8 bits happens only at save boundaries.
class ImageBuffer {
 public:
  ImageBuffer() = default;

  ImageBuffer(int width, int height, int channels, double fill = 0.0)
      : width_(width), height_(height), channels_(channels) {
    validate_shape(width, height, channels);
    samples_.assign(sample_count(), fill);
  }

  ImageBuffer(int width, int height, int channels, std::vector<double> samples)
      : width_(width), height_(height), channels_(channels),
        samples_(std::move(samples)) {
    validate_shape(width, height, channels);
    if (samples_.size() != sample_count()) {
      throw std::invalid_argument("sample count does not match dimensions");
    }
  }

  int width() const { return width_; }
  int height() const { return height_; }
  int channels() const { return channels_; }

  std::size_t sample_count() const {
    return static_cast<std::size_t>(width_) * height_ * channels_;
  }
  std::size_t pixel_count() const {
    return static_cast<std::size_t>(width_) * height_;
  }

  std::size_t index(int row, int col, int channel) const {
    return (static_cast<std::size_t>(row) * width_ + col) * channels_ + channel;
  }

  double at(int row, int col, int channel) const {
    return samples_[index(row, col, channel)];
  }
  double& at(int row, int col, int channel) {
    return samples_[index(row, col, channel)];
  }

  const std::vector<double>& samples() const { return samples_; }
  std::vector<double>& samples() { return samples_; }

  bool same_shape(const ImageBuffer& other) const {
    return width_ == other.width_ && height_ == other.height_ &&
           channels_ == other.channels_;
  }

  double min_sample() const {
    return *std::min_element(samples_.begin(), samples_.end());
  }
  double max_sample() const {
    return *std::max_element(samples_.begin(), samples_.end());
  }

 private:
  static void validate_shape(int width, int height, int channels) {
    if (width < 1 || height < 1) {
      throw std::invalid_argument("image dimensions must be positive");
    }
    if (channels != 1 && channels != 3) {
      throw std::invalid_argument("channel count must be 1 or 3");
    }
  }

  int width_ = 0;
  int height_ = 0;
  int channels_ = 0;
  std::vector<double> samples_;
};

/// Maximum absolute per-sample difference between two images of equal shape.
inline double linf_distance(const ImageBuffer& a, const ImageBuffer& b) {
  if (!a.same_shape(b)) {
    throw std::invalid_argument("linf_distance: shape mismatch");
  }
  double max_abs = 0.0;
  const auto& sa = a.samples();
  const auto& sb = b.samples();
  for (std::size_t i = 0; i < sa.size(); ++i) {
    max_abs = std::max(max_abs, std::abs(sa[i] - sb[i]));
  }
  return max_abs;
}

}  // namespace advmit
