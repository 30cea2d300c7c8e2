#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "advmit/errors.hpp"

namespace advmit {

/// N x N grid of nonnegative convolution coefficients. Convolution output is
/// normalized by the coefficient sum, so zero-padded kernels reduce exactly
/// to their nonzero core.
class Kernel {
 public:
  Kernel(int size, std::vector<double> coefficients)
      : size_(size), coefficients_(std::move(coefficients)) {
    if (size < 1 || size % 2 == 0) {
      throw FormatError("kernel size must be odd and >= 1");
    }
    if (coefficients_.size() != static_cast<std::size_t>(size) * size) {
      throw FormatError("kernel needs size*size coefficients");
    }
    weight_sum_ = 0.0;
    for (double c : coefficients_) {
      if (c < 0.0) {
        throw FormatError("kernel coefficients must be nonnegative");
      }
      weight_sum_ += c;
    }
    if (weight_sum_ <= 0.0) {
      throw FormatError("kernel weight sum must be positive");
    }
  }

  /// All-ones N x N moving-average kernel.
  static Kernel ones(int size) {
    return Kernel(size, std::vector<double>(
                            static_cast<std::size_t>(size) * size, 1.0));
  }

  int size() const { return size_; }
  int radius() const { return size_ / 2; }
  double coefficient(int ky, int kx) const {
    return coefficients_[static_cast<std::size_t>(ky) * size_ + kx];
  }
  const std::vector<double>& coefficients() const { return coefficients_; }
  double weight_sum() const { return weight_sum_; }

 private:
  int size_;
  std::vector<double> coefficients_;
  double weight_sum_ = 0.0;
};

/// Parses the kernel text format: first token N, then N*N nonnegative reals
/// row-major. Extra or missing tokens are errors.
inline Kernel parse_kernel(std::istream& in) {
  long long n = 0;
  if (!(in >> n)) {
    throw FormatError("kernel file: missing size token");
  }
  if (n < 1 || n > 1024) {
    throw FormatError("kernel file: size out of range");
  }
  std::vector<double> coeffs;
  coeffs.reserve(static_cast<std::size_t>(n) * n);
  double value = 0.0;
  while (coeffs.size() < static_cast<std::size_t>(n) * n && (in >> value)) {
    coeffs.push_back(value);
  }
  if (coeffs.size() != static_cast<std::size_t>(n) * n) {
    throw FormatError("kernel file: expected " + std::to_string(n * n) +
                      " coefficients");
  }
  std::string extra;
  if (in >> extra) {
    throw FormatError("kernel file: trailing tokens after coefficients");
  }
  return Kernel(static_cast<int>(n), std::move(coeffs));
}

inline Kernel parse_kernel(const std::string& text) {
  std::istringstream in(text);
  return parse_kernel(in);
}

inline Kernel load_kernel(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open kernel file: " + path);
  }
  return parse_kernel(in);
}

}  // namespace advmit
