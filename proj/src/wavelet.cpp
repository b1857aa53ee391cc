// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "maskopt/wavelet.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "maskopt/error.hpp"

namespace maskopt {
namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

// One analysis step on n strided samples.
void haar_step(Complex* x, std::size_t n, std::size_t stride, std::vector<Complex>& scratch) {
  const std::size_t half = n / 2;
  for (std::size_t i = 0; i < half; ++i) {
    const Complex a = x[(2 * i) * stride];
    const Complex b = x[(2 * i + 1) * stride];
    scratch[i] = (a + b) * kInvSqrt2;
    scratch[half + i] = (a - b) * kInvSqrt2;
  }
  for (std::size_t i = 0; i < n; ++i) x[i * stride] = scratch[i];
}

void haar_inverse_step(Complex* x, std::size_t n, std::size_t stride,
                       std::vector<Complex>& scratch) {
  const std::size_t half = n / 2;
  for (std::size_t i = 0; i < half; ++i) {
    const Complex s = x[i * stride];
    const Complex d = x[(half + i) * stride];
    scratch[2 * i] = (s + d) * kInvSqrt2;
    scratch[2 * i + 1] = (s - d) * kInvSqrt2;
  }
  for (std::size_t i = 0; i < n; ++i) x[i * stride] = scratch[i];
}

}  // namespace

HaarTransform::HaarTransform(Shape shape, int levels) : shape_(shape), levels_(levels) {
  require_power_of_two(shape);
  if (levels < 0) throw InvalidArgument("wavelet levels must be nonnegative");
  const std::size_t min_dim = std::min(shape.rows, shape.cols);
  if (levels > std::countr_zero(min_dim)) {
    throw InvalidArgument("too many wavelet levels for the image size");
  }
}

int HaarTransform::default_levels(Shape shape) {
  const int log_min = std::countr_zero(std::min(shape.rows, shape.cols));
  if (log_min == 0) return 0;
  return std::max(1, log_min - 2);
}

void HaarTransform::forward(std::span<Complex> data) const {
  const std::size_t cols = shape_.cols;
  std::vector<Complex> scratch(std::max(shape_.rows, shape_.cols));
  std::size_t r = shape_.rows;
  std::size_t c = shape_.cols;
  for (int level = 0; level < levels_; ++level) {
    for (std::size_t i = 0; i < r; ++i) haar_step(&data[i * cols], c, 1, scratch);
    for (std::size_t j = 0; j < c; ++j) haar_step(&data[j], r, cols, scratch);
    r /= 2;
    c /= 2;
  }
}

void HaarTransform::inverse(std::span<Complex> data) const {
  const std::size_t cols = shape_.cols;
  std::vector<Complex> scratch(std::max(shape_.rows, shape_.cols));
  for (int level = levels_ - 1; level >= 0; --level) {
    const std::size_t r = shape_.rows >> level;
    const std::size_t c = shape_.cols >> level;
    for (std::size_t j = 0; j < c; ++j) haar_inverse_step(&data[j], r, cols, scratch);
    for (std::size_t i = 0; i < r; ++i) haar_inverse_step(&data[i * cols], c, 1, scratch);
  }
}

int HaarTransform::scale_of(std::size_t row, std::size_t col) const {
  if (row < (shape_.rows >> levels_) && col < (shape_.cols >> levels_)) return 0;
  // Detail band j (1 = coarsest) lives inside the block of level levels_-j+1
  // but outside the block of level levels_-j.
  for (int j = 1; j <= levels_; ++j) {
    const int inner = levels_ - j;
    if (row < (shape_.rows >> inner) && col < (shape_.cols >> inner)) return j;
  }
  return levels_;
}

}  // namespace maskopt
