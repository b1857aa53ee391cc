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


#include "maskopt/fft.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "maskopt/error.hpp"

namespace maskopt {

FftPlan::FftPlan(std::size_t n) : n_(n), bitrev_(n), twiddles_(n / 2) {
  if (!is_power_of_two(n)) throw InvalidArgument("FFT length must be a power of two");
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < n) ++bits;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = 0;
    for (std::size_t b = 0; b < bits; ++b) {
      if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
    }
    bitrev_[i] = r;
  }
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    twiddles_[k] = Complex(std::cos(angle), std::sin(angle));
  }
}

void FftPlan::forward(std::span<Complex> x) const { transform(x, false); }
void FftPlan::backward(std::span<Complex> x) const { transform(x, true); }

void FftPlan::transform(std::span<Complex> x, bool inverse) const {
  for (std::size_t i = 0; i < n_; ++i) {
    const std::size_t j = bitrev_[i];
    if (i < j) std::swap(x[i], x[j]);
  }
  for (std::size_t len = 2; len <= n_; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n_ / len;
    for (std::size_t start = 0; start < n_; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const double wr = twiddles_[k * stride].real();
        const double wi = inverse ? -twiddles_[k * stride].imag() : twiddles_[k * stride].imag();
        const Complex u = x[start + k];
        const Complex a = x[start + k + half];
        // Spelled out: operator* on std::complex goes through __muldc3.
        const Complex v(a.real() * wr - a.imag() * wi, a.real() * wi + a.imag() * wr);
        x[start + k] = u + v;
        x[start + k + half] = u - v;
      }
    }
  }
}

Fft2d::Fft2d(Shape shape)
    : shape_(shape),
      row_plan_(shape.cols),
      col_plan_(shape.rows),
      scale_(1.0 / std::sqrt(static_cast<double>(shape.size()))) {}

void Fft2d::forward(std::span<Complex> data) const { apply(data, false); }
void Fft2d::inverse(std::span<Complex> data) const { apply(data, true); }

void Fft2d::apply(std::span<Complex> data, bool inverse) const {
  const std::size_t rows = shape_.rows;
  const std::size_t cols = shape_.cols;
  for (std::size_t r = 0; r < rows; ++r) {
    std::span<Complex> row = data.subspan(r * cols, cols);
    if (inverse) {
      row_plan_.backward(row);
    } else {
      row_plan_.forward(row);
    }
  }
  std::vector<Complex> column(rows);
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t r = 0; r < rows; ++r) column[r] = data[r * cols + c];
    if (inverse) {
      col_plan_.backward(column);
    } else {
      col_plan_.forward(column);
    }
    for (std::size_t r = 0; r < rows; ++r) data[r * cols + c] = column[r] * scale_;
  }
}

KSpace fft2_unitary(const ComplexImage& img) {
  require_power_of_two(img.shape());
  KSpace k(img.shape());
  std::copy(img.data().begin(), img.data().end(), k.data().begin());
  Fft2d(img.shape()).forward(k.data());
  return k;
}

ComplexImage ifft2_unitary(const KSpace& k) {
  require_power_of_two(k.shape());
  ComplexImage img(k.shape());
  std::copy(k.data().begin(), k.data().end(), img.data().begin());
  Fft2d(k.shape()).inverse(img.data());
  return img;
}

}  // namespace maskopt
