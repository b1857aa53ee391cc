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


#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "maskopt/image.hpp"

namespace maskopt {

// Radix-2 decimation-in-time FFT of a fixed power-of-two length.
// Transforms are unnormalized; callers apply scaling.
class FftPlan {
 public:
  explicit FftPlan(std::size_t n);

  std::size_t size() const { return n_; }
  // exp(-2 pi i k n / N) kernel.
  void forward(std::span<Complex> x) const;
  // exp(+2 pi i k n / N) kernel, no 1/N.
  void backward(std::span<Complex> x) const;

 private:
  void transform(std::span<Complex> x, bool inverse) const;

  std::size_t n_;
  std::vector<std::size_t> bitrev_;
  std::vector<Complex> twiddles_;  // exp(-2 pi i k / n), k < n/2
};

// Unitary 2D DFT on row-major data: both directions scale by 1/sqrt(rows*cols).
class Fft2d {
 public:
  explicit Fft2d(Shape shape);

  Shape shape() const { return shape_; }
  void forward(std::span<Complex> data) const;
  void inverse(std::span<Complex> data) const;

 private:
  void apply(std::span<Complex> data, bool inverse) const;

  Shape shape_;
  FftPlan row_plan_;
  FftPlan col_plan_;
  double scale_;
};

KSpace fft2_unitary(const ComplexImage& img);
ComplexImage ifft2_unitary(const KSpace& k);

}  // namespace maskopt
