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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace maskopt {

using Complex = std::complex<double>;

struct Shape {
  std::size_t rows = 0;
  std::size_t cols = 0;

  std::size_t size() const { return rows * cols; }
  friend bool operator==(const Shape&, const Shape&) = default;
};

bool is_power_of_two(std::size_t n);
// Throws InvalidArgument unless both dimensions are nonzero powers of two.
void require_power_of_two(Shape shape);

// Row-major complex grid. The tag keeps image-domain and Fourier-domain data
// from being mixed up at compile time.
template <class Tag>
class ComplexGrid {
 public:
  ComplexGrid() = default;
  explicit ComplexGrid(Shape shape);
  // Throws InvalidArgument on length mismatch, DataError on non-finite entries.
  ComplexGrid(Shape shape, std::vector<Complex> data);

  Shape shape() const { return shape_; }
  std::size_t rows() const { return shape_.rows; }
  std::size_t cols() const { return shape_.cols; }
  std::size_t size() const { return data_.size(); }

  std::span<Complex> data() { return data_; }
  std::span<const Complex> data() const { return data_; }
  std::vector<Complex>& values() { return data_; }
  const std::vector<Complex>& values() const { return data_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * shape_.cols + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * shape_.cols + c];
  }
  Complex& operator[](std::size_t i) { return data_[i]; }
  const Complex& operator[](std::size_t i) const { return data_[i]; }

  friend bool operator==(const ComplexGrid&, const ComplexGrid&) = default;

 private:
  Shape shape_{};
  std::vector<Complex> data_;
};

struct ImageTag {};
struct KSpaceTag {};

using ComplexImage = ComplexGrid<ImageTag>;
using KSpace = ComplexGrid<KSpaceTag>;

extern template class ComplexGrid<ImageTag>;
extern template class ComplexGrid<KSpaceTag>;

double l2_norm(std::span<const Complex> v);
double squared_norm(std::span<const Complex> v);
// <a, b> = sum conj(a_i) b_i
Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);
bool all_finite(std::span<const Complex> v);

// Returns img scaled to unit l2 norm; DataError for the zero image.
ComplexImage normalized(const ComplexImage& img);

}  // namespace maskopt
