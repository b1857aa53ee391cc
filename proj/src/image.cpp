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


#include "maskopt/image.hpp"

#include <cmath>
#include <string>

#include "maskopt/error.hpp"

namespace maskopt {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void require_power_of_two(Shape shape) {
  if (!is_power_of_two(shape.rows) || !is_power_of_two(shape.cols)) {
    throw InvalidArgument("image dimensions must be powers of two, got " +
                          std::to_string(shape.rows) + "x" + std::to_string(shape.cols));
  }
}

template <class Tag>
ComplexGrid<Tag>::ComplexGrid(Shape shape) : shape_(shape), data_(shape.size()) {}

template <class Tag>
ComplexGrid<Tag>::ComplexGrid(Shape shape, std::vector<Complex> data)
    : shape_(shape), data_(std::move(data)) {
  if (data_.size() != shape_.size()) {
    throw InvalidArgument("grid data length " + std::to_string(data_.size()) +
                          " does not match shape " + std::to_string(shape_.rows) + "x" +
                          std::to_string(shape_.cols));
  }
  if (!all_finite(data_)) throw DataError("grid contains non-finite values");
}

template class ComplexGrid<ImageTag>;
template class ComplexGrid<KSpaceTag>;

double squared_norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const Complex& z : v) s += std::norm(z);
  return s;
}

double l2_norm(std::span<const Complex> v) { return std::sqrt(squared_norm(v)); }

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
  Complex s{};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

bool all_finite(std::span<const Complex> v) {
  for (const Complex& z : v) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

ComplexImage normalized(const ComplexImage& img) {
  const double n = l2_norm(img.data());
  if (n == 0.0) throw DataError("cannot normalize an all-zero image");
  ComplexImage out = img;
  for (Complex& z : out.data()) z /= n;
  return out;
}

}  // namespace maskopt
