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

#include "maskopt/fft.hpp"
#include "maskopt/image.hpp"
#include "maskopt/sampling.hpp"

namespace maskopt {

// b = P_Omega Psi x: values in the pattern's row-major index order.
struct Measurements {
  Shape shape;
  std::vector<std::size_t> indices;
  std::vector<Complex> values;
};

// InvalidArgument when the pattern shape differs from the k-space shape.
Measurements subsample(const KSpace& k, const SamplingPattern& pattern);

// Psi^* P_Omega^* b: measured values placed back in k-space, zeros elsewhere,
// then the unitary inverse FFT.
ComplexImage adjoint_zero_fill(const Measurements& m);

// A = P_Omega Psi for one pattern, reusing FFT plans across applications.
class SubsampledFourier {
 public:
  SubsampledFourier(Shape shape, std::vector<std::size_t> indices);

  Shape shape() const { return fft_.shape(); }
  std::size_t measurement_count() const { return indices_.size(); }
  const std::vector<std::size_t>& indices() const { return indices_; }

  // out (|Omega|) = A x (p)
  void apply(std::span<const Complex> x, std::span<Complex> out) const;
  // out (p) = A^* y (|Omega|)
  void adjoint(std::span<const Complex> y, std::span<Complex> out) const;

 private:
  Fft2d fft_;
  std::vector<std::size_t> indices_;
  mutable std::vector<Complex> scratch_;
};

}  // namespace maskopt
