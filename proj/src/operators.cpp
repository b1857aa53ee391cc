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


#include "maskopt/operators.hpp"

#include <algorithm>

#include "maskopt/error.hpp"

namespace maskopt {

Measurements subsample(const KSpace& k, const SamplingPattern& pattern) {
  if (k.shape() != pattern.shape()) {
    throw InvalidArgument("sampling pattern shape does not match k-space shape");
  }
  Measurements m{k.shape(), pattern.indices(), {}};
  m.values.reserve(m.indices.size());
  for (std::size_t i : m.indices) m.values.push_back(k[i]);
  return m;
}

ComplexImage adjoint_zero_fill(const Measurements& m) {
  if (m.indices.size() != m.values.size()) {
    throw InvalidArgument("measurement values do not match the index list");
  }
  KSpace k(m.shape);
  for (std::size_t i = 0; i < m.indices.size(); ++i) k[m.indices[i]] = m.values[i];
  return ifft2_unitary(k);
}

SubsampledFourier::SubsampledFourier(Shape shape, std::vector<std::size_t> indices)
    : fft_(shape), indices_(std::move(indices)), scratch_(shape.size()) {}

void SubsampledFourier::apply(std::span<const Complex> x, std::span<Complex> out) const {
  std::copy(x.begin(), x.end(), scratch_.begin());
  fft_.forward(scratch_);
  for (std::size_t i = 0; i < indices_.size(); ++i) out[i] = scratch_[indices_[i]];
}

void SubsampledFourier::adjoint(std::span<const Complex> y, std::span<Complex> out) const {
  std::fill(out.begin(), out.end(), Complex{});
  for (std::size_t i = 0; i < indices_.size(); ++i) out[indices_[i]] = y[i];
  fft_.inverse(out);
}

}  // namespace maskopt
