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

#include <cstdint>
#include <string_view>
#include <vector>

#include "maskopt/image.hpp"

namespace maskopt {

enum class PhantomKind { piecewise_constant, wavelet_sparse };

PhantomKind parse_phantom_kind(std::string_view name);
std::string_view to_string(PhantomKind kind);

struct PhantomSpec {
  PhantomKind kind = PhantomKind::wavelet_sparse;
  Shape shape{32, 32};
  // Fraction of nonzero Haar coefficients (wavelet_sparse only).
  double sparsity = 0.01;
  // Number of rectangles (piecewise_constant only).
  int rectangles = 3;
  // Haar levels for wavelet_sparse; negative selects HaarTransform::default_levels.
  int levels = -1;
};

// Unit-norm synthetic image, deterministic in seed.
//
// piecewise_constant: sum of axis-aligned rectangles with intensities in
// [0.5, 1.5], each side at least 2 pixels.
//
// wavelet_sparse: exactly ceil(sparsity * p) nonzero Haar coefficients with
// complex Gaussian values. Positions are drawn so that every scale band
// (approximation, then each detail level) receives the same expected share,
// and amplitudes halve per level from coarse to fine, which gives the decaying
// k-space spectrum typical of anatomical images.
ComplexImage make_phantom(const PhantomSpec& spec, std::uint64_t seed);

// Convenience: count phantoms with per-image seeds derived from seed.
std::vector<ComplexImage> make_phantoms(const PhantomSpec& spec, std::size_t count,
                                        std::uint64_t seed);
std::uint64_t phantom_seed(std::uint64_t base, std::size_t index);

}  // namespace maskopt
