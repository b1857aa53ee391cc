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

// Orthonormal multilevel 2D Haar transform (Mallat layout: the coarse
// approximation occupies the top-left block after all levels).
class HaarTransform {
 public:
  // levels = 0 is the identity. Each level halves both dimensions, so
  // rows >> levels and cols >> levels must stay >= 1.
  HaarTransform(Shape shape, int levels);

  // log2(min(rows, cols)) - 2, clamped to at least 1 (0 for 1-pixel sides).
  static int default_levels(Shape shape);

  Shape shape() const { return shape_; }
  int levels() const { return levels_; }

  void forward(std::span<Complex> data) const;
  void inverse(std::span<Complex> data) const;

  // 0 for the approximation block, 1 for the coarsest detail band up to
  // levels() for the finest detail band.
  int scale_of(std::size_t row, std::size_t col) const;

 private:
  Shape shape_;
  int levels_;
};

}  // namespace maskopt
