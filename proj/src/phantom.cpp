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


#include "maskopt/phantom.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "maskopt/error.hpp"
#include "maskopt/random.hpp"
#include "maskopt/wavelet.hpp"

namespace maskopt {

PhantomKind parse_phantom_kind(std::string_view name) {
  if (name == "piecewise_constant") return PhantomKind::piecewise_constant;
  if (name == "wavelet_sparse") return PhantomKind::wavelet_sparse;
  throw InvalidArgument("unknown phantom kind '" + std::string(name) + "'");
}

std::string_view to_string(PhantomKind kind) {
  switch (kind) {
    case PhantomKind::piecewise_constant:
      return "piecewise_constant";
    case PhantomKind::wavelet_sparse:
      return "wavelet_sparse";
  }
  return "?";
}

namespace {

ComplexImage piecewise_constant(const PhantomSpec& spec, std::mt19937_64& rng) {
  const Shape shape = spec.shape;
  if (spec.rectangles < 1) throw InvalidArgument("piecewise_constant needs at least one rectangle");
  if (shape.rows < 2 || shape.cols < 2) throw InvalidArgument("piecewise_constant needs sides >= 2");
  ComplexImage img(shape);
  std::uniform_real_distribution<double> intensity(0.5, 1.5);
  auto span_in = [&rng](std::size_t n) {
    std::uniform_int_distribution<std::size_t> len(2, std::max<std::size_t>(2, n / 2));
    const std::size_t l = len(rng);
    std::uniform_int_distribution<std::size_t> start(0, n - l);
    const std::size_t s = start(rng);
    return std::pair{s, s + l};
  };
  for (int k = 0; k < spec.rectangles; ++k) {
    const auto [r0, r1] = span_in(shape.rows);
    const auto [c0, c1] = span_in(shape.cols);
    const double value = intensity(rng);
    for (std::size_t r = r0; r < r1; ++r) {
      for (std::size_t c = c0; c < c1; ++c) img(r, c) += value;
    }
  }
  return img;
}

ComplexImage wavelet_sparse(const PhantomSpec& spec, std::mt19937_64& rng) {
  const Shape shape = spec.shape;
  const std::size_t p = shape.size();
  if (!(spec.sparsity > 0.0) || spec.sparsity > 1.0) {
    throw InvalidArgument("sparsity must lie in (0, 1]");
  }
  const int levels = spec.levels < 0 ? HaarTransform::default_levels(shape) : spec.levels;
  const HaarTransform haar(shape, levels);
  const auto nonzeros = static_cast<std::size_t>(std::ceil(spec.sparsity * static_cast<double>(p)));

  std::vector<int> scale(p);
  std::vector<std::size_t> band_size(static_cast<std::size_t>(levels) + 1, 0);
  for (std::size_t r = 0; r < shape.rows; ++r) {
    for (std::size_t c = 0; c < shape.cols; ++c) {
      scale[r * shape.cols + c] = haar.scale_of(r, c);
      ++band_size[static_cast<std::size_t>(scale[r * shape.cols + c])];
    }
  }

  // Weighted sampling without replacement via exponential keys: smallest
  // -log(u)/w wins. Weight 1/band_size gives each band equal expected share.
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::pair<double, std::size_t>> keys(p);
  for (std::size_t i = 0; i < p; ++i) {
    const double u = std::max(unit(rng), 1e-300);
    const double w = 1.0 / static_cast<double>(band_size[static_cast<std::size_t>(scale[i])]);
    keys[i] = {-std::log(u) / w, i};
  }
  std::partial_sort(keys.begin(), keys.begin() + static_cast<std::ptrdiff_t>(nonzeros), keys.end());

  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> coeffs(p);
  for (std::size_t k = 0; k < nonzeros; ++k) {
    const std::size_t i = keys[k].second;
    const double amplitude = std::ldexp(1.0, -scale[i]);
    Complex v;
    do {
      v = Complex(gauss(rng), gauss(rng));
    } while (std::abs(v) < 1e-3);
    coeffs[i] = amplitude * v;
  }
  haar.inverse(coeffs);
  return ComplexImage(shape, std::move(coeffs));
}

}  // namespace

ComplexImage make_phantom(const PhantomSpec& spec, std::uint64_t seed) {
  require_power_of_two(spec.shape);
  std::mt19937_64 rng(seed);
  ComplexImage img = spec.kind == PhantomKind::piecewise_constant ? piecewise_constant(spec, rng)
                                                                  : wavelet_sparse(spec, rng);
  return normalized(img);
}

std::uint64_t phantom_seed(std::uint64_t base, std::size_t index) {
  return derive_seed(base, 0x70686e74ULL, index);
}

std::vector<ComplexImage> make_phantoms(const PhantomSpec& spec, std::size_t count,
                                        std::uint64_t seed) {
  std::vector<ComplexImage> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(make_phantom(spec, phantom_seed(seed, i)));
  return out;
}

}  // namespace maskopt
