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


#include "maskopt/noisy.hpp"

#include <cmath>
#include <random>
#include <string>

#include "maskopt/error.hpp"
#include "maskopt/random.hpp"
#include "maskopt/wavelet.hpp"

namespace maskopt {

void NoiseModel::validate() const {
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw InvalidArgument("noise sigma must be >= 0");
}

ComplexImage add_noise(const ComplexImage& img, const NoiseModel& model) {
  model.validate();
  if (model.sigma == 0.0) return img;
  std::mt19937_64 rng(model.seed);
  std::normal_distribution<double> gauss(0.0, model.sigma);
  ComplexImage out = img;
  for (Complex& z : out.data()) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    z += Complex(re, im);
  }
  return out;
}

std::uint64_t noise_seed(std::uint64_t base, std::size_t index) {
  return derive_seed(base, 0x6e6f6973ULL, index);
}

std::vector<ComplexImage> add_noise(std::span<const ComplexImage> images, const NoiseModel& model) {
  std::vector<ComplexImage> out;
  out.reserve(images.size());
  for (std::size_t j = 0; j < images.size(); ++j) {
    out.push_back(add_noise(images[j], NoiseModel{model.sigma, noise_seed(model.seed, j)}));
  }
  return out;
}

std::string_view to_string(DenoiserKind kind) {
  switch (kind) {
    case DenoiserKind::identity:
      return "identity";
    case DenoiserKind::wavelet_soft_threshold:
      return "wavelet";
  }
  return "?";
}

DenoiserKind parse_denoiser_kind(std::string_view name) {
  if (name == "identity" || name == "none") return DenoiserKind::identity;
  if (name == "wavelet" || name == "wavelet_soft_threshold") {
    return DenoiserKind::wavelet_soft_threshold;
  }
  throw InvalidArgument("unknown denoiser '" + std::string(name) + "'");
}

Denoiser Denoiser::wavelet_for_sigma(double sigma) {
  return Denoiser{DenoiserKind::wavelet_soft_threshold, 3.0 * sigma, -1};
}

void Denoiser::validate() const {
  if (kind == DenoiserKind::wavelet_soft_threshold && !(threshold > 0.0)) {
    throw InvalidArgument("wavelet denoiser threshold must be positive");
  }
}

ComplexImage denoise(const ComplexImage& z, const Denoiser& d) {
  d.validate();
  if (d.kind == DenoiserKind::identity) return z;
  const int levels = d.levels < 0 ? HaarTransform::default_levels(z.shape()) : d.levels;
  const HaarTransform haar(z.shape(), levels);
  ComplexImage out = z;
  haar.forward(out.data());
  for (Complex& c : out.data()) {
    const double mag = std::abs(c);
    c = mag > d.threshold ? c * ((mag - d.threshold) / mag) : Complex{};
  }
  haar.inverse(out.data());
  return out;
}

GreedyResult greedy_optimize_noisy(const GreedyConfig& cfg, std::span<const ComplexImage> noisy,
                                   const Denoiser& denoiser) {
  if (noisy.empty()) throw DataError("training set is empty");
  std::vector<ComplexImage> references;
  references.reserve(noisy.size());
  for (const auto& z : noisy) references.push_back(denoise(z, denoiser));
  return greedy_optimize(cfg, make_evaluation_set(references, noisy));
}

}  // namespace maskopt
