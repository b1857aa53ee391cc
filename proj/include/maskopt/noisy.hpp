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
#include <span>
#include <string_view>
#include <vector>

#include "maskopt/greedy.hpp"
#include "maskopt/image.hpp"

namespace maskopt {

// Circularly symmetric complex Gaussian noise: N(0, sigma^2) on the real and
// on the imaginary part of every entry.
struct NoiseModel {
  double sigma = 0.0;
  std::uint64_t seed = 0;

  void validate() const;
};

// Seed-deterministic. sigma = 0 returns the input unchanged.
ComplexImage add_noise(const ComplexImage& img, const NoiseModel& model);
// Noisy copies with per-image seeds derived from model.seed.
std::vector<ComplexImage> add_noise(std::span<const ComplexImage> images, const NoiseModel& model);
std::uint64_t noise_seed(std::uint64_t base, std::size_t index);

enum class DenoiserKind { identity, wavelet_soft_threshold };

std::string_view to_string(DenoiserKind kind);
DenoiserKind parse_denoiser_kind(std::string_view name);

struct Denoiser {
  DenoiserKind kind = DenoiserKind::identity;
  double threshold = 0.0;  // soft threshold on Haar coefficient magnitudes
  int levels = -1;         // negative selects HaarTransform::default_levels

  // Wavelet denoiser with the 3 sigma universal-style threshold.
  static Denoiser wavelet_for_sigma(double sigma);
  void validate() const;
};

ComplexImage denoise(const ComplexImage& z, const Denoiser& d);

// Greedy selection from noisy training signals: references are the denoised
// signals xi(z_j), computed once up front, while measurements are taken from
// the noisy z_j themselves.
GreedyResult greedy_optimize_noisy(const GreedyConfig& cfg, std::span<const ComplexImage> noisy,
                                   const Denoiser& denoiser);

}  // namespace maskopt
