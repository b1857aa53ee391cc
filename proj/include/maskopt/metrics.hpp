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

#include <optional>
#include <string_view>

#include "maskopt/image.hpp"

namespace maskopt {

inline constexpr double kPsnrCap = 1000.0;

struct PsnrOptions {
  // Peak value; defaults to the largest magnitude of the ground truth.
  std::optional<double> peak;
};

struct SsimOptions {
  int window = 11;  // odd, >= 3
  double sigma = 1.5;
  double k1 = 0.01;
  double k2 = 0.03;
  // Dynamic range L; defaults to the largest magnitude of the ground truth.
  std::optional<double> dynamic_range;

  void validate() const;
};

// 10 log10(peak^2 / MSE), capped at kPsnrCap (also returned when MSE = 0).
double psnr(const ComplexImage& truth, const ComplexImage& recon, const PsnrOptions& opts = {});

// Mean SSIM of the magnitude images. Local statistics use a Gaussian window
// centred on every pixel; near the border the window is truncated to the
// image and renormalized, so images smaller than the window are handled.
double ssim(const ComplexImage& truth, const ComplexImage& recon, const SsimOptions& opts = {});

// 1 - ||x - xhat||^2 / 4 with xhat scaled down to unit norm when longer.
// Requires ||truth|| = 1 within 1e-9.
double normalized_sq(const ComplexImage& truth, const ComplexImage& recon);

enum class MetricKind { psnr, ssim, normalized_sq };

std::string_view to_string(MetricKind kind);
MetricKind parse_metric_kind(std::string_view name);

// The performance measure eta(x, xhat); larger is better.
struct PerformanceMeasure {
  MetricKind kind = MetricKind::psnr;
  PsnrOptions psnr_options{};
  SsimOptions ssim_options{};

  double operator()(const ComplexImage& truth, const ComplexImage& recon) const;
};

}  // namespace maskopt
