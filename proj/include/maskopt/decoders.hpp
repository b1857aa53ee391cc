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

#include <string_view>
#include <vector>

#include "maskopt/image.hpp"
#include "maskopt/operators.hpp"
#include "maskopt/sampling.hpp"

namespace maskopt {

enum class DecoderKind { zero_fill, bp, tv };

std::string_view to_string(DecoderKind kind);
DecoderKind parse_decoder_kind(std::string_view name);

struct DecoderConfig {
  DecoderKind kind = DecoderKind::zero_fill;
  int max_iters = 2000;
  // Regularization weight for bp / tv.
  double lambda = 1e-4;
  // Noise tolerance on ||P Psi xhat - b||. Zero solves the penalized problem
  // at fixed lambda; positive values run a decreasing-lambda continuation from
  // xhat = 0 and stop once the residual drops below epsilon.
  double epsilon = 0.0;
  // Stop when the relative objective change of an accepted step is below tol.
  double tol = 1e-6;
  // Haar levels (bp only); negative selects HaarTransform::default_levels.
  int wavelet_levels = -1;
  // Dual iterations of the TV proximal step.
  int tv_inner_iters = 20;

  // 300 iterations; the default 2000 is the quality profile.
  static DecoderConfig test_profile(DecoderKind kind);
  void validate() const;
};

struct DecodeReport {
  int iterations = 0;
  double objective = 0.0;
  // ||P Psi xhat - b||_2
  double residual = 0.0;
  bool converged = false;
  // Objective of the kept iterate after each iteration.
  std::vector<double> objective_trace;
};

// xhat = g(Omega, b). Deterministic: identical inputs give bitwise-identical
// output. Non-convergence is reported, not thrown.
ComplexImage decode(const DecoderConfig& cfg, const SamplingPattern& pattern,
                    const Measurements& b, DecodeReport* report = nullptr);

// The composite objective minimized by cfg's decoder, evaluated at image x.
// zero_fill uses the bare data term 0.5 ||P Psi x - b||^2.
double objective(const DecoderConfig& cfg, const SamplingPattern& pattern, const Measurements& b,
                 const ComplexImage& x);

// Isotropic TV with forward differences and Neumann (symmetric) boundary.
double total_variation(std::span<const Complex> x, Shape shape);

// argmin_u lambda TV(u) + 0.5 ||u - g||^2 by Chambolle's dual fixed point.
ComplexImage tv_denoise(const ComplexImage& g, double lambda, int iterations);

}  // namespace maskopt
