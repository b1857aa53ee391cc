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


#include <doctest.h>

#include <cmath>

#include "maskopt/error.hpp"
#include "maskopt/fft.hpp"
#include "maskopt/noisy.hpp"
#include "maskopt/phantom.hpp"
#include "maskopt/wavelet.hpp"
#include "test_support.hpp"

using namespace maskopt;

namespace {

// 3e-4 on 256x256 unit-norm images, rescaled to keep the per-pixel
// signal-to-noise ratio on 32x32.
constexpr double kScaledSigma = 3e-4 * 256.0 / 32.0;

double distance(const ComplexImage& a, const ComplexImage& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace

TEST_CASE("zero noise is the identity") {
  const ComplexImage x = maskopt::testing::random_image(Shape{8, 8}, 1);
  CHECK(add_noise(x, NoiseModel{0.0, 5}) == x);
  CHECK_THROWS_AS(add_noise(x, NoiseModel{-1.0, 5}), InvalidArgument);
}

TEST_CASE("noise is seed deterministic") {
  const ComplexImage x = maskopt::testing::random_image(Shape{8, 8}, 1);
  CHECK(add_noise(x, NoiseModel{0.1, 5}) == add_noise(x, NoiseModel{0.1, 5}));
  CHECK(!(add_noise(x, NoiseModel{0.1, 5}) == add_noise(x, NoiseModel{0.1, 6})));
  const std::vector<ComplexImage> xs{x, x};
  const auto zs = add_noise(xs, NoiseModel{0.1, 5});
  CHECK(!(zs[0] == zs[1]));
  CHECK(zs[1] == add_noise(x, NoiseModel{0.1, noise_seed(5, 1)}));
}

TEST_CASE("noise energy matches the closed form and survives the Fourier transform") {
  const Shape s{256, 256};
  const double sigma = 3e-4;
  const double expected = 2.0 * sigma * sigma * static_cast<double>(s.size());
  const ComplexImage zero(s);
  double image_sum = 0.0, kspace_sum = 0.0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    const ComplexImage v = add_noise(zero, NoiseModel{sigma, t});
    const double e = squared_norm(v.data());
    const double k = squared_norm(fft2_unitary(v).data());
    REQUIRE(std::abs(k - e) <= 1e-10 * e);
    image_sum += e;
    kspace_sum += k;
  }
  CHECK(std::abs(image_sum / 100.0 - expected) <= 0.05 * expected);
  CHECK(std::abs(kspace_sum / 100.0 - expected) <= 0.05 * expected);
}

TEST_CASE("identity denoiser") {
  const ComplexImage z = maskopt::testing::random_image(Shape{8, 8}, 2);
  CHECK(denoise(z, Denoiser{}) == z);
  CHECK(parse_denoiser_kind("none") == DenoiserKind::identity);
  CHECK(parse_denoiser_kind(to_string(DenoiserKind::wavelet_soft_threshold)) ==
        DenoiserKind::wavelet_soft_threshold);
  CHECK_THROWS_AS(denoise(z, Denoiser{DenoiserKind::wavelet_soft_threshold, 0.0, -1}),
                  InvalidArgument);
}

TEST_CASE("soft threshold shrinkage bound on sparse signals") {
  PhantomSpec spec;
  spec.shape = Shape{32, 32};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ComplexImage x = make_phantom(spec, seed);
    ComplexImage a = x;
    HaarTransform(spec.shape, HaarTransform::default_levels(spec.shape)).forward(a.data());
    double min_nz = INFINITY;
    std::size_t nnz = 0;
    for (const Complex& c : a.values()) {
      if (std::abs(c) > 1e-12) {
        min_nz = std::min(min_nz, std::abs(c));
        ++nnz;
      }
    }
    const double tau = min_nz / 100.0;
    const ComplexImage d = denoise(x, Denoiser{DenoiserKind::wavelet_soft_threshold, tau, -1});
    CHECK(distance(d, x) <= tau * std::sqrt(static_cast<double>(nnz)) * (1.0 + 1e-9));
  }
}

TEST_CASE("wavelet denoising reduces the noise on the phantom suite") {
  PhantomSpec spec;
  spec.shape = Shape{32, 32};
  const auto xs = make_phantoms(spec, 20, 4);
  const Denoiser d = Denoiser::wavelet_for_sigma(kScaledSigma);
  double before = 0.0, after = 0.0;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    const ComplexImage z = add_noise(xs[j], NoiseModel{kScaledSigma, 100 + j});
    before += distance(z, xs[j]);
    after += distance(denoise(z, d), xs[j]);
  }
  CHECK(after < before);
}

TEST_CASE("identity denoiser reduces noisy greedy to plain greedy") {
  PhantomSpec spec;
  spec.shape = Shape{8, 8};
  spec.sparsity = 0.1;
  const auto xs = make_phantoms(spec, 3, 2);
  GreedyConfig cfg;
  cfg.decoder = DecoderConfig::test_profile(DecoderKind::bp);
  cfg.family = SubsetFamily(spec.shape, FamilyKind::rows);
  cfg.budget = 4 * 8;
  cfg.record_candidates = true;

  const GreedyResult clean = greedy_optimize(cfg, xs);
  const GreedyResult reduced = greedy_optimize_noisy(cfg, add_noise(xs, NoiseModel{0.0, 1}), Denoiser{});
  CHECK(reduced.pattern == clean.pattern);
  CHECK(reduced.trace == clean.trace);

  const auto zs = add_noise(xs, NoiseModel{0.01, 1});
  const GreedyResult noisy = greedy_optimize_noisy(cfg, zs, Denoiser{});
  const GreedyResult direct = greedy_optimize(cfg, zs);
  CHECK(noisy.pattern == direct.pattern);
  CHECK(noisy.trace == direct.trace);
}

TEST_CASE("noisy greedy keeps the DC row early") {
  PhantomSpec spec;
  spec.shape = Shape{32, 32};
  const auto xs = make_phantoms(spec, 4, 21);
  GreedyConfig cfg;
  cfg.decoder = DecoderConfig::test_profile(DecoderKind::bp);
  cfg.family = SubsetFamily(spec.shape, FamilyKind::rows);
  cfg.budget = 8 * 32;
  const GreedyResult res = greedy_optimize_noisy(cfg, add_noise(xs, NoiseModel{kScaledSigma, 3}),
                                                 Denoiser::wavelet_for_sigma(kScaledSigma));
  REQUIRE(res.trace.records.size() == 8);
  bool found = false;
  for (std::size_t i = 0; i < 3; ++i) found |= res.trace.records[i].chosen.index == 0;
  CHECK(found);
}
