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
#include <random>

#include "maskopt/error.hpp"
#include "maskopt/metrics.hpp"
#include "maskopt/phantom.hpp"
#include "metric_oracles.hpp"
#include "test_support.hpp"

using namespace maskopt;
using maskopt::testing::random_image;
using maskopt::testing::random_unit_image;

TEST_CASE("psnr special values") {
  const ComplexImage x = random_image(Shape{8, 8}, 1);
  CHECK(psnr(x, x) == kPsnrCap);

  ComplexImage truth(Shape{4, 4});
  truth(1, 2) = Complex(0.6, 0.8);  // peak 1
  ComplexImage recon = truth;
  for (auto& v : recon.values()) v += Complex(0.0, 1.0);  // MSE = 1
  CHECK(std::abs(psnr(truth, recon)) <= 1e-12);

  CHECK_THROWS_AS(psnr(ComplexImage(Shape{4, 4}), recon), InvalidArgument);
  CHECK_THROWS_AS(psnr(truth, ComplexImage(Shape{4, 8})), InvalidArgument);
}

TEST_CASE("psnr uses a configurable peak") {
  ComplexImage truth(Shape{2, 2});
  truth[0] = 2.0;
  ComplexImage recon = truth;
  recon[1] = 1.0;  // MSE = 0.25
  CHECK(psnr(truth, recon) == doctest::Approx(10.0 * std::log10(16.0)).epsilon(1e-14));
  PsnrOptions opts;
  opts.peak = 1.0;
  CHECK(psnr(truth, recon, opts) == doctest::Approx(10.0 * std::log10(4.0)).epsilon(1e-14));
}

TEST_CASE("psnr decreases as the error grows") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const ComplexImage x = random_image(Shape{8, 8}, seed);
    const ComplexImage e = random_image(Shape{8, 8}, seed + 100);
    double last = kPsnrCap + 1.0;
    for (double t : {1e-6, 1e-4, 1e-2, 0.1, 1.0, 10.0}) {
      ComplexImage r = x;
      for (std::size_t i = 0; i < r.size(); ++i) r[i] += t * e[i];
      const double v = psnr(x, r);
      REQUIRE(v < last);
      last = v;
    }
  }
}

TEST_CASE("ssim identities") {
  const ComplexImage x = random_image(Shape{16, 16}, 2);
  CHECK(ssim(x, x) == 1.0);
  const ComplexImage y = random_image(Shape{16, 16}, 3);
  SsimOptions opts;
  opts.dynamic_range = 2.0;
  CHECK(std::abs(ssim(x, y, opts) - ssim(y, x, opts)) <= 1e-15);
  const double v = ssim(x, y);
  CHECK(v >= -1.0);
  CHECK(v <= 1.0);
}

// Windows where the truth is locally zero score ~1 against a zero image, so the
// suite uses phantoms dense enough that no 11x11 window is empty.
TEST_CASE("ssim of a zero reconstruction is small on wavelet phantoms") {
  PhantomSpec spec;
  spec.shape = Shape{32, 32};
  spec.sparsity = 0.1;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ComplexImage x = make_phantom(spec, seed);
    CHECK(ssim(x, ComplexImage(spec.shape)) < 0.05);
  }
}

TEST_CASE("ssim options are validated") {
  const ComplexImage x = random_image(Shape{8, 8}, 2);
  SsimOptions opts;
  opts.window = 4;
  CHECK_THROWS_AS(ssim(x, x, opts), InvalidArgument);
  opts.window = 1;
  CHECK_THROWS_AS(ssim(x, x, opts), InvalidArgument);
  opts = {};
  opts.k1 = 0.0;
  CHECK_THROWS_AS(ssim(x, x, opts), InvalidArgument);
  CHECK_THROWS_AS(ssim(x, ComplexImage(Shape{8, 4})), InvalidArgument);
}

TEST_CASE("normalized_sq special values") {
  const ComplexImage x = random_unit_image(Shape{8, 8}, 4);
  CHECK(normalized_sq(x, x) == doctest::Approx(1.0).epsilon(1e-15));
  ComplexImage neg = x;
  for (auto& v : neg.values()) v = -v;
  CHECK(std::abs(normalized_sq(x, neg)) <= 1e-15);
  CHECK(normalized_sq(x, ComplexImage(x.shape())) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK_THROWS_AS(normalized_sq(random_image(Shape{8, 8}, 5), x), InvalidArgument);
}

TEST_CASE("metrics match reference evaluations") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> scale(0.0, 2.0);
  for (std::uint64_t k = 0; k < 100; ++k) {
    const Shape s = k % 2 ? Shape{8, 8} : Shape{16, 32};
    const ComplexImage truth = random_unit_image(s, 3 * k);
    ComplexImage recon = random_image(s, 3 * k + 1);
    const double t = scale(rng) / std::sqrt(static_cast<double>(s.size()));
    for (std::size_t i = 0; i < recon.size(); ++i) recon[i] = truth[i] + t * recon[i];
    REQUIRE(std::abs(psnr(truth, recon) - oracle::psnr(truth, recon)) <= 1e-9);
    REQUIRE(std::abs(ssim(truth, recon) - oracle::ssim(truth, recon)) <= 1e-9);
    REQUIRE(std::abs(normalized_sq(truth, recon) - oracle::normalized_sq(truth, recon)) <= 1e-9);
  }
}

TEST_CASE("normalized_sq stays in the unit interval") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> scale(0.0, 5.0);
  for (std::uint64_t k = 0; k < 10000; ++k) {
    const ComplexImage truth = random_unit_image(Shape{4, 4}, 2 * k);
    ComplexImage recon = random_image(Shape{4, 4}, 2 * k + 1);
    const double t = scale(rng);
    for (auto& v : recon.values()) v *= t;
    const double v = normalized_sq(truth, recon);
    REQUIRE(v >= 0.0);
    REQUIRE(v <= 1.0);
  }
}

TEST_CASE("performance measure dispatch") {
  const ComplexImage x = random_unit_image(Shape{8, 8}, 6);
  const ComplexImage y = random_unit_image(Shape{8, 8}, 7);
  PerformanceMeasure m;
  for (MetricKind k : {MetricKind::psnr, MetricKind::ssim, MetricKind::normalized_sq}) {
    m.kind = k;
    CHECK(parse_metric_kind(to_string(k)) == k);
  }
  m.kind = MetricKind::ssim;
  CHECK(m(x, y) == ssim(x, y));
  CHECK_THROWS_AS(parse_metric_kind("mse"), InvalidArgument);
}
