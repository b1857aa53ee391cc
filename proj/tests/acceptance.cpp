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


// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Usage: acceptance [criterion numbers...]   (default: all)

#include <algorithm>
#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "maskopt/decoders.hpp"
#include "maskopt/fft.hpp"
#include "maskopt/greedy.hpp"
#include "maskopt/metrics.hpp"
#include "maskopt/noisy.hpp"
#include "maskopt/operators.hpp"
#include "maskopt/parallel.hpp"
#include "maskopt/phantom.hpp"
#include "maskopt/selection.hpp"
#include "maskopt/theory.hpp"
#include "maskopt/wavelet.hpp"
#include "metric_oracles.hpp"
#include "recovery_instances.hpp"
#include "test_support.hpp"

using namespace maskopt;
namespace mp = boost::multiprecision;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double time_limit_s;
  std::function<Outcome()> run;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

unsigned workers() { return default_workers(); }

// ---------------------------------------------------------------------------
// 1. Operator correctness.

Outcome operators() {
  double parseval = 0.0, adjoint = 0.0, ortho = 0.0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Shape s{std::size_t{1} << (1 + seed % 6), std::size_t{1} << (1 + (seed / 6) % 6)};
    const ComplexImage x = testing::random_image(s, seed);
    const double n = l2_norm(x.data());
    parseval = std::max(parseval, std::abs(l2_norm(fft2_unitary(x).data()) - n) / n);

    const ComplexImage y = testing::random_image(s, seed + 5000);
    const SamplingPattern omega = testing::random_points(s, 0.5, seed);
    const Measurements px = subsample(fft2_unitary(x), omega);
    const Measurements py = subsample(fft2_unitary(y), omega);
    const Complex lhs = inner_product(px.values, py.values);
    const Complex rhs = inner_product(x.data(), adjoint_zero_fill(py).data());
    adjoint = std::max(adjoint, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));

    const HaarTransform haar(s, HaarTransform::default_levels(s));
    ComplexImage a = x;
    haar.forward(a.data());
    ortho = std::max(ortho, std::abs(l2_norm(a.data()) - n) / n);
    haar.inverse(a.data());
    ortho = std::max(ortho, testing::max_abs_diff(a.values(), x.values()) / n);
  }
  Outcome o;
  o.pass = parseval <= 1e-10 && adjoint <= 1e-10 && ortho <= 1e-10;
  o.detail = "max rel: parseval " + fmt("%.1e", parseval) + ", adjoint " + fmt("%.1e", adjoint) +
             ", haar " + fmt("%.1e", ortho) + " over 1000 draws";
  return o;
}

// ---------------------------------------------------------------------------
// 2. Greedy versus brute force on 8x8.

double mean_score(const SamplingPattern& p, const std::vector<ComplexImage>& xs,
                  const DecoderConfig& dec) {
  double sum = 0.0;
  for (const auto& x : xs) sum += psnr(x, decode(dec, p, subsample(fft2_unitary(x), p)));
  return sum / static_cast<double>(xs.size());
}

std::vector<ComplexImage> suite8() {
  PhantomSpec spec;
  spec.shape = Shape{8, 8};
  spec.sparsity = 0.1;
  return make_phantoms(spec, 3, 5);
}

Outcome greedy_brute_force() {
  const auto xs = suite8();
  const SubsetFamily rows(Shape{8, 8}, FamilyKind::rows);
  Outcome o;
  for (DecoderKind k : {DecoderKind::zero_fill, DecoderKind::bp, DecoderKind::tv}) {
    GreedyConfig cfg;
    cfg.decoder = DecoderConfig::test_profile(k);
    cfg.family = rows;
    cfg.budget = 16;
    cfg.workers = workers();
    const GreedyResult res = greedy_optimize(cfg, xs);
    std::size_t best = 0;
    double best_v = 0.0;
    for (std::size_t r = 0; r < 8; ++r) {
      const double v = mean_score(SamplingPattern::from_trace(rows, {{SubsetKind::row, r}}), xs, cfg.decoder);
      if (r == 0 || v > best_v) {
        best = r;
        best_v = v;
      }
    }
    const bool first_ok = res.trace.records.size() == 2 && res.trace.records[0].chosen.index == best;
    const double pair = mean_score(res.pattern, xs, cfg.decoder);
    bool pair_ok = true;
    for (std::size_t r = 0; r < 8; ++r) {
      if (r == best) continue;
      pair_ok &= pair >= mean_score(SamplingPattern::from_trace(rows, {{SubsetKind::row, best}, {SubsetKind::row, r}}),
                                    xs, cfg.decoder);
    }
    o.pass &= first_ok && pair_ok;
    o.detail += std::string(to_string(k)) + ": first row " + std::to_string(res.trace.records[0].chosen.index) +
                " vs argmax " + std::to_string(best) + (pair_ok ? ", pair ok; " : ", pair NOT maximal; ");
  }
  return o;
}

// ---------------------------------------------------------------------------
// 3. Nestedness and worker independence.

Outcome nestedness() {
  PhantomSpec spec;
  spec.shape = Shape{16, 16};
  spec.sparsity = 0.05;
  const auto xs = make_phantoms(spec, 4, 13);
  GreedyConfig cfg;
  cfg.decoder = DecoderConfig::test_profile(DecoderKind::bp);
  cfg.family = SubsetFamily(spec.shape, FamilyKind::rows);
  cfg.budget = 6 * 16;
  cfg.workers = 1;
  const GreedyResult six = greedy_optimize(cfg, xs);
  cfg.budget = 3 * 16;
  const GreedyResult three = greedy_optimize(cfg, xs);
  const SamplingPattern cut = truncate_to_budget(six.trace, 3 * 16);
  const bool prefix_ok = cut == three.pattern &&
                         std::equal(three.trace.records.begin(), three.trace.records.end(),
                                    six.trace.records.begin());
  cfg.budget = 6 * 16;
  cfg.workers = 4;
  const GreedyResult four = greedy_optimize(cfg, xs);
  const bool workers_ok = four.pattern == six.pattern && four.trace == six.trace;
  return {prefix_ok && workers_ok, std::string("truncate(6 rows -> 3) ") +
                                       (prefix_ok ? "== fresh run" : "differs") + ", workers 1 vs 4 " +
                                       (workers_ok ? "bitwise identical" : "differ")};
}

// ---------------------------------------------------------------------------
// 4. Noiseless bound: Monte Carlo check and formula.

Outcome noiseless_bound() {
  BoundValidationConfig cfg;
  cfg.distribution.spec.shape = Shape{8, 8};
  cfg.distribution.spec.sparsity = 0.1;
  cfg.distribution.seed = 2024;
  cfg.decoder = DecoderConfig{};
  cfg.m = 20;
  cfg.delta = 0.1;
  cfg.trials = 200;
  cfg.holdout = 10000;
  cfg.workers = workers();
  const SubsetFamily rows(Shape{8, 8}, FamilyKind::rows);
  std::vector<SamplingPattern> masks;
  for (std::size_t r = 0; r < 8; ++r) masks.push_back(SamplingPattern::from_trace(rows, {{SubsetKind::row, r}}));
  const BoundValidationReport rep = validate_bound_mc(cfg, masks);

  using Big = mp::cpp_dec_float_50;
  const SubsetFamily big(Shape{256, 256}, FamilyKind::rows);
  const FeasibleSetCount count = count_feasible(big, CostFunction{}, 64 * 256);
  mp::cpp_int sum = 0, term = 1;
  for (unsigned l = 0; l <= 64; ++l) {
    sum += term;
    term = term * (256 - l) / (l + 1);
  }
  const Big oracle = mp::sqrt((mp::log(Big(2)) + mp::log(Big(sum)) - mp::log(Big("0.05"))) / Big(80));
  const double got = bound_noiseless(40, count, 0.05);
  const double rel = std::abs(static_cast<double>((Big(got) - oracle) / oracle));

  Outcome o;
  o.pass = rep.violation_fraction <= 0.1 + 3.0 * std::sqrt(0.1 * 0.9 / 200.0) && rel <= 1e-12;
  o.detail = "violations " + std::to_string(rep.violations) + "/200 = " + fmt("%.3f", rep.violation_fraction) +
             " (limit " + fmt("%.3f", rep.threshold) + "), bound " + fmt("%.4f", rep.bound) +
             ", oracle rel err " + fmt("%.1e", rel);
  return o;
}

// ---------------------------------------------------------------------------
// 5. Noisy bound structure.

Outcome noisy_bound() {
  Outcome o;
  const SubsetFamily rows(Shape{32, 32}, FamilyKind::rows);
  const FeasibleSetCount count = count_feasible(rows, CostFunction{}, 8 * 32);
  double worst_sum = 0.0;
  for (double L : {0.0, 0.5, 1.0, 3.0}) {
    for (double r : {0.0, 1e-3, 0.02, 1.5}) {
      const double expect = L * r + bound_noiseless(20, count, 0.1);
      worst_sum = std::max(worst_sum, std::abs(bound_noisy(20, count, 0.1, L, r) - expect));
    }
  }
  o.pass &= worst_sum == 0.0;

  double worst_chi = 0.0;
  for (Shape s : {Shape{32, 32}, Shape{64, 64}, Shape{128, 64}}) {
    const double sigma = 3e-4;
    const ResidualEstimate r = estimate_residual(Denoiser{}, NoiseModel{sigma, 77}, ComplexImage(s), 200);
    const double expected = std::sqrt(2.0 * sigma * sigma * static_cast<double>(s.size()));
    worst_chi = std::max(worst_chi, std::abs(r.mean - expected) / expected);
  }
  o.pass &= worst_chi <= 0.02;

  PhantomSpec spec;
  spec.shape = Shape{32, 32};
  const auto suite = make_phantoms(spec, 5, 99);
  const double sigma = 3e-4;
  std::size_t wins = 0;
  double ratio = 0.0;
  for (std::size_t j = 0; j < suite.size(); ++j) {
    const NoiseModel noise{sigma, 500 + j};
    const double id = estimate_residual(Denoiser{}, noise, suite[j], 20).mean;
    const double wv = estimate_residual(Denoiser::wavelet_for_sigma(sigma), noise, suite[j], 20).mean;
    wins += wv < id;
    ratio = std::max(ratio, wv / id);
  }
  o.pass &= wins == suite.size();
  o.detail = "noisy - (L*res + bound) max |diff| " + fmt("%.1e", worst_sum) + ", identity residual vs sqrt(2 s^2 p) max rel " +
             fmt("%.4f", worst_chi) + ", wavelet < identity on " + std::to_string(wins) + "/5 phantoms (worst ratio " +
             fmt("%.3f", ratio) + ")";
  return o;
}

// ---------------------------------------------------------------------------
// 6. Noisy greedy reduces to the noiseless one.

Outcome reduction() {
  PhantomSpec spec;
  spec.shape = Shape{16, 16};
  spec.sparsity = 0.05;
  const auto xs = make_phantoms(spec, 4, 17);
  GreedyConfig cfg;
  cfg.decoder = DecoderConfig::test_profile(DecoderKind::bp);
  cfg.family = SubsetFamily(spec.shape, FamilyKind::rows);
  cfg.budget = 4 * 16;
  cfg.workers = workers();
  cfg.record_candidates = true;
  const GreedyResult a = greedy_optimize(cfg, xs);
  const GreedyResult b = greedy_optimize_noisy(cfg, add_noise(xs, NoiseModel{0.0, 3}), Denoiser{});
  const bool same = a.pattern == b.pattern && a.trace == b.trace;
  return {same, std::string("identity denoiser, sigma 0: trace ") + (same ? "bitwise identical" : "differs") +
                    " (" + std::to_string(a.trace.records.size()) + " records with candidate tables)"};
}

// ---------------------------------------------------------------------------
// 7. Relative ordering against baselines.

Outcome relative_ordering() {
  const Shape shape{32, 32};
  const SubsetFamily rows(shape, FamilyKind::rows);
  const std::size_t budget = static_cast<std::size_t>(std::floor(0.25 * 32)) * 32;
  const DecoderConfig dec = DecoderConfig::test_profile(DecoderKind::bp);
  const PerformanceMeasure metric{};
  PhantomSpec spec;
  spec.shape = shape;
  // About 51 nonzero Haar coefficients: 8 rows no longer recover these
  // exactly, so the comparison is between masks rather than solver bias.
  spec.sparsity = 0.05;

  std::size_t wins = 0;
  std::ostringstream detail;
  double worst_margin = INFINITY;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto train = make_phantoms(spec, 10, 1000 + 2 * seed);
    const auto test = make_phantoms(spec, 10, 1001 + 2 * seed);
    const EvaluationSet train_set = make_evaluation_set(train);
    const EvaluationSet test_set = make_evaluation_set(test);

    GreedyConfig cfg;
    cfg.decoder = dec;
    cfg.metric = metric;
    cfg.family = rows;
    cfg.budget = budget;
    cfg.workers = workers();
    const SamplingPattern greedy = greedy_optimize(cfg, train_set).pattern;

    MaskGeneratorConfig lp;
    MaskGeneratorConfig ur;
    ur.kind = MaskKind::uniform_random;
    ur.seed = 7000 + seed;
    const SweepResult coherence = parametric_sweep(
        default_sweep_grid(MaskKind::coherence_poly, rows, budget, 5, 8000 + seed), rows, budget, train_set,
        dec, metric, workers());
    SweepGrid energy_grid = default_sweep_grid(MaskKind::single_image_energy, rows, budget, 5, 9000 + seed);
    energy_grid.degrees = {1.0};
    energy_grid.reference = train.front();
    const SweepResult energy = parametric_sweep(energy_grid, rows, budget, train_set, dec, metric, workers());

    const std::vector<SamplingPattern> masks{greedy, generate_mask(lp, rows, budget), generate_mask(ur, rows, budget),
                                             coherence.best, energy.best};
    const SelectionResult held = select_best(masks, test_set, dec, metric, workers());
    double best_baseline = -INFINITY;
    for (std::size_t i = 1; i < masks.size(); ++i) best_baseline = std::max(best_baseline, held.scores[i]);
    const bool win = held.scores[0] >= best_baseline;
    wins += win;
    worst_margin = std::min(worst_margin, held.scores[0] - best_baseline);
    detail << "\n      seed " << seed << ": greedy " << fmt("%.2f", held.scores[0]) << " | low_pass "
           << fmt("%.2f", held.scores[1]) << ", uniform " << fmt("%.2f", held.scores[2]) << ", coherence "
           << fmt("%.2f", held.scores[3]) << ", energy " << fmt("%.2f", held.scores[4]) << (win ? "" : "  <- loss");
  }
  return {wins >= 8, "greedy >= every baseline on held-out PSNR in " + std::to_string(wins) +
                         "/10 seeds (need 8), worst margin " + fmt("%.2f", worst_margin) + " dB" + detail.str()};
}

// ---------------------------------------------------------------------------
// 8. Noisy-regime shift toward low frequencies.

double central_quartile_fraction(const SamplingPattern& p) {
  const std::size_t n = p.shape().rows;
  std::size_t inside = 0;
  for (const auto& s : p.trace()) {
    const std::size_t c = to_centered(s.index, n);
    inside += c >= n / 2 - n / 8 && c < n / 2 + n / 8;
  }
  return static_cast<double>(inside) / static_cast<double>(p.trace().size());
}

Outcome noisy_shift() {
  const Shape shape{32, 32};
  PhantomSpec spec;
  spec.shape = shape;
  const double sigma = 3e-4 * 256.0 / 32.0;
  GreedyConfig cfg;
  cfg.decoder = DecoderConfig::test_profile(DecoderKind::bp);
  cfg.family = SubsetFamily(shape, FamilyKind::rows);
  cfg.budget = 8 * 32;
  cfg.workers = workers();
  Outcome o;
  for (std::uint64_t seed : {41u, 42u}) {
    const auto xs = make_phantoms(spec, 10, seed);
    const SamplingPattern clean = greedy_optimize(cfg, xs).pattern;
    const SamplingPattern noisy =
        greedy_optimize_noisy(cfg, add_noise(xs, NoiseModel{sigma, seed}), Denoiser::wavelet_for_sigma(sigma)).pattern;
    const double fc = central_quartile_fraction(clean);
    const double fn = central_quartile_fraction(noisy);
    o.pass &= fn >= fc;
    o.detail += "seed " + std::to_string(seed) + ": noisy " + fmt("%.3f", fn) + " vs noiseless " + fmt("%.3f", fc) + "; ";
  }
  o.detail += "sigma " + fmt("%.1e", sigma);
  return o;
}

// ---------------------------------------------------------------------------
// 9. Exact recovery.

Outcome exact_recovery() {
  Outcome o;
  double worst_psnr = INFINITY, worst_rel = 0.0;
  for (std::uint64_t seed : recovery::kSeeds) {
    const auto s = recovery::sparse_instance(seed);
    worst_psnr = std::min(worst_psnr, psnr(s.truth, decode(recovery::bp_config(), s.pattern, s.measurements)));
    const auto p = recovery::piecewise_instance(seed);
    worst_rel = std::max(worst_rel,
                         testing::relative_error(p.truth, decode(recovery::tv_config(), p.pattern, p.measurements)));
  }
  o.pass = worst_psnr >= recovery::kBpPsnrFloor && worst_rel <= recovery::kTvRelErrorCeiling;
  o.detail = "bp min PSNR " + fmt("%.2f", worst_psnr) + " dB (>= 80), tv max rel err " + fmt("%.2e", worst_rel) +
             " (<= 1e-3), 3 seeds";
  return o;
}

// ---------------------------------------------------------------------------
// 10. Metric oracles.

Outcome metric_oracles() {
  double dp = 0.0, ds = 0.0, dn = 0.0;
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  for (std::uint64_t k = 0; k < 100; ++k) {
    const Shape s = k % 2 ? Shape{8, 8} : Shape{16, 16};
    const ComplexImage truth = testing::random_unit_image(s, 2 * k);
    ComplexImage recon = testing::random_image(s, 2 * k + 1);
    const double t = u(rng) / std::sqrt(static_cast<double>(s.size()));
    for (std::size_t i = 0; i < recon.size(); ++i) recon[i] = truth[i] + t * recon[i];
    dp = std::max(dp, std::abs(psnr(truth, recon) - oracle::psnr(truth, recon)));
    ds = std::max(ds, std::abs(ssim(truth, recon) - oracle::ssim(truth, recon)));
    dn = std::max(dn, std::abs(normalized_sq(truth, recon) - oracle::normalized_sq(truth, recon)));
  }
  std::size_t outside = 0;
  for (std::uint64_t k = 0; k < 10000; ++k) {
    const ComplexImage truth = testing::random_unit_image(Shape{4, 4}, 100000 + 2 * k);
    ComplexImage recon = testing::random_image(Shape{4, 4}, 100001 + 2 * k);
    const double t = 2.5 * u(rng);
    for (auto& v : recon.values()) v *= t;
    const double v = normalized_sq(truth, recon);
    outside += !(v >= 0.0 && v <= 1.0);
  }
  Outcome o;
  o.pass = dp <= 1e-9 && ds <= 1e-9 && dn <= 1e-9 && outside == 0;
  o.detail = "max |diff| psnr " + fmt("%.1e", dp) + ", ssim " + fmt("%.1e", ds) + ", normalized_sq " + fmt("%.1e", dn) +
             " on 100 pairs; normalized_sq outside [0,1] on " + std::to_string(outside) + "/10000 fuzz pairs";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "operator correctness", 10, operators},
      {2, "greedy vs brute force", 120, greedy_brute_force},
      {3, "nestedness and worker independence", 120, nestedness},
      {4, "generalization bound Monte Carlo", 300, noiseless_bound},
      {5, "noisy bound structure", 120, noisy_bound},
      {6, "denoising greedy reduction", 60, reduction},
      {7, "relative ordering vs baselines", 1800, relative_ordering},
      {8, "noisy-regime low-frequency shift", 900, noisy_shift},
      {9, "exact recovery regression", 120, exact_recovery},
      {10, "metric oracles", 60, metric_oracles},
  };
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::stoi(argv[i]));

  int failures = 0;
  for (const auto& c : all) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.time_limit_s;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::printf("[%s] AC%d %s: %s [%.1fs, limit %.0fs%s]\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                secs, c.time_limit_s, in_time ? "" : ", TOO SLOW");
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
