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


#include "maskopt/theory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "maskopt/error.hpp"
#include "maskopt/fft.hpp"
#include "maskopt/metrics.hpp"
#include "maskopt/operators.hpp"
#include "maskopt/parallel.hpp"
#include "maskopt/random.hpp"

namespace maskopt {
namespace {

double log_binomial(std::size_t n, std::size_t k) {
  const auto nd = static_cast<double>(n);
  const auto kd = static_cast<double>(k);
  return std::lgamma(nd + 1.0) - std::lgamma(kd + 1.0) - std::lgamma(nd - kd + 1.0);
}

double log_sum_binomials(std::size_t n, std::size_t upto) {
  upto = std::min(upto, n);
  std::vector<double> terms(upto + 1);
  for (std::size_t l = 0; l <= upto; ++l) terms[l] = log_binomial(n, l);
  const double peak = *std::max_element(terms.begin(), terms.end());
  double acc = 0.0;
  for (double t : terms) acc += std::exp(t - peak);
  return peak + std::log(acc);
}

// Mean that is exact when all values coincide.
double mean_of(const std::vector<double>& v) {
  if (std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); })) return v.front();
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

}  // namespace

FeasibleSetCount count_feasible(const SubsetFamily& family, const CostFunction& /*cost*/,
                                long long budget) {
  if (budget < 0) throw InvalidArgument("budget must be nonnegative");
  const auto gamma = static_cast<std::size_t>(budget);
  const Shape s = family.shape();
  FeasibleSetCount out;
  out.members = family.member_count();
  switch (family.kind()) {
    case FamilyKind::rows:
      out.max_subsets = std::min(s.rows, gamma / s.cols);
      break;
    case FamilyKind::cols:
      out.max_subsets = std::min(s.cols, gamma / s.rows);
      break;
    case FamilyKind::points:
      out.max_subsets = std::min(s.size(), gamma);
      break;
    case FamilyKind::rows_and_cols:
      // k rows and l cols cover k*cols + l*rows - k*l points.
      for (std::size_t k = 0; k <= s.rows; ++k) {
        for (std::size_t l = 0; l <= s.cols; ++l) {
          if (k * s.cols + l * s.rows - k * l <= gamma) {
            out.max_subsets = std::max(out.max_subsets, k + l);
          }
        }
      }
      break;
  }
  if (out.max_subsets == 0) {
    out.log_cardinality = 0.0;
  } else if (out.max_subsets >= out.members) {
    out.log_cardinality = static_cast<double>(out.members) * std::numbers::ln2;  // power set
  } else {
    out.log_cardinality = log_sum_binomials(out.members, out.max_subsets);
  }
  out.description = std::string(to_string(family.kind())) + " family on " +
                    std::to_string(s.rows) + "x" + std::to_string(s.cols) + ", budget " +
                    std::to_string(gamma) + " points: at most " +
                    std::to_string(out.max_subsets) + " of " + std::to_string(out.members) +
                    " subsets";
  return out;
}

FeasibleSetCount count_candidates(std::size_t candidates) {
  if (candidates == 0) throw InvalidArgument("candidate set is empty");
  FeasibleSetCount out;
  out.log_cardinality = std::log(static_cast<double>(candidates));
  out.members = candidates;
  out.max_subsets = 1;
  out.description = std::to_string(candidates) + " explicit candidate masks";
  return out;
}

double bound_noiseless(std::size_t m, const FeasibleSetCount& count, double delta) {
  if (m < 1) throw InvalidArgument("m must be >= 1");
  if (!(delta > 0.0 && delta < 1.0)) throw InvalidArgument("delta must lie in (0, 1)");
  if (!(count.log_cardinality >= 0.0)) throw InvalidArgument("log |A| must be nonnegative");
  return std::sqrt((std::numbers::ln2 + count.log_cardinality - std::log(delta)) /
                   (2.0 * static_cast<double>(m)));
}

double bound_noisy(std::size_t m, const FeasibleSetCount& count, double delta, double lipschitz,
                   double expected_residual) {
  if (!(lipschitz >= 0.0)) throw InvalidArgument("Lipschitz constant must be nonnegative");
  if (!(expected_residual >= 0.0)) throw InvalidArgument("expected residual must be nonnegative");
  return lipschitz * expected_residual + bound_noiseless(m, count, delta);
}

ResidualEstimate estimate_residual(const Denoiser& denoiser, const NoiseModel& noise,
                                   const ComplexImage& reference, std::size_t trials) {
  if (trials < 1) throw InvalidArgument("trials must be >= 1");
  std::vector<double> r(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    const ComplexImage z = add_noise(reference, NoiseModel{noise.sigma, noise_seed(noise.seed, t)});
    const ComplexImage d = denoise(z, denoiser);
    double sq = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) sq += std::norm(d[i] - reference[i]);
    r[t] = std::sqrt(sq);
  }
  ResidualEstimate out;
  out.trials = trials;
  out.mean = mean_of(r);
  if (trials > 1) {
    double ss = 0.0;
    for (double x : r) ss += (x - out.mean) * (x - out.mean);
    out.std_error = std::sqrt(ss / static_cast<double>(trials - 1) / static_cast<double>(trials));
  }
  return out;
}

ComplexImage PhantomDistribution::draw(std::uint64_t index) const {
  return make_phantom(spec, phantom_seed(seed, point_mass ? 0 : index));
}

BoundValidationReport validate_bound_mc(const BoundValidationConfig& cfg,
                                        const std::vector<SamplingPattern>& masks) {
  if (masks.empty()) throw InvalidArgument("no masks to validate");
  if (cfg.m < 1 || cfg.trials < 1 || cfg.holdout < 1) {
    throw InvalidArgument("m, trials and holdout must be >= 1");
  }
  for (const auto& mask : masks) {
    if (mask.shape() != cfg.distribution.spec.shape) {
      throw InvalidArgument("mask shape does not match the phantom distribution");
    }
  }
  const PerformanceMeasure metric{MetricKind::normalized_sq, {}, {}};
  const std::size_t total = cfg.holdout + cfg.trials * cfg.m;
  if (total > 10'000'000) throw InfeasibleError("Monte-Carlo instance is too large");

  // scores[d][k]: draw d under mask k. Draws [0, holdout) estimate the true
  // mean; the rest form the training sets, trial t owning m consecutive draws.
  std::vector<std::vector<double>> scores(total);
  parallel_for(total, cfg.workers, [&](std::size_t d) {
    const ComplexImage x = cfg.distribution.draw(d);
    const KSpace k = fft2_unitary(x);
    scores[d].resize(masks.size());
    for (std::size_t i = 0; i < masks.size(); ++i) {
      scores[d][i] = metric(x, decode(cfg.decoder, masks[i], subsample(k, masks[i])));
    }
  });

  BoundValidationReport report;
  const FeasibleSetCount count = count_candidates(masks.size());
  report.log_cardinality = count.log_cardinality;
  report.bound = bound_noiseless(cfg.m, count, cfg.delta);
  report.true_means.resize(masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i) {
    std::vector<double> col(cfg.holdout);
    for (std::size_t d = 0; d < cfg.holdout; ++d) col[d] = scores[d][i];
    report.true_means[i] = mean_of(col);
  }
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    double worst = 0.0;
    for (std::size_t i = 0; i < masks.size(); ++i) {
      std::vector<double> col(cfg.m);
      for (std::size_t j = 0; j < cfg.m; ++j) col[j] = scores[cfg.holdout + t * cfg.m + j][i];
      worst = std::max(worst, std::abs(mean_of(col) - report.true_means[i]));
    }
    report.max_deviation.push_back(worst);
    if (worst > report.bound) ++report.violations;
  }
  report.violation_fraction =
      static_cast<double>(report.violations) / static_cast<double>(cfg.trials);
  report.threshold =
      cfg.delta + 3.0 * std::sqrt(cfg.delta * (1.0 - cfg.delta) / static_cast<double>(cfg.trials));
  report.passed = report.violation_fraction <= report.threshold;
  return report;
}

std::vector<SamplingPattern> enumerate_feasible_patterns(const SubsetFamily& family,
                                                         std::size_t budget,
                                                         std::size_t max_patterns) {
  const std::vector<SubsetDescriptor> members = family.members();
  std::vector<SamplingPattern> out;
  std::set<std::vector<std::uint8_t>> seen;
  // Depth-first over members in canonical order; each distinct support kept once.
  std::vector<std::pair<SamplingPattern, std::size_t>> stack;
  stack.emplace_back(SamplingPattern(family), 0);
  while (!stack.empty()) {
    auto [pattern, next] = std::move(stack.back());
    stack.pop_back();
    if (seen.insert(pattern.mask()).second) {
      if (out.size() == max_patterns) {
        throw InfeasibleError("feasible set exceeds " + std::to_string(max_patterns) +
                              " patterns; use explicit candidates");
      }
      out.push_back(pattern);
    }
    for (std::size_t i = members.size(); i-- > next;) {
      const std::size_t extra = pattern.new_points(members[i]);
      if (extra == 0 || pattern.count() + extra > budget) continue;
      stack.emplace_back(pattern.with(members[i]), i + 1);
    }
  }
  return out;
}

BoundValidationReport validate_bound_mc(const BoundValidationConfig& cfg,
                                        const SubsetFamily& family, std::size_t budget,
                                        std::size_t max_patterns) {
  return validate_bound_mc(cfg, enumerate_feasible_patterns(family, budget, max_patterns));
}

}  // namespace maskopt
