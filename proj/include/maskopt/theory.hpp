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
#include <string>
#include <vector>

#include "maskopt/decoders.hpp"
#include "maskopt/noisy.hpp"
#include "maskopt/phantom.hpp"
#include "maskopt/sampling.hpp"

namespace maskopt {

// log |A| for the feasible pattern set A.
struct FeasibleSetCount {
  double log_cardinality = 0.0;
  std::size_t members = 0;      // n_s
  std::size_t max_subsets = 0;  // L
  std::string description;
};

// |A| <= sum_{l <= L} C(n_s, l), where L is the largest number of family
// members whose union fits the budget. Exact for the disjoint families (rows,
// cols, points); an upper bound for rows_and_cols. Computed in log space.
FeasibleSetCount count_feasible(const SubsetFamily& family, const CostFunction& cost,
                                long long budget);

// Count for an explicit candidate list (|A| = number of candidates).
FeasibleSetCount count_candidates(std::size_t candidates);

// sqrt( log(2 |A| / delta) / (2 m) ): the uniform deviation bound between
// empirical and expected performance of a [0,1]-valued measure.
double bound_noiseless(std::size_t m, const FeasibleSetCount& count, double delta);

// lipschitz * expected_residual + bound_noiseless(...)
double bound_noisy(std::size_t m, const FeasibleSetCount& count, double delta, double lipschitz,
                   double expected_residual);

struct ResidualEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t trials = 0;
};

// Monte-Carlo estimate of E ||xi(x + v) - x||_2 over fresh noise draws on the
// fixed reference x (use an all-zero x to measure the denoiser on pure noise).
ResidualEstimate estimate_residual(const Denoiser& denoiser, const NoiseModel& noise,
                                   const ComplexImage& reference, std::size_t trials);

// Phantom draws indexed by an integer; a point mass repeats draw 0.
struct PhantomDistribution {
  PhantomSpec spec;
  std::uint64_t seed = 0;
  bool point_mass = false;

  ComplexImage draw(std::uint64_t index) const;
};

struct BoundValidationConfig {
  PhantomDistribution distribution;
  DecoderConfig decoder;
  std::size_t m = 20;
  double delta = 0.1;
  std::size_t trials = 200;
  std::size_t holdout = 10000;  // draws used to estimate the true mean
  unsigned workers = 1;
};

struct BoundValidationReport {
  double log_cardinality = 0.0;
  double bound = 0.0;
  std::vector<double> true_means;     // per mask
  std::vector<double> max_deviation;  // per trial, over masks
  std::size_t violations = 0;
  double violation_fraction = 0.0;
  double threshold = 0.0;  // delta + 3 sqrt(delta (1 - delta) / trials)
  bool passed = false;
};

// Repeats the training-set draw `trials` times and counts how often some mask
// deviates from its (hold-out estimated) true normalized_sq performance by
// more than bound_noiseless with |A| = masks.size().
BoundValidationReport validate_bound_mc(const BoundValidationConfig& cfg,
                                        const std::vector<SamplingPattern>& masks);

// Same with A = every distinct feasible pattern of the family under budget
// (including the empty pattern). InfeasibleError when A has more than
// max_patterns elements.
BoundValidationReport validate_bound_mc(const BoundValidationConfig& cfg,
                                        const SubsetFamily& family, std::size_t budget,
                                        std::size_t max_patterns = 512);

std::vector<SamplingPattern> enumerate_feasible_patterns(const SubsetFamily& family,
                                                         std::size_t budget,
                                                         std::size_t max_patterns);

}  // namespace maskopt
