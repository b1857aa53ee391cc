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
#include <span>
#include <vector>

#include "maskopt/decoders.hpp"
#include "maskopt/image.hpp"
#include "maskopt/metrics.hpp"
#include "maskopt/sampling.hpp"

namespace maskopt {

// Signals a mask is scored on: each reference is compared with the decoder
// output for measurements taken from the matching source k-space. In the
// noiseless case reference j and source j are the same signal.
struct EvaluationSet {
  std::vector<ComplexImage> references;
  std::vector<KSpace> sources;

  std::size_t size() const { return references.size(); }
  Shape shape() const { return references.front().shape(); }
};

// Noiseless set: references are the images, sources their k-spaces.
// DataError for an empty or inconsistently shaped training set.
EvaluationSet make_evaluation_set(std::span<const ComplexImage> training);
// References compared against reconstructions from separate source images.
EvaluationSet make_evaluation_set(std::span<const ComplexImage> references,
                                  std::span<const ComplexImage> sources);

// Mean of metric(reference_j, decode(pattern, P_Omega source_j)) over j,
// summed in index order.
double empirical_performance(const SamplingPattern& pattern, const EvaluationSet& set,
                             const DecoderConfig& decoder, const PerformanceMeasure& metric);
double empirical_performance(const SamplingPattern& pattern,
                             std::span<const ComplexImage> training, const DecoderConfig& decoder,
                             const PerformanceMeasure& metric);

// Per-signal scores behind empirical_performance.
std::vector<double> performance_scores(const SamplingPattern& pattern, const EvaluationSet& set,
                                       const DecoderConfig& decoder,
                                       const PerformanceMeasure& metric);

struct GreedyConfig {
  DecoderConfig decoder;
  PerformanceMeasure metric;
  SubsetFamily family{Shape{1, 1}, FamilyKind::rows};
  CostFunction cost;
  std::size_t budget = 0;
  unsigned workers = 1;
  // Keep every candidate's score in the trace (audit / certification).
  bool record_candidates = false;
};

struct CandidateScore {
  SubsetDescriptor subset;
  double performance = 0.0;
  std::size_t marginal_cost = 0;
};

struct GreedyRecord {
  std::size_t iteration = 0;
  SubsetDescriptor chosen;
  double marginal_gain = 0.0;
  double normalized_gain = 0.0;
  double mean_performance = 0.0;  // after inclusion
  std::size_t cost = 0;           // after inclusion
  std::vector<CandidateScore> candidates;

  friend bool operator==(const GreedyRecord&, const GreedyRecord&) = default;
};

struct GreedyTrace {
  Shape shape;
  FamilyKind family = FamilyKind::rows;
  std::size_t budget = 0;
  double initial_performance = 0.0;  // empty pattern
  std::vector<GreedyRecord> records;

  friend bool operator==(const GreedyTrace&, const GreedyTrace&) = default;
};

inline bool operator==(const CandidateScore& a, const CandidateScore& b) {
  return a.subset == b.subset && a.performance == b.performance &&
         a.marginal_cost == b.marginal_cost;
}

struct GreedyResult {
  SamplingPattern pattern;
  GreedyTrace trace;
};

// Starting from the empty pattern, repeatedly adds the feasible family member
// with the largest (performance gain) / (cost increase), ties going to the
// earliest member in canonical order, until no member fits the budget.
// Results do not depend on cfg.workers.
GreedyResult greedy_optimize(const GreedyConfig& cfg, std::span<const ComplexImage> training);
GreedyResult greedy_optimize(const GreedyConfig& cfg, const EvaluationSet& set);

// Union of the longest trace prefix whose cost stays within budget.
// InvalidArgument when budget is below the first record's cost.
SamplingPattern truncate_to_budget(const GreedyTrace& trace, std::size_t budget);

}  // namespace maskopt
