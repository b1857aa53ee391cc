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


#include "maskopt/greedy.hpp"

#include <string>

#include "maskopt/error.hpp"
#include "maskopt/fft.hpp"
#include "maskopt/operators.hpp"
#include "maskopt/parallel.hpp"

namespace maskopt {

EvaluationSet make_evaluation_set(std::span<const ComplexImage> training) {
  return make_evaluation_set(training, training);
}

EvaluationSet make_evaluation_set(std::span<const ComplexImage> references,
                                  std::span<const ComplexImage> sources) {
  if (references.empty()) throw DataError("training set is empty");
  if (references.size() != sources.size()) {
    throw InvalidArgument("reference and source sets differ in size");
  }
  EvaluationSet set;
  const Shape shape = references.front().shape();
  for (std::size_t j = 0; j < references.size(); ++j) {
    if (references[j].shape() != shape || sources[j].shape() != shape) {
      throw DataError("training images have inconsistent shapes");
    }
    set.references.push_back(references[j]);
    set.sources.push_back(fft2_unitary(sources[j]));
  }
  return set;
}

std::vector<double> performance_scores(const SamplingPattern& pattern, const EvaluationSet& set,
                                       const DecoderConfig& decoder,
                                       const PerformanceMeasure& metric) {
  if (set.size() == 0) throw DataError("training set is empty");
  std::vector<double> scores(set.size());
  for (std::size_t j = 0; j < set.size(); ++j) {
    const Measurements b = subsample(set.sources[j], pattern);
    scores[j] = metric(set.references[j], decode(decoder, pattern, b));
  }
  return scores;
}

double empirical_performance(const SamplingPattern& pattern, const EvaluationSet& set,
                             const DecoderConfig& decoder, const PerformanceMeasure& metric) {
  const std::vector<double> scores = performance_scores(pattern, set, decoder, metric);
  double sum = 0.0;
  for (double s : scores) sum += s;
  return sum / static_cast<double>(scores.size());
}

double empirical_performance(const SamplingPattern& pattern,
                             std::span<const ComplexImage> training, const DecoderConfig& decoder,
                             const PerformanceMeasure& metric) {
  return empirical_performance(pattern, make_evaluation_set(training), decoder, metric);
}

GreedyResult greedy_optimize(const GreedyConfig& cfg, std::span<const ComplexImage> training) {
  return greedy_optimize(cfg, make_evaluation_set(training));
}

GreedyResult greedy_optimize(const GreedyConfig& cfg, const EvaluationSet& set) {
  cfg.decoder.validate();
  if (set.size() == 0) throw DataError("training set is empty");
  if (set.shape() != cfg.family.shape()) {
    throw DataError("training images do not match the sampling grid shape");
  }
  std::size_t smallest = cfg.family.shape().size();
  for (const auto& s : cfg.family.members()) smallest = std::min(smallest, cfg.family.member_size(s));
  if (cfg.budget < smallest) {
    throw InfeasibleError("budget " + std::to_string(cfg.budget) +
                          " is smaller than the cheapest subset (" + std::to_string(smallest) +
                          " points)");
  }

  SamplingPattern pattern(cfg.family);
  pattern.budget = cfg.budget;
  GreedyTrace trace{cfg.family.shape(), cfg.family.kind(), cfg.budget, 0.0, {}};
  double current = empirical_performance(pattern, set, cfg.decoder, cfg.metric);
  trace.initial_performance = current;

  for (std::size_t iteration = 1;; ++iteration) {
    const std::vector<Candidate> candidates = enumerate_candidates(pattern, cfg.cost, cfg.budget);
    if (candidates.empty()) break;

    std::vector<double> scores(candidates.size());
    parallel_for(candidates.size(), cfg.workers, [&](std::size_t i) {
      scores[i] = empirical_performance(pattern.with(candidates[i].subset), set, cfg.decoder,
                                        cfg.metric);
    });

    // Deterministic reduction in canonical order; strict '>' keeps the
    // earliest candidate on ties.
    std::size_t best = 0;
    double best_gain = 0.0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (candidates[i].marginal_cost == 0) {
        throw std::logic_error("zero-cost candidate reached the greedy selection");
      }
      const double gain =
          (scores[i] - current) / static_cast<double>(candidates[i].marginal_cost);
      if (i == 0 || gain > best_gain) {
        best = i;
        best_gain = gain;
      }
    }

    GreedyRecord record;
    record.iteration = iteration;
    record.chosen = candidates[best].subset;
    record.marginal_gain = scores[best] - current;
    record.normalized_gain = best_gain;
    record.mean_performance = scores[best];
    if (cfg.record_candidates) {
      record.candidates.reserve(candidates.size());
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        record.candidates.push_back({candidates[i].subset, scores[i], candidates[i].marginal_cost});
      }
    }
    pattern.add(candidates[best].subset);
    record.cost = cfg.cost(pattern);
    trace.records.push_back(std::move(record));
    current = scores[best];
  }
  return {std::move(pattern), std::move(trace)};
}

SamplingPattern truncate_to_budget(const GreedyTrace& trace, std::size_t budget) {
  if (trace.records.empty() || budget < trace.records.front().cost) {
    throw InvalidArgument("budget " + std::to_string(budget) +
                          " is below the cost of the first greedy selection");
  }
  const SubsetFamily family(trace.shape, trace.family);
  SamplingPattern pattern(family);
  for (const auto& record : trace.records) {
    if (record.cost > budget) break;
    pattern.add(record.chosen);
  }
  pattern.budget = budget;
  return pattern;
}

}  // namespace maskopt
