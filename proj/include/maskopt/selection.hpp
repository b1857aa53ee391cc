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
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "maskopt/greedy.hpp"
#include "maskopt/sampling.hpp"

namespace maskopt {

struct SelectionResult {
  std::size_t winner = 0;
  std::vector<double> scores;
};

// Scores every candidate by empirical performance and returns the argmax,
// ties to the lowest index. InvalidArgument for an empty list or mixed shapes.
SelectionResult select_best(std::span<const SamplingPattern> candidates, const EvaluationSet& set,
                            const DecoderConfig& decoder, const PerformanceMeasure& metric,
                            unsigned workers = 1);

struct SweepGrid {
  MaskKind generator = MaskKind::coherence_poly;
  // (center_cols, center_rows) pairs.
  std::vector<std::pair<std::size_t, std::size_t>> centers;
  std::vector<double> degrees{1.0};
  std::size_t draws = 1;
  std::uint64_t seed = 0;
  std::optional<ComplexImage> reference;  // single_image_energy
};

// The d in {2, 4, ..., d_max} by D in {1, 3, ..., 13} grid, where d_max is the
// largest even central size that fits the budget for the family.
SweepGrid default_sweep_grid(MaskKind generator, const SubsetFamily& family, std::size_t budget,
                             std::size_t draws, std::uint64_t seed);

struct SweepEntry {
  std::size_t candidate_id = 0;
  std::size_t cell = 0;
  std::size_t center_cols = 0;
  std::size_t center_rows = 0;
  double degree = 0.0;
  std::uint64_t seed = 0;
  double mean_score = 0.0;
  std::size_t rank = 0;  // 1 = best; ties ranked by candidate id
};

struct SweepCell {
  std::size_t center_cols = 0;
  std::size_t center_rows = 0;
  double degree = 0.0;
  bool feasible = true;
  std::string reason;     // why an infeasible cell was skipped
  double mean_score = 0;  // mean over the cell's draws
};

struct SweepReport {
  MaskKind generator = MaskKind::coherence_poly;
  std::vector<SweepEntry> entries;
  std::vector<SweepCell> cells;
  std::size_t winner_id = 0;
};

struct SweepResult {
  SamplingPattern best;
  SweepReport report;
};

// Draws every (cell, seed) mask, skipping cells whose central region exceeds
// the budget, and selects the best by select_best. InfeasibleError when no
// cell is feasible.
SweepResult parametric_sweep(const SweepGrid& grid, const SubsetFamily& family,
                             std::size_t budget, const EvaluationSet& set,
                             const DecoderConfig& decoder, const PerformanceMeasure& metric,
                             unsigned workers = 1);

std::uint64_t sweep_seed(std::uint64_t base, std::size_t cell, std::size_t draw);

// candidate_id,generator,params_json,seed,mean_score,rank
void write_sweep_csv(std::ostream& out, const SweepReport& report);

}  // namespace maskopt
