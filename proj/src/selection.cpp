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


#include "maskopt/selection.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <ostream>

#include "maskopt/error.hpp"
#include "maskopt/parallel.hpp"
#include "maskopt/random.hpp"

namespace maskopt {

SelectionResult select_best(std::span<const SamplingPattern> candidates, const EvaluationSet& set,
                            const DecoderConfig& decoder, const PerformanceMeasure& metric,
                            unsigned workers) {
  if (candidates.empty()) throw InvalidArgument("no candidate masks to select from");
  for (const auto& c : candidates) {
    if (c.shape() != candidates.front().shape()) {
      throw InvalidArgument("candidate masks have different shapes");
    }
  }
  SelectionResult result;
  result.scores.resize(candidates.size());
  parallel_for(candidates.size(), workers, [&](std::size_t i) {
    result.scores[i] = empirical_performance(candidates[i], set, decoder, metric);
  });
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    if (result.scores[i] > result.scores[result.winner]) result.winner = i;
  }
  return result;
}

namespace {

// Points covered by the central region alone.
std::size_t center_cost(const SubsetFamily& family, std::size_t dx, std::size_t dy) {
  const Shape s = family.shape();
  dx = std::min(dx, s.cols);
  dy = std::min(dy, s.rows);
  switch (family.kind()) {
    case FamilyKind::rows:
      return dy * s.cols;
    case FamilyKind::cols:
      return dx * s.rows;
    case FamilyKind::rows_and_cols:
      return dy * s.cols + dx * s.rows - dx * dy;
    case FamilyKind::points:
      return dx * dy;
  }
  return 0;
}

}  // namespace

SweepGrid default_sweep_grid(MaskKind generator, const SubsetFamily& family, std::size_t budget,
                             std::size_t draws, std::uint64_t seed) {
  SweepGrid grid;
  grid.generator = generator;
  grid.draws = draws;
  grid.seed = seed;
  grid.degrees.clear();
  for (int d = 1; d <= 13; d += 2) grid.degrees.push_back(d);
  const Shape s = family.shape();
  const bool use_rows = family.kind() != FamilyKind::cols;
  const bool use_cols = family.kind() != FamilyKind::rows;
  const std::size_t max_rows = use_rows ? s.rows : 0;
  const std::size_t max_cols = use_cols ? s.cols : 0;
  for (std::size_t dy = use_rows ? 2 : 0; dy <= max_rows; dy += 2) {
    for (std::size_t dx = use_cols ? 2 : 0; dx <= max_cols; dx += 2) {
      if (center_cost(family, dx, dy) <= budget) grid.centers.emplace_back(dx, dy);
      if (!use_cols) break;
    }
    if (!use_rows) break;
  }
  return grid;
}

std::uint64_t sweep_seed(std::uint64_t base, std::size_t cell, std::size_t draw) {
  return derive_seed(base, 0x73776570ULL + cell, draw);
}

SweepResult parametric_sweep(const SweepGrid& grid, const SubsetFamily& family,
                             std::size_t budget, const EvaluationSet& set,
                             const DecoderConfig& decoder, const PerformanceMeasure& metric,
                             unsigned workers) {
  if (grid.centers.empty() || grid.degrees.empty() || grid.draws == 0) {
    throw InvalidArgument("parameter grid is empty");
  }
  SweepReport report;
  report.generator = grid.generator;
  std::vector<SamplingPattern> masks;

  std::size_t cell_index = 0;
  for (const auto& [dx, dy] : grid.centers) {
    for (double degree : grid.degrees) {
      SweepCell cell{dx, dy, degree, true, {}, 0.0};
      MaskGeneratorConfig cfg;
      cfg.kind = grid.generator;
      cfg.center_cols = dx;
      cfg.center_rows = dy;
      cfg.degree = degree;
      cfg.reference = grid.reference;
      std::vector<SamplingPattern> drawn;
      std::vector<SweepEntry> cell_entries;
      try {
        for (std::size_t draw = 0; draw < grid.draws; ++draw) {
          cfg.seed = sweep_seed(grid.seed, cell_index, draw);
          drawn.push_back(generate_mask(cfg, family, budget));
          cell_entries.push_back({0, cell_index, dx, dy, degree, cfg.seed, 0.0, 0});
        }
      } catch (const InfeasibleError& e) {
        cell.feasible = false;
        cell.reason = e.what();
        drawn.clear();
        cell_entries.clear();
      }
      for (std::size_t i = 0; i < drawn.size(); ++i) {
        cell_entries[i].candidate_id = masks.size();
        masks.push_back(std::move(drawn[i]));
        report.entries.push_back(cell_entries[i]);
      }
      report.cells.push_back(std::move(cell));
      ++cell_index;
    }
  }
  if (masks.empty()) throw InfeasibleError("every sweep cell exceeds the budget");

  const SelectionResult sel = select_best(masks, set, decoder, metric, workers);
  for (std::size_t i = 0; i < masks.size(); ++i) report.entries[i].mean_score = sel.scores[i];

  std::vector<std::size_t> order(masks.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sel.scores[a] > sel.scores[b]; });
  for (std::size_t r = 0; r < order.size(); ++r) report.entries[order[r]].rank = r + 1;

  std::vector<double> sums(report.cells.size(), 0.0);
  std::vector<std::size_t> counts(report.cells.size(), 0);
  for (const auto& e : report.entries) {
    sums[e.cell] += e.mean_score;
    ++counts[e.cell];
  }
  for (std::size_t c = 0; c < report.cells.size(); ++c) {
    if (counts[c] > 0) report.cells[c].mean_score = sums[c] / static_cast<double>(counts[c]);
  }
  report.winner_id = sel.winner;
  return {masks[sel.winner], std::move(report)};
}

void write_sweep_csv(std::ostream& out, const SweepReport& report) {
  out << "candidate_id,generator,params_json,seed,mean_score,rank\n";
  char score[64];
  for (const auto& e : report.entries) {
    std::snprintf(score, sizeof score, "%.17g", e.mean_score);
    char degree[32];
    std::snprintf(degree, sizeof degree, "%g", e.degree);
    out << e.candidate_id << ',' << to_string(report.generator) << ",\"{\"\"dx\"\":"
        << e.center_cols << ",\"\"dy\"\":" << e.center_rows << ",\"\"D\"\":" << degree << "}\","
        << e.seed << ',' << score << ',' << e.rank << '\n';
  }
}

}  // namespace maskopt
