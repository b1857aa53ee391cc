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


#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "maskopt/error.hpp"
#include "maskopt/fft.hpp"
#include "maskopt/sampling.hpp"

namespace maskopt {

std::string_view to_string(MaskKind kind) {
  switch (kind) {
    case MaskKind::low_pass:
      return "low_pass";
    case MaskKind::uniform_random:
      return "uniform_random";
    case MaskKind::coherence_poly:
      return "coherence_poly";
    case MaskKind::single_image_energy:
      return "single_image_energy";
  }
  return "?";
}

MaskKind parse_mask_kind(std::string_view name) {
  if (name == "low_pass") return MaskKind::low_pass;
  if (name == "uniform_random") return MaskKind::uniform_random;
  if (name == "coherence_poly") return MaskKind::coherence_poly;
  if (name == "single_image_energy") return MaskKind::single_image_energy;
  throw InvalidArgument("unknown mask generator '" + std::string(name) + "'");
}

namespace {

bool try_add(SamplingPattern& pattern, const SubsetDescriptor& s, std::size_t budget) {
  if (pattern.in_trace(s)) return false;
  const std::size_t extra = pattern.new_points(s);
  if (extra == 0 || pattern.count() + extra > budget) return false;
  pattern.add(s);
  return true;
}

// Storage indices of the n centermost lines of a dimension of size dim.
std::vector<std::size_t> central_lines(std::size_t n, std::size_t dim) {
  std::vector<std::size_t> centered(dim);
  for (std::size_t i = 0; i < dim; ++i) centered[i] = i;
  std::stable_sort(centered.begin(), centered.end(), [dim](std::size_t a, std::size_t b) {
    const auto da = std::abs(static_cast<long>(a) - static_cast<long>(dim / 2));
    const auto db = std::abs(static_cast<long>(b) - static_cast<long>(dim / 2));
    return da < db;
  });
  centered.resize(std::min(n, dim));
  for (auto& c : centered) c = to_storage(c, dim);
  return centered;
}

std::vector<SubsetDescriptor> central_members(const MaskGeneratorConfig& cfg,
                                              const SubsetFamily& family) {
  const Shape shape = family.shape();
  const auto rows = central_lines(cfg.center_rows, shape.rows);
  const auto cols = central_lines(cfg.center_cols, shape.cols);
  std::vector<SubsetDescriptor> out;
  switch (family.kind()) {
    case FamilyKind::rows:
      for (auto r : rows) out.push_back({SubsetKind::row, r});
      break;
    case FamilyKind::cols:
      for (auto c : cols) out.push_back({SubsetKind::col, c});
      break;
    case FamilyKind::rows_and_cols:
      for (auto r : rows) out.push_back({SubsetKind::row, r});
      for (auto c : cols) out.push_back({SubsetKind::col, c});
      break;
    case FamilyKind::points: {
      std::vector<std::uint8_t> in_rows(shape.rows, 0), in_cols(shape.cols, 0);
      for (auto r : rows) in_rows[r] = 1;
      for (auto c : cols) in_cols[c] = 1;
      for (const auto& s : low_pass_order(family)) {
        if (in_rows[s.index / shape.cols] && in_cols[s.index % shape.cols]) out.push_back(s);
      }
      break;
    }
  }
  return out;
}

std::vector<double> member_weights(const MaskGeneratorConfig& cfg, const SubsetFamily& family,
                                   const std::vector<SubsetDescriptor>& members) {
  std::vector<double> w(members.size());
  if (cfg.kind == MaskKind::coherence_poly) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      const double r = normalized_distance(members[i], family.shape());
      w[i] = std::pow(std::max(0.0, 1.0 - r), cfg.degree);
    }
    return w;
  }
  const KSpace k = fft2_unitary(*cfg.reference);
  for (std::size_t i = 0; i < members.size(); ++i) {
    double e = 0.0;
    for (std::size_t idx : family.indices_of(members[i])) e += std::norm(k[idx]);
    w[i] = e;
  }
  return w;
}

}  // namespace

SamplingPattern generate_mask(const MaskGeneratorConfig& cfg, const SubsetFamily& family,
                              std::size_t budget) {
  SamplingPattern pattern(family);
  pattern.budget = budget;
  std::mt19937_64 rng(cfg.seed);

  switch (cfg.kind) {
    case MaskKind::low_pass:
      for (const auto& s : low_pass_order(family)) try_add(pattern, s, budget);
      return pattern;
    case MaskKind::uniform_random: {
      std::vector<SubsetDescriptor> members = family.members();
      std::shuffle(members.begin(), members.end(), rng);
      for (const auto& s : members) try_add(pattern, s, budget);
      return pattern;
    }
    case MaskKind::coherence_poly:
    case MaskKind::single_image_energy:
      break;
  }

  if (cfg.kind == MaskKind::single_image_energy) {
    if (!cfg.reference) throw InvalidArgument("single_image_energy requires a reference image");
    if (cfg.reference->shape() != family.shape()) {
      throw InvalidArgument("reference image shape does not match the k-space grid");
    }
  }
  if (cfg.degree < 0.0) throw InvalidArgument("polynomial degree must be nonnegative");

  for (const auto& s : central_members(cfg, family)) {
    if (pattern.in_trace(s)) continue;
    const std::size_t extra = pattern.new_points(s);
    if (pattern.count() + extra > budget) {
      throw InfeasibleError("central region (" + std::to_string(cfg.center_rows) + " rows, " +
                            std::to_string(cfg.center_cols) + " cols) exceeds budget " +
                            std::to_string(budget));
    }
    pattern.add(s);
  }

  std::vector<SubsetDescriptor> pool;
  for (const auto& s : family.members()) {
    if (!pattern.in_trace(s) && !pattern.covers(s)) pool.push_back(s);
  }
  std::vector<double> weights = member_weights(cfg, family, pool);
  std::vector<std::uint8_t> drawn(pool.size(), 0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  bool uniform_tail = false;
  while (pattern.count() < budget) {
    double total = 0.0;
    for (double w : weights) total += w;
    if (!(total > 0.0)) {
      // Zero-probability members are drawn last, uniformly, so the mask can
      // still reach the budget.
      if (uniform_tail) break;
      uniform_tail = true;
      for (std::size_t i = 0; i < pool.size(); ++i) weights[i] = drawn[i] ? 0.0 : 1.0;
      continue;
    }
    const double target = unit(rng) * total;
    double acc = 0.0;
    std::size_t pick = weights.size();
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (weights[i] <= 0.0) continue;
      acc += weights[i];
      pick = i;
      if (acc > target) break;
    }
    weights[pick] = 0.0;
    drawn[pick] = 1;
    try_add(pattern, pool[pick], budget);
  }
  return pattern;
}

}  // namespace maskopt
