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


#include "maskopt/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "maskopt/error.hpp"

namespace maskopt {

std::string_view to_string(SubsetKind kind) {
  switch (kind) {
    case SubsetKind::row:
      return "row";
    case SubsetKind::col:
      return "col";
    case SubsetKind::point:
      return "point";
  }
  return "?";
}

SubsetKind parse_subset_kind(std::string_view name) {
  if (name == "row") return SubsetKind::row;
  if (name == "col") return SubsetKind::col;
  if (name == "point") return SubsetKind::point;
  throw InvalidArgument("unknown subset kind '" + std::string(name) + "'");
}

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::points:
      return "points";
    case FamilyKind::rows:
      return "rows";
    case FamilyKind::cols:
      return "cols";
    case FamilyKind::rows_and_cols:
      return "rows_and_cols";
  }
  return "?";
}

FamilyKind parse_family_kind(std::string_view name) {
  if (name == "points") return FamilyKind::points;
  if (name == "rows") return FamilyKind::rows;
  if (name == "cols") return FamilyKind::cols;
  if (name == "rows_and_cols") return FamilyKind::rows_and_cols;
  throw InvalidArgument("unknown subset family '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------

SubsetFamily::SubsetFamily(Shape shape, FamilyKind kind) : shape_(shape), kind_(kind) {
  if (shape.rows == 0 || shape.cols == 0) throw InvalidArgument("empty k-space shape");
}

std::vector<SubsetDescriptor> SubsetFamily::members() const {
  std::vector<SubsetDescriptor> out;
  out.reserve(member_count());
  if (kind_ == FamilyKind::rows || kind_ == FamilyKind::rows_and_cols) {
    for (std::size_t r = 0; r < shape_.rows; ++r) out.push_back({SubsetKind::row, r});
  }
  if (kind_ == FamilyKind::cols || kind_ == FamilyKind::rows_and_cols) {
    for (std::size_t c = 0; c < shape_.cols; ++c) out.push_back({SubsetKind::col, c});
  }
  if (kind_ == FamilyKind::points) {
    for (std::size_t i = 0; i < shape_.size(); ++i) out.push_back({SubsetKind::point, i});
  }
  return out;
}

std::size_t SubsetFamily::member_count() const {
  switch (kind_) {
    case FamilyKind::points:
      return shape_.size();
    case FamilyKind::rows:
      return shape_.rows;
    case FamilyKind::cols:
      return shape_.cols;
    case FamilyKind::rows_and_cols:
      return shape_.rows + shape_.cols;
  }
  return 0;
}

bool SubsetFamily::contains(const SubsetDescriptor& s) const {
  switch (s.kind) {
    case SubsetKind::row:
      return (kind_ == FamilyKind::rows || kind_ == FamilyKind::rows_and_cols) &&
             s.index < shape_.rows;
    case SubsetKind::col:
      return (kind_ == FamilyKind::cols || kind_ == FamilyKind::rows_and_cols) &&
             s.index < shape_.cols;
    case SubsetKind::point:
      return kind_ == FamilyKind::points && s.index < shape_.size();
  }
  return false;
}

std::vector<std::size_t> SubsetFamily::indices_of(const SubsetDescriptor& s) const {
  std::vector<std::size_t> out;
  switch (s.kind) {
    case SubsetKind::row:
      for (std::size_t c = 0; c < shape_.cols; ++c) out.push_back(s.index * shape_.cols + c);
      break;
    case SubsetKind::col:
      for (std::size_t r = 0; r < shape_.rows; ++r) out.push_back(r * shape_.cols + s.index);
      break;
    case SubsetKind::point:
      out.push_back(s.index);
      break;
  }
  return out;
}

std::size_t SubsetFamily::member_size(const SubsetDescriptor& s) const {
  switch (s.kind) {
    case SubsetKind::row:
      return shape_.cols;
    case SubsetKind::col:
      return shape_.rows;
    case SubsetKind::point:
      return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------

SamplingPattern::SamplingPattern(SubsetFamily family)
    : family_(family), included_(family.shape().size(), 0) {}

SamplingPattern SamplingPattern::full(const SubsetFamily& family) {
  SamplingPattern p(family);
  for (const auto& s : family.members()) p.add(s);
  return p;
}

SamplingPattern SamplingPattern::from_trace(const SubsetFamily& family,
                                            const std::vector<SubsetDescriptor>& trace) {
  SamplingPattern p(family);
  for (const auto& s : trace) p.add(s);
  return p;
}

std::vector<std::size_t> SamplingPattern::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < included_.size(); ++i) {
    if (included_[i]) out.push_back(i);
  }
  return out;
}

bool SamplingPattern::in_trace(const SubsetDescriptor& s) const {
  return std::find(trace_.begin(), trace_.end(), s) != trace_.end();
}

bool SamplingPattern::covers(const SubsetDescriptor& s) const { return new_points(s) == 0; }

std::size_t SamplingPattern::new_points(const SubsetDescriptor& s) const {
  const Shape shape = family_.shape();
  std::size_t fresh = 0;
  switch (s.kind) {
    case SubsetKind::row:
      for (std::size_t c = 0; c < shape.cols; ++c) fresh += included_[s.index * shape.cols + c] == 0;
      break;
    case SubsetKind::col:
      for (std::size_t r = 0; r < shape.rows; ++r) fresh += included_[r * shape.cols + s.index] == 0;
      break;
    case SubsetKind::point:
      fresh = included_[s.index] == 0;
      break;
  }
  return fresh;
}

void SamplingPattern::add(const SubsetDescriptor& s) {
  if (!family_.contains(s)) {
    throw InvalidArgument(std::string(to_string(s.kind)) + " " + std::to_string(s.index) +
                          " is not a member of the " + std::string(to_string(family_.kind())) +
                          " family");
  }
  if (in_trace(s)) {
    throw InvalidArgument(std::string(to_string(s.kind)) + " " + std::to_string(s.index) +
                          " is already part of the pattern");
  }
  for (std::size_t i : family_.indices_of(s)) {
    if (!included_[i]) {
      included_[i] = 1;
      ++count_;
    }
  }
  trace_.push_back(s);
}

SamplingPattern SamplingPattern::with(const SubsetDescriptor& s) const {
  SamplingPattern p = *this;
  p.add(s);
  return p;
}

bool SamplingPattern::same_support(const SamplingPattern& other) const {
  return shape() == other.shape() && included_ == other.included_;
}

SamplingPattern add_subset(const SamplingPattern& pattern, const SubsetDescriptor& s) {
  return pattern.with(s);
}

std::vector<Candidate> enumerate_candidates(const SamplingPattern& pattern,
                                            const CostFunction& cost, std::size_t budget) {
  std::vector<Candidate> out;
  const std::size_t current = cost(pattern);
  for (const auto& s : pattern.family().members()) {
    if (pattern.in_trace(s)) continue;
    const std::size_t extra = cost.marginal(pattern, s);
    if (extra == 0) continue;
    if (current + extra <= budget) out.push_back({s, extra});
  }
  return out;
}

// ---------------------------------------------------------------------------

std::size_t to_centered(std::size_t storage, std::size_t n) { return (storage + n / 2) % n; }

std::size_t to_storage(std::size_t centered, std::size_t n) { return (centered + n - n / 2) % n; }

double normalized_line_distance(std::size_t storage, std::size_t n) {
  if (n < 2) return 0.0;
  const double half = static_cast<double>(n / 2);
  const double c = static_cast<double>(to_centered(storage, n));
  return std::abs(c - half) / half;
}

double normalized_point_distance(std::size_t storage_index, Shape shape) {
  const double dy = normalized_line_distance(storage_index / shape.cols, shape.rows);
  const double dx = normalized_line_distance(storage_index % shape.cols, shape.cols);
  return std::sqrt(dy * dy + dx * dx) / std::numbers::sqrt2;
}

double normalized_distance(const SubsetDescriptor& s, Shape shape) {
  switch (s.kind) {
    case SubsetKind::row:
      return normalized_line_distance(s.index, shape.rows);
    case SubsetKind::col:
      return normalized_line_distance(s.index, shape.cols);
    case SubsetKind::point:
      return normalized_point_distance(s.index, shape);
  }
  return 0.0;
}

namespace {

std::size_t centered_key(const SubsetDescriptor& s, Shape shape) {
  switch (s.kind) {
    case SubsetKind::row:
      return to_centered(s.index, shape.rows);
    case SubsetKind::col:
      return to_centered(s.index, shape.cols);
    case SubsetKind::point:
      return to_centered(s.index / shape.cols, shape.rows) * shape.cols +
             to_centered(s.index % shape.cols, shape.cols);
  }
  return 0;
}

}  // namespace

std::vector<SubsetDescriptor> low_pass_order(const SubsetFamily& family) {
  const Shape shape = family.shape();
  std::vector<SubsetDescriptor> members = family.members();
  std::vector<std::size_t> order(members.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double da = normalized_distance(members[a], shape);
    const double db = normalized_distance(members[b], shape);
    if (da != db) return da < db;
    return centered_key(members[a], shape) < centered_key(members[b], shape);
  });
  std::vector<SubsetDescriptor> out;
  out.reserve(order.size());
  for (std::size_t i : order) out.push_back(members[i]);
  return out;
}

}  // namespace maskopt
