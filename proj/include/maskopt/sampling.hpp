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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "maskopt/image.hpp"

namespace maskopt {

// Subset descriptors and pattern rows/cols use k-space storage indices, where
// index 0 holds the zero frequency. Distance-based logic goes through the
// centered (DC at n/2) helpers below.

enum class SubsetKind : std::uint8_t { row, col, point };

struct SubsetDescriptor {
  SubsetKind kind = SubsetKind::row;
  std::size_t index = 0;  // row, column, or row-major point index

  friend auto operator<=>(const SubsetDescriptor&, const SubsetDescriptor&) = default;
};

std::string_view to_string(SubsetKind kind);
SubsetKind parse_subset_kind(std::string_view name);

enum class FamilyKind : std::uint8_t { points, rows, cols, rows_and_cols };

std::string_view to_string(FamilyKind kind);
FamilyKind parse_family_kind(std::string_view name);

// Admissible atomic subsets over a k-space grid.
class SubsetFamily {
 public:
  SubsetFamily(Shape shape, FamilyKind kind);

  Shape shape() const { return shape_; }
  FamilyKind kind() const { return kind_; }

  // Canonical order: rows ascending, then cols ascending, then points row-major.
  std::vector<SubsetDescriptor> members() const;
  std::size_t member_count() const;
  bool contains(const SubsetDescriptor& s) const;
  // Row-major storage indices covered by s, ascending.
  std::vector<std::size_t> indices_of(const SubsetDescriptor& s) const;
  std::size_t member_size(const SubsetDescriptor& s) const;

  friend bool operator==(const SubsetFamily&, const SubsetFamily&) = default;

 private:
  Shape shape_;
  FamilyKind kind_;
};

// A mask built as a union of family members, remembering insertion order.
class SamplingPattern {
 public:
  explicit SamplingPattern(SubsetFamily family);

  // Every member of the family added in canonical order.
  static SamplingPattern full(const SubsetFamily& family);
  // Replays a trace; InvalidArgument on duplicates or foreign descriptors.
  static SamplingPattern from_trace(const SubsetFamily& family,
                                    const std::vector<SubsetDescriptor>& trace);

  const SubsetFamily& family() const { return family_; }
  Shape shape() const { return family_.shape(); }
  const std::vector<SubsetDescriptor>& trace() const { return trace_; }
  const std::vector<std::uint8_t>& mask() const { return included_; }
  bool includes(std::size_t index) const { return included_[index] != 0; }
  std::size_t count() const { return count_; }

  // Row-major list of included storage indices (canonical measurement order).
  std::vector<std::size_t> indices() const;

  bool in_trace(const SubsetDescriptor& s) const;
  // True when every index of s is already included.
  bool covers(const SubsetDescriptor& s) const;
  std::size_t new_points(const SubsetDescriptor& s) const;

  // Returns the union with s appended to the trace. InvalidArgument when s is
  // not a family member or is already in the trace.
  SamplingPattern with(const SubsetDescriptor& s) const;
  void add(const SubsetDescriptor& s);

  // Budget the pattern was built for, if known (serialized with the mask).
  std::optional<std::size_t> budget;

  // Equality is over included points only.
  bool same_support(const SamplingPattern& other) const;
  friend bool operator==(const SamplingPattern& a, const SamplingPattern& b) {
    return a.family_ == b.family_ && a.included_ == b.included_ && a.trace_ == b.trace_;
  }

 private:
  SubsetFamily family_;
  std::vector<std::uint8_t> included_;
  std::vector<SubsetDescriptor> trace_;
  std::size_t count_ = 0;
};

enum class CostKind : std::uint8_t { cardinality };

// c(Omega): number of covered k-space points. Monotone under inclusion.
struct CostFunction {
  CostKind kind = CostKind::cardinality;

  std::size_t operator()(const SamplingPattern& pattern) const { return pattern.count(); }
  std::size_t marginal(const SamplingPattern& pattern, const SubsetDescriptor& s) const {
    return pattern.new_points(s);
  }
};

SamplingPattern add_subset(const SamplingPattern& pattern, const SubsetDescriptor& s);

struct Candidate {
  SubsetDescriptor subset;
  std::size_t marginal_cost = 0;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

// Family members not fully covered by pattern whose addition keeps the cost
// within budget, in canonical order.
std::vector<Candidate> enumerate_candidates(const SamplingPattern& pattern,
                                            const CostFunction& cost, std::size_t budget);

// Centered-frequency helpers for even n: storage 0 (DC) <-> centered n/2.
std::size_t to_centered(std::size_t storage, std::size_t n);
std::size_t to_storage(std::size_t centered, std::size_t n);
// |centered - n/2| / (n/2), in [0, 1].
double normalized_line_distance(std::size_t storage, std::size_t n);
// Elliptic radius of a point scaled so the farthest corner is 1.
double normalized_point_distance(std::size_t storage_index, Shape shape);
double normalized_distance(const SubsetDescriptor& s, Shape shape);

// Members sorted by distance from DC; ties go to the lower centered index,
// then to canonical order.
std::vector<SubsetDescriptor> low_pass_order(const SubsetFamily& family);

// -------------------------------------------------------------------------
// Baseline mask generators.

enum class MaskKind : std::uint8_t { low_pass, uniform_random, coherence_poly, single_image_energy };

std::string_view to_string(MaskKind kind);
MaskKind parse_mask_kind(std::string_view name);

struct MaskGeneratorConfig {
  MaskKind kind = MaskKind::low_pass;
  // Fully sampled central region: number of centermost columns (dx) and rows
  // (dy). Line families use only the matching dimension.
  std::size_t center_cols = 0;
  std::size_t center_rows = 0;
  // Polynomial decay (1 - r)^degree.
  double degree = 1.0;
  std::uint64_t seed = 0;
  // Reference image for single_image_energy.
  std::optional<ComplexImage> reference;
};

// Throws InfeasibleError when the central region alone exceeds the budget,
// InvalidArgument for a missing or mis-shaped reference.
SamplingPattern generate_mask(const MaskGeneratorConfig& cfg, const SubsetFamily& family,
                              std::size_t budget);

}  // namespace maskopt
