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


#include "maskopt/serialization.hpp"

#include <fstream>
#include <ostream>

#include "maskopt/error.hpp"

namespace maskopt {

using nlohmann::json;

json subset_to_json(const SubsetDescriptor& s) {
  return {{"kind", std::string(to_string(s.kind))}, {"index", s.index}};
}

SubsetDescriptor subset_from_json(const json& j) {
  try {
    return {parse_subset_kind(j.at("kind").get<std::string>()), j.at("index").get<std::size_t>()};
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed subset descriptor: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw DataError(e.what());
  }
}

json mask_to_json(const SamplingPattern& pattern) {
  json trace = json::array();
  for (const auto& s : pattern.trace()) trace.push_back(subset_to_json(s));
  return {{"shape", {pattern.shape().rows, pattern.shape().cols}},
          {"family", std::string(to_string(pattern.family().kind()))},
          {"budget", pattern.budget.value_or(pattern.count())},
          {"trace", std::move(trace)}};
}

SamplingPattern mask_from_json(const json& j) {
  try {
    const auto shape = j.at("shape");
    if (!shape.is_array() || shape.size() != 2) throw DataError("mask shape must be [rows, cols]");
    const Shape s{shape[0].get<std::size_t>(), shape[1].get<std::size_t>()};
    const SubsetFamily family(s, parse_family_kind(j.at("family").get<std::string>()));
    std::vector<SubsetDescriptor> trace;
    for (const auto& item : j.at("trace")) trace.push_back(subset_from_json(item));
    SamplingPattern pattern = SamplingPattern::from_trace(family, trace);
    pattern.budget = j.at("budget").get<std::size_t>();
    if (pattern.count() > *pattern.budget) throw DataError("mask exceeds its recorded budget");
    return pattern;
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed mask JSON: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw DataError(std::string("invalid mask: ") + e.what());
  }
}

void write_mask(const std::filesystem::path& path, const SamplingPattern& pattern) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path.string());
  out << mask_to_json(pattern).dump(2) << '\n';
}

SamplingPattern read_mask(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw DataError(path.string() + ": " + e.what());
  }
  return mask_from_json(j);
}

json record_to_json(const GreedyRecord& record) {
  json j = {{"iteration", record.iteration},
            {"subset", subset_to_json(record.chosen)},
            {"marginal_gain", record.marginal_gain},
            {"normalized_gain", record.normalized_gain},
            {"mean_performance", record.mean_performance},
            {"cost", record.cost}};
  if (!record.candidates.empty()) {
    json cands = json::array();
    for (const auto& c : record.candidates) {
      cands.push_back({{"subset", subset_to_json(c.subset)},
                       {"performance", c.performance},
                       {"marginal_cost", c.marginal_cost}});
    }
    j["candidates"] = std::move(cands);
  }
  return j;
}

GreedyRecord record_from_json(const json& j) {
  try {
    GreedyRecord r;
    r.iteration = j.at("iteration").get<std::size_t>();
    r.chosen = subset_from_json(j.at("subset"));
    r.marginal_gain = j.at("marginal_gain").get<double>();
    r.normalized_gain = j.at("normalized_gain").get<double>();
    r.mean_performance = j.at("mean_performance").get<double>();
    r.cost = j.at("cost").get<std::size_t>();
    if (j.contains("candidates")) {
      for (const auto& c : j.at("candidates")) {
        r.candidates.push_back({subset_from_json(c.at("subset")), c.at("performance").get<double>(),
                                c.at("marginal_cost").get<std::size_t>()});
      }
    }
    return r;
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed trace record: ") + e.what());
  }
}

void write_trace_jsonl(std::ostream& out, const GreedyTrace& trace) {
  for (const auto& record : trace.records) out << record_to_json(record).dump() << '\n';
}

json report_to_json(const DecodeReport& report) {
  return {{"iterations", report.iterations},
          {"final_objective", report.objective},
          {"fidelity_residual", report.residual},
          {"converged", report.converged}};
}

}  // namespace maskopt
