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

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "maskopt/decoders.hpp"
#include "maskopt/greedy.hpp"
#include "maskopt/sampling.hpp"

namespace maskopt {

// {"shape":[r,c],"family":"rows","budget":N,"trace":[{"kind":"row","index":k},...]}
// budget is the pattern's build budget, or its point count when unknown.
nlohmann::json mask_to_json(const SamplingPattern& pattern);
// Rebuilds the pattern by replaying the trace. DataError on malformed input.
SamplingPattern mask_from_json(const nlohmann::json& j);

void write_mask(const std::filesystem::path& path, const SamplingPattern& pattern);
SamplingPattern read_mask(const std::filesystem::path& path);

nlohmann::json subset_to_json(const SubsetDescriptor& s);
SubsetDescriptor subset_from_json(const nlohmann::json& j);

// One JSON object per greedy iteration:
// {"iteration","subset","marginal_gain","normalized_gain","mean_performance",
//  "cost"[, "candidates":[{"subset","performance","marginal_cost"},...]]}
nlohmann::json record_to_json(const GreedyRecord& record);
GreedyRecord record_from_json(const nlohmann::json& j);
void write_trace_jsonl(std::ostream& out, const GreedyTrace& trace);

nlohmann::json report_to_json(const DecodeReport& report);

}  // namespace maskopt
