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

#include <iosfwd>
#include <string>

#include "maskopt/sampling.hpp"

namespace maskopt::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kData = 3, kInfeasible = 4 };

// Budget grammar: "N" points, "Nrows" / "Ncols" / "Nlines" line counts (a
// line is one member of the family), or a rate in (0, 1] written with a
// decimal point ("0.25"), converted as floor(rate * rows * cols).
std::size_t parse_budget(const std::string& text, const SubsetFamily& family);

// Runs the maskopt command line. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace maskopt::cli
