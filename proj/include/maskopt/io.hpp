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
#include <string>
#include <vector>

#include "maskopt/image.hpp"

namespace maskopt {

// CMRIMG layout (little-endian): "CMRIMG01", u32 rows, u32 cols, then
// rows*cols (real, imag) f64 pairs in row-major order.
inline constexpr char kCmrimgMagic[] = "CMRIMG01";

void write_image(const std::filesystem::path& path, const ComplexImage& img);

// Reads CMRIMG bit-exactly, or a binary P5 PGM (maxval 255) as a real image
// normalized to unit l2 norm. Format is chosen by the leading magic bytes.
ComplexImage read_image(const std::filesystem::path& path);

ComplexImage read_pgm(const std::filesystem::path& path);

struct NamedImage {
  std::string name;  // file name without directory
  ComplexImage image;
};

// Loads every *.cmrimg and *.pgm file of a directory, sorted by file name.
// DataError if the directory is missing or empty or the shapes disagree.
std::vector<NamedImage> load_image_dir(const std::filesystem::path& dir);

}  // namespace maskopt
