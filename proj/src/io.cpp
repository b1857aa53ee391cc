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


#include "maskopt/io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>

#include "maskopt/error.hpp"

namespace maskopt {
namespace {

static_assert(std::endian::native == std::endian::little,
              "CMRIMG I/O assumes a little-endian host");

constexpr std::size_t kMagicLen = 8;

std::vector<char> read_all(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

template <class T>
T load_le(const char* p) {
  T v;
  std::memcpy(&v, p, sizeof(T));
  return v;
}

ComplexImage parse_cmrimg(const std::vector<char>& bytes, const std::string& name) {
  constexpr std::size_t header = kMagicLen + 2 * sizeof(std::uint32_t);
  if (bytes.size() < header) throw DataError(name + ": truncated CMRIMG header");
  const auto rows = load_le<std::uint32_t>(bytes.data() + kMagicLen);
  const auto cols = load_le<std::uint32_t>(bytes.data() + kMagicLen + 4);
  if (rows == 0 || cols == 0) throw DataError(name + ": zero image dimension");
  const std::size_t count = std::size_t{rows} * cols;
  if (bytes.size() != header + count * 2 * sizeof(double)) {
    throw DataError(name + ": CMRIMG payload length does not match " + std::to_string(rows) +
                    "x" + std::to_string(cols));
  }
  std::vector<Complex> data(count);
  const char* p = bytes.data() + header;
  for (std::size_t i = 0; i < count; ++i) {
    const double re = load_le<double>(p);
    const double im = load_le<double>(p + sizeof(double));
    data[i] = Complex(re, im);
    p += 2 * sizeof(double);
  }
  if (!all_finite(data)) throw DataError(name + ": non-finite pixel values");
  return ComplexImage(Shape{rows, cols}, std::move(data));
}

// Skips whitespace and '#' comments, then reads one decimal token.
std::size_t pgm_token(const std::vector<char>& bytes, std::size_t& pos, const std::string& name) {
  while (pos < bytes.size()) {
    const char ch = bytes[pos];
    if (ch == '#') {
      while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      ++pos;
    } else {
      break;
    }
  }
  std::size_t value = 0;
  std::size_t digits = 0;
  while (pos < bytes.size() && std::isdigit(static_cast<unsigned char>(bytes[pos]))) {
    value = value * 10 + static_cast<std::size_t>(bytes[pos] - '0');
    ++pos;
    ++digits;
  }
  if (digits == 0) throw DataError(name + ": malformed PGM header");
  return value;
}

ComplexImage parse_pgm(const std::vector<char>& bytes, const std::string& name) {
  std::size_t pos = 2;
  const std::size_t cols = pgm_token(bytes, pos, name);
  const std::size_t rows = pgm_token(bytes, pos, name);
  const std::size_t maxval = pgm_token(bytes, pos, name);
  if (maxval != 255) throw DataError(name + ": only PGM maxval 255 is supported");
  if (rows == 0 || cols == 0) throw DataError(name + ": zero image dimension");
  ++pos;  // single whitespace byte before the raster
  if (bytes.size() < pos + rows * cols) throw DataError(name + ": truncated PGM raster");
  std::vector<Complex> data(rows * cols);
  for (std::size_t i = 0; i < data.size(); ++i) {
    data[i] = Complex(static_cast<double>(static_cast<unsigned char>(bytes[pos + i])), 0.0);
  }
  ComplexImage img(Shape{rows, cols}, std::move(data));
  if (l2_norm(img.data()) == 0.0) throw DataError(name + ": all-zero PGM cannot be normalized");
  return normalized(img);
}

}  // namespace

void write_image(const std::filesystem::path& path, const ComplexImage& img) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  out.write(kCmrimgMagic, kMagicLen);
  const auto rows = static_cast<std::uint32_t>(img.rows());
  const auto cols = static_cast<std::uint32_t>(img.cols());
  out.write(reinterpret_cast<const char*>(&rows), sizeof rows);
  out.write(reinterpret_cast<const char*>(&cols), sizeof cols);
  for (const Complex& z : img.data()) {
    const std::array<double, 2> pair{z.real(), z.imag()};
    out.write(reinterpret_cast<const char*>(pair.data()), sizeof pair);
  }
  if (!out) throw DataError("write failed for " + path.string());
}

ComplexImage read_image(const std::filesystem::path& path) {
  const std::vector<char> bytes = read_all(path);
  const std::string name = path.string();
  if (bytes.size() >= kMagicLen && std::memcmp(bytes.data(), kCmrimgMagic, kMagicLen) == 0) {
    return parse_cmrimg(bytes, name);
  }
  if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '5') return parse_pgm(bytes, name);
  throw DataError(name + ": unrecognized image magic");
}

ComplexImage read_pgm(const std::filesystem::path& path) {
  const std::vector<char> bytes = read_all(path);
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
    throw DataError(path.string() + ": not a binary PGM (P5)");
  }
  return parse_pgm(bytes, path.string());
}

std::vector<NamedImage> load_image_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw DataError("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const auto ext = entry.path().extension();
    if (ext == ".cmrimg" || ext == ".pgm") files.push_back(entry.path());
  }
  if (files.empty()) throw DataError("no images found in " + dir.string());
  std::sort(files.begin(), files.end());
  std::vector<NamedImage> out;
  out.reserve(files.size());
  for (const auto& f : files) {
    out.push_back({f.filename().string(), read_image(f)});
    if (out.back().image.shape() != out.front().image.shape()) {
      throw DataError("inconsistent image shapes in " + dir.string() + ": " +
                      out.back().name + " differs from " + out.front().name);
    }
  }
  return out;
}

}  // namespace maskopt
