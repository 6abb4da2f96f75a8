// Copyright 2026 The rig Authors.
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

// Graph files.
//
// Binary layout, all integers little-endian, doubles as IEEE-754 bit
// patterns in a little-endian u64:
//
//   magic    8 bytes  "RIGRAPH\0"
//   version  u32      1
//   n        u64
//   m        u64
//   alpha    f64
//   c0       f64
//   seed     u64
//   n times: u32 count, then count u32 attribute ids (increasing)
//
// The JSON mirror carries the same fields plus "sets" as nested arrays.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>

#include "rig/graphgen.hpp"

namespace rig {

inline constexpr char kGraphMagic[8] = {'R', 'I', 'G', 'R', 'A', 'P', 'H', '\0'};
inline constexpr std::uint32_t kGraphVersion = 1;

struct GraphHeader {
  std::uint32_t version = kGraphVersion;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  double alpha = 0.0;
  double c0 = 0.0;
  std::uint64_t seed = 0;

  friend bool operator==(const GraphHeader&, const GraphHeader&) = default;
};

struct GraphArtifact {
  GraphHeader header;
  BipartiteIncidence incidence;
};

/// Malformed or unreadable graph file.
class GraphFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GraphFormat { kBinary, kJson };

std::string encode_graph_binary(const GraphHeader& header,
                                const BipartiteIncidence& inc);
GraphArtifact decode_graph_binary(std::span<const char> bytes);

std::string encode_graph_json(const GraphHeader& header,
                              const BipartiteIncidence& inc);
GraphArtifact decode_graph_json(const std::string& text);

/// Writes the encoded graph; returns its FNV-1a checksum.
std::uint64_t save_graph(const std::filesystem::path& path,
                         const GraphHeader& header,
                         const BipartiteIncidence& inc, GraphFormat format);

/// Detects the format from the leading bytes.
GraphArtifact load_graph(const std::filesystem::path& path);

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::span<const char> bytes);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace rig
