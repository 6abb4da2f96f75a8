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

#include "rig/graph_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace rig {
namespace {

template <class U>
void put(std::string& out, U value) {
  for (std::size_t i = 0; i < sizeof(U); ++i) {
    out.push_back(static_cast<char>((value >> (8 * i)) & 0xff));
  }
}

class Reader {
 public:
  explicit Reader(std::span<const char> bytes) : bytes_(bytes) {}

  template <class U>
  U get() {
    if (pos_ + sizeof(U) > bytes_.size()) throw GraphFormatError("truncated graph file");
    U value = 0;
    for (std::size_t i = 0; i < sizeof(U); ++i) {
      value |= static_cast<U>(static_cast<unsigned char>(bytes_[pos_ + i])) << (8 * i);
    }
    pos_ += sizeof(U);
    return value;
  }

  std::size_t remaining() const { return bytes_.size() - pos_; }

 private:
  std::span<const char> bytes_;
  std::size_t pos_ = 0;
};

BipartiteIncidence checked_incidence(std::uint64_t m, std::vector<std::uint64_t> offsets,
                                     std::vector<Attribute> attrs) {
  try {
    return BipartiteIncidence::from_csr(m, std::move(offsets), std::move(attrs));
  } catch (const std::invalid_argument& e) {
    throw GraphFormatError(std::string("invalid graph contents: ") + e.what());
  }
}

}  // namespace

std::string encode_graph_binary(const GraphHeader& header,
                                const BipartiteIncidence& inc) {
  std::string out;
  out.reserve(52 + 4 * (inc.n() + inc.incidence_count()));
  out.append(kGraphMagic, sizeof(kGraphMagic));
  put<std::uint32_t>(out, header.version);
  put<std::uint64_t>(out, header.n);
  put<std::uint64_t>(out, header.m);
  put<std::uint64_t>(out, std::bit_cast<std::uint64_t>(header.alpha));
  put<std::uint64_t>(out, std::bit_cast<std::uint64_t>(header.c0));
  put<std::uint64_t>(out, header.seed);
  for (Vertex v = 0; v < inc.n(); ++v) {
    const auto s = inc.set(v);
    put<std::uint32_t>(out, static_cast<std::uint32_t>(s.size()));
    for (Attribute w : s) put<std::uint32_t>(out, w);
  }
  return out;
}

GraphArtifact decode_graph_binary(std::span<const char> bytes) {
  if (bytes.size() < sizeof(kGraphMagic) ||
      std::memcmp(bytes.data(), kGraphMagic, sizeof(kGraphMagic)) != 0) {
    throw GraphFormatError("not a binary graph file (bad magic)");
  }
  Reader rd(bytes.subspan(sizeof(kGraphMagic)));
  GraphArtifact g;
  g.header.version = rd.get<std::uint32_t>();
  if (g.header.version != kGraphVersion) {
    throw GraphFormatError("unsupported graph version " + std::to_string(g.header.version));
  }
  g.header.n = rd.get<std::uint64_t>();
  g.header.m = rd.get<std::uint64_t>();
  g.header.alpha = std::bit_cast<double>(rd.get<std::uint64_t>());
  g.header.c0 = std::bit_cast<double>(rd.get<std::uint64_t>());
  g.header.seed = rd.get<std::uint64_t>();
  if (g.header.n > rd.remaining() / 4) throw GraphFormatError("truncated graph file");

  std::vector<std::uint64_t> offsets(g.header.n + 1, 0);
  std::vector<Attribute> attrs;
  for (std::uint64_t v = 0; v < g.header.n; ++v) {
    const auto count = rd.get<std::uint32_t>();
    if (count > rd.remaining() / 4) throw GraphFormatError("truncated graph file");
    for (std::uint32_t i = 0; i < count; ++i) attrs.push_back(rd.get<std::uint32_t>());
    offsets[v + 1] = attrs.size();
  }
  if (rd.remaining() != 0) throw GraphFormatError("trailing bytes after graph data");
  g.incidence = checked_incidence(g.header.m, std::move(offsets), std::move(attrs));
  return g;
}

std::string encode_graph_json(const GraphHeader& header,
                              const BipartiteIncidence& inc) {
  nlohmann::ordered_json j;
  j["format"] = "rig-graph";
  j["version"] = header.version;
  j["n"] = header.n;
  j["m"] = header.m;
  j["alpha"] = header.alpha;
  j["c0"] = header.c0;
  j["seed"] = header.seed;
  nlohmann::ordered_json sets = nlohmann::ordered_json::array();
  for (Vertex v = 0; v < inc.n(); ++v) {
    const auto s = inc.set(v);
    sets.push_back(std::vector<Attribute>(s.begin(), s.end()));
  }
  j["sets"] = std::move(sets);
  return j.dump() + "\n";
}

GraphArtifact decode_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw GraphFormatError(std::string("graph JSON does not parse: ") + e.what());
  }
  GraphArtifact g;
  try {
    if (j.at("format").get<std::string>() != "rig-graph") {
      throw GraphFormatError("not a rig-graph JSON document");
    }
    g.header.version = j.at("version").get<std::uint32_t>();
    if (g.header.version != kGraphVersion) {
      throw GraphFormatError("unsupported graph version " + std::to_string(g.header.version));
    }
    g.header.n = j.at("n").get<std::uint64_t>();
    g.header.m = j.at("m").get<std::uint64_t>();
    g.header.alpha = j.at("alpha").get<double>();
    g.header.c0 = j.at("c0").get<double>();
    g.header.seed = j.at("seed").get<std::uint64_t>();
    const auto& sets = j.at("sets");
    if (sets.size() != g.header.n) throw GraphFormatError("sets length differs from n");
    std::vector<std::uint64_t> offsets{0};
    std::vector<Attribute> attrs;
    for (const auto& s : sets) {
      for (const auto& w : s) attrs.push_back(w.get<Attribute>());
      offsets.push_back(attrs.size());
    }
    g.incidence = checked_incidence(g.header.m, std::move(offsets), std::move(attrs));
  } catch (const nlohmann::json::exception& e) {
    throw GraphFormatError(std::string("malformed graph JSON: ") + e.what());
  }
  return g;
}

std::uint64_t fnv1a64(std::span<const char> bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string() + " for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw std::runtime_error("read failure on " + path.string());
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) {
      throw std::runtime_error("cannot create directory " + path.parent_path().string() +
                               ": " + ec.message());
    }
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out) throw std::runtime_error("write failure on " + path.string());
}

std::uint64_t save_graph(const std::filesystem::path& path,
                         const GraphHeader& header,
                         const BipartiteIncidence& inc, GraphFormat format) {
  const std::string bytes = format == GraphFormat::kBinary
                                ? encode_graph_binary(header, inc)
                                : encode_graph_json(header, inc);
  write_file(path, bytes);
  return fnv1a64(bytes);
}

GraphArtifact load_graph(const std::filesystem::path& path) {
  const std::string bytes = read_file(path);
  try {
    if (bytes.size() >= sizeof(kGraphMagic) &&
        std::memcmp(bytes.data(), kGraphMagic, sizeof(kGraphMagic)) == 0) {
      return decode_graph_binary(bytes);
    }
    return decode_graph_json(bytes);
  } catch (const GraphFormatError& e) {
    throw GraphFormatError(path.string() + ": " + e.what());
  }
}

}  // namespace rig
