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

#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace rig {

using Vertex = std::uint32_t;
using Attribute = std::uint32_t;
using Hops = std::uint32_t;

/// Distance value for vertex pairs in different components.
inline constexpr Hops kUnreachable = std::numeric_limits<Hops>::max();

/// Invalid parameters or a violated precondition of a configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Allocation failure while materializing a graph.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::uint64_t attempted_incidences)
      : std::runtime_error(what), attempted_incidences_(attempted_incidences) {}

  std::uint64_t attempted_incidences() const { return attempted_incidences_; }

 private:
  std::uint64_t attempted_incidences_;
};

}  // namespace rig
