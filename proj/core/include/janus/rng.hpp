// Copyright 2026 the Janus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "janus/bytes.hpp"

namespace janus {

// xoshiro256** seeded through splitmix64. Scenario replay depends on every
// random draw being identical across platforms, so no std::*_distribution
// is used anywhere (their outputs are implementation-defined).
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed);

  std::uint64_t next_u64();

  /// Uniform value in [0, bound) via rejection sampling. bound must be > 0.
  std::uint64_t uniform_below(std::uint64_t bound);

  void fill(Bytes& out);
  Bytes bytes(std::size_t len);

  /// Independent child stream, derived from the current state and a label.
  DetRng fork(std::string_view label);

 private:
  std::array<std::uint64_t, 4> state_;
};

}  // namespace janus
