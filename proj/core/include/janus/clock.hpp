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

#include <atomic>
#include <cstdint>

namespace janus {

/// Logical time shared by ledger and transport. Message timestamps derive
/// from it; there is no wall-clock anywhere in the protocol path.
class LogicalClock {
 public:
  std::uint64_t now() const { return tick_.load(std::memory_order_relaxed); }
  std::uint64_t advance(std::uint64_t delta = 1) {
    return tick_.fetch_add(delta, std::memory_order_relaxed) + delta;
  }

 private:
  std::atomic<std::uint64_t> tick_{0};
};

inline constexpr std::uint64_t kDefaultFreshnessWindow = 30;

}  // namespace janus
