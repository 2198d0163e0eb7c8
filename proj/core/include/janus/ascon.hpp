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

#include <optional>

#include "janus/bytes.hpp"

namespace janus::ascon {

inline constexpr std::size_t kKeyLen = 16;
inline constexpr std::size_t kNonceLen = 16;
inline constexpr std::size_t kTagLen = 16;

struct Sealed {
  Bytes ct;
  Bytes tag;
};

/// Ascon-128 (12/6 rounds, 64-bit rate). Throws InvalidLength on wrong key
/// or nonce sizes; otherwise total.
Sealed seal(ByteView key, ByteView nonce, ByteView ad, ByteView pt);

/// Returns the plaintext, or nullopt when the tag does not authenticate
/// (ciphertext, tag or associated data was modified, or the key is wrong).
std::optional<Bytes> open(ByteView key, ByteView nonce, ByteView ad, ByteView ct,
                          ByteView tag);

}  // namespace janus::ascon
