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
#include <string>

#include "janus/bytes.hpp"

namespace janus {

inline constexpr std::size_t kMaxOwnerTagLen = 32;  // DSN / VON, UTF-8

/// Attester identity: aid = addr || DSN || gid, each length-prefixed so the
/// concatenation parses back unambiguously. addr is the hash of the
/// participant's account public key.
struct AttesterIdentity {
  Bytes addr;
  std::string dsn;
  std::string gid;

  Bytes aid() const;
  static std::optional<AttesterIdentity> parse(ByteView aid);
};

/// Verifier identity: vid = addr || VON || gid.
struct VerifierIdentity {
  Bytes addr;
  std::string von;
  std::string gid;

  Bytes vid() const;
  static std::optional<VerifierIdentity> parse(ByteView vid);
};

}  // namespace janus
