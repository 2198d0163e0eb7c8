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

#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "janus/contracts.hpp"
#include "janus/ledger.hpp"
#include "janus/wire.hpp"

namespace janus {

struct ResolvedCommitment {
  ParticipantKind kind;
  std::string pid;  // attesters
  Bytes digest;
};

struct ResolvedHandshake {
  Bytes ct;
  Bytes tag;
};

// Read access to registered on-chain entries. Protocol engines accept any
// implementation; a periodically refreshed cache must behave exactly like a
// live ledger query, and a test pins that equivalence.
class Resolver {
 public:
  virtual ~Resolver() = default;

  virtual std::optional<ResolvedHandshake> handshake_entry(ByteView subject,
                                                           const std::string& gid) const = 0;
  virtual std::optional<ResolvedCommitment> commitment(ByteView subject) const = 0;
  virtual std::optional<Bytes> cert(ByteView subject) const = 0;
  virtual std::optional<DeviceConfig> config(ByteView subject) const = 0;
  virtual SwitchState switch_state(ByteView aid) const = 0;
};

/// Queries the ledger's committed state on every call.
class LiveResolver : public Resolver {
 public:
  explicit LiveResolver(const Ledger& ledger) : ledger_(&ledger) {}

  std::optional<ResolvedHandshake> handshake_entry(ByteView subject,
                                                   const std::string& gid) const override;
  std::optional<ResolvedCommitment> commitment(ByteView subject) const override;
  std::optional<Bytes> cert(ByteView subject) const override;
  std::optional<DeviceConfig> config(ByteView subject) const override;
  SwitchState switch_state(ByteView aid) const override;

 private:
  const Ledger* ledger_;
};

/// Lazily caches immutable registration entries; switch state stays live
/// because it is mutable by design.
class CachingResolver : public Resolver {
 public:
  explicit CachingResolver(const Ledger& ledger) : live_(ledger) {}

  std::optional<ResolvedHandshake> handshake_entry(ByteView subject,
                                                   const std::string& gid) const override;
  std::optional<ResolvedCommitment> commitment(ByteView subject) const override;
  std::optional<Bytes> cert(ByteView subject) const override;
  std::optional<DeviceConfig> config(ByteView subject) const override;
  SwitchState switch_state(ByteView aid) const override;

 private:
  LiveResolver live_;
  mutable std::mutex mu_;
  mutable std::map<Bytes, std::optional<ResolvedHandshake>> hs_;
  mutable std::map<Bytes, std::optional<ResolvedCommitment>> commitments_;
  mutable std::map<Bytes, std::optional<Bytes>> certs_;
  mutable std::map<Bytes, std::optional<DeviceConfig>> configs_;
};

}  // namespace janus
