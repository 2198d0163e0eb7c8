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

#include "janus/resolver.hpp"

namespace janus {

std::optional<ResolvedHandshake> LiveResolver::handshake_entry(
    ByteView subject, const std::string& gid) const {
  auto raw = ledger_->read_state(reg_handshake_addr(subject, gid));
  if (!raw) return std::nullopt;
  ByteReader r(*raw);
  auto ct = r.field();
  auto tag = r.field();
  if (!ct || !tag || !r.done()) return std::nullopt;
  return ResolvedHandshake{std::move(*ct), std::move(*tag)};
}

std::optional<ResolvedCommitment> LiveResolver::commitment(ByteView subject) const {
  auto raw = ledger_->read_state(reg_commitment_addr(subject));
  if (!raw) return std::nullopt;
  ByteReader r(*raw);
  auto kind = r.u8();
  auto pid = r.field();
  auto digest = r.field();
  if (!kind || *kind > 1 || !pid || !digest || !r.done()) return std::nullopt;
  return ResolvedCommitment{static_cast<ParticipantKind>(*kind), to_string(*pid),
                            std::move(*digest)};
}

std::optional<Bytes> LiveResolver::cert(ByteView subject) const {
  return ledger_->read_state(reg_cert_addr(subject));
}

std::optional<DeviceConfig> LiveResolver::config(ByteView subject) const {
  auto raw = ledger_->read_state(reg_config_addr(subject));
  if (!raw) return std::nullopt;
  return decode_config(*raw);
}

SwitchState LiveResolver::switch_state(ByteView aid) const {
  auto raw = ledger_->read_state(switch_state_addr(aid));
  if (!raw) return SwitchState{};
  auto parsed = decode_switch_state(*raw);
  return parsed ? *parsed : SwitchState{};
}

namespace {
Bytes hs_cache_key(ByteView subject, const std::string& gid) {
  ByteWriter w;
  w.field(subject);
  w.field(gid);
  return w.take();
}
}  // namespace

std::optional<ResolvedHandshake> CachingResolver::handshake_entry(
    ByteView subject, const std::string& gid) const {
  std::lock_guard lock(mu_);
  auto key = hs_cache_key(subject, gid);
  auto it = hs_.find(key);
  if (it == hs_.end()) it = hs_.emplace(key, live_.handshake_entry(subject, gid)).first;
  return it->second;
}

std::optional<ResolvedCommitment> CachingResolver::commitment(ByteView subject) const {
  std::lock_guard lock(mu_);
  Bytes key(subject.begin(), subject.end());
  auto it = commitments_.find(key);
  if (it == commitments_.end())
    it = commitments_.emplace(key, live_.commitment(subject)).first;
  return it->second;
}

std::optional<Bytes> CachingResolver::cert(ByteView subject) const {
  std::lock_guard lock(mu_);
  Bytes key(subject.begin(), subject.end());
  auto it = certs_.find(key);
  if (it == certs_.end()) it = certs_.emplace(key, live_.cert(subject)).first;
  return it->second;
}

std::optional<DeviceConfig> CachingResolver::config(ByteView subject) const {
  std::lock_guard lock(mu_);
  Bytes key(subject.begin(), subject.end());
  auto it = configs_.find(key);
  if (it == configs_.end()) it = configs_.emplace(key, live_.config(subject)).first;
  return it->second;
}

SwitchState CachingResolver::switch_state(ByteView aid) const {
  return live_.switch_state(aid);  // mutable by design, never cached
}

}  // namespace janus
