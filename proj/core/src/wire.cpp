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

#include "janus/wire.hpp"

#include "janus/suite.hpp"

namespace janus {

Bytes Envelope::ad_bytes() const {
  ByteWriter w;
  w.u8(version);
  w.u8(msg_type);
  w.field(a.sender);
  w.field(a.receiver);
  w.field(a.ssid);
  w.u64(a.ts);
  w.field(a.nonce);
  return w.take();
}

Bytes Envelope::encode() const {
  ByteWriter w;
  w.raw(ad_bytes());
  w.field(ct);
  w.field(tag);
  return w.take();
}

std::optional<Envelope> Envelope::decode(ByteView wire) {
  ByteReader r(wire);
  Envelope e;
  auto ver = r.u8();
  auto type = r.u8();
  auto sender = r.field();
  auto receiver = r.field();
  auto ssid = r.field();
  auto ts = r.u64();
  auto nonce = r.field();
  auto ct = r.field();
  auto tag = r.field();
  if (!ver || !type || !sender || !receiver || !ssid || !ts || !nonce || !ct || !tag ||
      !r.done())
    return std::nullopt;
  if (*ver != msg::kVersion) return std::nullopt;
  e.version = *ver;
  e.msg_type = *type;
  e.a = {std::move(*sender), std::move(*receiver), std::move(*ssid), *ts,
         std::move(*nonce)};
  e.ct = std::move(*ct);
  e.tag = std::move(*tag);
  return e;
}

Bytes LocalMsg::z_bytes() const {
  ByteWriter w;
  w.u8(version);
  w.u8(msg_type);
  w.field(sid);
  w.field(aid);
  w.u64(ts);
  w.field(pid);
  w.field(nonce);
  w.field(masked);
  return w.take();
}

Bytes LocalMsg::encode() const {
  ByteWriter w;
  w.raw(z_bytes());
  w.field(tag);
  return w.take();
}

std::optional<LocalMsg> LocalMsg::decode(ByteView wire) {
  ByteReader r(wire);
  LocalMsg m;
  auto ver = r.u8();
  auto type = r.u8();
  auto sid = r.field();
  auto aid = r.field();
  auto ts = r.u64();
  auto pid = r.field();
  auto nonce = r.field();
  auto masked = r.field();
  auto tag = r.field();
  if (!ver || !type || !sid || !aid || !ts || !pid || !nonce || !masked || !tag ||
      !r.done())
    return std::nullopt;
  if (*ver != msg::kVersion) return std::nullopt;
  m.version = *ver;
  m.msg_type = *type;
  m.sid = std::move(*sid);
  m.aid = std::move(*aid);
  m.ts = *ts;
  m.pid = to_string(*pid);
  m.nonce = std::move(*nonce);
  m.masked = std::move(*masked);
  m.tag = std::move(*tag);
  return m;
}

Bytes Transaction::signing_bytes() const {
  ByteWriter w;
  w.field(sender);
  w.field(contract);
  w.field(payload);
  w.u64(nonce);
  return w.take();
}

Bytes Transaction::encode() const {
  ByteWriter w;
  w.raw(signing_bytes());
  w.field(signature);
  return w.take();
}

std::optional<Transaction> Transaction::decode(ByteView wire) {
  ByteReader r(wire);
  Transaction tx;
  auto sender = r.field();
  auto contract = r.field();
  auto payload = r.field();
  auto nonce = r.u64();
  auto sig = r.field();
  if (!sender || !contract || !payload || !nonce || !sig || !r.done())
    return std::nullopt;
  tx.sender = std::move(*sender);
  tx.contract = to_string(*contract);
  tx.payload = std::move(*payload);
  tx.nonce = *nonce;
  tx.signature = std::move(*sig);
  return tx;
}

Bytes Transaction::txid() const { return sha256(encode()); }

Bytes Block::encode() const {
  ByteWriter w;
  w.u64(height);
  w.field(parent_hash);
  w.u32(static_cast<std::uint32_t>(txs.size()));
  for (auto& tx : txs) w.field(tx.encode());
  w.field(state_root);
  return w.take();
}

std::optional<Block> Block::decode(ByteView wire) {
  ByteReader r(wire);
  Block b;
  auto height = r.u64();
  auto parent = r.field();
  auto count = r.u32();
  if (!height || !parent || !count) return std::nullopt;
  b.height = *height;
  b.parent_hash = std::move(*parent);
  for (std::uint32_t i = 0; i < *count; ++i) {
    auto raw = r.field();
    if (!raw) return std::nullopt;
    auto tx = Transaction::decode(*raw);
    if (!tx) return std::nullopt;
    b.txs.push_back(std::move(*tx));
  }
  auto root = r.field();
  if (!root || !r.done()) return std::nullopt;
  b.state_root = std::move(*root);
  return b;
}

Bytes Block::block_hash() const { return sha256(encode()); }

Bytes encode_config(const DeviceConfig& config) {
  ByteWriter w;
  w.u32(static_cast<std::uint32_t>(config.size()));
  for (auto& [k, v] : config) {  // std::map keeps keys sorted
    w.field(k);
    w.field(v);
  }
  return w.take();
}

std::optional<DeviceConfig> decode_config(ByteView wire) {
  ByteReader r(wire);
  auto count = r.u32();
  if (!count) return std::nullopt;
  DeviceConfig cfg;
  for (std::uint32_t i = 0; i < *count; ++i) {
    auto k = r.field();
    auto v = r.field();
    if (!k || !v) return std::nullopt;
    cfg[to_string(*k)] = to_string(*v);
  }
  if (!r.done()) return std::nullopt;
  return cfg;
}

Bytes RegistrationManifest::encode() const {
  ByteWriter w;
  w.u8(static_cast<std::uint8_t>(kind));
  w.field(subject);
  w.field(pid);
  w.field(commitment);
  w.field(encode_config(config));
  w.field(cert);
  w.u32(static_cast<std::uint32_t>(entries.size()));
  for (auto& e : entries) {
    w.field(e.gid);
    w.field(e.ct);
    w.field(e.tag);
  }
  return w.take();
}

std::optional<RegistrationManifest> RegistrationManifest::decode(ByteView wire) {
  ByteReader r(wire);
  RegistrationManifest m;
  auto kind = r.u8();
  auto subject = r.field();
  auto pid = r.field();
  auto commitment = r.field();
  auto config = r.field();
  auto cert = r.field();
  auto count = r.u32();
  if (!kind || *kind > 1 || !subject || !pid || !commitment || !config || !cert || !count)
    return std::nullopt;
  auto cfg = decode_config(*config);
  if (!cfg) return std::nullopt;
  m.kind = static_cast<ParticipantKind>(*kind);
  m.subject = std::move(*subject);
  m.pid = to_string(*pid);
  m.commitment = std::move(*commitment);
  m.config = std::move(*cfg);
  m.cert = std::move(*cert);
  for (std::uint32_t i = 0; i < *count; ++i) {
    auto gid = r.field();
    auto ct = r.field();
    auto tag = r.field();
    if (!gid || !ct || !tag) return std::nullopt;
    m.entries.push_back({to_string(*gid), std::move(*ct), std::move(*tag)});
  }
  if (!r.done()) return std::nullopt;
  return m;
}

Bytes AttestationReportPayload::encode() const {
  ByteWriter w;
  w.field(aid);
  w.u64(n);
  w.field(ct);
  w.field(tag);
  return w.take();
}

std::optional<AttestationReportPayload> AttestationReportPayload::decode(ByteView wire) {
  ByteReader r(wire);
  AttestationReportPayload p;
  auto aid = r.field();
  auto n = r.u64();
  auto ct = r.field();
  auto tag = r.field();
  if (!aid || !n || !ct || !tag || !r.done()) return std::nullopt;
  p.aid = std::move(*aid);
  p.n = *n;
  p.ct = std::move(*ct);
  p.tag = std::move(*tag);
  return p;
}

Bytes CredentialRecord::encode() const {
  ByteWriter w;
  w.field(ssid);
  w.field(aid);
  w.field(vid);
  w.field(cr1);
  w.field(cr2);
  w.u8(claimed_trusted);
  return w.take();
}

std::optional<CredentialRecord> CredentialRecord::decode(ByteView wire) {
  ByteReader r(wire);
  CredentialRecord c;
  auto ssid = r.field();
  auto aid = r.field();
  auto vid = r.field();
  auto cr1 = r.field();
  auto cr2 = r.field();
  auto claimed = r.u8();
  if (!ssid || !aid || !vid || !cr1 || !cr2 || !claimed || !r.done()) return std::nullopt;
  c.ssid = std::move(*ssid);
  c.aid = std::move(*aid);
  c.vid = std::move(*vid);
  c.cr1 = std::move(*cr1);
  c.cr2 = std::move(*cr2);
  c.claimed_trusted = *claimed;
  return c;
}

}  // namespace janus
