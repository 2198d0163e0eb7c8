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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "janus/bytes.hpp"

// Byte layouts are documented in docs/wire.md and are bit-exact: integers
// big-endian, variable fields u32 length-prefixed, digests and tags raw.

namespace janus {

namespace msg {
inline constexpr std::uint8_t kVersion = 0x01;
inline constexpr std::uint8_t kRaChallenge = 0x01;
inline constexpr std::uint8_t kRaResponse = 0x02;
inline constexpr std::uint8_t kRaFinish = 0x03;
inline constexpr std::uint8_t kLaInit = 0x11;
inline constexpr std::uint8_t kLaResponse = 0x12;
inline constexpr std::uint8_t kLaFinish = 0x13;
inline constexpr std::uint8_t kSessionData = 0x21;
}  // namespace msg

/// Associated data of a protocol envelope: authenticated, never encrypted.
struct AssocData {
  Bytes sender;
  Bytes receiver;
  Bytes ssid;
  std::uint64_t ts = 0;
  Bytes nonce;
};

/// The (A, C, T) triple every protocol message reduces to.
struct Envelope {
  std::uint8_t version = msg::kVersion;
  std::uint8_t msg_type = 0;
  AssocData a;
  Bytes ct;
  Bytes tag;

  /// The authenticated portion: version || type || A fields.
  Bytes ad_bytes() const;
  Bytes encode() const;
  static std::optional<Envelope> decode(ByteView wire);
};

/// Local-attestation message (Z, t): structured plaintext plus a MAC keyed
/// with a PUF response that never itself appears in Z.
struct LocalMsg {
  std::uint8_t version = msg::kVersion;
  std::uint8_t msg_type = 0;
  Bytes sid;  // session id: the opening nonce n1
  Bytes aid;
  std::uint64_t ts = 0;
  std::string pid;
  Bytes nonce;
  Bytes masked;  // masked nested measurement; empty in the opening message
  Bytes tag;

  Bytes z_bytes() const;  // exact MAC input
  Bytes encode() const;
  static std::optional<LocalMsg> decode(ByteView wire);
};

struct Transaction {
  Bytes sender;  // 32-byte account address
  std::string contract;
  Bytes payload;
  std::uint64_t nonce = 0;
  Bytes signature;  // 64-byte r||s over signing_bytes()

  Bytes signing_bytes() const;
  Bytes encode() const;
  static std::optional<Transaction> decode(ByteView wire);
  Bytes txid() const;  // hash of the full encoding
};

struct Block {
  std::uint64_t height = 0;
  Bytes parent_hash;
  std::vector<Transaction> txs;
  Bytes state_root;

  Bytes encode() const;
  static std::optional<Block> decode(ByteView wire);
  Bytes block_hash() const;
};

using DeviceConfig = std::map<std::string, std::string>;

Bytes encode_config(const DeviceConfig& config);
std::optional<DeviceConfig> decode_config(ByteView wire);

struct HandshakeEntry {
  std::string gid;  // group whose key seals this entry
  Bytes ct;
  Bytes tag;
};

enum class ParticipantKind : std::uint8_t { attester = 0, verifier = 1 };

/// What the Manager registers on-chain for one participant. Raw measurements
/// and raw CRPs never appear here, only hash commitments.
struct RegistrationManifest {
  ParticipantKind kind = ParticipantKind::attester;
  Bytes subject;      // aid or vid
  std::string pid;    // attesters only, empty otherwise
  Bytes commitment;   // H(RM||aid||pid) or H(M||vid)
  DeviceConfig config;
  Bytes cert;
  std::vector<HandshakeEntry> entries;

  Bytes encode() const;
  static std::optional<RegistrationManifest> decode(ByteView wire);
};

/// On-chain attestation report: C = Enc_MK(n || RM || sigma) with
/// ad = aid || n, nonce derived from ("report", aid, n).
struct AttestationReportPayload {
  Bytes aid;
  std::uint64_t n = 0;
  Bytes ct;
  Bytes tag;

  Bytes encode() const;
  static std::optional<AttestationReportPayload> decode(ByteView wire);
};

/// Snapshot of one RA session for later audit.
struct CredentialRecord {
  Bytes ssid;
  Bytes aid;
  Bytes vid;
  Bytes cr1;
  Bytes cr2;
  std::uint8_t claimed_trusted = 0;

  Bytes encode() const;
  static std::optional<CredentialRecord> decode(ByteView wire);
};

}  // namespace janus
