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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "janus/bytes.hpp"

namespace janus {

struct SuiteId {
  std::string name;
  std::size_t key_len;    // AEAD key, >= 16
  std::size_t tag_len;    // AEAD/MAC tag, >= 16
  std::size_t hash_len;   // digest, 32 for the default suite
  std::size_t nonce_len;  // AEAD nonce
};

struct Sealed {
  Bytes ct;
  Bytes tag;
};

// One pluggable primitive set. Every member is a pure function of its
// inputs; instances carry no state and are safe to share across threads.
// Swapping the suite changes byte layouts only, never protocol logic.
class CipherSuite {
 public:
  virtual ~CipherSuite() = default;

  const SuiteId& id() const { return id_; }

  /// Authenticated encryption. Nonces are derived, never on the wire; the
  /// caller guarantees uniqueness per key (see derive_nonce).
  virtual Sealed aead_seal(ByteView key, ByteView ad, ByteView pt,
                           ByteView nonce) const = 0;

  /// Returns the plaintext iff (ct, tag) was produced under the identical
  /// (key, ad, nonce); nullopt signals channel tampering.
  virtual std::optional<Bytes> aead_open(ByteView key, ByteView ad, ByteView ct,
                                         ByteView tag, ByteView nonce) const = 0;

  /// Keyed MAC (HMAC-SHA256 truncated to tag_len).
  Bytes mac(ByteView key, ByteView msg) const;

  /// Collision-resistant hash (SHA-256).
  Bytes hash(ByteView msg) const;

  /// Keyed hash H_K, HMAC construction (full hash_len output).
  Bytes keyed_hash(ByteView key, ByteView msg) const;

  /// hash(context) truncated to the suite nonce length. Both protocol sides
  /// recompute nonces from the session context, keeping the wire format a
  /// bare (A, C, T) triple.
  Bytes derive_nonce(ByteView context) const;

  /// Maps arbitrary key material onto an AEAD key: used verbatim when the
  /// length already matches, otherwise hashed and truncated.
  Bytes aead_key_from(ByteView material) const;

  static const CipherSuite& get(const std::string& name);
  static const CipherSuite& default_suite();
  static std::vector<std::string> available();

 protected:
  explicit CipherSuite(SuiteId id) : id_(std::move(id)) {}

  SuiteId id_;
};

/// SHA-256 convenience entry points used by modules that never vary by suite
/// (addresses, PUF internals, state roots).
Bytes sha256(ByteView msg);
Bytes hmac_sha256(ByteView key, ByteView msg);

}  // namespace janus
