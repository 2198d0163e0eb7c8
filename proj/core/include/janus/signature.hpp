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
#include "janus/rng.hpp"

namespace janus {

inline constexpr std::size_t kScalarLen = 32;
inline constexpr std::size_t kPointLen = 65;      // uncompressed SEC1
inline constexpr std::size_t kSignatureLen = 64;  // raw r || s

/// ECDSA key pair over P-256 with a self-describing certificate that binds
/// the public point to an identity string.
struct SigningKeyPair {
  Bytes sk;    // private scalar, 32 bytes big-endian (opaque to callers)
  Bytes pk;    // public point, 65 bytes
  Bytes cert;  // field(pk) || field(identity) || field(self_sig)

  static SigningKeyPair generate(DetRng& rng, ByteView identity);
};

/// Deterministic ECDSA (RFC 6979 nonces) over SHA-256 of msg. Output is the
/// fixed 64-byte r||s encoding, so signing is a pure function of (sk, msg).
Bytes ecdsa_sign(ByteView sk, ByteView msg);

/// Accepts exactly the signatures produced by the matching sk over msg.
/// Throws MalformedKey for an undecodable public point and
/// MalformedSignature for a wrong-size signature; tampered-but-well-formed
/// inputs simply return false.
bool ecdsa_verify(ByteView pk, ByteView msg, ByteView sig);

struct CertView {
  Bytes pk;
  Bytes identity;
  Bytes self_sig;
};

Bytes cert_build(ByteView sk, ByteView pk, ByteView identity);
std::optional<CertView> cert_parse(ByteView cert);
bool cert_verify(ByteView cert);

}  // namespace janus
