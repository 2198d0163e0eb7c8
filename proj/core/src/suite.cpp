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

#include "janus/suite.hpp"

#include <openssl/core_names.h>
#include <openssl/evp.h>

#include <cstring>
#include <mutex>

#include "janus/ascon.hpp"
#include "janus/errors.hpp"

namespace janus {

Bytes sha256(ByteView msg) {
  Bytes out(32);
  unsigned int len = 0;
  if (EVP_Digest(msg.data(), msg.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 ||
      len != 32)
    throw Error(Errc::internal, "SHA-256 failure");
  return out;
}

Bytes hmac_sha256(ByteView key, ByteView msg) {
  static EVP_MAC* mac = EVP_MAC_fetch(nullptr, "HMAC", nullptr);
  if (!mac) throw Error(Errc::internal, "HMAC fetch failed");
  EVP_MAC_CTX* ctx = EVP_MAC_CTX_new(mac);
  if (!ctx) throw Error(Errc::internal, "HMAC ctx alloc failed");
  char digest[] = "SHA256";
  OSSL_PARAM params[] = {
      OSSL_PARAM_construct_utf8_string(OSSL_MAC_PARAM_DIGEST, digest, 0),
      OSSL_PARAM_construct_end(),
  };
  Bytes out(32);
  std::size_t out_len = 0;
  // HMAC accepts the empty key; OpenSSL wants a non-null pointer regardless.
  static const std::uint8_t empty = 0;
  const std::uint8_t* kp = key.empty() ? &empty : key.data();
  int ok = EVP_MAC_init(ctx, kp, key.size(), params) &&
           EVP_MAC_update(ctx, msg.data(), msg.size()) &&
           EVP_MAC_final(ctx, out.data(), &out_len, out.size());
  EVP_MAC_CTX_free(ctx);
  if (!ok || out_len != 32) throw Error(Errc::internal, "HMAC failure");
  return out;
}

Bytes CipherSuite::mac(ByteView key, ByteView msg) const {
  return truncated(hmac_sha256(key, msg), id_.tag_len);
}

Bytes CipherSuite::hash(ByteView msg) const { return sha256(msg); }

Bytes CipherSuite::keyed_hash(ByteView key, ByteView msg) const {
  return hmac_sha256(key, msg);
}

Bytes CipherSuite::derive_nonce(ByteView context) const {
  return truncated(sha256(context), id_.nonce_len);
}

Bytes CipherSuite::aead_key_from(ByteView material) const {
  if (material.size() == id_.key_len) return Bytes(material.begin(), material.end());
  return truncated(sha256(material), id_.key_len);
}

namespace {

class AsconSuite final : public CipherSuite {
 public:
  AsconSuite()
      : CipherSuite({.name = "ascon128",
                     .key_len = ascon::kKeyLen,
                     .tag_len = ascon::kTagLen,
                     .hash_len = 32,
                     .nonce_len = ascon::kNonceLen}) {}

  Sealed aead_seal(ByteView key, ByteView ad, ByteView pt, ByteView nonce) const override {
    auto r = ascon::seal(key, nonce, ad, pt);
    return {std::move(r.ct), std::move(r.tag)};
  }

  std::optional<Bytes> aead_open(ByteView key, ByteView ad, ByteView ct, ByteView tag,
                                 ByteView nonce) const override {
    if (key.size() != id_.key_len)
      throw Error(Errc::invalid_length, "aead key length");
    return ascon::open(key, nonce, ad, ct, tag);
  }
};

class AesGcmSuite final : public CipherSuite {
 public:
  AesGcmSuite()
      : CipherSuite({.name = "aes128gcm",
                     .key_len = 16,
                     .tag_len = 16,
                     .hash_len = 32,
                     .nonce_len = 12}) {}

  Sealed aead_seal(ByteView key, ByteView ad, ByteView pt, ByteView nonce) const override {
    check(key, nonce);
    EVP_CIPHER_CTX* ctx = EVP_CIPHER_CTX_new();
    Bytes ct(pt.size());
    Bytes tag(id_.tag_len);
    int len = 0;
    std::uint8_t scratch[16];
    int ok = EVP_EncryptInit_ex(ctx, EVP_aes_128_gcm(), nullptr, nullptr, nullptr) &&
             EVP_CIPHER_CTX_ctrl(ctx, EVP_CTRL_GCM_SET_IVLEN,
                                 static_cast<int>(nonce.size()), nullptr) &&
             EVP_EncryptInit_ex(ctx, nullptr, nullptr, key.data(), nonce.data()) &&
             (ad.empty() ||
              EVP_EncryptUpdate(ctx, nullptr, &len, ad.data(), static_cast<int>(ad.size()))) &&
             (pt.empty() ||
              EVP_EncryptUpdate(ctx, ct.data(), &len, pt.data(), static_cast<int>(pt.size()))) &&
             EVP_EncryptFinal_ex(ctx, scratch, &len) &&
             EVP_CIPHER_CTX_ctrl(ctx, EVP_CTRL_GCM_GET_TAG, static_cast<int>(tag.size()),
                                 tag.data());
    EVP_CIPHER_CTX_free(ctx);
    if (!ok) throw Error(Errc::internal, "aes-gcm seal failure");
    return {std::move(ct), std::move(tag)};
  }

  std::optional<Bytes> aead_open(ByteView key, ByteView ad, ByteView ct, ByteView tag,
                                 ByteView nonce) const override {
    check(key, nonce);
    if (tag.size() != id_.tag_len) return std::nullopt;
    EVP_CIPHER_CTX* ctx = EVP_CIPHER_CTX_new();
    Bytes pt(ct.size());
    Bytes tag_copy(tag.begin(), tag.end());
    int len = 0;
    std::uint8_t scratch[16];
    int ok = EVP_DecryptInit_ex(ctx, EVP_aes_128_gcm(), nullptr, nullptr, nullptr) &&
             EVP_CIPHER_CTX_ctrl(ctx, EVP_CTRL_GCM_SET_IVLEN,
                                 static_cast<int>(nonce.size()), nullptr) &&
             EVP_DecryptInit_ex(ctx, nullptr, nullptr, key.data(), nonce.data()) &&
             (ad.empty() ||
              EVP_DecryptUpdate(ctx, nullptr, &len, ad.data(), static_cast<int>(ad.size()))) &&
             (ct.empty() ||
              EVP_DecryptUpdate(ctx, pt.data(), &len, ct.data(), static_cast<int>(ct.size()))) &&
             EVP_CIPHER_CTX_ctrl(ctx, EVP_CTRL_GCM_SET_TAG, static_cast<int>(tag_copy.size()),
                                 tag_copy.data());
    bool auth = ok && EVP_DecryptFinal_ex(ctx, scratch, &len) == 1;
    EVP_CIPHER_CTX_free(ctx);
    if (!ok) throw Error(Errc::internal, "aes-gcm open failure");
    if (!auth) return std::nullopt;
    return pt;
  }

 private:
  void check(ByteView key, ByteView nonce) const {
    if (key.size() != id_.key_len)
      throw Error(Errc::invalid_length, "aead key length");
    if (nonce.size() != id_.nonce_len)
      throw Error(Errc::invalid_length, "aead nonce length");
  }
};

}  // namespace

const CipherSuite& CipherSuite::get(const std::string& name) {
  static const AsconSuite ascon_suite;
  static const AesGcmSuite gcm_suite;
  if (name == "ascon128") return ascon_suite;
  if (name == "aes128gcm") return gcm_suite;
  throw Error(Errc::malformed_config, "unknown cipher suite: " + name);
}

const CipherSuite& CipherSuite::default_suite() { return get("ascon128"); }

std::vector<std::string> CipherSuite::available() { return {"ascon128", "aes128gcm"}; }

}  // namespace janus
