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

#include "janus/signature.hpp"

#include <openssl/bn.h>
#include <openssl/ec.h>
#include <openssl/obj_mac.h>

#include <memory>

#include "janus/errors.hpp"
#include "janus/suite.hpp"

namespace janus {
namespace {

struct BnDeleter {
  void operator()(BIGNUM* p) const { BN_free(p); }
};
struct CtxDeleter {
  void operator()(BN_CTX* p) const { BN_CTX_free(p); }
};
struct PointDeleter {
  void operator()(EC_POINT* p) const { EC_POINT_free(p); }
};
using BnPtr = std::unique_ptr<BIGNUM, BnDeleter>;
using CtxPtr = std::unique_ptr<BN_CTX, CtxDeleter>;
using PointPtr = std::unique_ptr<EC_POINT, PointDeleter>;

const EC_GROUP* group() {
  static EC_GROUP* g = [] {
    EC_GROUP* grp = EC_GROUP_new_by_curve_name(NID_X9_62_prime256v1);
    if (!grp) throw Error(Errc::internal, "P-256 group unavailable");
    return grp;
  }();
  return g;
}

const BIGNUM* order() {
  static BIGNUM* q = [] {
    BIGNUM* n = BN_new();
    if (!EC_GROUP_get_order(group(), n, nullptr))
      throw Error(Errc::internal, "group order");
    return n;
  }();
  return q;
}

BnPtr bn_from(ByteView b) {
  BnPtr n(BN_bin2bn(b.data(), static_cast<int>(b.size()), nullptr));
  if (!n) throw Error(Errc::internal, "BN alloc");
  return n;
}

Bytes bn_to_fixed(const BIGNUM* n, std::size_t len) {
  Bytes out(len);
  if (BN_bn2binpad(n, out.data(), static_cast<int>(len)) < 0)
    throw Error(Errc::internal, "BN encode");
  return out;
}

// int2octets(bits2int(h) mod q) from the deterministic-nonce construction;
// with a 256-bit hash and P-256 this is just a modular reduction.
Bytes bits2octets(ByteView h1) {
  CtxPtr ctx(BN_CTX_new());
  auto z = bn_from(h1);
  BnPtr z2(BN_new());
  if (!BN_mod(z2.get(), z.get(), order(), ctx.get()))
    throw Error(Errc::internal, "mod");
  return bn_to_fixed(z2.get(), kScalarLen);
}

// HMAC-DRBG style nonce derivation, RFC 6979 section 3.2.
BnPtr deterministic_nonce(ByteView sk, ByteView h1) {
  Bytes v(32, 0x01);
  Bytes k(32, 0x00);
  Bytes x(sk.begin(), sk.end());
  Bytes h_oct = bits2octets(h1);

  k = hmac_sha256(k, concat({v, Bytes{0x00}, x, h_oct}));
  v = hmac_sha256(k, v);
  k = hmac_sha256(k, concat({v, Bytes{0x01}, x, h_oct}));
  v = hmac_sha256(k, v);

  for (;;) {
    v = hmac_sha256(k, v);
    auto cand = bn_from(v);
    if (!BN_is_zero(cand.get()) && BN_cmp(cand.get(), order()) < 0) return cand;
    k = hmac_sha256(k, concat({v, Bytes{0x00}}));
    v = hmac_sha256(k, v);
  }
}

PointPtr decode_point(ByteView pk) {
  if (pk.size() != kPointLen)
    throw Error(Errc::malformed_key, "public key must be 65 bytes");
  PointPtr p(EC_POINT_new(group()));
  CtxPtr ctx(BN_CTX_new());
  if (!EC_POINT_oct2point(group(), p.get(), pk.data(), pk.size(), ctx.get()))
    throw Error(Errc::malformed_key, "public key is not a curve point");
  return p;
}

}  // namespace

SigningKeyPair SigningKeyPair::generate(DetRng& rng, ByteView identity) {
  CtxPtr ctx(BN_CTX_new());
  BnPtr x(BN_new());
  // scalar in [1, q-1]
  for (;;) {
    Bytes raw = rng.bytes(kScalarLen);
    auto cand = bn_from(raw);
    if (!BN_is_zero(cand.get()) && BN_cmp(cand.get(), order()) < 0) {
      BN_copy(x.get(), cand.get());
      break;
    }
  }
  PointPtr pub(EC_POINT_new(group()));
  if (!EC_POINT_mul(group(), pub.get(), x.get(), nullptr, nullptr, ctx.get()))
    throw Error(Errc::internal, "scalar mult");

  SigningKeyPair kp;
  kp.sk = bn_to_fixed(x.get(), kScalarLen);
  kp.pk.resize(kPointLen);
  if (EC_POINT_point2oct(group(), pub.get(), POINT_CONVERSION_UNCOMPRESSED,
                         kp.pk.data(), kPointLen, ctx.get()) != kPointLen)
    throw Error(Errc::internal, "point encode");
  kp.cert = cert_build(kp.sk, kp.pk, identity);
  return kp;
}

Bytes ecdsa_sign(ByteView sk, ByteView msg) {
  if (sk.size() != kScalarLen)
    throw Error(Errc::malformed_key, "private scalar must be 32 bytes");
  Bytes h1 = sha256(msg);
  CtxPtr ctx(BN_CTX_new());
  auto x = bn_from(sk);
  if (BN_is_zero(x.get()) || BN_cmp(x.get(), order()) >= 0)
    throw Error(Errc::malformed_key, "private scalar out of range");

  auto z = bn_from(h1);
  BnPtr z_mod(BN_new());
  BN_mod(z_mod.get(), z.get(), order(), ctx.get());

  Bytes extra;  // appended on retry so the nonce stream advances
  ByteView h_view(h1);
  for (;;) {
    auto k = deterministic_nonce(sk, h_view);
    PointPtr R(EC_POINT_new(group()));
    if (!EC_POINT_mul(group(), R.get(), k.get(), nullptr, nullptr, ctx.get()))
      throw Error(Errc::internal, "scalar mult");
    BnPtr rx(BN_new());
    if (!EC_POINT_get_affine_coordinates(group(), R.get(), rx.get(), nullptr, ctx.get()))
      throw Error(Errc::internal, "affine");
    BnPtr r(BN_new());
    BN_mod(r.get(), rx.get(), order(), ctx.get());

    BnPtr kinv(BN_mod_inverse(nullptr, k.get(), order(), ctx.get()));
    BnPtr s(BN_new());
    BnPtr t(BN_new());
    BN_mod_mul(t.get(), r.get(), x.get(), order(), ctx.get());
    BN_mod_add(t.get(), t.get(), z_mod.get(), order(), ctx.get());
    BN_mod_mul(s.get(), kinv.get(), t.get(), order(), ctx.get());

    if (BN_is_zero(r.get()) || BN_is_zero(s.get())) {
      // vanishing r or s: re-derive from a tweaked digest (practically unreachable)
      extra = sha256(concat({h1, Bytes{0x00}}));
      h_view = ByteView(extra);
      continue;
    }
    Bytes sig = bn_to_fixed(r.get(), 32);
    Bytes s_bytes = bn_to_fixed(s.get(), 32);
    sig.insert(sig.end(), s_bytes.begin(), s_bytes.end());
    return sig;
  }
}

bool ecdsa_verify(ByteView pk, ByteView msg, ByteView sig) {
  if (sig.size() != kSignatureLen)
    throw Error(Errc::malformed_signature, "signature must be 64 bytes");
  auto pub = decode_point(pk);

  CtxPtr ctx(BN_CTX_new());
  auto r = bn_from(sig.subspan(0, 32));
  auto s = bn_from(sig.subspan(32, 32));
  if (BN_is_zero(r.get()) || BN_is_zero(s.get()) ||
      BN_cmp(r.get(), order()) >= 0 || BN_cmp(s.get(), order()) >= 0)
    return false;

  Bytes h1 = sha256(msg);
  auto z = bn_from(h1);
  BnPtr z_mod(BN_new());
  BN_mod(z_mod.get(), z.get(), order(), ctx.get());

  BnPtr w(BN_mod_inverse(nullptr, s.get(), order(), ctx.get()));
  if (!w) return false;
  BnPtr u1(BN_new());
  BnPtr u2(BN_new());
  BN_mod_mul(u1.get(), z_mod.get(), w.get(), order(), ctx.get());
  BN_mod_mul(u2.get(), r.get(), w.get(), order(), ctx.get());

  PointPtr R(EC_POINT_new(group()));
  if (!EC_POINT_mul(group(), R.get(), u1.get(), pub.get(), u2.get(), ctx.get()))
    return false;
  if (EC_POINT_is_at_infinity(group(), R.get())) return false;

  BnPtr rx(BN_new());
  if (!EC_POINT_get_affine_coordinates(group(), R.get(), rx.get(), nullptr, ctx.get()))
    return false;
  BnPtr v(BN_new());
  BN_mod(v.get(), rx.get(), order(), ctx.get());
  return BN_cmp(v.get(), r.get()) == 0;
}

Bytes cert_build(ByteView sk, ByteView pk, ByteView identity) {
  Bytes body = concat({pk, identity});
  Bytes sig = ecdsa_sign(sk, body);
  ByteWriter w;
  w.field(pk);
  w.field(identity);
  w.field(sig);
  return w.take();
}

std::optional<CertView> cert_parse(ByteView cert) {
  ByteReader r(cert);
  auto pk = r.field();
  auto identity = r.field();
  auto sig = r.field();
  if (!pk || !identity || !sig || !r.done()) return std::nullopt;
  return CertView{std::move(*pk), std::move(*identity), std::move(*sig)};
}

bool cert_verify(ByteView cert) {
  auto view = cert_parse(cert);
  if (!view) return false;
  if (view->pk.size() != kPointLen || view->self_sig.size() != kSignatureLen)
    return false;
  try {
    return ecdsa_verify(view->pk, concat({view->pk, view->identity}), view->self_sig);
  } catch (const Error&) {
    return false;
  }
}

}  // namespace janus
