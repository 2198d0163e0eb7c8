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

#include <doctest.h>

#include "janus/ascon.hpp"
#include "janus/errors.hpp"
#include "janus/rng.hpp"
#include "janus/signature.hpp"
#include "janus/suite.hpp"
#include "support/ascon_ref.hpp"

using namespace janus;

namespace {

Bytes hx(const std::string& s) {
  auto b = hex_decode(s);
  REQUIRE(b.has_value());
  return *b;
}

}  // namespace

TEST_CASE("ascon-128 known-answer vectors") {
  // Frozen from an independent reference implementation; the first entry is
  // the published KAT line for the all-ascending key/nonce and empty inputs.
  struct Vector {
    std::string key, nonce, ad, pt, ct, tag;
  };
  const Vector vectors[] = {
      {"000102030405060708090a0b0c0d0e0f", "000102030405060708090a0b0c0d0e0f", "", "",
       "", "e355159f292911f794cb1432a0103a8a"},
      {"00000000000000000000000000000000", "00000000000000000000000000000000", "", "",
       "", "42213f50a811d2d1d7e4092aa2a42ba4"},
      {"000102030405060708090a0b0c0d0e0f", "000102030405060708090a0b0c0d0e0f",
       "00010203", "", "", "082389c8819a82bd98c04a3c64a63aa9"},
      {"000102030405060708090a0b0c0d0e0f", "000102030405060708090a0b0c0d0e0f", "",
       "00010203", "bc820dbd", "218c5c93e3850e974a3704d1223bdefb"},
      {"000102030405060708090a0b0c0d0e0f", "000102030405060708090a0b0c0d0e0f",
       "6164206279746573", "706c61696e7465787421", "50ac7f977a7bb1eb388f",
       "7107af3047a71a52bd399d45adb5072f"},
      {"000102030405060708090a0b0c0d0e0f", "101112131415161718191a1b1c1d1e1f",
       "6173736f6369617465642064617461206c6f6e676572207468616e206f6e6520726174652062"
       "6c6f636b2e2e2e2e2e2e",
       "54686520717569636b2062726f776e20666f78206a756d7073206f76657220746865206c617a"
       "7920646f672c207477696365206f7665722074686520626c6f636b2e",
       "55413e6fa1eea9647ca7ccd4fa8f7f25a0da2d1e421c922bd899e3bc18bd9a9d8b2781b393f8"
       "0d2d73d09565f7972aef8a17b6184886d39d107597addd8a7871c60c",
       "03efe78adcbfb3bf75ec191041d557fa"},
  };

  for (const auto& v : vectors) {
    CAPTURE(v.tag);
    auto sealed = ascon::seal(hx(v.key), hx(v.nonce), hx(v.ad), hx(v.pt));
    CHECK(hex_encode(sealed.ct) == v.ct);
    CHECK(hex_encode(sealed.tag) == v.tag);

    auto ref = testref::ascon128_seal(hx(v.key), hx(v.nonce), hx(v.ad), hx(v.pt));
    CHECK(hex_encode(ref.ct) == v.ct);
    CHECK(hex_encode(ref.tag) == v.tag);

    auto opened = ascon::open(hx(v.key), hx(v.nonce), hx(v.ad), hx(v.ct), hx(v.tag));
    REQUIRE(opened.has_value());
    CHECK(hex_encode(*opened) == v.pt);
  }
}

TEST_CASE("ascon-128 agrees with the independent byte-oriented reference") {
  DetRng rng(0x5eed);
  for (int trial = 0; trial < 300; ++trial) {
    Bytes key = rng.bytes(16);
    Bytes nonce = rng.bytes(16);
    Bytes ad = rng.bytes(rng.uniform_below(40));
    Bytes pt = rng.bytes(rng.uniform_below(70));
    auto a = ascon::seal(key, nonce, ad, pt);
    auto b = testref::ascon128_seal(key, nonce, ad, pt);
    REQUIRE(a.ct == b.ct);
    REQUIRE(a.tag == b.tag);
  }
}

TEST_CASE("aead round trip and determinism across suites") {
  DetRng rng(7);
  for (auto& name : CipherSuite::available()) {
    const auto& suite = CipherSuite::get(name);
    CHECK(suite.id().key_len >= 16);
    CHECK(suite.id().tag_len >= 16);
    CHECK(suite.id().hash_len == 32);
    for (int i = 0; i < 50; ++i) {
      Bytes key = rng.bytes(suite.id().key_len);
      Bytes nonce = rng.bytes(suite.id().nonce_len);
      Bytes ad = rng.bytes(rng.uniform_below(32));
      Bytes pt = rng.bytes(rng.uniform_below(64));
      auto s1 = suite.aead_seal(key, ad, pt, nonce);
      auto s2 = suite.aead_seal(key, ad, pt, nonce);
      CHECK(s1.ct == s2.ct);
      CHECK(s1.tag == s2.tag);
      CHECK(s1.ct.size() == pt.size());
      CHECK(s1.tag.size() == suite.id().tag_len);
      auto opened = suite.aead_open(key, ad, s1.ct, s1.tag, nonce);
      REQUIRE(opened.has_value());
      CHECK(*opened == pt);
    }
  }
}

TEST_CASE("any single-bit modification of ct, tag or ad is rejected") {
  for (auto& name : CipherSuite::available()) {
    const auto& suite = CipherSuite::get(name);
    DetRng rng(11);
    Bytes key = rng.bytes(suite.id().key_len);
    Bytes nonce = rng.bytes(suite.id().nonce_len);
    Bytes ad = rng.bytes(12);
    Bytes pt = rng.bytes(33);
    auto sealed = suite.aead_seal(key, ad, pt, nonce);

    for (std::size_t i = 0; i < sealed.ct.size() * 8; ++i) {
      Bytes ct = sealed.ct;
      ct[i / 8] ^= static_cast<std::uint8_t>(1u << (i % 8));
      CHECK_FALSE(suite.aead_open(key, ad, ct, sealed.tag, nonce).has_value());
    }
    for (std::size_t i = 0; i < sealed.tag.size() * 8; ++i) {
      Bytes tag = sealed.tag;
      tag[i / 8] ^= static_cast<std::uint8_t>(1u << (i % 8));
      CHECK_FALSE(suite.aead_open(key, ad, sealed.ct, tag, nonce).has_value());
    }
    for (std::size_t i = 0; i < ad.size() * 8; ++i) {
      Bytes bad_ad = ad;
      bad_ad[i / 8] ^= static_cast<std::uint8_t>(1u << (i % 8));
      CHECK_FALSE(suite.aead_open(key, bad_ad, sealed.ct, sealed.tag, nonce).has_value());
    }
  }
}

TEST_CASE("wrong key never opens") {
  const auto& suite = CipherSuite::default_suite();
  DetRng rng(13);
  Bytes key = rng.bytes(suite.id().key_len);
  Bytes nonce = rng.bytes(suite.id().nonce_len);
  Bytes ad = rng.bytes(8);
  Bytes pt = rng.bytes(24);
  auto sealed = suite.aead_seal(key, ad, pt, nonce);
  int accepts = 0;
  for (int i = 0; i < 10000; ++i) {
    Bytes k2 = rng.bytes(suite.id().key_len);
    if (k2 == key) continue;
    if (suite.aead_open(k2, ad, sealed.ct, sealed.tag, nonce).has_value()) ++accepts;
  }
  CHECK(accepts == 0);
}

TEST_CASE("aead rejects wrong key length") {
  const auto& suite = CipherSuite::default_suite();
  Bytes nonce(suite.id().nonce_len, 0);
  CHECK_THROWS_AS(suite.aead_seal(Bytes(7, 0), {}, {}, nonce), Error);
}

TEST_CASE("sha-256 reference digests") {
  CHECK(hex_encode(sha256({})) ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(hex_encode(sha256(to_bytes("abc"))) ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("hmac-sha256 reference vectors") {
  // RFC 4231 test cases 1 and 2
  CHECK(hex_encode(hmac_sha256(Bytes(20, 0x0b), to_bytes("Hi There"))) ==
        "b0344c61d8db38535ca8afceaf0bf12b881dc200c9833da726e9376c2e32cff7");
  CHECK(hex_encode(hmac_sha256(to_bytes("Jefe"), to_bytes("what do ya want for nothing?"))) ==
        "5bdcc146bf60754e6a042426089575c75a003f089d2739839dec58b964ec3843");
}

TEST_CASE("mac determinism and key sensitivity") {
  const auto& suite = CipherSuite::default_suite();
  DetRng rng(17);
  Bytes key = rng.bytes(16);
  Bytes msg = to_bytes("attest this");
  auto t1 = suite.mac(key, msg);
  auto t2 = suite.mac(key, msg);
  CHECK(t1 == t2);
  CHECK(t1.size() == suite.id().tag_len);
  int collisions = 0;
  for (int i = 0; i < 10000; ++i) {
    Bytes k2 = rng.bytes(16);
    if (k2 == key) continue;
    if (suite.mac(k2, msg) == t1) ++collisions;
  }
  CHECK(collisions == 0);
}

TEST_CASE("keyed hash matches the hmac construction applied by hand") {
  const auto& suite = CipherSuite::default_suite();
  Bytes key(32, 0x00);
  Bytes msg = to_bytes("janus");
  // H((K ^ opad) || H((K ^ ipad) || m)) with a zero key, block size 64
  Bytes ipad(64, 0x36), opad(64, 0x5c);
  Bytes inner = sha256(concat({ipad, msg}));
  Bytes expect = sha256(concat({opad, inner}));
  CHECK(suite.keyed_hash(key, msg) == expect);
  CHECK(hex_encode(expect) ==
        "fd83d57e57de55bb5c1b41dcac3de858951396357f910d8acf64170f27333e42");
}

TEST_CASE("no hash collision over 2^16 random inputs") {
  const auto& suite = CipherSuite::default_suite();
  DetRng rng(19);
  std::vector<Bytes> digests;
  digests.reserve(1 << 16);
  for (int i = 0; i < (1 << 16); ++i) digests.push_back(suite.hash(rng.bytes(24)));
  std::sort(digests.begin(), digests.end());
  CHECK(std::adjacent_find(digests.begin(), digests.end()) == digests.end());
}

TEST_CASE("deterministic ecdsa matches the published p-256 vectors") {
  // RFC 6979 A.2.5: x, then signatures over "sample" and "test" with SHA-256
  Bytes sk = hx("c9afa9d845ba75166b5c215767b1d6934e50c3db36e89b127b8a622b120f6721");
  Bytes pk = concat({Bytes{0x04},
                     hx("60fed4ba255a9d31c961eb74c6356d68c049b8923b61fa6ce669622e60f29fb6"),
                     hx("7903fe1008b8bc99a41ae9e95628bc64f2f1b20c2d7e9f5177a3c294d4462299")});

  auto sig1 = ecdsa_sign(sk, to_bytes("sample"));
  CHECK(hex_encode(sig1) ==
        "efd48b2aacb6a8fd1140dd9cd45e81d69d2c877b56aaf991c34d0ea84eaf3716"
        "f7cb1c942d657c41d436c7a1b6e29f65f3e900dbb9aff4064dc4ab2f843acda8");
  CHECK(ecdsa_verify(pk, to_bytes("sample"), sig1));

  auto sig2 = ecdsa_sign(sk, to_bytes("test"));
  CHECK(hex_encode(sig2) ==
        "f1abb023518351cd71d881567b1ea663ed3efcf6c5132b354f28d3b0b7d38367"
        "019f4113742a2b14bd25926b49c649155f267e60d3814b4c0cc84250e46f0083");
  CHECK(ecdsa_verify(pk, to_bytes("test"), sig2));
}

TEST_CASE("signatures verify, reject other messages, reject bit flips") {
  DetRng rng(23);
  auto kp = SigningKeyPair::generate(rng, to_bytes("unit-test"));
  Bytes msg = to_bytes("a measured enclave");
  Bytes sig = ecdsa_sign(kp.sk, msg);
  CHECK(ecdsa_verify(kp.pk, msg, sig));
  CHECK(sig == ecdsa_sign(kp.sk, msg));  // pure function of (sk, msg)

  for (int i = 0; i < 200; ++i) {
    Bytes other = rng.bytes(1 + rng.uniform_below(40));
    if (other == msg) continue;
    CHECK_FALSE(ecdsa_verify(kp.pk, other, sig));
  }
  for (std::size_t i = 0; i < sig.size() * 8; ++i) {
    Bytes flipped = sig;
    flipped[i / 8] ^= static_cast<std::uint8_t>(1u << (i % 8));
    CHECK_FALSE(ecdsa_verify(kp.pk, msg, flipped));
  }
}

TEST_CASE("malformed keys and signatures raise typed errors") {
  DetRng rng(29);
  auto kp = SigningKeyPair::generate(rng, to_bytes("x"));
  Bytes msg = to_bytes("m");
  Bytes sig = ecdsa_sign(kp.sk, msg);
  CHECK_THROWS_AS(ecdsa_verify(Bytes(10, 1), msg, sig), Error);
  CHECK_THROWS_AS(ecdsa_verify(kp.pk, msg, Bytes(63, 1)), Error);
  Bytes not_a_point(kPointLen, 0x02);
  not_a_point[0] = 0x04;
  CHECK_THROWS_AS(ecdsa_verify(not_a_point, msg, sig), Error);
}

TEST_CASE("certificates bind the key to the identity") {
  DetRng rng(31);
  auto kp = SigningKeyPair::generate(rng, to_bytes("attester-7"));
  CHECK(cert_verify(kp.cert));
  auto view = cert_parse(kp.cert);
  REQUIRE(view.has_value());
  CHECK(view->pk == kp.pk);
  CHECK(to_string(view->identity) == "attester-7");

  // tampering with the embedded identity invalidates the self-signature
  Bytes broken = kp.cert;
  broken[broken.size() / 2] ^= 0x01;
  CHECK_FALSE(cert_verify(broken));
}

TEST_CASE("nonce derivation is a pure suite function") {
  const auto& suite = CipherSuite::default_suite();
  auto n1 = suite.derive_nonce(to_bytes("session-1|round-1"));
  auto n2 = suite.derive_nonce(to_bytes("session-1|round-1"));
  auto n3 = suite.derive_nonce(to_bytes("session-1|round-2"));
  CHECK(n1 == n2);
  CHECK(n1 != n3);
  CHECK(n1.size() == suite.id().nonce_len);
}
