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

#include "janus/ascon.hpp"

#include <array>
#include <cstring>

#include "janus/errors.hpp"

namespace janus::ascon {
namespace {

constexpr std::uint64_t kIv = 0x80400c0600000000ULL;  // k=128, r=64, a=12, b=6

using State = std::array<std::uint64_t, 5>;

std::uint64_t ror(std::uint64_t x, int n) {
  return (x >> n) | (x << (64 - n));
}

std::uint64_t load64(const std::uint8_t* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = v << 8 | p[i];
  return v;
}

void store64(std::uint8_t* p, std::uint64_t v) {
  for (int i = 7; i >= 0; --i) {
    p[i] = static_cast<std::uint8_t>(v);
    v >>= 8;
  }
}

void permute(State& s, int rounds) {
  for (int r = 12 - rounds; r < 12; ++r) {
    s[2] ^= static_cast<std::uint64_t>(0xf0 - r * 0x10 + r * 0x01);
    // substitution layer
    s[0] ^= s[4];
    s[4] ^= s[3];
    s[2] ^= s[1];
    std::uint64_t t0 = ~s[0] & s[1];
    std::uint64_t t1 = ~s[1] & s[2];
    std::uint64_t t2 = ~s[2] & s[3];
    std::uint64_t t3 = ~s[3] & s[4];
    std::uint64_t t4 = ~s[4] & s[0];
    s[0] ^= t1;
    s[1] ^= t2;
    s[2] ^= t3;
    s[3] ^= t4;
    s[4] ^= t0;
    s[1] ^= s[0];
    s[0] ^= s[4];
    s[3] ^= s[2];
    s[2] = ~s[2];
    // linear diffusion layer
    s[0] ^= ror(s[0], 19) ^ ror(s[0], 28);
    s[1] ^= ror(s[1], 61) ^ ror(s[1], 39);
    s[2] ^= ror(s[2], 1) ^ ror(s[2], 6);
    s[3] ^= ror(s[3], 10) ^ ror(s[3], 17);
    s[4] ^= ror(s[4], 7) ^ ror(s[4], 41);
  }
}

// 10* padding of the final partial block into a single 64-bit word.
std::uint64_t load_partial_padded(const std::uint8_t* p, std::size_t len) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < len; ++i)
    v |= static_cast<std::uint64_t>(p[i]) << (56 - 8 * i);
  v |= 0x80ULL << (56 - 8 * len);
  return v;
}

State init_state(ByteView key, ByteView nonce, std::uint64_t k0, std::uint64_t k1) {
  State s{kIv, k0, k1, load64(nonce.data()), load64(nonce.data() + 8)};
  permute(s, 12);
  s[3] ^= k0;
  s[4] ^= k1;
  return s;
}

void absorb_ad(State& s, ByteView ad) {
  if (!ad.empty()) {
    std::size_t off = 0;
    while (ad.size() - off >= 8) {
      s[0] ^= load64(ad.data() + off);
      permute(s, 6);
      off += 8;
    }
    s[0] ^= load_partial_padded(ad.data() + off, ad.size() - off);
    permute(s, 6);
  }
  s[4] ^= 1;  // domain separation
}

void check_lengths(ByteView key, ByteView nonce) {
  if (key.size() != kKeyLen)
    throw Error(Errc::invalid_length, "ascon key must be 16 bytes");
  if (nonce.size() != kNonceLen)
    throw Error(Errc::invalid_length, "ascon nonce must be 16 bytes");
}

}  // namespace

Sealed seal(ByteView key, ByteView nonce, ByteView ad, ByteView pt) {
  check_lengths(key, nonce);
  std::uint64_t k0 = load64(key.data());
  std::uint64_t k1 = load64(key.data() + 8);
  State s = init_state(key, nonce, k0, k1);
  absorb_ad(s, ad);

  Bytes ct(pt.size());
  std::size_t off = 0;
  while (pt.size() - off >= 8) {
    s[0] ^= load64(pt.data() + off);
    store64(ct.data() + off, s[0]);
    permute(s, 6);
    off += 8;
  }
  std::size_t rem = pt.size() - off;
  s[0] ^= load_partial_padded(pt.data() + off, rem);
  if (rem > 0) {
    std::uint8_t last[8];
    store64(last, s[0]);
    std::memcpy(ct.data() + off, last, rem);
  }

  s[1] ^= k0;
  s[2] ^= k1;
  permute(s, 12);

  Bytes tag(kTagLen);
  store64(tag.data(), s[3] ^ k0);
  store64(tag.data() + 8, s[4] ^ k1);
  return {std::move(ct), std::move(tag)};
}

std::optional<Bytes> open(ByteView key, ByteView nonce, ByteView ad, ByteView ct,
                          ByteView tag) {
  check_lengths(key, nonce);
  if (tag.size() != kTagLen) return std::nullopt;
  std::uint64_t k0 = load64(key.data());
  std::uint64_t k1 = load64(key.data() + 8);
  State s = init_state(key, nonce, k0, k1);
  absorb_ad(s, ad);

  Bytes pt(ct.size());
  std::size_t off = 0;
  while (ct.size() - off >= 8) {
    std::uint64_t c = load64(ct.data() + off);
    store64(pt.data() + off, s[0] ^ c);
    s[0] = c;
    permute(s, 6);
    off += 8;
  }
  std::size_t rem = ct.size() - off;
  std::uint8_t sb[8];
  store64(sb, s[0]);
  for (std::size_t i = 0; i < rem; ++i) {
    pt[off + i] = sb[i] ^ ct[off + i];
    sb[i] = ct[off + i];
  }
  sb[rem] ^= 0x80;
  s[0] = load64(sb);

  s[1] ^= k0;
  s[2] ^= k1;
  permute(s, 12);

  std::uint8_t expect[kTagLen];
  store64(expect, s[3] ^ k0);
  store64(expect + 8, s[4] ^ k1);
  if (!ct_equal(ByteView(expect, kTagLen), tag)) return std::nullopt;
  return pt;
}

}  // namespace janus::ascon
