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

#include "ascon_ref.hpp"

#include <array>
#include <cassert>

namespace janus::testref {
namespace {

// state = 5 words of 8 bytes each, kept as big-endian byte arrays
using Word = std::array<std::uint8_t, 8>;
using State = std::array<Word, 5>;

Word from_u64(std::uint64_t v) {
  Word w{};
  for (int i = 7; i >= 0; --i) {
    w[i] = static_cast<std::uint8_t>(v & 0xff);
    v >>= 8;
  }
  return w;
}

void wxor(Word& a, const Word& b) {
  for (int i = 0; i < 8; ++i) a[i] ^= b[i];
}

Word wand_not(const Word& a, const Word& b) {  // (~a) & b
  Word out;
  for (int i = 0; i < 8; ++i) out[i] = static_cast<std::uint8_t>(~a[i] & b[i]);
  return out;
}

void wnot(Word& a) {
  for (int i = 0; i < 8; ++i) a[i] = static_cast<std::uint8_t>(~a[i]);
}

// rotate the 64-bit big-endian word right by r bits, byte by byte
Word wror(const Word& a, int r) {
  Word out{};
  int byte_shift = r / 8;
  int bit_shift = r % 8;
  for (int i = 0; i < 8; ++i) {
    // source byte that lands at position i after a pure byte rotation
    std::uint8_t hi = a[(i - byte_shift + 16) % 8];
    std::uint8_t lo = a[(i - byte_shift - 1 + 16) % 8];
    if (bit_shift == 0)
      out[i] = hi;
    else
      out[i] = static_cast<std::uint8_t>((hi >> bit_shift) | (lo << (8 - bit_shift)));
  }
  return out;
}

void round(State& s, std::uint8_t rc) {
  s[2][7] ^= rc;

  wxor(s[0], s[4]);
  wxor(s[4], s[3]);
  wxor(s[2], s[1]);
  std::array<Word, 5> t;
  for (int i = 0; i < 5; ++i) t[i] = wand_not(s[i], s[(i + 1) % 5]);
  for (int i = 0; i < 5; ++i) wxor(s[i], t[(i + 1) % 5]);
  wxor(s[1], s[0]);
  wxor(s[0], s[4]);
  wxor(s[3], s[2]);
  wnot(s[2]);

  Word r0 = s[0], r1 = s[1], r2 = s[2], r3 = s[3], r4 = s[4];
  wxor(s[0], wror(r0, 19));
  wxor(s[0], wror(r0, 28));
  wxor(s[1], wror(r1, 61));
  wxor(s[1], wror(r1, 39));
  wxor(s[2], wror(r2, 1));
  wxor(s[2], wror(r2, 6));
  wxor(s[3], wror(r3, 10));
  wxor(s[3], wror(r3, 17));
  wxor(s[4], wror(r4, 7));
  wxor(s[4], wror(r4, 41));
}

void permute(State& s, int rounds) {
  static const std::uint8_t rcs[12] = {0xf0, 0xe1, 0xd2, 0xc3, 0xb4, 0xa5,
                                       0x96, 0x87, 0x78, 0x69, 0x5a, 0x4b};
  for (int r = 12 - rounds; r < 12; ++r) round(s, rcs[r]);
}

Word load_word(ByteView b, std::size_t off) {
  Word w{};
  for (int i = 0; i < 8; ++i) w[i] = b[off + static_cast<std::size_t>(i)];
  return w;
}

// blocks of 8 with 10* padding appended
std::vector<Word> padded_blocks(ByteView data) {
  Bytes buf(data.begin(), data.end());
  buf.push_back(0x80);
  while (buf.size() % 8 != 0) buf.push_back(0x00);
  std::vector<Word> blocks;
  for (std::size_t off = 0; off < buf.size(); off += 8) blocks.push_back(load_word(buf, off));
  return blocks;
}

}  // namespace

RefSealed ascon128_seal(ByteView key, ByteView nonce, ByteView ad, ByteView pt) {
  assert(key.size() == 16 && nonce.size() == 16);
  Word k0 = load_word(key, 0), k1 = load_word(key, 8);
  State s{from_u64(0x80400c0600000000ULL), k0, k1, load_word(nonce, 0),
          load_word(nonce, 8)};
  permute(s, 12);
  wxor(s[3], k0);
  wxor(s[4], k1);

  if (!ad.empty()) {
    for (auto& block : padded_blocks(ad)) {
      wxor(s[0], block);
      permute(s, 6);
    }
  }
  s[4][7] ^= 0x01;

  RefSealed out;
  auto blocks = padded_blocks(pt);
  std::size_t produced = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    wxor(s[0], blocks[i]);
    std::size_t want = std::min<std::size_t>(8, pt.size() - produced);
    for (std::size_t j = 0; j < want; ++j) out.ct.push_back(s[0][j]);
    produced += want;
    if (i + 1 < blocks.size()) permute(s, 6);
  }

  wxor(s[1], k0);
  wxor(s[2], k1);
  permute(s, 12);
  wxor(s[3], k0);
  wxor(s[4], k1);
  out.tag.assign(s[3].begin(), s[3].end());
  out.tag.insert(out.tag.end(), s[4].begin(), s[4].end());
  return out;
}

}  // namespace janus::testref
