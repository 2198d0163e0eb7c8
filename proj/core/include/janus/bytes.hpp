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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace janus {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

Bytes to_bytes(std::string_view s);
std::string to_string(ByteView b);

std::string hex_encode(ByteView b);
std::optional<Bytes> hex_decode(std::string_view hex);

/// Bitwise XOR of two equal-length strings. Throws on length mismatch.
Bytes xor_bytes(ByteView a, ByteView b);

/// Constant-time equality for tags and digests.
bool ct_equal(ByteView a, ByteView b);

Bytes concat(std::initializer_list<ByteView> parts);
Bytes truncated(ByteView b, std::size_t len);

std::size_t hamming_distance(ByteView a, ByteView b);
std::size_t popcount(ByteView a);

// All multi-byte integers on the wire are big-endian; variable fields are
// 32-bit length-prefixed. ByteReader never reads past the end: every getter
// reports truncation through its return value.
class ByteWriter {
 public:
  void u8(std::uint8_t v);
  void u32(std::uint32_t v);
  void u64(std::uint64_t v);
  void raw(ByteView b);
  void field(ByteView b);  // u32 length prefix + bytes
  void field(std::string_view s);

  Bytes take() { return std::move(buf_); }
  const Bytes& bytes() const { return buf_; }

 private:
  Bytes buf_;
};

class ByteReader {
 public:
  explicit ByteReader(ByteView b) : data_(b) {}

  std::optional<std::uint8_t> u8();
  std::optional<std::uint32_t> u32();
  std::optional<std::uint64_t> u64();
  std::optional<Bytes> raw(std::size_t len);
  std::optional<Bytes> field();

  bool done() const { return pos_ == data_.size(); }
  std::size_t remaining() const { return data_.size() - pos_; }

 private:
  ByteView data_;
  std::size_t pos_ = 0;
};

}  // namespace janus
