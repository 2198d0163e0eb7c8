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

#include "janus/identity.hpp"

#include "janus/errors.hpp"

namespace janus {
namespace {

Bytes encode_id(ByteView addr, std::string_view owner_tag, std::string_view gid) {
  if (owner_tag.size() > kMaxOwnerTagLen)
    throw Error(Errc::invalid_length, "owner tag exceeds 32 bytes");
  ByteWriter w;
  w.field(addr);
  w.field(owner_tag);
  w.field(gid);
  return w.take();
}

struct IdParts {
  Bytes addr;
  std::string tag;
  std::string gid;
};

std::optional<IdParts> parse_id(ByteView id) {
  ByteReader r(id);
  auto addr = r.field();
  auto tag = r.field();
  auto gid = r.field();
  if (!addr || !tag || !gid || !r.done()) return std::nullopt;
  if (tag->size() > kMaxOwnerTagLen) return std::nullopt;
  return IdParts{std::move(*addr), to_string(*tag), to_string(*gid)};
}

}  // namespace

Bytes AttesterIdentity::aid() const { return encode_id(addr, dsn, gid); }

std::optional<AttesterIdentity> AttesterIdentity::parse(ByteView aid) {
  auto parts = parse_id(aid);
  if (!parts) return std::nullopt;
  return AttesterIdentity{std::move(parts->addr), std::move(parts->tag),
                          std::move(parts->gid)};
}

Bytes VerifierIdentity::vid() const { return encode_id(addr, von, gid); }

std::optional<VerifierIdentity> VerifierIdentity::parse(ByteView vid) {
  auto parts = parse_id(vid);
  if (!parts) return std::nullopt;
  return VerifierIdentity{std::move(parts->addr), std::move(parts->tag),
                          std::move(parts->gid)};
}

}  // namespace janus
