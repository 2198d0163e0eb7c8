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

// Test-only reference implementation of Ascon-128, written byte-oriented on
// purpose: it shares no code or representation with the production word-
// oriented implementation, so agreement between the two is meaningful.

#include "janus/bytes.hpp"

namespace janus::testref {

struct RefSealed {
  Bytes ct;
  Bytes tag;
};

RefSealed ascon128_seal(ByteView key, ByteView nonce, ByteView ad, ByteView pt);

}  // namespace janus::testref
