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

#include "janus/taint.hpp"

#include <algorithm>
#include <set>

#include "janus/errors.hpp"

namespace janus {

void TaintScanner::add_secret(std::string label, Bytes secret) {
  if (secret.size() < 16)
    throw Error(Errc::invalid_length, "taint secrets must be at least 16 bytes");
  secrets_.emplace_back(std::move(label), std::move(secret));
}

void TaintScanner::add_stream(std::string label, Bytes stream) {
  streams_.emplace_back(std::move(label), std::move(stream));
}

std::vector<TaintFinding> TaintScanner::scan() const {
  std::vector<TaintFinding> findings;
  // dedupe identical secret bytes to keep one finding per occurrence
  std::set<Bytes> seen;
  for (auto& [slabel, secret] : secrets_) {
    if (!seen.insert(secret).second) continue;
    for (auto& [tlabel, stream] : streams_) {
      auto it = stream.begin();
      while (true) {
        it = std::search(it, stream.end(), secret.begin(), secret.end());
        if (it == stream.end()) break;
        findings.push_back({slabel, tlabel,
                            static_cast<std::size_t>(std::distance(stream.begin(), it))});
        ++it;
      }
    }
  }
  return findings;
}

bool TaintScanner::self_test() {
  TaintScanner probe;
  Bytes secret(24, 0xa7);
  probe.add_secret("planted", secret);
  Bytes stream(100, 0x00);
  std::copy(secret.begin(), secret.end(), stream.begin() + 31);
  probe.add_stream("buffer", stream);
  auto findings = probe.scan();
  return findings.size() == 1 && findings[0].offset == 31;
}

}  // namespace janus
