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

#include <string>
#include <vector>

#include "janus/bytes.hpp"

namespace janus {

struct TaintFinding {
  std::string secret_label;
  std::string stream_label;
  std::size_t offset;
};

/// Searches byte streams (wire captures, ledger state, block logs) for raw
/// occurrences of registered secrets: PUF seeds, group keys, communication
/// keys, session keys, recorded CRP responses and uncommitted measurements.
/// Secrets shorter than 16 bytes are refused to keep matches meaningful.
class TaintScanner {
 public:
  void add_secret(std::string label, Bytes secret);
  void add_stream(std::string label, Bytes stream);

  std::vector<TaintFinding> scan() const;

  std::size_t secret_count() const { return secrets_.size(); }
  std::size_t stream_count() const { return streams_.size(); }

  /// Planted-positive self check: a scanner that cannot find a secret
  /// deliberately embedded in a stream is broken.
  static bool self_test();

 private:
  std::vector<std::pair<std::string, Bytes>> secrets_;
  std::vector<std::pair<std::string, Bytes>> streams_;
};

}  // namespace janus
