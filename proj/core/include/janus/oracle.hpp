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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "janus/bytes.hpp"

namespace janus {

// Ideal mutual-attestation functionality used as a decision oracle. Tape
// records walk measured -> provisioned -> challenged -> attested; the
// verification step flags a direction when the party is corrupted, when its
// record or signature did not appear exactly once, or when the table lookup
// standing in for proof verification fails. Helper data stays empty in the
// noiseless model.
class IdealFunctionality {
 public:
  struct Record {
    std::string state;  // measured | provisioned | challenged | attested
    Bytes platform_info;
    Bytes measurement;
    bool keys = false;          // platform key set generated
    Bytes helper_data;          // always empty here
    std::vector<Bytes> ssids;   // appended per session
  };

  /// Evidence about one finished session, extracted from ground truth.
  struct Evidence {
    Bytes ssid;
    Bytes verifier_id;
    Bytes attester_id;
    bool verifier_corrupted = false;
    bool attester_corrupted = false;
    // submitted record/signature multiplicity; anything but 1 flags
    int attester_record_occurrences = 1;
    int verifier_record_occurrences = 1;
    // PrfVrf table-lookup inputs
    bool attester_sig_genuine = true;
    bool attester_measurement_matches = true;
    bool verifier_sig_genuine = true;
    bool verifier_measurement_matches = true;
  };

  /// f flags per direction; 0 accepts, 1 rejects.
  struct Flags {
    int toward_attester = 0;
    int toward_verifier = 0;
  };

  void measurement(ByteView id, ByteView measurement, ByteView platform_info);
  void provision(ByteView id);
  void challenge(ByteView verifier_id, ByteView attester_id, ByteView ssid);
  void mut_report(ByteView verifier_id, ByteView attester_id, ByteView ssid);

  /// Throws MissingRecord when either party lacks a provisioned record.
  Flags verification(const Evidence& ev);

  std::optional<std::string> state_of(ByteView id) const;
  std::uint64_t decisions() const { return decisions_; }

 private:
  Record& require(ByteView id);

  std::map<Bytes, Record> tape_;
  std::uint64_t decisions_ = 0;
};

}  // namespace janus
