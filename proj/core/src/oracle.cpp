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

#include "janus/oracle.hpp"

#include "janus/errors.hpp"

namespace janus {

void IdealFunctionality::measurement(ByteView id, ByteView m, ByteView platform_info) {
  Record rec;
  rec.state = "measured";
  rec.measurement = Bytes(m.begin(), m.end());
  rec.platform_info = Bytes(platform_info.begin(), platform_info.end());
  tape_[Bytes(id.begin(), id.end())] = std::move(rec);
}

IdealFunctionality::Record& IdealFunctionality::require(ByteView id) {
  auto it = tape_.find(Bytes(id.begin(), id.end()));
  if (it == tape_.end()) throw Error(Errc::missing_record, "no tape record");
  return it->second;
}

void IdealFunctionality::provision(ByteView id) {
  Record& rec = require(id);
  rec.keys = true;
  rec.helper_data.clear();  // noiseless model: W stays empty
  rec.state = "provisioned";
}

void IdealFunctionality::challenge(ByteView verifier_id, ByteView attester_id,
                                   ByteView ssid) {
  Record& v = require(verifier_id);
  if (!v.keys) throw Error(Errc::missing_record, "verifier not provisioned");
  v.ssids.emplace_back(ssid.begin(), ssid.end());
  Record& a = require(attester_id);
  a.state = "challenged";
}

void IdealFunctionality::mut_report(ByteView verifier_id, ByteView attester_id,
                                    ByteView ssid) {
  Record& a = require(attester_id);
  if (!a.keys) throw Error(Errc::missing_record, "attester not provisioned");
  a.ssids.emplace_back(ssid.begin(), ssid.end());
  Record& v = require(verifier_id);
  v.state = "challenged";
}

IdealFunctionality::Flags IdealFunctionality::verification(const Evidence& ev) {
  Record& v = require(ev.verifier_id);
  Record& a = require(ev.attester_id);
  if (!v.keys || !a.keys) throw Error(Errc::missing_record, "party not provisioned");

  Flags f;
  if (ev.attester_corrupted || ev.attester_record_occurrences != 1) {
    f.toward_attester = 1;
  } else {
    bool prf_vrf = ev.attester_sig_genuine && ev.attester_measurement_matches;
    f.toward_attester = prf_vrf ? 0 : 1;
  }
  if (ev.verifier_corrupted || ev.verifier_record_occurrences != 1) {
    f.toward_verifier = 1;
  } else {
    bool prf_vrf = ev.verifier_sig_genuine && ev.verifier_measurement_matches;
    f.toward_verifier = prf_vrf ? 0 : 1;
  }

  v.state = "attested";
  a.state = "attested";
  ++decisions_;
  return f;
}

std::optional<std::string> IdealFunctionality::state_of(ByteView id) const {
  auto it = tape_.find(Bytes(id.begin(), id.end()));
  if (it == tape_.end()) return std::nullopt;
  return it->second.state;
}

}  // namespace janus
