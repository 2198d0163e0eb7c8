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

#include <stdexcept>
#include <string>

namespace janus {

enum class Errc {
  invalid_length,
  auth_failure,
  malformed_key,
  malformed_signature,
  destroyed,
  wrong_length,
  unknown_pid,
  duplicate_identity,
  empty_group,
  puf_destroyed,
  missing_ledger_entry,
  bad_signature,
  stale_nonce,
  no_quorum,
  unauthorized,
  duplicate_registration,
  unknown_aid,
  switch_violation,
  unauthorized_auditor,
  missing_session_record,
  empty_list,
  malformed_config,
  session_incomplete,
  scenario_invalid,
  missing_record,
  no_viable_flow,
  tag_mismatch,
  internal,
};

const char* errc_name(Errc c);

// Exceptions signal contract violations and unusable inputs. Expected
// protocol failures (a bad tag, an untrusted verdict) travel through return
// values instead, so a hostile message can never unwind a session loop.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace janus
