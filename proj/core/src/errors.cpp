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

#include "janus/errors.hpp"

namespace janus {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_length: return "InvalidLength";
    case Errc::auth_failure: return "AuthFailure";
    case Errc::malformed_key: return "MalformedKey";
    case Errc::malformed_signature: return "MalformedSignature";
    case Errc::destroyed: return "Destroyed";
    case Errc::wrong_length: return "WrongLength";
    case Errc::unknown_pid: return "UnknownPid";
    case Errc::duplicate_identity: return "DuplicateIdentity";
    case Errc::empty_group: return "EmptyGroup";
    case Errc::puf_destroyed: return "PufDestroyed";
    case Errc::missing_ledger_entry: return "MissingLedgerEntry";
    case Errc::bad_signature: return "BadSignature";
    case Errc::stale_nonce: return "StaleNonce";
    case Errc::no_quorum: return "NoQuorum";
    case Errc::unauthorized: return "Unauthorized";
    case Errc::duplicate_registration: return "DuplicateRegistration";
    case Errc::unknown_aid: return "UnknownAid";
    case Errc::switch_violation: return "SwitchViolation";
    case Errc::unauthorized_auditor: return "UnauthorizedAuditor";
    case Errc::missing_session_record: return "MissingSessionRecord";
    case Errc::empty_list: return "EmptyList";
    case Errc::malformed_config: return "MalformedConfig";
    case Errc::session_incomplete: return "SessionIncomplete";
    case Errc::scenario_invalid: return "ScenarioInvalid";
    case Errc::missing_record: return "MissingRecord";
    case Errc::no_viable_flow: return "NoViableFlow";
    case Errc::tag_mismatch: return "TagMismatch";
    case Errc::internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace janus
