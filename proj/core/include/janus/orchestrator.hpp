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

#include <optional>
#include <string>

#include "janus/contracts.hpp"

namespace janus {

enum class Flow { off_chain, on_chain };

enum class FlowPreference {
  routine,        // periodic check: off-chain, no attestation-state write
  efficiency,     // real-time demand: off-chain, no attestation-state write
  other_offchain, // privacy or personal reasons: off-chain after an as update
  automatic,      // follow the device condition
};

std::optional<FlowPreference> flow_preference_parse(const std::string& name);
const char* flow_preference_name(FlowPreference p);

struct FlowConstraints {
  bool direct_channel_up = true;
  bool quorum_required = false;
  bool distributed_app = false;
};

struct FlowDecision {
  Flow flow = Flow::off_chain;
  bool update_as = false;      // write as before attesting
  SwitchValue as_value = SwitchValue::both;
};

/// Switch rules: the verifier picks on-chain when the environment forces it
/// (no direct channel, quorum demanded, distributed deployment) or when the
/// device condition pins the attester on-chain; off-chain otherwise.
/// Routine and efficiency runs skip the as write; any other off-chain run
/// updates as first; every on-chain run updates as. Throws NoViableFlow
/// when the constraints contradict the device condition.
FlowDecision decide_flow(const SwitchState& sw, FlowPreference pref,
                         const FlowConstraints& env);

}  // namespace janus
