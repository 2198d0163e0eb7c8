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

#include "janus/orchestrator.hpp"

#include "janus/errors.hpp"

namespace janus {

const char* flow_preference_name(FlowPreference p) {
  switch (p) {
    case FlowPreference::routine: return "routine";
    case FlowPreference::efficiency: return "efficiency";
    case FlowPreference::other_offchain: return "other-offchain";
    case FlowPreference::automatic: return "automatic";
  }
  return "?";
}

std::optional<FlowPreference> flow_preference_parse(const std::string& name) {
  for (auto p : {FlowPreference::routine, FlowPreference::efficiency,
                 FlowPreference::other_offchain, FlowPreference::automatic})
    if (name == flow_preference_name(p)) return p;
  return std::nullopt;
}

FlowDecision decide_flow(const SwitchState& sw, FlowPreference pref,
                         const FlowConstraints& env) {
  bool needs_on_chain = !env.direct_channel_up || env.quorum_required ||
                        env.distributed_app;

  if (needs_on_chain) {
    if (sw.dc == SwitchValue::off_chain)
      throw Error(Errc::no_viable_flow,
                  "environment demands on-chain but the device condition is off-chain");
    return {Flow::on_chain, true, SwitchValue::on_chain};
  }

  if (sw.dc == SwitchValue::on_chain)
    return {Flow::on_chain, true, SwitchValue::on_chain};

  // off-chain path: dc is off-chain or both
  FlowDecision d;
  d.flow = Flow::off_chain;
  if (pref == FlowPreference::other_offchain) {
    d.update_as = true;
    d.as_value = SwitchValue::off_chain;
  }
  return d;
}

}  // namespace janus
