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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "janus/clock.hpp"

namespace janus {

enum class AdversaryKind {
  tamper,            // A1: flip a field of one protocol message
  replay,            // A1: re-deliver a captured message
  reflect,           // A1: bounce a message back to its sender
  flood,             // A2: junk request storm against one attester
  leak_tee_key,      // A3: expose the TEE signing key
  leak_mk,           // A3: expose the communication key
  destroy_puf,       // A4: invasive delayering of the instance
  corrupt_verifier,  // A6: lie / forge credential / wrong measurement / rogue validator
  crp_harvest,       // A5: collect everything on the wire, look for raw CRPs
};

const char* adversary_kind_name(AdversaryKind k);
std::optional<AdversaryKind> adversary_kind_parse(const std::string& name);

struct AdversaryEvent {
  AdversaryKind kind = AdversaryKind::tamper;
  int session = -1;       // workload session the event binds to; -1: global
  int target = 0;         // attester index (or verifier index for A6)
  int round = 2;          // message number the channel attack hits (1..3)
  std::string field;      // tamper target: sender|receiver|ssid|ts|nonce|ct|tag
  int count = 0;          // flood size
  std::string mode;       // corrupt_verifier: lie|credential|measurement|validator
};

struct PopulationSpec {
  std::size_t attesters = 2;
  std::size_t verifiers = 1;
  std::size_t attesters_per_device = 1;
  std::size_t attester_groups = 1;  // used when attesters_per_device == 1
  std::size_t verifier_groups = 1;
  std::size_t validators = 3;
};

struct WorkloadSpec {
  std::size_t sessions = 10;
  double on_chain_fraction = 0.0;
  std::size_t local_sessions = 0;
};

struct ScenarioOptions {
  std::uint64_t freshness_window = kDefaultFreshnessWindow;
  std::size_t jobs = 1;
  bool audit_sessions = true;
  bool live_resolver = false;  // default: caching resolver
};

/// Fully deterministic given the seed: population, keys, workload order and
/// adversary schedule all derive from it.
struct Scenario {
  std::string name = "scenario";
  std::uint64_t seed = 1;
  std::string suite = "ascon128";
  std::size_t n_bits = 128;
  PopulationSpec population;
  WorkloadSpec workload;
  std::vector<AdversaryEvent> adversary;
  ScenarioOptions options;

  /// Throws ScenarioInvalid with a reason on any ill-formed input.
  static Scenario from_json(const std::string& text);
  std::string to_json() const;
  void validate() const;
};

}  // namespace janus
