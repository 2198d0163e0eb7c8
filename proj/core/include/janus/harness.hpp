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

#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "janus/scenario.hpp"
#include "janus/taint.hpp"
#include "janus/world.hpp"

namespace janus {

/// Every frame any transport delivered during a run, for byte accounting
/// and the secrecy scans.
class WireCapture {
 public:
  void add(std::string label, Bytes frame);
  std::uint64_t total_bytes() const;
  std::uint64_t total_frames() const;
  std::vector<std::pair<std::string, Bytes>> snapshot() const;

 private:
  mutable std::mutex mu_;
  std::vector<std::pair<std::string, Bytes>> frames_;
};

struct ChannelAttack {
  AdversaryKind kind = AdversaryKind::tamper;  // tamper | replay | reflect
  int round = 1;
  std::string field;  // tamper: sender|receiver|ssid|ts|nonce|ct|tag
};

struct SessionResult {
  Bytes ssid;
  std::string mode;  // off-chain | on-chain | local
  std::size_t attester = 0, verifier = 0;
  Outcome verifier_claim = Outcome::pending;  // claim toward the attester
  Outcome attester_claim = Outcome::pending;  // claim toward the verifier
  Outcome final_toward_attester = Outcome::pending;  // after audit corrections
  Outcome final_toward_verifier = Outcome::pending;
  int oracle_toward_attester = -1;  // f flags; -1 when not evaluated
  int oracle_toward_verifier = -1;
  bool oracle_agrees = true;
  bool audited = false;
  std::string detail;
  int envelopes = 0;
  std::uint64_t bytes_on_wire = 0;
  std::uint64_t sig_creates = 0;
  std::uint64_t sig_verifies = 0;
  std::uint64_t started_tick = 0;
  std::uint64_t finished_tick = 0;
  std::optional<CredentialRecord> credentials;
};

struct AdversaryRecord {
  std::string kind;
  int session = -1;
  int target = 0;
  bool detected = false;
  std::string detail;
};

struct MetricsReport {
  std::string scenario_name;
  std::uint64_t seed = 0;
  std::string suite;
  std::size_t n_bits = 0;
  std::vector<SessionResult> sessions;  // canonical order: mode, then ssid
  std::vector<AdversaryRecord> events;
  std::uint64_t trusted_toward_attester = 0;
  std::uint64_t oracle_agreements = 0;
  std::uint64_t oracle_decisions = 0;
  std::uint64_t puf_evals = 0;
  std::uint64_t manager_calls = 0;
  std::uint64_t audit_channel_reads = 0;
  std::uint64_t wire_frames = 0;
  std::uint64_t wire_bytes = 0;
  std::uint64_t blocks = 0;
  LedgerCounters ledger;
  std::uint64_t taint_findings = 0;
  std::string state_root_hex;
  std::uint64_t final_tick = 0;

  std::string to_json() const;  // canonical text, stable field order
};

// Drives sessions over the in-memory transport, injecting channel attacks,
// recording frames and reconciling protocol verdicts with the ideal
// functionality.
class SessionRunner {
 public:
  SessionRunner(World& world, WireCapture& capture)
      : world_(&world), capture_(&capture) {}

  SessionResult run_offchain(std::size_t verifier_idx, std::size_t attester_idx,
                             DetRng session_rng,
                             const std::optional<ChannelAttack>& attack = std::nullopt,
                             bool attester_corrupted = false,
                             bool verifier_corrupted = false);

  SessionResult run_local(std::size_t initiator_idx, std::size_t responder_idx,
                          DetRng session_rng,
                          const std::optional<ChannelAttack>& attack = std::nullopt);

  SessionResult run_onchain(std::size_t verifier_idx, std::size_t attester_idx);

  /// Submits the session's credential pair through the aggregator, runs the
  /// audit review and folds the result into the final verdicts.
  void audit_session(SessionResult& result);

  /// Compares against the ideal functionality and stamps the oracle fields.
  void consult_oracle(SessionResult& result, bool attester_corrupted,
                      bool verifier_corrupted);

 private:
  World* world_;
  WireCapture* capture_;
};

struct RunArtifacts {
  MetricsReport report;
  std::unique_ptr<World> world;
};

RunArtifacts run_scenario(const Scenario& sc);

/// Registers every secret the world holds plus all recorded CRP responses,
/// then scans wire captures, committed state and the block log.
std::vector<TaintFinding> scan_world(const World& world, const WireCapture& capture);

}  // namespace janus
