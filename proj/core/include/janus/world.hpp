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

#include <memory>
#include <vector>

#include "janus/ledger.hpp"
#include "janus/oracle.hpp"
#include "janus/orchestrator.hpp"
#include "janus/scenario.hpp"
#include "janus/session.hpp"

namespace janus {

struct ReviewResult {
  bool ok = false;          // contract accepted the call
  std::string reason;       // contract failure reason when not ok
  bool trusted = false;
  bool matches_claim = false;
  std::uint32_t picked = 0;  // spot check only
};

// A fully provisioned population: PUFs, accounts, groups, keys, handshake
// materials, registered manifests, validators and protocol nodes. Pure
// function of the scenario (seed included), which is what makes replay and
// the CLI's rebuild-from-scenario persistence work.
class World {
 public:
  static std::unique_ptr<World> provision(const Scenario& sc);

  AttesterNode& attester(std::size_t i) { return *attesters.at(i); }
  VerifierNode& verifier(std::size_t i) { return *verifiers.at(i); }

  /// Aggregator role: a resource-rich participant that wraps others'
  /// transactions; verifier 0 by convention here.
  const Account& aggregator_account() const { return verifiers.at(0)->profile().account; }

  std::uint64_t next_nonce(const Bytes& addr);
  SubmitResult submit(const Account& acc, const std::string& contract, Bytes payload);
  BlockCommit commit_block();

  /// Switch contract write; returns the receipt of the committed tx.
  TxReceipt set_switch(const Account& actor, bool set_dc, SwitchValue value,
                       ByteView aid);
  SwitchState switch_of(ByteView aid) const;

  /// On-chain attestation round trip: request tx, attester report, batched
  /// submission, quorum execution. Returns the per-report verdict.
  TxReceipt attest_request(std::size_t verifier_idx, ByteView aid);
  std::optional<std::uint64_t> open_request_nonce(ByteView aid) const;
  BatchOutcome::Item onchain_attest(std::size_t verifier_idx, std::size_t attester_idx);

  TxReceipt submit_credential(const CredentialRecord& record);
  ReviewResult audit_review(ByteView ssid, const Account& auditor);
  ReviewResult audit_spotcheck(std::uint64_t seed, const std::vector<Bytes>& ssids,
                               const Account& auditor);

  Scenario scenario;
  const CipherSuite* suite = nullptr;
  LogicalClock clock;
  PufRegistry pufs;
  std::unique_ptr<AttestationManager> manager;
  Account manager_account;
  std::shared_ptr<const AuditFixture> audit_fixture;
  std::unique_ptr<Ledger> ledger;
  std::unique_ptr<Resolver> resolver;
  std::vector<std::unique_ptr<AttesterNode>> attesters;
  std::vector<std::unique_ptr<VerifierNode>> verifiers;
  IdealFunctionality oracle;
  DetRng workload_rng{0};

 private:
  World() = default;

  std::map<Bytes, std::uint64_t> nonces_;
  std::mutex nonce_mu_;
};

}  // namespace janus
