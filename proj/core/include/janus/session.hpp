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
#include <mutex>
#include <optional>
#include <set>

#include "janus/clock.hpp"
#include "janus/provisioning.hpp"
#include "janus/puf.hpp"
#include "janus/resolver.hpp"
#include "janus/rng.hpp"
#include "janus/suite.hpp"
#include "janus/wire.hpp"

namespace janus {

enum class Outcome : std::uint8_t { pending = 0, trusted, untrusted, failed };
const char* outcome_name(Outcome o);

struct NodeCounters {
  std::uint64_t frames_seen = 0;
  std::uint64_t rejected_cheap = 0;  // addressing, freshness, duplicates: pre-crypto
  std::uint64_t rejected_auth = 0;   // AEAD or MAC failures
  std::uint64_t aead_opens = 0;
  std::uint64_t signatures_created = 0;
  std::uint64_t signatures_verified = 0;
};

struct RaSessionView {
  Bytes ssid;
  Outcome outcome = Outcome::pending;
  std::string reason;
  int round = 0;
  Bytes session_key;  // SK = R_A ^ R_V once both sides reach round 3
  Bytes peer_id;
  Bytes peer_measurement;  // RM_aid on the verifier, M_vid on the attester
  Bytes credential;        // cr1 (attester) or cr2 (verifier)
  Bytes m1, m2;            // RM_aid, M_vid as known to this side
  std::uint64_t signatures_created = 0;
  std::uint64_t signatures_verified = 0;
};

// Signed content helpers, shared by both sides (exact bytes in docs/wire.md)
Bytes sigma_a_bytes(ByteView rm, ByteView r_a);
Bytes sigma_v_bytes(ByteView m, ByteView a3_bytes);

/// Post-session channel demo: one message under the agreed SK.
Envelope seal_session_data(const CipherSuite& suite, ByteView sk, ByteView sender,
                           ByteView receiver, ByteView ssid, std::uint64_t ts,
                           ByteView payload);
std::optional<Bytes> open_session_data(const CipherSuite& suite, ByteView sk,
                                       const Envelope& env);

// Attester runtime: RA responder, LA initiator/responder, on-chain report
// generator. Persistent protocol secrets are exactly (C_init, MK); the group
// key is recovered through the PUF whenever needed and lives only in session
// memory. Incoming frames pass the cheap gates (addressing, freshness,
// duplicate suppression) before any puf or cipher work runs.
class AttesterNode {
 public:
  AttesterNode(AttesterProfile profile, PufRegistry& pufs, const CipherSuite& suite,
               const Resolver& resolver, LogicalClock& clock,
               std::uint64_t freshness_window = kDefaultFreshnessWindow);

  const AttesterIdentity& ident() const { return profile_.ident; }
  Bytes aid() const { return profile_.ident.aid(); }
  const AttesterProfile& profile() const { return profile_; }

  /// RA responder entry point. Returns the reply envelope when one is due.
  std::optional<Envelope> handle_envelope(const Envelope& env);

  // Local attestation; sessions are keyed by the opening nonce n1.
  LocalMsg la_init(DetRng& rng);
  std::optional<LocalMsg> la_on_init(const LocalMsg& z1);
  std::optional<LocalMsg> la_on_response(const LocalMsg& z2);
  bool la_on_finish(const LocalMsg& z3);
  Outcome la_outcome(ByteView n1) const;
  std::string la_reason(ByteView n1) const;

  /// On-chain flow: wraps the encrypted report for request nonce n into an
  /// inner transaction ready for an aggregator.
  Transaction make_onchain_report(std::uint64_t request_n);

  const RaSessionView* session(ByteView ssid) const;
  std::vector<Bytes> session_ids() const;

  /// The storage-audit surface: everything this node persists that is secret.
  std::map<std::string, Bytes> persisted_secret_fields() const;
  const NodeCounters& counters() const { return counters_; }

  // Adversary surface, harness use only: models key extraction (A3), the
  // TEE-root-key leak that chip delayering promises (A4), and a compromised
  // enclave whose loaded code no longer matches the registered measurement.
  Bytes leak_tee_key() const { return profile_.tee.sk; }
  Bytes leak_mk() const { return profile_.secrets.mk; }
  void corrupt_measurement(Bytes fake_m) { profile_.measurement = std::move(fake_m); }

 private:
  struct RaState {
    RaSessionView view;
    Bytes r_t, r_v, r_a;
    Bytes s_j;  // peer communication key, learned in round 2
    Bytes k;    // recovered group key, session memory only
  };
  struct LaState {
    bool initiator = false;
    Bytes peer_aid;
    Bytes z1_bytes;
    Bytes z2_bytes;
    Outcome outcome = Outcome::pending;
    std::string reason;
  };

  std::optional<Envelope> handle_challenge(const Envelope& env);
  void handle_finish(const Envelope& env);
  bool fresh(std::uint64_t ts) const;
  bool device_can_eval(const std::string& pid) const;
  const PufInstance& own_puf() const;
  Bytes recover_k() const;  // two live PUF evaluations

  AttesterProfile profile_;
  PufRegistry* pufs_;
  const CipherSuite* suite_;
  const Resolver* resolver_;
  LogicalClock* clock_;
  std::uint64_t window_;
  std::map<Bytes, RaState> sessions_;
  std::set<std::pair<Bytes, std::uint8_t>> seen_;  // (ssid, msg type)
  std::map<Bytes, LaState> la_sessions_;           // by n1
  std::set<Bytes> la_seen_nonces_;
  NodeCounters counters_;
  mutable std::mutex mu_;
};

/// Verifier runtime: starts RA sessions, verifies reports, replies with its
/// own signed measurement. Persistent secrets are exactly (s, S): constant
/// size no matter how many attesters it ever talks to.
class VerifierNode {
 public:
  VerifierNode(VerifierProfile profile, const CipherSuite& suite,
               const Resolver& resolver, LogicalClock& clock,
               std::uint64_t freshness_window = kDefaultFreshnessWindow);

  const VerifierIdentity& ident() const { return profile_.ident; }
  Bytes vid() const { return profile_.ident.vid(); }
  const VerifierProfile& profile() const { return profile_; }

  /// Round 1. Throws UnknownAid when the target is not registered and
  /// SwitchViolation when its device condition pins it on-chain.
  Envelope start_session(ByteView aid, DetRng& rng);

  /// Round 3 (verify the report, reply with the own measurement).
  std::optional<Envelope> handle_envelope(const Envelope& env);

  const RaSessionView* session(ByteView ssid) const;
  std::vector<Bytes> session_ids() const;

  std::map<std::string, Bytes> persisted_secret_fields() const;
  const NodeCounters& counters() const { return counters_; }

  // Rogue-verifier knobs, harness use only.
  void corrupt_measurement(Bytes fake_m) { profile_.measurement = std::move(fake_m); }
  void corrupt_credential_key(Bytes fake_mk) { fake_mk_ = std::move(fake_mk); }
  void lie_about_outcome(bool enable) { lie_ = enable; }
  Bytes leak_s() const { return profile_.secrets.s; }

 private:
  struct RaState {
    RaSessionView view;
    Bytes n_v, r_t, r_v;
    Bytes mk;  // peer communication key from the handshake materials
  };

  bool fresh(std::uint64_t ts) const;

  VerifierProfile profile_;
  const CipherSuite* suite_;
  const Resolver* resolver_;
  LogicalClock* clock_;
  std::uint64_t window_;
  std::map<Bytes, RaState> sessions_;
  std::set<std::pair<Bytes, std::uint8_t>> seen_;
  NodeCounters counters_;
  Bytes fake_mk_;  // when set, poisons the credential computation
  bool lie_ = false;
  mutable std::mutex mu_;
};

}  // namespace janus
