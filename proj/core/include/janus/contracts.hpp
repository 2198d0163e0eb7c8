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

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "janus/bytes.hpp"
#include "janus/ledger.hpp"
#include "janus/suite.hpp"
#include "janus/wire.hpp"

namespace janus {

// Contract names on the wire / CLI
inline constexpr const char* kRegistrationContract = "registration";
inline constexpr const char* kAttestationContract = "attestation";
inline constexpr const char* kAuditContract = "audit";
inline constexpr const char* kSwitchContract = "switch";

// Audit contract function selectors (payload tag byte)
namespace auditfn {
inline constexpr std::uint8_t kTrustRating = 0x01;
inline constexpr std::uint8_t kSubmitCredential = 0x02;
inline constexpr std::uint8_t kReview = 0x03;
inline constexpr std::uint8_t kSpotCheck = 0x04;
}  // namespace auditfn

// Attestation contract function selectors
namespace attestfn {
inline constexpr std::uint8_t kRequest = 0x01;
inline constexpr std::uint8_t kBatch = 0x02;
}  // namespace attestfn

enum class SwitchValue : std::uint8_t { off_chain = 0, on_chain = 1, both = 2 };

/// Per-attester switch fields. dc is written only by the attester's own
/// account, as by verifier accounts; committed state always satisfies
/// (dc = both) or (as = dc). Unregistered switch entries read as both/both.
struct SwitchState {
  SwitchValue dc = SwitchValue::both;
  SwitchValue as = SwitchValue::both;
};

const char* switch_value_name(SwitchValue v);
std::optional<SwitchValue> switch_value_parse(std::string_view name);

/// Trust rate r in [0, 100], the documented additive rubric over device
/// config fields (docs/trust-rating.md). Component improvements can only
/// raise the total.
struct TrustRate {
  int r = 0;
  int svn = 0;          // 0 / 20 / 40, presence then recency
  int measurement = 0;  // 0 / 25
  int signer = 0;       // 0 / 20
  int scheme = 0;       // 0 / 5 / 15, strength of the signature scheme
};

TrustRate evaluate_trust_rate(const DeviceConfig& config);

// Session snapshot algebra shared by the protocol side and the audit side:
//   cr1 = H_Kgid(H_svid(m1 || m2 || aid || vid))
//   cr2 = H_Sgid(H_MKaid(m1 || m2 || aid || vid))
Bytes credential_core(const CipherSuite& suite, ByteView m1, ByteView m2, ByteView aid,
                      ByteView vid);
Bytes credential_cr1(const CipherSuite& suite, ByteView k_gid, ByteView s_vid,
                     ByteView m1, ByteView m2, ByteView aid, ByteView vid);
Bytes credential_cr2(const CipherSuite& suite, ByteView s_gid, ByteView mk_aid,
                     ByteView m1, ByteView m2, ByteView aid, ByteView vid);

// Audit review needs the genuine keys and measurements. They come from the
// Manager over a sealed offline channel that only audit execution may read;
// accesses are counted so the Manager-offline invariant stays checkable.
class AuditFixture {
 public:
  struct AttesterEntry {
    Bytes k_gid;  // group key
    Bytes mk;     // communication key
    Bytes rm;     // nested measurement (m1)
  };
  struct VerifierEntry {
    Bytes s_gid;
    Bytes s;
    Bytes m;  // enclave measurement (m2)
  };

  void put_attester(Bytes aid, AttesterEntry e);
  void put_verifier(Bytes vid, VerifierEntry e);

  std::optional<AttesterEntry> attester(ByteView aid) const;
  std::optional<VerifierEntry> verifier(ByteView vid) const;

  std::uint64_t accesses() const { return accesses_.load(std::memory_order_relaxed); }

 private:
  std::map<Bytes, AttesterEntry> attesters_;
  std::map<Bytes, VerifierEntry> verifiers_;
  mutable std::atomic<std::uint64_t> accesses_{0};
};

/// What one validator node brings to contract execution beyond the shared
/// state: its verifier-group secret (validators are verifier-group members;
/// S_g is loaded locally and never read from state) and the audit fixture.
struct ValidatorContext {
  const CipherSuite* suite = nullptr;
  Bytes manager_addr;
  std::string gid;
  Bytes group_secret;  // S_gid of this validator's group
  std::shared_ptr<const AuditFixture> audit_fixture;
};

/// Handler registry for one node. All four handlers are pure functions of
/// (state, tx) given the context; every error is a deterministic reason
/// string, never an exception, so replicas always vote.
ContractMap make_contracts(ValidatorContext ctx);

// State layout helpers (addresses under the "janus" namespace)
Bytes reg_manifest_addr(ByteView subject);
Bytes reg_commitment_addr(ByteView subject);
Bytes reg_config_addr(ByteView subject);
Bytes reg_cert_addr(ByteView subject);
Bytes reg_account_addr(ByteView subject);
Bytes reg_by_account_addr(ByteView account_addr);
Bytes reg_kind_addr(ByteView subject);
Bytes reg_handshake_addr(ByteView owner_subject, std::string_view gid);
Bytes attest_request_addr(ByteView aid);
Bytes attest_result_addr(ByteView aid, std::uint64_t n);
Bytes attest_last_result_addr(ByteView aid);
Bytes audit_credential_addr(ByteView ssid);
Bytes audit_review_addr(ByteView ssid);
Bytes audit_rating_addr(ByteView subject);
Bytes switch_state_addr(ByteView aid);

std::optional<SwitchState> decode_switch_state(ByteView raw);
SwitchState read_switch_state(const LedgerState& state, ByteView aid);

/// Payload builders for the CLI and the protocol layer.
Bytes build_attest_request_payload(ByteView aid);
Bytes build_attest_batch_payload(const std::vector<Transaction>& inner);
Bytes build_audit_rating_payload(ByteView subject, const DeviceConfig& config);
Bytes build_audit_submit_payload(const CredentialRecord& record);
Bytes build_audit_review_payload(ByteView ssid);
Bytes build_audit_spotcheck_payload(std::uint64_t seed, const std::vector<Bytes>& ssids);
Bytes build_switch_payload(bool set_dc, SwitchValue value, ByteView aid);

/// Signature content of the on-chain report: binds nonce, identity and
/// measurement. sigma = sign(tee_sk, "report" || aid || n || RM).
Bytes report_signing_bytes(ByteView aid, std::uint64_t n, ByteView rm);

/// Builds the encrypted on-chain report C = Enc_MK(n || RM || sigma).
AttestationReportPayload build_report(const CipherSuite& suite, ByteView mk,
                                      ByteView aid, std::uint64_t n, ByteView rm,
                                      ByteView sigma);

struct BatchOutcome {
  struct Item {
    Bytes aid;
    std::uint64_t n = 0;
    bool trusted = false;
    std::string reason;
  };
  std::vector<Item> items;
};

std::optional<BatchOutcome> parse_batch_output(ByteView output);

}  // namespace janus
