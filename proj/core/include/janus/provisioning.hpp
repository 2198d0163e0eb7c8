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
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "janus/contracts.hpp"
#include "janus/identity.hpp"
#include "janus/ledger.hpp"
#include "janus/puf.hpp"
#include "janus/suite.hpp"
#include "janus/wire.hpp"

namespace janus {

/// What an attester persists after provisioning: the public initial
/// challenge and its communication key. The group key is never stored; it
/// is recovered on demand as MK ^ MR ^ R through two live PUF calls.
struct AttesterSecrets {
  Bytes c_init;
  Bytes mk;
  std::string pid;
};

/// What a verifier persists: its communication key and its group key.
/// Constant-size regardless of how many peers it ever talks to.
struct VerifierSecrets {
  Bytes s;
  Bytes s_group;
};

/// R = puf(C_init), MR = puf(R): the masking pair behind the key algebra.
struct AttesterKeyMaterial {
  Bytes c_init;
  Bytes r;
  Bytes mr;
};

AttesterKeyMaterial attester_initial_material(const PufInstance& puf, DetRng& rng);

/// MK = K_gid ^ R ^ MR with R, MR re-evaluated through the PUF.
/// Throws PufDestroyed when the instance is gone.
AttesterSecrets derive_attester_keys(const PufInstance& puf, ByteView c_init,
                                     ByteView k_gid);

/// K_gid = MK ^ MR ^ R, again through live PUF evaluations.
Bytes recover_group_key(const PufInstance& puf, const AttesterSecrets& secrets);

Bytes attester_commitment(const CipherSuite& suite, ByteView rm, ByteView aid,
                          std::string_view pid);
Bytes verifier_commitment(const CipherSuite& suite, ByteView m, ByteView vid);

HandshakeEntry seal_handshake_entry(const CipherSuite& suite, std::string_view gid,
                                    ByteView group_key, ByteView subject,
                                    ByteView comm_key);
std::optional<Bytes> open_handshake_entry(const CipherSuite& suite, std::string_view gid,
                                          ByteView group_key, ByteView subject,
                                          ByteView ct, ByteView tag);

struct AttesterProfile {
  AttesterIdentity ident;
  Account account;
  SigningKeyPair tee;  // original TEE attestation key, certificate included
  AttesterSecrets secrets;
  Bytes measurement;  // M: enclave measurement, re-measurable at runtime
  DeviceConfig config;
};

struct VerifierProfile {
  VerifierIdentity ident;
  Account account;
  SigningKeyPair tee;
  VerifierSecrets secrets;
  Bytes measurement;
  DeviceConfig config;
};

// The trusted offline bootstrapper. Groups participants, collects key
// material over the assumed-authenticated offline channel, derives group
// keys, precomputes handshake materials and builds registration manifests.
// Every public call bumps a counter so tests can assert the Manager stays
// out of online attestation; the audit channel is the one sanctioned
// carve-out and is counted separately (AuditFixture::accesses).
class AttestationManager {
 public:
  explicit AttestationManager(const CipherSuite& suite) : suite_(&suite) {}

  /// Forms one group from the given members and returns its gid. Members
  /// are (account address, DSN/VON) pairs. Throws EmptyGroup and
  /// DuplicateIdentity.
  std::string setup_group(ParticipantKind kind,
                          const std::vector<std::pair<Bytes, std::string>>& members);

  void submit_attester_material(const AttesterIdentity& ident, std::string pid,
                                ByteView r, ByteView mr, ByteView rm, ByteView m);
  void submit_verifier_material(const VerifierIdentity& ident, ByteView s, ByteView m);

  /// K_gid (attester groups) or S_gid (verifier groups); defined once every
  /// member of the group has submitted.
  Bytes group_key(const std::string& gid) const;

  /// MK_aid or s_vid.
  Bytes communication_key(ByteView subject) const;

  /// One sealed entry per existing group, for this subject's key.
  std::vector<HandshakeEntry> build_handshake_materials(ByteView subject) const;

  RegistrationManifest build_manifest(ByteView subject, DeviceConfig config,
                                      Bytes cert, ByteView account_pk) const;

  /// Everything audit review may retrieve: keys plus both measurements.
  std::shared_ptr<AuditFixture> seal_audit_fixture() const;

  std::vector<std::string> group_ids() const;
  std::uint64_t call_count() const { return calls_; }

 private:
  struct SubjectRecord {
    ParticipantKind kind;
    std::string gid;
    std::string pid;  // attesters
    Bytes r, mr, rm;  // attesters
    Bytes s;          // verifiers
    Bytes m;          // enclave measurement
  };

  const SubjectRecord& record(ByteView subject) const;
  Bytes group_key_internal(const std::string& gid) const;
  Bytes communication_key_internal(ByteView subject) const;

  const CipherSuite* suite_;
  std::map<std::string, std::pair<ParticipantKind, std::vector<Bytes>>> groups_;
  std::map<Bytes, SubjectRecord> subjects_;
  std::map<Bytes, bool> seen_members_;  // (kind||addr||tag) uniqueness
  std::size_t attester_groups_ = 0;
  std::size_t verifier_groups_ = 0;
  mutable std::uint64_t calls_ = 0;
};

}  // namespace janus
