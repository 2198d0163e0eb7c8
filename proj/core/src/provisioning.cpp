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

#include "janus/provisioning.hpp"

#include "janus/errors.hpp"

namespace janus {

AttesterKeyMaterial attester_initial_material(const PufInstance& puf, DetRng& rng) {
  AttesterKeyMaterial km;
  km.c_init = rng.bytes(puf.n_bytes());  // arbitrary, public
  km.r = puf.eval(km.c_init);
  km.mr = puf.eval(km.r);
  return km;
}

AttesterSecrets derive_attester_keys(const PufInstance& puf, ByteView c_init,
                                     ByteView k_gid) {
  if (!puf.intact()) throw Error(Errc::puf_destroyed, puf.pid());
  Bytes r = puf.eval(c_init);
  Bytes mr = puf.eval(r);
  AttesterSecrets out;
  out.c_init = Bytes(c_init.begin(), c_init.end());
  out.mk = xor_bytes(xor_bytes(k_gid, r), mr);
  out.pid = puf.pid();
  return out;
}

Bytes recover_group_key(const PufInstance& puf, const AttesterSecrets& secrets) {
  if (!puf.intact()) throw Error(Errc::puf_destroyed, puf.pid());
  Bytes r = puf.eval(secrets.c_init);
  Bytes mr = puf.eval(r);
  return xor_bytes(xor_bytes(secrets.mk, mr), r);
}

Bytes attester_commitment(const CipherSuite& suite, ByteView rm, ByteView aid,
                          std::string_view pid) {
  ByteWriter w;
  w.field(rm);
  w.field(aid);
  w.field(pid);
  return suite.hash(w.bytes());
}

Bytes verifier_commitment(const CipherSuite& suite, ByteView m, ByteView vid) {
  ByteWriter w;
  w.field(m);
  w.field(vid);
  return suite.hash(w.bytes());
}

static Bytes handshake_context(ByteView subject, std::string_view gid) {
  ByteWriter w;
  w.field(std::string_view("hs"));
  w.field(subject);
  w.field(gid);
  return w.take();
}

HandshakeEntry seal_handshake_entry(const CipherSuite& suite, std::string_view gid,
                                    ByteView group_key, ByteView subject,
                                    ByteView comm_key) {
  Bytes ctx = handshake_context(subject, gid);
  auto sealed = suite.aead_seal(suite.aead_key_from(group_key), ctx, comm_key,
                                suite.derive_nonce(ctx));
  return HandshakeEntry{std::string(gid), std::move(sealed.ct), std::move(sealed.tag)};
}

std::optional<Bytes> open_handshake_entry(const CipherSuite& suite, std::string_view gid,
                                          ByteView group_key, ByteView subject,
                                          ByteView ct, ByteView tag) {
  Bytes ctx = handshake_context(subject, gid);
  return suite.aead_open(suite.aead_key_from(group_key), ctx, ct, tag,
                         suite.derive_nonce(ctx));
}

std::string AttestationManager::setup_group(
    ParticipantKind kind, const std::vector<std::pair<Bytes, std::string>>& members) {
  ++calls_;
  if (members.empty()) throw Error(Errc::empty_group, "a group needs members");
  std::string gid = kind == ParticipantKind::attester
                        ? "ag" + std::to_string(attester_groups_)
                        : "vg" + std::to_string(verifier_groups_);
  for (auto& [addr, tag] : members) {
    ByteWriter key;
    key.u8(static_cast<std::uint8_t>(kind));
    key.field(addr);
    key.field(tag);
    auto k = key.take();
    if (seen_members_.count(k))
      throw Error(Errc::duplicate_identity, "member already grouped");
    seen_members_[k] = true;
  }
  groups_[gid] = {kind, {}};
  (kind == ParticipantKind::attester ? attester_groups_ : verifier_groups_)++;
  return gid;
}

void AttestationManager::submit_attester_material(const AttesterIdentity& ident,
                                                  std::string pid, ByteView r, ByteView mr,
                                                  ByteView rm, ByteView m) {
  ++calls_;
  auto git = groups_.find(ident.gid);
  if (git == groups_.end() || git->second.first != ParticipantKind::attester)
    throw Error(Errc::unknown_aid, "group not set up: " + ident.gid);
  Bytes subject = ident.aid();
  if (subjects_.count(subject))
    throw Error(Errc::duplicate_identity, "material already submitted");
  SubjectRecord rec;
  rec.kind = ParticipantKind::attester;
  rec.gid = ident.gid;
  rec.pid = std::move(pid);
  rec.r = Bytes(r.begin(), r.end());
  rec.mr = Bytes(mr.begin(), mr.end());
  rec.rm = Bytes(rm.begin(), rm.end());
  rec.m = Bytes(m.begin(), m.end());
  subjects_[subject] = std::move(rec);
  git->second.second.push_back(std::move(subject));
}

void AttestationManager::submit_verifier_material(const VerifierIdentity& ident, ByteView s,
                                                  ByteView m) {
  ++calls_;
  auto git = groups_.find(ident.gid);
  if (git == groups_.end() || git->second.first != ParticipantKind::verifier)
    throw Error(Errc::unknown_aid, "group not set up: " + ident.gid);
  Bytes subject = ident.vid();
  if (subjects_.count(subject))
    throw Error(Errc::duplicate_identity, "material already submitted");
  SubjectRecord rec;
  rec.kind = ParticipantKind::verifier;
  rec.gid = ident.gid;
  rec.s = Bytes(s.begin(), s.end());
  rec.m = Bytes(m.begin(), m.end());
  subjects_[subject] = std::move(rec);
  git->second.second.push_back(std::move(subject));
}

Bytes AttestationManager::group_key(const std::string& gid) const {
  ++calls_;
  return group_key_internal(gid);
}

Bytes AttestationManager::group_key_internal(const std::string& gid) const {
  auto git = groups_.find(gid);
  if (git == groups_.end()) throw Error(Errc::unknown_aid, "no group " + gid);
  auto& members = git->second.second;
  if (members.empty()) throw Error(Errc::empty_group, "no submissions for " + gid);
  Bytes acc;
  for (auto& subject : members) {
    const auto& rec = subjects_.at(subject);
    const Bytes& share = git->second.first == ParticipantKind::attester ? rec.r : rec.s;
    acc = acc.empty() ? share : xor_bytes(acc, share);
  }
  return acc;
}

const AttestationManager::SubjectRecord& AttestationManager::record(
    ByteView subject) const {
  auto it = subjects_.find(Bytes(subject.begin(), subject.end()));
  if (it == subjects_.end())
    throw Error(Errc::missing_record, "unknown participant");
  return it->second;
}

Bytes AttestationManager::communication_key(ByteView subject) const {
  ++calls_;
  return communication_key_internal(subject);
}

Bytes AttestationManager::communication_key_internal(ByteView subject) const {
  const auto& rec = record(subject);
  if (rec.kind == ParticipantKind::verifier) return rec.s;
  Bytes k = group_key_internal(rec.gid);
  return xor_bytes(xor_bytes(k, rec.r), rec.mr);
}

std::vector<HandshakeEntry> AttestationManager::build_handshake_materials(
    ByteView subject) const {
  ++calls_;
  Bytes comm = communication_key_internal(subject);
  std::vector<HandshakeEntry> out;
  for (auto& [gid, group] : groups_) {
    Bytes gk = group_key_internal(gid);
    out.push_back(seal_handshake_entry(*suite_, gid, gk, subject, comm));
  }
  return out;
}

RegistrationManifest AttestationManager::build_manifest(ByteView subject,
                                                        DeviceConfig config, Bytes cert,
                                                        ByteView account_pk) const {
  ++calls_;
  const auto& rec = record(subject);
  RegistrationManifest m;
  m.kind = rec.kind;
  m.subject = Bytes(subject.begin(), subject.end());
  if (rec.kind == ParticipantKind::attester) {
    if (rec.rm.empty()) throw Error(Errc::puf_destroyed, "no nested measurement");
    m.pid = rec.pid;
    m.commitment = attester_commitment(*suite_, rec.rm, subject, rec.pid);
  } else {
    m.commitment = verifier_commitment(*suite_, rec.m, subject);
  }
  m.config = std::move(config);
  m.config["account-pk"] = hex_encode(account_pk);
  m.cert = std::move(cert);
  Bytes comm = communication_key_internal(subject);
  for (auto& [gid, group] : groups_)
    m.entries.push_back(
        seal_handshake_entry(*suite_, gid, group_key_internal(gid), subject, comm));
  return m;
}

std::shared_ptr<AuditFixture> AttestationManager::seal_audit_fixture() const {
  ++calls_;
  auto fixture = std::make_shared<AuditFixture>();
  for (auto& [subject, rec] : subjects_) {
    if (rec.kind == ParticipantKind::attester) {
      Bytes k = group_key_internal(rec.gid);
      AuditFixture::AttesterEntry e;
      e.k_gid = k;
      e.mk = xor_bytes(xor_bytes(k, rec.r), rec.mr);
      e.rm = rec.rm;
      fixture->put_attester(subject, std::move(e));
    } else {
      Bytes s_gid = group_key_internal(rec.gid);
      AuditFixture::VerifierEntry e;
      e.s_gid = s_gid;
      e.s = rec.s;
      e.m = rec.m;
      fixture->put_verifier(subject, std::move(e));
    }
  }
  return fixture;
}

std::vector<std::string> AttestationManager::group_ids() const {
  std::vector<std::string> out;
  out.reserve(groups_.size());
  for (auto& [gid, g] : groups_) out.push_back(gid);
  return out;
}

}  // namespace janus
