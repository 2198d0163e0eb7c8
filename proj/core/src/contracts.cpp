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

#include "janus/contracts.hpp"

#include <charconv>

#include "janus/identity.hpp"

namespace janus {

namespace {
constexpr const char* kInnerReportContract = "attestation.report";
}

const char* switch_value_name(SwitchValue v) {
  switch (v) {
    case SwitchValue::off_chain: return "off-chain";
    case SwitchValue::on_chain: return "on-chain";
    case SwitchValue::both: return "both";
  }
  return "?";
}

std::optional<SwitchValue> switch_value_parse(std::string_view name) {
  if (name == "off-chain" || name == "off") return SwitchValue::off_chain;
  if (name == "on-chain" || name == "on") return SwitchValue::on_chain;
  if (name == "both") return SwitchValue::both;
  return std::nullopt;
}

TrustRate evaluate_trust_rate(const DeviceConfig& config) {
  TrustRate t;
  if (auto it = config.find("svn"); it != config.end()) {
    t.svn = 20;
    int v = 0;
    auto [p, ec] = std::from_chars(it->second.data(), it->second.data() + it->second.size(), v);
    if (ec == std::errc() && p == it->second.data() + it->second.size() && v >= 2)
      t.svn = 40;  // present and recent
  }
  if (config.count("measurement")) t.measurement = 25;
  if (config.count("signer")) t.signer = 20;
  if (auto it = config.find("scheme"); it != config.end()) {
    const std::string& s = it->second;
    t.scheme = (s == "ecdsa-p256" || s == "p256" || s == "ed25519") ? 15 : 5;
  }
  t.r = t.svn + t.measurement + t.signer + t.scheme;
  return t;
}

Bytes credential_core(const CipherSuite& suite, ByteView m1, ByteView m2, ByteView aid,
                      ByteView vid) {
  ByteWriter w;
  w.field(m1);
  w.field(m2);
  w.field(aid);
  w.field(vid);
  (void)suite;
  return w.take();
}

Bytes credential_cr1(const CipherSuite& suite, ByteView k_gid, ByteView s_vid,
                     ByteView m1, ByteView m2, ByteView aid, ByteView vid) {
  return suite.keyed_hash(k_gid,
                          suite.keyed_hash(s_vid, credential_core(suite, m1, m2, aid, vid)));
}

Bytes credential_cr2(const CipherSuite& suite, ByteView s_gid, ByteView mk_aid,
                     ByteView m1, ByteView m2, ByteView aid, ByteView vid) {
  return suite.keyed_hash(s_gid,
                          suite.keyed_hash(mk_aid, credential_core(suite, m1, m2, aid, vid)));
}

void AuditFixture::put_attester(Bytes aid, AttesterEntry e) {
  attesters_[std::move(aid)] = std::move(e);
}

void AuditFixture::put_verifier(Bytes vid, VerifierEntry e) {
  verifiers_[std::move(vid)] = std::move(e);
}

std::optional<AuditFixture::AttesterEntry> AuditFixture::attester(ByteView aid) const {
  accesses_.fetch_add(1, std::memory_order_relaxed);
  auto it = attesters_.find(Bytes(aid.begin(), aid.end()));
  if (it == attesters_.end()) return std::nullopt;
  return it->second;
}

std::optional<AuditFixture::VerifierEntry> AuditFixture::verifier(ByteView vid) const {
  accesses_.fetch_add(1, std::memory_order_relaxed);
  auto it = verifiers_.find(Bytes(vid.begin(), vid.end()));
  if (it == verifiers_.end()) return std::nullopt;
  return it->second;
}

// ---- state layout -----------------------------------------------------

Bytes reg_manifest_addr(ByteView subject) {
  return state_address(kRegistrationContract, concat({to_bytes("manifest"), subject}));
}
Bytes reg_commitment_addr(ByteView subject) {
  return state_address(kRegistrationContract, concat({to_bytes("commitment"), subject}));
}
Bytes reg_config_addr(ByteView subject) {
  return state_address(kRegistrationContract, concat({to_bytes("config"), subject}));
}
Bytes reg_cert_addr(ByteView subject) {
  return state_address(kRegistrationContract, concat({to_bytes("cert"), subject}));
}
Bytes reg_account_addr(ByteView subject) {
  return state_address(kRegistrationContract, concat({to_bytes("account"), subject}));
}
Bytes reg_by_account_addr(ByteView account_addr) {
  return state_address(kRegistrationContract, concat({to_bytes("by-account"), account_addr}));
}
Bytes reg_kind_addr(ByteView subject) {
  return state_address(kRegistrationContract, concat({to_bytes("kind"), subject}));
}
Bytes reg_handshake_addr(ByteView owner_subject, std::string_view gid) {
  ByteWriter w;
  w.field(owner_subject);
  w.field(gid);
  return state_address(kRegistrationContract, concat({to_bytes("hs"), w.take()}));
}
Bytes attest_request_addr(ByteView aid) {
  return state_address(kAttestationContract, concat({to_bytes("request"), aid}));
}
Bytes attest_result_addr(ByteView aid, std::uint64_t n) {
  ByteWriter w;
  w.field(aid);
  w.u64(n);
  return state_address(kAttestationContract, concat({to_bytes("result"), w.take()}));
}
Bytes attest_last_result_addr(ByteView aid) {
  return state_address(kAttestationContract, concat({to_bytes("last-result"), aid}));
}
Bytes audit_credential_addr(ByteView ssid) {
  return state_address(kAuditContract, concat({to_bytes("credential"), ssid}));
}
Bytes audit_review_addr(ByteView ssid) {
  return state_address(kAuditContract, concat({to_bytes("review"), ssid}));
}
Bytes audit_rating_addr(ByteView subject) {
  return state_address(kAuditContract, concat({to_bytes("rating"), subject}));
}
Bytes switch_state_addr(ByteView aid) {
  return state_address(kSwitchContract, concat({to_bytes("state"), aid}));
}

std::optional<SwitchState> decode_switch_state(ByteView raw) {
  if (raw.size() != 2 || raw[0] > 2 || raw[1] > 2) return std::nullopt;
  return SwitchState{static_cast<SwitchValue>(raw[0]), static_cast<SwitchValue>(raw[1])};
}

SwitchState read_switch_state(const LedgerState& state, ByteView aid) {
  auto raw = state.get(switch_state_addr(aid));
  if (!raw) return SwitchState{};  // unset entries read as both/both
  auto parsed = decode_switch_state(*raw);
  return parsed ? *parsed : SwitchState{};
}

// ---- payload builders ---------------------------------------------------

Bytes build_attest_request_payload(ByteView aid) {
  ByteWriter w;
  w.u8(attestfn::kRequest);
  w.field(aid);
  return w.take();
}

Bytes build_attest_batch_payload(const std::vector<Transaction>& inner) {
  ByteWriter w;
  w.u8(attestfn::kBatch);
  w.u32(static_cast<std::uint32_t>(inner.size()));
  for (auto& tx : inner) w.field(tx.encode());
  return w.take();
}

Bytes build_audit_rating_payload(ByteView subject, const DeviceConfig& config) {
  ByteWriter w;
  w.u8(auditfn::kTrustRating);
  w.field(subject);
  w.field(encode_config(config));
  return w.take();
}

Bytes build_audit_submit_payload(const CredentialRecord& record) {
  ByteWriter w;
  w.u8(auditfn::kSubmitCredential);
  w.field(record.encode());
  return w.take();
}

Bytes build_audit_review_payload(ByteView ssid) {
  ByteWriter w;
  w.u8(auditfn::kReview);
  w.field(ssid);
  return w.take();
}

Bytes build_audit_spotcheck_payload(std::uint64_t seed, const std::vector<Bytes>& ssids) {
  ByteWriter w;
  w.u8(auditfn::kSpotCheck);
  w.u64(seed);
  w.u32(static_cast<std::uint32_t>(ssids.size()));
  for (auto& s : ssids) w.field(s);
  return w.take();
}

Bytes build_switch_payload(bool set_dc, SwitchValue value, ByteView aid) {
  ByteWriter w;
  w.u8(set_dc ? 0 : 1);
  w.u8(static_cast<std::uint8_t>(value));
  w.field(aid);
  return w.take();
}

Bytes report_signing_bytes(ByteView aid, std::uint64_t n, ByteView rm) {
  ByteWriter w;
  w.field(std::string_view("report"));
  w.field(aid);
  w.u64(n);
  w.field(rm);
  return w.take();
}

AttestationReportPayload build_report(const CipherSuite& suite, ByteView mk, ByteView aid,
                                      std::uint64_t n, ByteView rm, ByteView sigma) {
  ByteWriter pt;
  pt.u64(n);
  pt.field(rm);
  pt.field(sigma);

  ByteWriter ad;
  ad.field(aid);
  ad.u64(n);

  ByteWriter nonce_ctx;
  nonce_ctx.field(std::string_view("report"));
  nonce_ctx.field(aid);
  nonce_ctx.u64(n);

  auto sealed = suite.aead_seal(suite.aead_key_from(mk), ad.bytes(), pt.bytes(),
                                suite.derive_nonce(nonce_ctx.bytes()));
  AttestationReportPayload p;
  p.aid = Bytes(aid.begin(), aid.end());
  p.n = n;
  p.ct = std::move(sealed.ct);
  p.tag = std::move(sealed.tag);
  return p;
}

// ---- handlers -----------------------------------------------------------

namespace {

ContractResult fail(std::string reason) {
  ContractResult r;
  r.ok = false;
  r.reason = std::move(reason);
  return r;
}

bool is_registered(const LedgerState& state, ByteView subject) {
  return state.has(reg_manifest_addr(subject));
}

// sender account address -> registered subject id, if any
std::optional<Bytes> subject_of_account(const LedgerState& state, ByteView account) {
  return state.get(reg_by_account_addr(account));
}

ContractResult handle_register(const ValidatorContext& ctx, const LedgerState& state,
                               const Transaction& tx) {
  if (tx.sender != ctx.manager_addr) return fail("unauthorized");
  auto manifest = RegistrationManifest::decode(tx.payload);
  if (!manifest) return fail("malformed-manifest");
  if (is_registered(state, manifest->subject)) return fail("duplicate-registration");

  ContractResult r;
  r.ok = true;
  r.writes.emplace_back(reg_manifest_addr(manifest->subject), manifest->encode());

  ByteWriter commit;
  commit.u8(static_cast<std::uint8_t>(manifest->kind));
  commit.field(manifest->pid);
  commit.field(manifest->commitment);
  r.writes.emplace_back(reg_commitment_addr(manifest->subject), commit.take());

  r.writes.emplace_back(reg_config_addr(manifest->subject), encode_config(manifest->config));
  r.writes.emplace_back(reg_cert_addr(manifest->subject), manifest->cert);
  r.writes.emplace_back(reg_kind_addr(manifest->subject),
                        Bytes{static_cast<std::uint8_t>(manifest->kind)});
  for (auto& e : manifest->entries) {
    ByteWriter v;
    v.field(e.ct);
    v.field(e.tag);
    r.writes.emplace_back(reg_handshake_addr(manifest->subject, e.gid), v.take());
  }
  // account binding travels in the config to keep the manifest struct lean
  if (auto it = manifest->config.find("account-pk"); it != manifest->config.end()) {
    auto pk = hex_decode(it->second);
    if (!pk) return fail("malformed-account-pk");
    r.writes.emplace_back(reg_account_addr(manifest->subject), *pk);
    r.writes.emplace_back(reg_by_account_addr(sha256(*pk)), manifest->subject);
  }
  r.output = manifest->subject;
  return r;
}

struct CommitmentEntry {
  ParticipantKind kind;
  std::string pid;
  Bytes digest;
};

std::optional<CommitmentEntry> read_commitment(const LedgerState& state, ByteView subject) {
  auto raw = state.get(reg_commitment_addr(subject));
  if (!raw) return std::nullopt;
  ByteReader r(*raw);
  auto kind = r.u8();
  auto pid = r.field();
  auto digest = r.field();
  if (!kind || !pid || !digest || !r.done()) return std::nullopt;
  return CommitmentEntry{static_cast<ParticipantKind>(*kind), to_string(*pid),
                         std::move(*digest)};
}

ContractResult handle_attest_request(const ValidatorContext& ctx, const LedgerState& state,
                                     const Transaction& tx, ByteReader& r) {
  auto aid = r.field();
  if (!aid || !r.done()) return fail("malformed-request");
  if (!is_registered(state, *aid)) return fail("unknown-aid");
  auto sender_subject = subject_of_account(state, tx.sender);
  if (!sender_subject) return fail("unauthorized");

  SwitchState sw = read_switch_state(state, *aid);
  if (sw.dc == SwitchValue::off_chain || sw.as == SwitchValue::off_chain)
    return fail("switch-violation");

  std::uint64_t n = 0;
  if (auto prev = state.get(attest_request_addr(*aid))) {
    ByteReader pr(*prev);
    auto pn = pr.u64();
    if (pn) n = *pn;
  }
  ++n;

  ContractResult res;
  res.ok = true;
  ByteWriter v;
  v.u64(n);
  v.field(*sender_subject);
  res.writes.emplace_back(attest_request_addr(*aid), v.take());
  ByteWriter out;
  out.field(*aid);
  out.u64(n);
  res.output = out.take();
  (void)ctx;
  return res;
}

struct InnerVerdict {
  Bytes aid;
  std::uint64_t n = 0;
  bool trusted = false;
  std::string reason;
};

// Alg-style single-report verification; shared by batch items of any size.
InnerVerdict verify_report(const ValidatorContext& ctx, const LedgerState& state,
                           const Transaction& inner) {
  InnerVerdict v;
  auto payload = AttestationReportPayload::decode(inner.payload);
  if (!payload) {
    v.reason = "malformed-report";
    return v;
  }
  v.aid = payload->aid;
  v.n = payload->n;

  if (inner.contract != kInnerReportContract) {
    v.reason = "wrong-inner-contract";
    return v;
  }

  // the report must come from the aid's own account
  auto account_pk = state.get(reg_account_addr(payload->aid));
  if (!account_pk) {
    v.reason = "unknown-aid";
    return v;
  }
  if (inner.sender != sha256(*account_pk)) {
    v.reason = "sender-mismatch";
    return v;
  }
  bool sig_ok = false;
  try {
    sig_ok = ecdsa_verify(*account_pk, inner.signing_bytes(), inner.signature);
  } catch (const Error&) {
    sig_ok = false;
  }
  if (!sig_ok) {
    v.reason = "bad-tx-signature";
    return v;
  }

  // the embedded nonce must match the open request
  auto req = state.get(attest_request_addr(payload->aid));
  if (!req) {
    v.reason = "no-open-request";
    return v;
  }
  ByteReader rr(*req);
  auto req_n = rr.u64();
  if (!req_n || *req_n != payload->n) {
    v.reason = "stale-request";
    return v;
  }

  // retrieve Enc_Sg(MK_aid) for this validator's group and decrypt locally
  auto hs = state.get(reg_handshake_addr(payload->aid, ctx.gid));
  if (!hs) {
    v.reason = "missing-handshake-entry";
    return v;
  }
  ByteReader hr(*hs);
  auto hs_ct = hr.field();
  auto hs_tag = hr.field();
  if (!hs_ct || !hs_tag) {
    v.reason = "malformed-handshake-entry";
    return v;
  }
  ByteWriter hs_ad;
  hs_ad.field(std::string_view("hs"));
  hs_ad.field(payload->aid);
  hs_ad.field(ctx.gid);
  auto mk = ctx.suite->aead_open(ctx.suite->aead_key_from(ctx.group_secret), hs_ad.bytes(),
                                 *hs_ct, *hs_tag, ctx.suite->derive_nonce(hs_ad.bytes()));
  if (!mk) {
    v.reason = "handshake-entry-auth";
    return v;
  }

  // open the report ciphertext
  ByteWriter ad;
  ad.field(payload->aid);
  ad.u64(payload->n);
  ByteWriter nonce_ctx;
  nonce_ctx.field(std::string_view("report"));
  nonce_ctx.field(payload->aid);
  nonce_ctx.u64(payload->n);
  auto pt = ctx.suite->aead_open(ctx.suite->aead_key_from(*mk), ad.bytes(), payload->ct,
                                 payload->tag, ctx.suite->derive_nonce(nonce_ctx.bytes()));
  if (!pt) {
    v.reason = "report-auth";
    return v;
  }
  ByteReader pr(*pt);
  auto embedded_n = pr.u64();
  auto rm = pr.field();
  auto sigma = pr.field();
  if (!embedded_n || !rm || !sigma || !pr.done()) {
    v.reason = "malformed-plaintext";
    return v;
  }
  if (*embedded_n != payload->n) {
    v.reason = "nonce-mismatch";
    return v;
  }

  // sigma under the registered TEE certificate
  auto cert_raw = state.get(reg_cert_addr(payload->aid));
  if (!cert_raw) {
    v.reason = "missing-cert";
    return v;
  }
  auto cert = cert_parse(*cert_raw);
  if (!cert) {
    v.reason = "malformed-cert";
    return v;
  }
  bool sigma_ok = false;
  try {
    sigma_ok = ecdsa_verify(cert->pk, report_signing_bytes(payload->aid, payload->n, *rm),
                            *sigma);
  } catch (const Error&) {
    sigma_ok = false;
  }
  if (!sigma_ok) {
    v.reason = "report-signature";
    return v;
  }

  // t* against the registered commitment
  auto commitment = read_commitment(state, payload->aid);
  if (!commitment) {
    v.reason = "missing-commitment";
    return v;
  }
  ByteWriter tw;
  tw.field(*rm);
  tw.field(payload->aid);
  tw.field(commitment->pid);
  Bytes t_star = ctx.suite->hash(tw.bytes());
  if (t_star != commitment->digest) {
    v.reason = "commitment-mismatch";
    return v;
  }

  v.trusted = true;
  return v;
}

ContractResult handle_attest_batch(const ValidatorContext& ctx, const LedgerState& state,
                                   ByteReader& r) {
  auto count = r.u32();
  if (!count) return fail("malformed-batch");
  ContractResult res;
  res.ok = true;
  ByteWriter out;
  out.u32(*count);
  for (std::uint32_t i = 0; i < *count; ++i) {
    auto raw = r.field();
    if (!raw) return fail("malformed-batch");
    InnerVerdict v;
    auto inner = Transaction::decode(*raw);
    if (!inner) {
      v.reason = "malformed-inner-tx";
    } else {
      v = verify_report(ctx, state, *inner);
    }
    out.u8(v.trusted ? 1 : 0);
    out.field(v.reason);
    out.field(v.aid);
    out.u64(v.n);
    if (!v.aid.empty()) {
      ByteWriter rv;
      rv.u8(v.trusted ? 1 : 0);
      rv.field(v.reason);
      res.writes.emplace_back(attest_result_addr(v.aid, v.n), rv.take());
      ByteWriter lr;
      lr.u8(v.trusted ? 1 : 0);
      lr.u64(v.n);
      res.writes.emplace_back(attest_last_result_addr(v.aid), lr.take());
    }
  }
  if (!r.done()) return fail("malformed-batch");
  res.output = out.take();
  return res;
}

bool auditor_eligible(const LedgerState& state, ByteView account) {
  auto subject = subject_of_account(state, account);
  if (!subject) return false;
  // attested on-chain with a trusted latest result, or provisioned with the
  // auditor flag (stands for an already-attested participant at bootstrap)
  if (auto last = state.get(attest_last_result_addr(*subject))) {
    ByteReader lr(*last);
    auto ok = lr.u8();
    if (ok && *ok == 1) return true;
  }
  if (auto cfg_raw = state.get(reg_config_addr(*subject))) {
    auto cfg = decode_config(*cfg_raw);
    if (cfg) {
      auto it = cfg->find("auditor");
      if (it != cfg->end() && it->second == "true") return true;
    }
  }
  return false;
}

struct ReviewOutcome {
  bool found = false;
  std::string reason;
  bool trusted = false;
  bool matches_claim = false;
  Bytes ssid;
};

ReviewOutcome review_credential(const ValidatorContext& ctx, const LedgerState& state,
                                ByteView ssid) {
  ReviewOutcome out;
  out.ssid = Bytes(ssid.begin(), ssid.end());
  auto raw = state.get(audit_credential_addr(ssid));
  if (!raw) {
    out.reason = "missing-session-record";
    return out;
  }
  auto rec = CredentialRecord::decode(*raw);
  if (!rec) {
    out.reason = "malformed-record";
    return out;
  }
  if (!ctx.audit_fixture) {
    out.reason = "no-audit-channel";
    return out;
  }
  auto att = ctx.audit_fixture->attester(rec->aid);
  auto vrf = ctx.audit_fixture->verifier(rec->vid);
  if (!att || !vrf) {
    out.reason = "missing-session-record";
    return out;
  }
  out.found = true;
  Bytes cr1 = credential_cr1(*ctx.suite, att->k_gid, vrf->s, att->rm, vrf->m, rec->aid,
                             rec->vid);
  Bytes cr2 = credential_cr2(*ctx.suite, vrf->s_gid, att->mk, att->rm, vrf->m, rec->aid,
                             rec->vid);
  out.trusted = ct_equal(cr1, rec->cr1) && ct_equal(cr2, rec->cr2);
  out.matches_claim = (rec->claimed_trusted == 1) == out.trusted;
  return out;
}

ContractResult handle_audit(const ValidatorContext& ctx, const LedgerState& state,
                            const Transaction& tx) {
  ByteReader r(tx.payload);
  auto fn = r.u8();
  if (!fn) return fail("malformed-payload");

  switch (*fn) {
    case auditfn::kTrustRating: {
      auto subject = r.field();
      auto cfg_raw = r.field();
      if (!subject || !cfg_raw || !r.done()) return fail("malformed-payload");
      auto cfg = decode_config(*cfg_raw);
      if (!cfg) return fail("malformed-config");
      TrustRate t = evaluate_trust_rate(*cfg);
      ContractResult res;
      res.ok = true;
      ByteWriter out;
      out.u8(static_cast<std::uint8_t>(t.r));
      out.u8(static_cast<std::uint8_t>(t.svn));
      out.u8(static_cast<std::uint8_t>(t.measurement));
      out.u8(static_cast<std::uint8_t>(t.signer));
      out.u8(static_cast<std::uint8_t>(t.scheme));
      res.output = out.take();
      res.writes.emplace_back(audit_rating_addr(*subject),
                              Bytes{static_cast<std::uint8_t>(t.r)});
      return res;
    }
    case auditfn::kSubmitCredential: {
      auto raw = r.field();
      if (!raw || !r.done()) return fail("malformed-payload");
      auto rec = CredentialRecord::decode(*raw);
      if (!rec) return fail("malformed-record");
      if (!subject_of_account(state, tx.sender)) return fail("unauthorized");
      if (state.has(audit_credential_addr(rec->ssid)))
        return fail("duplicate-credential");
      ContractResult res;
      res.ok = true;
      res.writes.emplace_back(audit_credential_addr(rec->ssid), rec->encode());
      res.output = rec->ssid;
      return res;
    }
    case auditfn::kReview: {
      auto ssid = r.field();
      if (!ssid || !r.done()) return fail("malformed-payload");
      if (!auditor_eligible(state, tx.sender)) return fail("unauthorized-auditor");
      ReviewOutcome out = review_credential(ctx, state, *ssid);
      if (!out.found) return fail(out.reason);
      ContractResult res;
      res.ok = true;
      ByteWriter o;
      o.u8(out.trusted ? 1 : 0);
      o.u8(out.matches_claim ? 1 : 0);
      o.field(out.ssid);
      res.output = o.take();
      ByteWriter rv;
      rv.u8(out.trusted ? 1 : 0);
      rv.u8(out.matches_claim ? 1 : 0);
      res.writes.emplace_back(audit_review_addr(*ssid), rv.take());
      return res;
    }
    case auditfn::kSpotCheck: {
      auto seed = r.u64();
      auto count = r.u32();
      if (!seed || !count) return fail("malformed-payload");
      if (*count == 0) return fail("empty-list");
      if (!auditor_eligible(state, tx.sender)) return fail("unauthorized-auditor");
      std::vector<Bytes> ssids;
      for (std::uint32_t i = 0; i < *count; ++i) {
        auto s = r.field();
        if (!s) return fail("malformed-payload");
        ssids.push_back(std::move(*s));
      }
      if (!r.done()) return fail("malformed-payload");
      DetRng rng(*seed);
      std::uint64_t pick = rng.uniform_below(*count);
      ReviewOutcome out = review_credential(ctx, state, ssids[pick]);
      if (!out.found) return fail(out.reason);
      ContractResult res;
      res.ok = true;
      ByteWriter o;
      o.u32(static_cast<std::uint32_t>(pick));
      o.u8(out.trusted ? 1 : 0);
      o.u8(out.matches_claim ? 1 : 0);
      o.field(out.ssid);
      res.output = o.take();
      ByteWriter rv;
      rv.u8(out.trusted ? 1 : 0);
      rv.u8(out.matches_claim ? 1 : 0);
      res.writes.emplace_back(audit_review_addr(ssids[pick]), rv.take());
      return res;
    }
    default:
      return fail("unknown-function");
  }
}

ContractResult handle_switch(const LedgerState& state, const Transaction& tx) {
  ByteReader r(tx.payload);
  auto field = r.u8();
  auto value = r.u8();
  auto aid = r.field();
  if (!field || *field > 1 || !value || *value > 2 || !aid || !r.done())
    return fail("malformed-payload");
  if (!is_registered(state, *aid)) return fail("unknown-aid");

  auto target = AttesterIdentity::parse(*aid);
  if (!target) return fail("malformed-aid");
  SwitchState sw = read_switch_state(state, *aid);
  auto v = static_cast<SwitchValue>(*value);

  if (*field == 0) {
    // dc: only the attester's own account
    if (tx.sender != target->addr) return fail("unauthorized");
    sw.dc = v;
    // keep (dc = both) or (as = dc) committed: a narrowed dc drags as along
    if (sw.dc != SwitchValue::both && sw.as != sw.dc) sw.as = sw.dc;
  } else {
    // as: any registered verifier
    auto sender_subject = subject_of_account(state, tx.sender);
    if (!sender_subject) return fail("unauthorized");
    auto kind = state.get(reg_kind_addr(*sender_subject));
    if (!kind || kind->size() != 1 ||
        (*kind)[0] != static_cast<std::uint8_t>(ParticipantKind::verifier))
      return fail("unauthorized");
    if (!(sw.dc == SwitchValue::both || v == sw.dc)) return fail("switch-violation");
    sw.as = v;
  }

  ContractResult res;
  res.ok = true;
  Bytes encoded{static_cast<std::uint8_t>(sw.dc), static_cast<std::uint8_t>(sw.as)};
  res.writes.emplace_back(switch_state_addr(*aid), encoded);
  res.output = encoded;
  return res;
}

}  // namespace

std::optional<BatchOutcome> parse_batch_output(ByteView output) {
  ByteReader r(output);
  auto count = r.u32();
  if (!count) return std::nullopt;
  BatchOutcome out;
  for (std::uint32_t i = 0; i < *count; ++i) {
    auto trusted = r.u8();
    auto reason = r.field();
    auto aid = r.field();
    auto n = r.u64();
    if (!trusted || !reason || !aid || !n) return std::nullopt;
    out.items.push_back({std::move(*aid), *n, *trusted == 1, to_string(*reason)});
  }
  if (!r.done()) return std::nullopt;
  return out;
}

ContractMap make_contracts(ValidatorContext ctx) {
  auto shared = std::make_shared<ValidatorContext>(std::move(ctx));
  ContractMap m;
  m[kRegistrationContract] = [shared](const LedgerState& s, const Transaction& tx) {
    return handle_register(*shared, s, tx);
  };
  m[kAttestationContract] = [shared](const LedgerState& s, const Transaction& tx) {
    ByteReader r(tx.payload);
    auto fn = r.u8();
    if (!fn) return fail("malformed-payload");
    if (*fn == attestfn::kRequest) return handle_attest_request(*shared, s, tx, r);
    if (*fn == attestfn::kBatch) return handle_attest_batch(*shared, s, r);
    return fail("unknown-function");
  };
  m[kAuditContract] = [shared](const LedgerState& s, const Transaction& tx) {
    return handle_audit(*shared, s, tx);
  };
  m[kSwitchContract] = [shared](const LedgerState& s, const Transaction& tx) {
    return handle_switch(s, tx);
  };
  return m;
}

}  // namespace janus
