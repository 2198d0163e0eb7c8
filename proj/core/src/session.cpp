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

#include "janus/session.hpp"

#include "janus/errors.hpp"

namespace janus {

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::pending: return "pending";
    case Outcome::trusted: return "trusted";
    case Outcome::untrusted: return "untrusted";
    case Outcome::failed: return "failed";
  }
  return "?";
}

Bytes sigma_a_bytes(ByteView rm, ByteView r_a) {
  ByteWriter w;
  w.field(rm);
  w.field(r_a);
  return w.take();
}

Bytes sigma_v_bytes(ByteView m, ByteView a3_bytes) {
  ByteWriter w;
  w.field(m);
  w.field(a3_bytes);
  return w.take();
}

namespace {

Bytes round_nonce(const CipherSuite& suite, ByteView ssid, std::uint8_t round) {
  ByteWriter w;
  w.field(ssid);
  w.u8(round);
  return suite.derive_nonce(w.bytes());
}

Bytes make_ssid(const CipherSuite& suite, ByteView vid, ByteView aid, ByteView n_v,
                std::uint64_t ts) {
  ByteWriter w;
  w.field(vid);
  w.field(aid);
  w.field(n_v);
  w.u64(ts);
  return truncated(suite.hash(w.bytes()), 16);
}

}  // namespace

Envelope seal_session_data(const CipherSuite& suite, ByteView sk, ByteView sender,
                           ByteView receiver, ByteView ssid, std::uint64_t ts,
                           ByteView payload) {
  Envelope e;
  e.msg_type = msg::kSessionData;
  e.a = {Bytes(sender.begin(), sender.end()), Bytes(receiver.begin(), receiver.end()),
         Bytes(ssid.begin(), ssid.end()), ts, {}};
  auto sealed = suite.aead_seal(suite.aead_key_from(sk), e.ad_bytes(), payload,
                                round_nonce(suite, ssid, 9));
  e.ct = std::move(sealed.ct);
  e.tag = std::move(sealed.tag);
  return e;
}

std::optional<Bytes> open_session_data(const CipherSuite& suite, ByteView sk,
                                       const Envelope& env) {
  if (env.msg_type != msg::kSessionData) return std::nullopt;
  return suite.aead_open(suite.aead_key_from(sk), env.ad_bytes(), env.ct, env.tag,
                         round_nonce(suite, env.a.ssid, 9));
}

// ---- AttesterNode -------------------------------------------------------

AttesterNode::AttesterNode(AttesterProfile profile, PufRegistry& pufs,
                           const CipherSuite& suite, const Resolver& resolver,
                           LogicalClock& clock, std::uint64_t freshness_window)
    : profile_(std::move(profile)),
      pufs_(&pufs),
      suite_(&suite),
      resolver_(&resolver),
      clock_(&clock),
      window_(freshness_window) {}

bool AttesterNode::fresh(std::uint64_t ts) const {
  std::uint64_t now = clock_->now();
  std::uint64_t age = now >= ts ? now - ts : ts - now;
  return age <= window_;
}

bool AttesterNode::device_can_eval(const std::string& pid) const {
  if (!pufs_->has(pid)) return false;
  return pufs_->dsn_of(pid) == profile_.ident.dsn;
}

const PufInstance& AttesterNode::own_puf() const {
  return pufs_->instance(profile_.secrets.pid);
}

Bytes AttesterNode::recover_k() const {
  return recover_group_key(own_puf(), profile_.secrets);
}

std::optional<Envelope> AttesterNode::handle_envelope(const Envelope& env) {
  std::lock_guard lock(mu_);
  ++counters_.frames_seen;
  if (env.msg_type == msg::kRaChallenge) return handle_challenge(env);
  if (env.msg_type == msg::kRaFinish) {
    handle_finish(env);
    return std::nullopt;
  }
  ++counters_.rejected_cheap;
  return std::nullopt;
}

std::optional<Envelope> AttesterNode::handle_challenge(const Envelope& env) {
  // cheap gates before any puf or cipher work
  if (env.a.receiver != aid() || !fresh(env.a.ts) ||
      env.a.nonce.size() != own_puf().n_bytes() ||
      seen_.count({env.a.ssid, env.msg_type})) {
    ++counters_.rejected_cheap;
    return std::nullopt;
  }
  seen_.insert({env.a.ssid, env.msg_type});

  Bytes k;
  try {
    k = recover_k();
  } catch (const Error&) {
    ++counters_.rejected_cheap;
    return std::nullopt;  // puf destroyed: the device cannot attest any more
  }

  auto hs = resolver_->handshake_entry(env.a.sender, profile_.ident.gid);
  if (!hs) {
    ++counters_.rejected_cheap;
    return std::nullopt;
  }
  ++counters_.aead_opens;
  auto s_j = open_handshake_entry(*suite_, profile_.ident.gid, k, env.a.sender, hs->ct,
                                  hs->tag);
  if (!s_j) {
    ++counters_.rejected_auth;
    return std::nullopt;
  }

  ++counters_.aead_opens;
  auto pt = suite_->aead_open(suite_->aead_key_from(*s_j), env.ad_bytes(), env.ct,
                              env.tag, round_nonce(*suite_, env.a.ssid, 1));
  if (!pt) {
    ++counters_.rejected_auth;
    return std::nullopt;
  }
  std::size_t nb = own_puf().n_bytes();
  if (pt->size() != 2 * nb) {
    ++counters_.rejected_auth;
    return std::nullopt;
  }
  Bytes r_t(pt->begin(), pt->begin() + static_cast<std::ptrdiff_t>(nb));
  Bytes r_v(pt->begin() + static_cast<std::ptrdiff_t>(nb), pt->end());

  Bytes rm = own_puf().eval_bytes(profile_.measurement);
  Bytes r_a = own_puf().eval(env.a.nonce);
  Bytes sigma = ecdsa_sign(profile_.tee.sk, sigma_a_bytes(rm, r_a));
  ++counters_.signatures_created;

  Envelope reply;
  reply.msg_type = msg::kRaResponse;
  reply.a = {aid(), env.a.sender, env.a.ssid, clock_->now(), env.a.nonce};

  ByteWriter pt2;
  pt2.field(rm);
  pt2.field(r_a);
  pt2.field(sigma);
  Bytes round2_key = xor_bytes(profile_.secrets.mk, r_t);
  auto sealed = suite_->aead_seal(suite_->aead_key_from(round2_key), reply.ad_bytes(),
                                  pt2.bytes(), round_nonce(*suite_, env.a.ssid, 2));
  reply.ct = std::move(sealed.ct);
  reply.tag = std::move(sealed.tag);

  RaState st;
  st.view.ssid = env.a.ssid;
  st.view.round = 2;
  st.view.peer_id = env.a.sender;
  st.view.m1 = rm;
  st.view.signatures_created = 1;
  st.r_t = std::move(r_t);
  st.r_v = std::move(r_v);
  st.r_a = std::move(r_a);
  st.s_j = std::move(*s_j);
  st.k = std::move(k);
  sessions_[env.a.ssid] = std::move(st);
  return reply;
}

void AttesterNode::handle_finish(const Envelope& env) {
  auto it = sessions_.find(env.a.ssid);
  if (it == sessions_.end() || it->second.view.round != 2 ||
      env.a.receiver != aid() || env.a.sender != it->second.view.peer_id ||
      !fresh(env.a.ts) || seen_.count({env.a.ssid, env.msg_type})) {
    ++counters_.rejected_cheap;
    return;
  }
  seen_.insert({env.a.ssid, env.msg_type});
  RaState& st = it->second;

  Bytes sk = xor_bytes(st.r_a, st.r_v);
  ++counters_.aead_opens;
  auto pt = suite_->aead_open(suite_->aead_key_from(sk), env.ad_bytes(), env.ct, env.tag,
                              round_nonce(*suite_, env.a.ssid, 3));
  if (!pt) {
    ++counters_.rejected_auth;
    return;  // channel garbage; the session still awaits the genuine finish
  }
  ByteReader r(*pt);
  auto m_j = r.field();
  auto sigma_v = r.field();
  if (!m_j || !sigma_v || !r.done()) {
    ++counters_.rejected_auth;
    return;
  }

  st.view.round = 3;
  auto cert_raw = resolver_->cert(env.a.sender);
  auto cert = cert_raw ? cert_parse(*cert_raw) : std::nullopt;
  if (!cert) {
    st.view.outcome = Outcome::failed;
    st.view.reason = "missing-verifier-cert";
    return;
  }
  bool sig_ok = false;
  try {
    sig_ok = ecdsa_verify(cert->pk, sigma_v_bytes(*m_j, env.ad_bytes()), *sigma_v);
  } catch (const Error&) {
    sig_ok = false;
  }
  ++counters_.signatures_verified;
  ++st.view.signatures_verified;
  if (!sig_ok) {
    st.view.outcome = Outcome::untrusted;
    st.view.reason = "verifier-signature";
    return;
  }

  auto commitment = resolver_->commitment(env.a.sender);
  if (!commitment || commitment->kind != ParticipantKind::verifier ||
      commitment->digest != verifier_commitment(*suite_, *m_j, env.a.sender)) {
    st.view.outcome = Outcome::untrusted;
    st.view.reason = "verifier-measurement";
    return;
  }

  st.view.outcome = Outcome::trusted;
  st.view.session_key = sk;
  st.view.peer_measurement = *m_j;
  st.view.m2 = *m_j;
  st.view.credential = credential_cr1(*suite_, st.k, st.s_j, st.view.m1, *m_j, aid(),
                                      env.a.sender);
}

Transaction AttesterNode::make_onchain_report(std::uint64_t request_n) {
  std::lock_guard lock(mu_);
  Bytes rm = own_puf().eval_bytes(profile_.measurement);
  Bytes sigma = ecdsa_sign(profile_.tee.sk, report_signing_bytes(aid(), request_n, rm));
  ++counters_.signatures_created;
  auto payload = build_report(*suite_, profile_.secrets.mk, aid(), request_n, rm, sigma);
  return profile_.account.make_tx("attestation.report", payload.encode(), request_n);
}

const RaSessionView* AttesterNode::session(ByteView ssid) const {
  std::lock_guard lock(mu_);
  auto it = sessions_.find(Bytes(ssid.begin(), ssid.end()));
  return it == sessions_.end() ? nullptr : &it->second.view;
}

std::vector<Bytes> AttesterNode::session_ids() const {
  std::lock_guard lock(mu_);
  std::vector<Bytes> out;
  for (auto& [ssid, st] : sessions_) out.push_back(ssid);
  return out;
}

std::map<std::string, Bytes> AttesterNode::persisted_secret_fields() const {
  return {{"C_init", profile_.secrets.c_init}, {"MK", profile_.secrets.mk}};
}

// ---- VerifierNode -------------------------------------------------------

VerifierNode::VerifierNode(VerifierProfile profile, const CipherSuite& suite,
                           const Resolver& resolver, LogicalClock& clock,
                           std::uint64_t freshness_window)
    : profile_(std::move(profile)),
      suite_(&suite),
      resolver_(&resolver),
      clock_(&clock),
      window_(freshness_window) {}

bool VerifierNode::fresh(std::uint64_t ts) const {
  std::uint64_t now = clock_->now();
  std::uint64_t age = now >= ts ? now - ts : ts - now;
  return age <= window_;
}

Envelope VerifierNode::start_session(ByteView aid, DetRng& rng) {
  std::lock_guard lock(mu_);
  auto commitment = resolver_->commitment(aid);
  if (!commitment || commitment->kind != ParticipantKind::attester)
    throw Error(Errc::unknown_aid, "target not registered");
  if (resolver_->switch_state(aid).dc == SwitchValue::on_chain)
    throw Error(Errc::switch_violation, "device condition pins the target on-chain");

  std::size_t nb = profile_.secrets.s.size();
  Bytes n_v = rng.bytes(nb);
  Bytes r_t = rng.bytes(nb);
  Bytes r_v = rng.bytes(nb);

  // the handshake materials are resolvable (and cacheable) before round 1
  auto hs = resolver_->handshake_entry(aid, profile_.ident.gid);
  if (!hs) throw Error(Errc::missing_ledger_entry, "no handshake entry for target");
  auto mk = open_handshake_entry(*suite_, profile_.ident.gid, profile_.secrets.s_group,
                                 aid, hs->ct, hs->tag);
  if (!mk) throw Error(Errc::missing_ledger_entry, "handshake entry does not open");

  Envelope e;
  e.msg_type = msg::kRaChallenge;
  std::uint64_t ts = clock_->now();
  Bytes ssid = make_ssid(*suite_, vid(), aid, n_v, ts);
  e.a = {vid(), Bytes(aid.begin(), aid.end()), ssid, ts, n_v};
  auto sealed = suite_->aead_seal(suite_->aead_key_from(profile_.secrets.s),
                                  e.ad_bytes(), concat({r_t, r_v}),
                                  round_nonce(*suite_, ssid, 1));
  e.ct = std::move(sealed.ct);
  e.tag = std::move(sealed.tag);

  RaState st;
  st.view.ssid = ssid;
  st.view.round = 1;
  st.view.peer_id = Bytes(aid.begin(), aid.end());
  st.n_v = std::move(n_v);
  st.r_t = std::move(r_t);
  st.r_v = std::move(r_v);
  st.mk = std::move(*mk);
  sessions_[ssid] = std::move(st);
  return e;
}

std::optional<Envelope> VerifierNode::handle_envelope(const Envelope& env) {
  std::lock_guard lock(mu_);
  ++counters_.frames_seen;
  if (env.msg_type != msg::kRaResponse) {
    ++counters_.rejected_cheap;
    return std::nullopt;
  }
  auto it = sessions_.find(env.a.ssid);
  if (it == sessions_.end() || it->second.view.round != 1 ||
      env.a.receiver != vid() || env.a.sender != it->second.view.peer_id ||
      !fresh(env.a.ts) || seen_.count({env.a.ssid, env.msg_type})) {
    ++counters_.rejected_cheap;
    return std::nullopt;
  }
  seen_.insert({env.a.ssid, env.msg_type});
  RaState& st = it->second;

  Bytes round2_key = xor_bytes(st.mk, st.r_t);
  ++counters_.aead_opens;
  auto pt = suite_->aead_open(suite_->aead_key_from(round2_key), env.ad_bytes(), env.ct,
                              env.tag, round_nonce(*suite_, env.a.ssid, 2));
  if (!pt) {
    ++counters_.rejected_auth;
    return std::nullopt;  // not authenticated: keep waiting for the real reply
  }

  // authenticated from here on: failures are protocol verdicts, not noise
  st.view.round = 3;
  if (env.a.nonce != st.n_v) {
    st.view.outcome = Outcome::failed;
    st.view.reason = "session-binding";
    return std::nullopt;
  }
  ByteReader r(*pt);
  auto rm = r.field();
  auto r_a = r.field();
  auto sigma = r.field();
  if (!rm || !r_a || !sigma || !r.done() || r_a->size() != st.r_v.size()) {
    st.view.outcome = Outcome::failed;
    st.view.reason = "malformed-response";
    return std::nullopt;
  }

  auto cert_raw = resolver_->cert(env.a.sender);
  auto cert = cert_raw ? cert_parse(*cert_raw) : std::nullopt;
  if (!cert) {
    st.view.outcome = Outcome::failed;
    st.view.reason = "missing-attester-cert";
    return std::nullopt;
  }
  bool sig_ok = false;
  try {
    sig_ok = ecdsa_verify(cert->pk, sigma_a_bytes(*rm, *r_a), *sigma);
  } catch (const Error&) {
    sig_ok = false;
  }
  ++counters_.signatures_verified;
  ++st.view.signatures_verified;
  if (!sig_ok) {
    st.view.outcome = Outcome::untrusted;
    st.view.reason = "report-signature";
    return std::nullopt;
  }

  auto commitment = resolver_->commitment(env.a.sender);
  if (!commitment || commitment->kind != ParticipantKind::attester ||
      commitment->digest !=
          attester_commitment(*suite_, *rm, env.a.sender, commitment->pid)) {
    st.view.outcome = Outcome::untrusted;
    st.view.reason = "commitment-mismatch";
    return std::nullopt;
  }

  Bytes sk = xor_bytes(*r_a, st.r_v);
  Envelope reply;
  reply.msg_type = msg::kRaFinish;
  reply.a = {vid(), env.a.sender, env.a.ssid, clock_->now(), {}};
  Bytes m_j = profile_.measurement;
  Bytes sigma_v = ecdsa_sign(profile_.tee.sk, sigma_v_bytes(m_j, reply.ad_bytes()));
  ++counters_.signatures_created;
  ++st.view.signatures_created;
  ByteWriter pt3;
  pt3.field(m_j);
  pt3.field(sigma_v);
  auto sealed = suite_->aead_seal(suite_->aead_key_from(sk), reply.ad_bytes(),
                                  pt3.bytes(), round_nonce(*suite_, env.a.ssid, 3));
  reply.ct = std::move(sealed.ct);
  reply.tag = std::move(sealed.tag);

  st.view.outcome = lie_ ? Outcome::untrusted : Outcome::trusted;
  st.view.session_key = sk;
  st.view.peer_measurement = *rm;
  st.view.m1 = *rm;
  st.view.m2 = m_j;
  const Bytes& cred_mk = fake_mk_.empty() ? st.mk : fake_mk_;
  st.view.credential = credential_cr2(*suite_, profile_.secrets.s_group, cred_mk,
                                      *rm, m_j, env.a.sender, vid());
  return reply;
}

const RaSessionView* VerifierNode::session(ByteView ssid) const {
  std::lock_guard lock(mu_);
  auto it = sessions_.find(Bytes(ssid.begin(), ssid.end()));
  return it == sessions_.end() ? nullptr : &it->second.view;
}

std::vector<Bytes> VerifierNode::session_ids() const {
  std::lock_guard lock(mu_);
  std::vector<Bytes> out;
  for (auto& [ssid, st] : sessions_) out.push_back(ssid);
  return out;
}

std::map<std::string, Bytes> VerifierNode::persisted_secret_fields() const {
  return {{"s", profile_.secrets.s}, {"S", profile_.secrets.s_group}};
}

}  // namespace janus
