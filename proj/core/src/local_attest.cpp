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

// Local attestation: three (Z, t) messages between co-resident enclaves.
// Every tag is keyed with a PUF response that only a party on the same
// device can reproduce, and nested measurements travel masked by one-time
// pad responses, so the wire never carries a raw challenge-response pair.

#include "janus/errors.hpp"
#include "janus/session.hpp"

namespace janus {
namespace {

// C = trunc_n(H(Z_prev || nonce)): the derived challenge both sides recompute
Bytes derived_challenge(const CipherSuite& suite, ByteView prev_z, ByteView nonce,
                        std::size_t n_bytes) {
  ByteWriter w;
  w.field(prev_z);
  w.field(nonce);
  return truncated(suite.hash(w.bytes()), n_bytes);
}

// Round nonces after n1 are derived, unique per (previous message, sender,
// tick). They are public values; only the tag keys come from the PUF.
Bytes derived_round_nonce(const CipherSuite& suite, ByteView prev_z, ByteView sender,
                          std::uint64_t ts, std::size_t n_bytes) {
  ByteWriter w;
  w.field(std::string_view("la-nonce"));
  w.field(prev_z);
  w.field(sender);
  w.u64(ts);
  return truncated(suite.hash(w.bytes()), n_bytes);
}

}  // namespace

LocalMsg AttesterNode::la_init(DetRng& rng) {
  std::lock_guard lock(mu_);
  const PufInstance& puf = own_puf();
  LocalMsg z1;
  z1.msg_type = msg::kLaInit;
  z1.aid = aid();
  z1.ts = clock_->now();
  z1.pid = profile_.secrets.pid;
  z1.nonce = rng.bytes(puf.n_bytes());
  z1.sid = z1.nonce;
  Bytes key = puf.eval(z1.nonce);  // R_{n1}, never on the wire
  z1.tag = suite_->mac(key, z1.z_bytes());

  la_seen_nonces_.insert(z1.nonce);
  LaState st;
  st.initiator = true;
  st.z1_bytes = z1.z_bytes();
  la_sessions_[z1.sid] = std::move(st);
  return z1;
}

std::optional<LocalMsg> AttesterNode::la_on_init(const LocalMsg& z1) {
  std::lock_guard lock(mu_);
  ++counters_.frames_seen;
  const PufInstance& mine = own_puf();
  if (z1.msg_type != msg::kLaInit || !fresh(z1.ts) || z1.sid != z1.nonce ||
      z1.nonce.size() != mine.n_bytes() || la_seen_nonces_.count(z1.nonce) ||
      la_sessions_.count(z1.sid)) {
    ++counters_.rejected_cheap;
    return std::nullopt;
  }
  la_seen_nonces_.insert(z1.nonce);

  // co-residence: the named instance must live on this device
  if (!device_can_eval(z1.pid)) {
    ++counters_.rejected_cheap;
    return std::nullopt;
  }
  Bytes key;
  try {
    key = pufs_->instance(z1.pid).eval(z1.nonce);
  } catch (const Error&) {
    ++counters_.rejected_cheap;
    return std::nullopt;
  }
  if (!ct_equal(suite_->mac(key, z1.z_bytes()), z1.tag)) {
    ++counters_.rejected_auth;
    return std::nullopt;
  }

  // reply with the own instance (a different one) and a masked measurement
  LocalMsg z2;
  z2.msg_type = msg::kLaResponse;
  z2.sid = z1.sid;
  z2.aid = aid();
  z2.ts = clock_->now();
  z2.pid = profile_.secrets.pid;
  z2.nonce = derived_round_nonce(*suite_, z1.z_bytes(), aid(), z2.ts, mine.n_bytes());
  Bytes rm = mine.eval_bytes(profile_.measurement);
  z2.masked = xor_bytes(rm, mine.eval(z2.nonce));
  Bytes c2 = derived_challenge(*suite_, z1.z_bytes(), z2.nonce, mine.n_bytes());
  z2.tag = suite_->mac(mine.eval(c2), z2.z_bytes());
  la_seen_nonces_.insert(z2.nonce);

  LaState st;
  st.initiator = false;
  st.peer_aid = z1.aid;
  st.z1_bytes = z1.z_bytes();
  st.z2_bytes = z2.z_bytes();
  la_sessions_[z1.sid] = std::move(st);
  return z2;
}

std::optional<LocalMsg> AttesterNode::la_on_response(const LocalMsg& z2) {
  std::lock_guard lock(mu_);
  ++counters_.frames_seen;
  auto sit = la_sessions_.find(z2.sid);
  if (sit == la_sessions_.end() || !sit->second.initiator ||
      sit->second.outcome != Outcome::pending || z2.msg_type != msg::kLaResponse ||
      !fresh(z2.ts)) {
    ++counters_.rejected_cheap;
    return std::nullopt;
  }
  LaState& st = sit->second;
  const PufInstance& mine = own_puf();
  if (z2.nonce.size() != mine.n_bytes() || la_seen_nonces_.count(z2.nonce) ||
      !device_can_eval(z2.pid)) {
    ++counters_.rejected_cheap;
    return std::nullopt;
  }
  la_seen_nonces_.insert(z2.nonce);
  st.peer_aid = z2.aid;

  // the named instance must be the peer's registered one
  auto commitment = resolver_->commitment(z2.aid);
  if (!commitment || commitment->kind != ParticipantKind::attester ||
      commitment->pid != z2.pid) {
    st.outcome = Outcome::untrusted;
    st.reason = "pid-mismatch";
    return std::nullopt;
  }

  const PufInstance& peer_puf = pufs_->instance(z2.pid);
  Bytes r2;
  Bytes unmask_key;
  try {
    Bytes c2 = derived_challenge(*suite_, st.z1_bytes, z2.nonce, peer_puf.n_bytes());
    r2 = peer_puf.eval(c2);
    unmask_key = peer_puf.eval(z2.nonce);
  } catch (const Error&) {
    st.outcome = Outcome::failed;
    st.reason = "puf-destroyed";
    return std::nullopt;
  }
  if (!ct_equal(suite_->mac(r2, z2.z_bytes()), z2.tag)) {
    ++counters_.rejected_auth;
    st.outcome = Outcome::failed;
    st.reason = "tag-mismatch";
    return std::nullopt;
  }
  if (z2.masked.size() != unmask_key.size()) {
    st.outcome = Outcome::failed;
    st.reason = "malformed-masked-measurement";
    return std::nullopt;
  }
  Bytes peer_rm = xor_bytes(z2.masked, unmask_key);
  if (commitment->digest != attester_commitment(*suite_, peer_rm, z2.aid, z2.pid)) {
    st.outcome = Outcome::untrusted;
    st.reason = "peer-measurement";
    return std::nullopt;
  }

  // round 3: symmetric message with the own masked nested measurement
  LocalMsg z3;
  z3.msg_type = msg::kLaFinish;
  z3.sid = z2.sid;
  z3.aid = aid();
  z3.ts = clock_->now();
  z3.pid = profile_.secrets.pid;
  z3.nonce = derived_round_nonce(*suite_, z2.z_bytes(), aid(), z3.ts, mine.n_bytes());
  Bytes rm1 = mine.eval_bytes(profile_.measurement);
  z3.masked = xor_bytes(rm1, mine.eval(z3.nonce));
  Bytes c3 = derived_challenge(*suite_, z2.z_bytes(), z3.nonce, mine.n_bytes());
  z3.tag = suite_->mac(mine.eval(c3), z3.z_bytes());
  la_seen_nonces_.insert(z3.nonce);

  st.outcome = Outcome::trusted;
  st.reason.clear();
  return z3;
}

bool AttesterNode::la_on_finish(const LocalMsg& z3) {
  std::lock_guard lock(mu_);
  ++counters_.frames_seen;
  auto sit = la_sessions_.find(z3.sid);
  if (sit == la_sessions_.end() || sit->second.initiator ||
      sit->second.outcome != Outcome::pending || z3.msg_type != msg::kLaFinish ||
      !fresh(z3.ts)) {
    ++counters_.rejected_cheap;
    return false;
  }
  LaState& st = sit->second;
  if (z3.aid != st.peer_aid || la_seen_nonces_.count(z3.nonce) ||
      !device_can_eval(z3.pid)) {
    ++counters_.rejected_cheap;
    return false;
  }
  la_seen_nonces_.insert(z3.nonce);

  auto commitment = resolver_->commitment(z3.aid);
  if (!commitment || commitment->kind != ParticipantKind::attester ||
      commitment->pid != z3.pid) {
    st.outcome = Outcome::untrusted;
    st.reason = "pid-mismatch";
    return false;
  }
  const PufInstance& peer_puf = pufs_->instance(z3.pid);
  Bytes r3;
  Bytes unmask_key;
  try {
    Bytes c3 = derived_challenge(*suite_, st.z2_bytes, z3.nonce, peer_puf.n_bytes());
    r3 = peer_puf.eval(c3);
    unmask_key = peer_puf.eval(z3.nonce);
  } catch (const Error&) {
    st.outcome = Outcome::failed;
    st.reason = "puf-destroyed";
    return false;
  }
  if (!ct_equal(suite_->mac(r3, z3.z_bytes()), z3.tag)) {
    ++counters_.rejected_auth;
    st.outcome = Outcome::failed;
    st.reason = "tag-mismatch";
    return false;
  }
  if (z3.masked.size() != unmask_key.size()) {
    st.outcome = Outcome::failed;
    st.reason = "malformed-masked-measurement";
    return false;
  }
  Bytes peer_rm = xor_bytes(z3.masked, unmask_key);
  if (commitment->digest != attester_commitment(*suite_, peer_rm, z3.aid, z3.pid)) {
    st.outcome = Outcome::untrusted;
    st.reason = "peer-measurement";
    return false;
  }
  st.outcome = Outcome::trusted;
  st.reason.clear();
  return true;
}

Outcome AttesterNode::la_outcome(ByteView n1) const {
  std::lock_guard lock(mu_);
  auto it = la_sessions_.find(Bytes(n1.begin(), n1.end()));
  return it == la_sessions_.end() ? Outcome::pending : it->second.outcome;
}

std::string AttesterNode::la_reason(ByteView n1) const {
  std::lock_guard lock(mu_);
  auto it = la_sessions_.find(Bytes(n1.begin(), n1.end()));
  return it == la_sessions_.end() ? "unknown-session" : it->second.reason;
}

}  // namespace janus
