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

#include "janus/world.hpp"

#include "janus/errors.hpp"
#include "janus/provisioning.hpp"

namespace janus {

std::unique_ptr<World> World::provision(const Scenario& sc) {
  sc.validate();
  auto w = std::unique_ptr<World>(new World());
  w->scenario = sc;
  w->suite = &CipherSuite::get(sc.suite);
  w->pufs.enable_crp_recording();

  DetRng root(sc.seed);
  DetRng acc_rng = root.fork("accounts");
  DetRng puf_rng = root.fork("pufs");
  DetRng mat_rng = root.fork("material");
  w->workload_rng = root.fork("workload");

  w->manager = std::make_unique<AttestationManager>(*w->suite);
  w->manager_account = Account::create(acc_rng, to_bytes("manager"));

  const std::size_t n_att = sc.population.attesters;
  const std::size_t per_device = sc.population.attesters_per_device;

  // devices and PUF instances (a device hosts one instance per attester slot)
  struct AttSeed {
    std::string dsn, pid;
    Account account;
    SigningKeyPair tee;
  };
  std::vector<AttSeed> att_seeds;
  for (std::size_t k = 0; k < n_att; ++k) {
    AttSeed seed;
    std::size_t device = k / per_device;
    seed.dsn = "dev" + std::to_string(device);
    seed.pid = "pid-" + seed.dsn + "-" + std::to_string(k % per_device);
    w->pufs.create_random(seed.pid, seed.dsn, puf_rng, sc.n_bits);
    std::string label = "att" + std::to_string(k);
    seed.account = Account::create(acc_rng, to_bytes(label + "-account"));
    seed.tee = SigningKeyPair::generate(acc_rng, to_bytes(label));
    att_seeds.push_back(std::move(seed));
  }

  struct VrfSeed {
    std::string von;
    Account account;
    SigningKeyPair tee;
  };
  std::vector<VrfSeed> vrf_seeds;
  for (std::size_t j = 0; j < sc.population.verifiers; ++j) {
    VrfSeed seed;
    seed.von = "own" + std::to_string(j);
    std::string label = "vrf" + std::to_string(j);
    seed.account = Account::create(acc_rng, to_bytes(label + "-account"));
    seed.tee = SigningKeyPair::generate(acc_rng, to_bytes(label));
    vrf_seeds.push_back(std::move(seed));
  }

  // grouping: co-located attesters share their device's group; otherwise
  // round-robin over the requested group count
  std::size_t att_group_count =
      per_device > 1 ? (n_att + per_device - 1) / per_device : sc.population.attester_groups;
  std::vector<std::vector<std::size_t>> att_groups(att_group_count);
  for (std::size_t k = 0; k < n_att; ++k) {
    std::size_t g = per_device > 1 ? k / per_device : k % att_group_count;
    att_groups[g].push_back(k);
  }
  std::vector<std::string> att_gid(n_att);
  for (auto& members : att_groups) {
    if (members.empty()) continue;
    std::vector<std::pair<Bytes, std::string>> ms;
    for (auto k : members) ms.emplace_back(att_seeds[k].account.addr, att_seeds[k].dsn);
    std::string gid = w->manager->setup_group(ParticipantKind::attester, ms);
    for (auto k : members) att_gid[k] = gid;
  }

  std::vector<std::vector<std::size_t>> vrf_groups(sc.population.verifier_groups);
  for (std::size_t j = 0; j < vrf_seeds.size(); ++j)
    vrf_groups[j % vrf_groups.size()].push_back(j);
  std::vector<std::string> vrf_gid(vrf_seeds.size());
  for (auto& members : vrf_groups) {
    if (members.empty()) continue;
    std::vector<std::pair<Bytes, std::string>> ms;
    for (auto j : members) ms.emplace_back(vrf_seeds[j].account.addr, vrf_seeds[j].von);
    std::string gid = w->manager->setup_group(ParticipantKind::verifier, ms);
    for (auto j : members) vrf_gid[j] = gid;
  }

  // key material flows to the Manager over the offline channel
  std::vector<AttesterProfile> att_profiles;
  for (std::size_t k = 0; k < n_att; ++k) {
    AttesterProfile p;
    p.ident = {sha256(att_seeds[k].account.keys.pk), att_seeds[k].dsn, att_gid[k]};
    p.account = att_seeds[k].account;
    p.tee = att_seeds[k].tee;
    p.measurement = mat_rng.bytes(32);
    const PufInstance& puf = w->pufs.instance(att_seeds[k].pid);
    AttesterKeyMaterial km = attester_initial_material(puf, mat_rng);
    Bytes rm = puf.eval_bytes(p.measurement);
    w->manager->submit_attester_material(p.ident, att_seeds[k].pid, km.r, km.mr, rm,
                                         p.measurement);
    p.secrets.c_init = km.c_init;
    p.secrets.pid = att_seeds[k].pid;
    att_profiles.push_back(std::move(p));
  }
  std::vector<VerifierProfile> vrf_profiles;
  for (std::size_t j = 0; j < vrf_seeds.size(); ++j) {
    VerifierProfile p;
    p.ident = {sha256(vrf_seeds[j].account.keys.pk), vrf_seeds[j].von, vrf_gid[j]};
    p.account = vrf_seeds[j].account;
    p.tee = vrf_seeds[j].tee;
    p.measurement = mat_rng.bytes(32);
    p.secrets.s = mat_rng.bytes(sc.n_bits / 8);
    w->manager->submit_verifier_material(p.ident, p.secrets.s, p.measurement);
    vrf_profiles.push_back(std::move(p));
  }

  // group keys are defined once submissions are complete
  for (std::size_t k = 0; k < n_att; ++k) {
    const PufInstance& puf = w->pufs.instance(att_profiles[k].secrets.pid);
    Bytes k_gid = w->manager->group_key(att_gid[k]);
    AttesterSecrets derived =
        derive_attester_keys(puf, att_profiles[k].secrets.c_init, k_gid);
    att_profiles[k].secrets = std::move(derived);
  }
  for (std::size_t j = 0; j < vrf_profiles.size(); ++j)
    vrf_profiles[j].secrets.s_group = w->manager->group_key(vrf_gid[j]);

  // device configs; verifiers double as bootstrap auditors
  for (std::size_t k = 0; k < n_att; ++k) {
    DeviceConfig& cfg = att_profiles[k].config;
    cfg["svn"] = "3";
    cfg["scheme"] = "ecdsa-p256";
    cfg["signer"] = hex_encode(sha256(att_profiles[k].tee.pk));
    cfg["measurement"] = "nested-puf";
    cfg["product"] = "janus-device";
  }
  for (std::size_t j = 0; j < vrf_profiles.size(); ++j) {
    DeviceConfig& cfg = vrf_profiles[j].config;
    cfg["svn"] = "3";
    cfg["scheme"] = "ecdsa-p256";
    cfg["signer"] = hex_encode(sha256(vrf_profiles[j].tee.pk));
    cfg["measurement"] = "enclave-digest";
    cfg["auditor"] = "true";
  }

  // the audit fixture seals what review may later retrieve
  w->audit_fixture = w->manager->seal_audit_fixture();

  // ledger with verifier-group validators
  std::vector<std::pair<Bytes, Bytes>> accounts;
  accounts.emplace_back(w->manager_account.addr, w->manager_account.keys.pk);
  for (auto& p : att_profiles) accounts.emplace_back(p.account.addr, p.account.keys.pk);
  for (auto& p : vrf_profiles) accounts.emplace_back(p.account.addr, p.account.keys.pk);
  w->ledger = std::make_unique<Ledger>(std::move(accounts));

  auto vrf_group_ids = [&] {
    std::vector<std::string> out;
    for (auto& gid : w->manager->group_ids())
      if (gid.rfind("vg", 0) == 0) out.push_back(gid);
    return out;
  }();
  auto make_ctx = [&](const std::string& gid) {
    ValidatorContext ctx;
    ctx.suite = w->suite;
    ctx.manager_addr = w->manager_account.addr;
    ctx.gid = gid;
    ctx.group_secret = w->manager->group_key(gid);
    ctx.audit_fixture = w->audit_fixture;
    return ctx;
  };
  w->ledger->set_reference_contracts(make_contracts(make_ctx(vrf_group_ids.front())));
  for (std::size_t v = 0; v < sc.population.validators; ++v) {
    const std::string& gid = vrf_group_ids[v % vrf_group_ids.size()];
    w->ledger->add_validator("val" + std::to_string(v), make_contracts(make_ctx(gid)));
  }

  // registration: the Manager uploads every manifest, then one block commits
  for (auto& p : att_profiles) {
    auto manifest = w->manager->build_manifest(p.ident.aid(), p.config, p.tee.cert,
                                               p.account.keys.pk);
    auto res = w->submit(w->manager_account, kRegistrationContract, manifest.encode());
    if (!res.accepted) throw Error(Errc::internal, "registration rejected");
  }
  for (auto& p : vrf_profiles) {
    auto manifest = w->manager->build_manifest(p.ident.vid(), p.config, p.tee.cert,
                                               p.account.keys.pk);
    auto res = w->submit(w->manager_account, kRegistrationContract, manifest.encode());
    if (!res.accepted) throw Error(Errc::internal, "registration rejected");
  }
  auto commit = w->ledger->produce_block();
  for (auto& r : commit.receipts)
    if (!r.ok) throw Error(Errc::internal, "registration failed: " + r.reason);

  if (sc.options.live_resolver)
    w->resolver = std::make_unique<LiveResolver>(*w->ledger);
  else
    w->resolver = std::make_unique<CachingResolver>(*w->ledger);

  // protocol nodes and the ideal-functionality tape
  for (std::size_t k = 0; k < n_att; ++k) {
    const Bytes aid = att_profiles[k].ident.aid();
    const Bytes rm = w->pufs.instance(att_profiles[k].secrets.pid)
                         .eval_bytes(att_profiles[k].measurement);
    w->oracle.measurement(aid, rm, to_bytes(att_profiles[k].ident.dsn));
    w->oracle.provision(aid);
    w->attesters.push_back(std::make_unique<AttesterNode>(
        std::move(att_profiles[k]), w->pufs, *w->suite, *w->resolver, w->clock,
        sc.options.freshness_window));
  }
  for (std::size_t j = 0; j < vrf_profiles.size(); ++j) {
    const Bytes vid = vrf_profiles[j].ident.vid();
    w->oracle.measurement(vid, vrf_profiles[j].measurement,
                          to_bytes(vrf_profiles[j].ident.von));
    w->oracle.provision(vid);
    w->verifiers.push_back(std::make_unique<VerifierNode>(
        std::move(vrf_profiles[j]), *w->suite, *w->resolver, w->clock,
        sc.options.freshness_window));
  }
  return w;
}

std::uint64_t World::next_nonce(const Bytes& addr) {
  std::lock_guard lock(nonce_mu_);
  return ++nonces_[addr];
}

SubmitResult World::submit(const Account& acc, const std::string& contract,
                           Bytes payload) {
  Transaction tx = acc.make_tx(contract, std::move(payload), next_nonce(acc.addr));
  return ledger->submit(std::move(tx));
}

BlockCommit World::commit_block() {
  clock.advance();
  return ledger->produce_block();
}

TxReceipt World::set_switch(const Account& actor, bool set_dc, SwitchValue value,
                            ByteView aid) {
  auto res = submit(actor, kSwitchContract, build_switch_payload(set_dc, value, aid));
  if (!res.accepted) return {res.txid, false, res.reason, {}};
  auto commit = commit_block();
  for (auto& r : commit.receipts)
    if (r.txid == res.txid) return r;
  return {res.txid, false, "not-committed", {}};
}

SwitchState World::switch_of(ByteView aid) const {
  return read_switch_state(ledger->committed_state(), aid);
}

TxReceipt World::attest_request(std::size_t verifier_idx, ByteView aid) {
  auto& acc = verifiers.at(verifier_idx)->profile().account;
  auto res = submit(acc, kAttestationContract, build_attest_request_payload(aid));
  if (!res.accepted) return {res.txid, false, res.reason, {}};
  auto commit = commit_block();
  for (auto& r : commit.receipts)
    if (r.txid == res.txid) return r;
  return {res.txid, false, "not-committed", {}};
}

std::optional<std::uint64_t> World::open_request_nonce(ByteView aid) const {
  auto raw = ledger->read_state(attest_request_addr(aid));
  if (!raw) return std::nullopt;
  ByteReader r(*raw);
  return r.u64();
}

BatchOutcome::Item World::onchain_attest(std::size_t verifier_idx,
                                         std::size_t attester_idx) {
  AttesterNode& att = *attesters.at(attester_idx);
  Bytes aid = att.aid();
  TxReceipt req = attest_request(verifier_idx, aid);
  if (!req.ok) return {aid, 0, false, "request:" + req.reason};

  auto n = open_request_nonce(aid);
  if (!n) return {aid, 0, false, "request-not-visible"};

  Transaction inner = att.make_onchain_report(*n);
  auto res = submit(aggregator_account(), kAttestationContract,
                    build_attest_batch_payload({inner}));
  if (!res.accepted) return {aid, *n, false, "batch:" + res.reason};
  auto commit = commit_block();
  for (auto& r : commit.receipts) {
    if (r.txid != res.txid) continue;
    if (!r.ok) return {aid, *n, false, "batch:" + r.reason};
    auto outcome = parse_batch_output(r.output);
    if (!outcome || outcome->items.size() != 1)
      return {aid, *n, false, "batch-output-unreadable"};
    return outcome->items.front();
  }
  return {aid, *n, false, "not-committed"};
}

TxReceipt World::submit_credential(const CredentialRecord& record) {
  auto res = submit(aggregator_account(), kAuditContract,
                    build_audit_submit_payload(record));
  if (!res.accepted) return {res.txid, false, res.reason, {}};
  auto commit = commit_block();
  for (auto& r : commit.receipts)
    if (r.txid == res.txid) return r;
  return {res.txid, false, "not-committed", {}};
}

namespace {
ReviewResult parse_review(const TxReceipt& r, bool spot) {
  ReviewResult out;
  out.ok = r.ok;
  out.reason = r.reason;
  if (!r.ok) return out;
  ByteReader rd(r.output);
  if (spot) {
    auto picked = rd.u32();
    if (picked) out.picked = *picked;
  }
  auto trusted = rd.u8();
  auto match = rd.u8();
  out.trusted = trusted && *trusted == 1;
  out.matches_claim = match && *match == 1;
  return out;
}
}  // namespace

ReviewResult World::audit_review(ByteView ssid, const Account& auditor) {
  auto res = submit(auditor, kAuditContract, build_audit_review_payload(ssid));
  if (!res.accepted) return {false, res.reason, false, false, 0};
  auto commit = commit_block();
  for (auto& r : commit.receipts)
    if (r.txid == res.txid) return parse_review(r, false);
  return {false, "not-committed", false, false, 0};
}

ReviewResult World::audit_spotcheck(std::uint64_t seed, const std::vector<Bytes>& ssids,
                                    const Account& auditor) {
  auto res =
      submit(auditor, kAuditContract, build_audit_spotcheck_payload(seed, ssids));
  if (!res.accepted) return {false, res.reason, false, false, 0};
  auto commit = commit_block();
  for (auto& r : commit.receipts)
    if (r.txid == res.txid) return parse_review(r, true);
  return {false, "not-committed", false, false, 0};
}

}  // namespace janus
