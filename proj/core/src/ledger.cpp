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

#include "janus/ledger.hpp"

#include <algorithm>

#include "janus/suite.hpp"

namespace janus {

Bytes state_address(std::string_view contract, ByteView logical_key) {
  ByteWriter w;
  w.field(std::string_view("janus"));
  w.field(contract);
  w.field(logical_key);
  return sha256(w.take());
}

Account Account::create(DetRng& rng, ByteView identity) {
  Account acc;
  acc.keys = SigningKeyPair::generate(rng, identity);
  acc.addr = sha256(acc.keys.pk);
  return acc;
}

Transaction Account::make_tx(std::string contract, Bytes payload,
                             std::uint64_t nonce) const {
  Transaction tx;
  tx.sender = addr;
  tx.contract = std::move(contract);
  tx.payload = std::move(payload);
  tx.nonce = nonce;
  tx.signature = ecdsa_sign(keys.sk, tx.signing_bytes());
  return tx;
}

std::optional<Bytes> LedgerState::get(ByteView addr) const {
  auto it = kv_.find(Bytes(addr.begin(), addr.end()));
  if (it == kv_.end()) return std::nullopt;
  return it->second;
}

bool LedgerState::has(ByteView addr) const {
  return kv_.count(Bytes(addr.begin(), addr.end())) > 0;
}

void LedgerState::put(Bytes addr, Bytes value) {
  kv_[std::move(addr)] = std::move(value);
}

Bytes LedgerState::state_root() const {
  ByteWriter w;
  for (auto& [k, v] : kv_) {
    w.field(k);
    w.field(v);
  }
  return sha256(w.take());
}

Bytes ContractResult::digest() const {
  ByteWriter w;
  w.u8(ok ? 1 : 0);
  w.field(reason);
  w.u32(static_cast<std::uint32_t>(writes.size()));
  for (auto& [k, v] : writes) {
    w.field(k);
    w.field(v);
  }
  w.field(output);
  return sha256(w.take());
}

Ledger::Ledger(std::vector<std::pair<Bytes, Bytes>> accounts) {
  for (auto& [addr, pk] : accounts) register_account(std::move(addr), std::move(pk));
}

void Ledger::register_account(Bytes addr, Bytes pk) {
  accounts_[std::move(addr)] = std::move(pk);
}

bool Ledger::has_account(ByteView addr) const {
  return accounts_.count(Bytes(addr.begin(), addr.end())) > 0;
}

void Ledger::set_reference_contracts(ContractMap contracts) {
  reference_contracts_ = std::move(contracts);
}

void Ledger::add_validator(std::string name, ContractMap contracts) {
  validators_.push_back({std::move(name), LedgerState{}, std::move(contracts), nullptr});
}

void Ledger::set_validator_fault(const std::string& name,
                                 std::function<void(ContractResult&)> fault) {
  for (auto& v : validators_)
    if (v.name == name) {
      v.fault = std::move(fault);
      return;
    }
  throw Error(Errc::internal, "no such validator: " + name);
}

SubmitResult Ledger::submit(Transaction tx) {
  std::lock_guard lock(mu_);
  SubmitResult res;
  res.txid = tx.txid();

  // Cheap gates first: sender lookup and nonce freshness are O(log n) map
  // probes; the signature check runs only after both pass.
  auto acc = accounts_.find(tx.sender);
  if (acc == accounts_.end()) {
    res.error = Errc::bad_signature;
    res.reason = "unknown-sender";
    ++counters_.rejected_unknown_sender;
    return res;
  }
  auto last = nonces_.find(tx.sender);
  if (last != nonces_.end() && tx.nonce <= last->second) {
    res.error = Errc::stale_nonce;
    res.reason = "stale-nonce";
    ++counters_.rejected_stale_nonce;
    return res;
  }
  ++counters_.signature_verifications;
  bool sig_ok = false;
  try {
    sig_ok = ecdsa_verify(acc->second, tx.signing_bytes(), tx.signature);
  } catch (const Error&) {
    sig_ok = false;
  }
  if (!sig_ok) {
    res.error = Errc::bad_signature;
    res.reason = "bad-signature";
    ++counters_.rejected_bad_signature;
    return res;
  }

  nonces_[tx.sender] = tx.nonce;
  ++counters_.submitted;
  queue_.push_back(std::move(tx));
  res.accepted = true;
  return res;
}

std::size_t Ledger::pending() const {
  std::lock_guard lock(mu_);
  return queue_.size();
}

ContractResult Ledger::execute_on(const ContractMap& contracts, LedgerState& state,
                                  const Transaction& tx) const {
  ContractResult r;
  auto it = contracts.find(tx.contract);
  if (it == contracts.end()) {
    r.reason = "unknown-contract";
    return r;
  }
  r = it->second(state, tx);
  if (r.ok)
    for (auto& [k, v] : r.writes) state.put(k, v);
  return r;
}

BlockCommit Ledger::produce_block() {
  std::lock_guard lock(mu_);
  std::vector<Transaction> txs;
  txs.swap(queue_);

  BlockCommit commit;
  for (auto& tx : txs) {
    ContractResult ref = execute_on(reference_contracts_, reference_, tx);
    std::vector<Bytes> votes;
    for (auto& v : validators_) {
      ContractResult r = execute_on(v.contracts, v.state, tx);
      if (v.fault) {
        r = ContractResult{r.ok, r.reason, r.writes, r.output};
        v.fault(r);
        // fault applies to the replica too: rewrite its copy of the writes
        for (auto& [k, val] : r.writes) v.state.put(k, val);
      }
      votes.push_back(r.digest());
    }
    Bytes agreed;
    if (validators_.empty()) {
      agreed = ref.digest();
    } else {
      auto q = quorum_result(votes);
      if (!q) throw Error(Errc::no_quorum, "validators disagree on tx output");
      agreed = *q;
      for (std::size_t i = 0; i < votes.size(); ++i)
        if (votes[i] != agreed) commit.divergent.push_back(validators_[i].name);
    }
    if (!validators_.empty() && agreed != ref.digest())
      throw Error(Errc::no_quorum, "quorum disagrees with honest execution");
    commit.receipts.push_back({tx.txid(), ref.ok, ref.reason, ref.output});
  }

  // dedupe divergent names across txs, keep deterministic order
  std::sort(commit.divergent.begin(), commit.divergent.end());
  commit.divergent.erase(std::unique(commit.divergent.begin(), commit.divergent.end()),
                         commit.divergent.end());

  Block b;
  b.height = chain_.size();
  b.parent_hash = chain_.empty() ? Bytes(32, 0) : chain_.back().block_hash();
  b.txs = std::move(txs);
  b.state_root = reference_.state_root();
  commit.block = b;
  chain_.push_back(std::move(b));
  commits_.push_back(commit);
  return commit;
}

std::optional<Bytes> Ledger::read_state(ByteView addr) const {
  std::lock_guard lock(mu_);
  return reference_.get(addr);
}

Bytes Ledger::dump_log() const {
  std::lock_guard lock(mu_);
  ByteWriter w;
  w.field(std::string_view("janus-ledger-log-v1"));
  w.u32(static_cast<std::uint32_t>(accounts_.size()));
  for (auto& [addr, pk] : accounts_) {
    w.field(addr);
    w.field(pk);
  }
  w.u32(static_cast<std::uint32_t>(chain_.size()));
  for (auto& b : chain_) w.field(b.encode());
  return w.take();
}

std::unique_ptr<Ledger> Ledger::replay_log(ByteView log,
                                           ContractMap reference_contracts) {
  ByteReader r(log);
  auto magic = r.field();
  if (!magic || to_string(*magic) != "janus-ledger-log-v1")
    throw Error(Errc::malformed_config, "not a ledger log");
  auto acct_count = r.u32();
  if (!acct_count) throw Error(Errc::malformed_config, "truncated log");
  auto ledger = std::make_unique<Ledger>();
  for (std::uint32_t i = 0; i < *acct_count; ++i) {
    auto addr = r.field();
    auto pk = r.field();
    if (!addr || !pk) throw Error(Errc::malformed_config, "truncated account");
    ledger->register_account(std::move(*addr), std::move(*pk));
  }
  ledger->set_reference_contracts(std::move(reference_contracts));
  auto block_count = r.u32();
  if (!block_count) throw Error(Errc::malformed_config, "truncated log");
  for (std::uint32_t i = 0; i < *block_count; ++i) {
    auto raw = r.field();
    if (!raw) throw Error(Errc::malformed_config, "truncated block");
    auto block = Block::decode(*raw);
    if (!block) throw Error(Errc::malformed_config, "undecodable block");
    for (auto& tx : block->txs) {
      ContractResult res =
          ledger->execute_on(ledger->reference_contracts_, ledger->reference_, tx);
      (void)res;  // failed txs still occupy their slot; they wrote nothing
      ledger->nonces_[tx.sender] = std::max(ledger->nonces_[tx.sender], tx.nonce);
    }
    if (ledger->reference_.state_root() != block->state_root)
      throw Error(Errc::internal, "replay diverged from stored state root");
    ledger->chain_.push_back(std::move(*block));
  }
  return ledger;
}

}  // namespace janus
