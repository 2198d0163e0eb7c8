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

#include <cstddef>
#include <functional>
#include <memory>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "janus/bytes.hpp"
#include "janus/errors.hpp"
#include "janus/rng.hpp"
#include "janus/signature.hpp"
#include "janus/wire.hpp"

namespace janus {

/// 32-byte state address: hash("janus" || contract || logical key).
Bytes state_address(std::string_view contract, ByteView logical_key);

struct Account {
  SigningKeyPair keys;
  Bytes addr;  // hash(pk)

  static Account create(DetRng& rng, ByteView identity);
  Transaction make_tx(std::string contract, Bytes payload, std::uint64_t nonce) const;
};

/// Key-value state. Mutation happens only through contract execution inside
/// block production; reads are free and always see committed data.
class LedgerState {
 public:
  std::optional<Bytes> get(ByteView addr) const;
  bool has(ByteView addr) const;
  void put(Bytes addr, Bytes value);

  /// Hash of the canonical (sorted, length-prefixed) serialization.
  Bytes state_root() const;

  const std::map<Bytes, Bytes>& entries() const { return kv_; }

 private:
  std::map<Bytes, Bytes> kv_;
};

struct ContractResult {
  bool ok = false;
  std::string reason;  // deterministic short code, empty when ok
  std::vector<std::pair<Bytes, Bytes>> writes;
  Bytes output;

  Bytes digest() const;  // canonical encoding hash, used for quorum votes
};

using ContractFn =
    std::function<ContractResult(const LedgerState&, const Transaction&)>;
using ContractMap = std::map<std::string, ContractFn>;

/// Strict-majority agreement over per-node outputs. M >= 1.
template <typename T>
std::optional<T> quorum_result(const std::vector<T>& outputs) {
  for (const auto& candidate : outputs) {
    std::size_t votes = 0;
    for (const auto& o : outputs)
      if (o == candidate) ++votes;
    if (votes > outputs.size() / 2) return candidate;
  }
  return std::nullopt;
}

struct TxReceipt {
  Bytes txid;
  bool ok = false;
  std::string reason;
  Bytes output;
};

struct BlockCommit {
  Block block;
  std::vector<TxReceipt> receipts;
  std::vector<std::string> divergent;  // validators that disagreed with quorum
};

struct SubmitResult {
  bool accepted = false;
  Errc error = Errc::internal;
  std::string reason;
  Bytes txid;
};

struct LedgerCounters {
  std::uint64_t submitted = 0;
  std::uint64_t rejected_stale_nonce = 0;
  std::uint64_t rejected_bad_signature = 0;
  std::uint64_t rejected_unknown_sender = 0;
  std::uint64_t signature_verifications = 0;
};

// Deterministic sequencer with replicated contract execution. Consensus is
// simulated: every validator replays the same tx order against its own
// replica and votes with its state root; a strict majority commits.
// Validator faults are injectable for the rogue-verifier scenarios.
class Ledger {
 public:
  explicit Ledger(std::vector<std::pair<Bytes /*addr*/, Bytes /*pk*/>> accounts = {});

  void register_account(Bytes addr, Bytes pk);
  bool has_account(ByteView addr) const;

  void set_reference_contracts(ContractMap contracts);
  void add_validator(std::string name, ContractMap contracts);
  /// Rogue behavior: mutates the validator's execution result in place.
  void set_validator_fault(const std::string& name,
                           std::function<void(ContractResult&)> fault);
  std::size_t validator_count() const { return validators_.size(); }

  SubmitResult submit(Transaction tx);
  std::size_t pending() const;

  /// Executes the queued txs on all replicas, requires a strict-majority
  /// root, appends the block. Throws NoQuorum when agreement fails.
  BlockCommit produce_block();

  std::optional<Bytes> read_state(ByteView addr) const;
  const LedgerState& committed_state() const { return reference_; }

  const std::vector<Block>& chain() const { return chain_; }
  const std::vector<BlockCommit>& commits() const { return commits_; }
  const LedgerCounters& counters() const { return counters_; }

  /// Length-prefixed block log with an account preamble; replayable.
  Bytes dump_log() const;
  /// Rebuilds a ledger by re-executing a log; verifies every stored root.
  static std::unique_ptr<Ledger> replay_log(ByteView log,
                                            ContractMap reference_contracts);

 private:
  struct Validator {
    std::string name;
    LedgerState state;
    ContractMap contracts;
    std::function<void(ContractResult&)> fault;
  };

  ContractResult execute_on(const ContractMap& contracts, LedgerState& state,
                            const Transaction& tx) const;

  std::map<Bytes, Bytes> accounts_;          // addr -> pk
  std::map<Bytes, std::uint64_t> nonces_;    // addr -> highest accepted nonce
  std::vector<Transaction> queue_;
  LedgerState reference_;
  ContractMap reference_contracts_;
  std::vector<Validator> validators_;
  std::vector<Block> chain_;
  std::vector<BlockCommit> commits_;
  LedgerCounters counters_;
  mutable std::mutex mu_;
};

}  // namespace janus
