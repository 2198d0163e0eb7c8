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
#include <mutex>
#include <string>
#include <vector>

#include "janus/bytes.hpp"
#include "janus/rng.hpp"

namespace janus {

/// Optional record of every response an instance family ever produced.
/// The harness scans wire and ledger bytes against this log: a hit means a
/// raw CRP leaked.
class CrpLog {
 public:
  void record(ByteView response);
  std::vector<Bytes> responses() const;

 private:
  mutable std::mutex mu_;
  std::vector<Bytes> responses_;
};

// Simulated physical random function. The hidden seed stands in for the
// silicon structure: it never leaves this object on any wire, ledger entry
// or log, and the harness taint scan enforces that. Challenge and response
// share the same bit length n (a multiple of 8; 128 by default). Responses
// are noiseless: the model treats the function as stable, so no helper-data
// reconstruction is needed and the helper-data field carried elsewhere
// stays empty.
class PufInstance {
 public:
  PufInstance(std::string pid, Bytes seed, std::size_t n_bits);

  const std::string& pid() const { return pid_; }
  std::size_t n_bits() const { return n_bits_; }
  std::size_t n_bytes() const { return n_bits_ / 8; }
  bool intact() const { return !destroyed_.load(std::memory_order_acquire); }

  /// challenge -> response, deterministic per instance. Throws Destroyed
  /// after destroy(), WrongLength unless |challenge| = n.
  Bytes eval(ByteView challenge) const;

  /// Domain extension for arbitrary-length input: eval(trunc_n(hash(msg))).
  Bytes eval_bytes(ByteView msg) const;

  /// Models invasive delayering: one-way, idempotent, permanent.
  void destroy() { destroyed_.store(true, std::memory_order_release); }

  std::uint64_t eval_count() const { return evals_.load(std::memory_order_relaxed); }

  // Test-fixture access only; production serialization paths must not call it.
  const Bytes& seed_for_fixture() const { return seed_; }

  void set_crp_log(std::shared_ptr<CrpLog> log) { crp_log_ = std::move(log); }

 private:
  std::string pid_;
  Bytes seed_;
  std::size_t n_bits_;
  std::atomic<bool> destroyed_{false};
  mutable std::atomic<std::uint64_t> evals_{0};
  std::shared_ptr<CrpLog> crp_log_;
};

/// pid -> instance map plus the DSN (device) binding. A device may host two
/// or more instances; local attestation relies on that.
class PufRegistry {
 public:
  PufInstance& create(const std::string& pid, const std::string& dsn, Bytes seed,
                      std::size_t n_bits);
  PufInstance& create_random(const std::string& pid, const std::string& dsn,
                             DetRng& rng, std::size_t n_bits);

  PufInstance& instance(const std::string& pid);
  const PufInstance& instance(const std::string& pid) const;
  bool has(const std::string& pid) const;

  void destroy(const std::string& pid);

  const std::vector<std::string>& device_pids(const std::string& dsn) const;
  const std::string& dsn_of(const std::string& pid) const;

  std::uint64_t total_evals() const;

  /// Turns on response logging for all current and future instances.
  void enable_crp_recording();
  std::shared_ptr<const CrpLog> crp_log() const { return crp_log_; }

  /// Public manifest (pid, n, DSN, state), seed-free by construction.
  std::string manifest_json() const;
  /// Explicitly-named secret fixture, the only serialization carrying seeds.
  std::string secret_fixture_json() const;
  static std::unique_ptr<PufRegistry> from_secret_fixture(const std::string& json);

 private:
  std::map<std::string, std::unique_ptr<PufInstance>> instances_;
  std::map<std::string, std::vector<std::string>> by_dsn_;
  std::shared_ptr<CrpLog> crp_log_;
};

}  // namespace janus
