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

#include "janus/puf.hpp"

#include <nlohmann/json.hpp>

#include "janus/errors.hpp"
#include "janus/suite.hpp"

namespace janus {

void CrpLog::record(ByteView response) {
  std::lock_guard lock(mu_);
  responses_.emplace_back(response.begin(), response.end());
}

std::vector<Bytes> CrpLog::responses() const {
  std::lock_guard lock(mu_);
  return responses_;
}

PufInstance::PufInstance(std::string pid, Bytes seed, std::size_t n_bits)
    : pid_(std::move(pid)), seed_(std::move(seed)), n_bits_(n_bits) {
  if (n_bits_ == 0 || n_bits_ % 8 != 0)
    throw Error(Errc::invalid_length, "n must be a positive multiple of 8");
  if (seed_.size() < 16)
    throw Error(Errc::invalid_length, "instance seed too short");
}

Bytes PufInstance::eval(ByteView challenge) const {
  if (!intact()) throw Error(Errc::destroyed, "puf instance " + pid_);
  if (challenge.size() != n_bytes())
    throw Error(Errc::wrong_length, "challenge must be n bits");
  evals_.fetch_add(1, std::memory_order_relaxed);
  // keyed PRF over the hidden structure, truncated to the response width
  Bytes response = truncated(hmac_sha256(seed_, challenge), n_bytes());
  if (crp_log_) crp_log_->record(response);
  return response;
}

Bytes PufInstance::eval_bytes(ByteView msg) const {
  return eval(truncated(sha256(msg), n_bytes()));
}

PufInstance& PufRegistry::create(const std::string& pid, const std::string& dsn,
                                 Bytes seed, std::size_t n_bits) {
  if (instances_.count(pid))
    throw Error(Errc::duplicate_identity, "pid already registered: " + pid);
  auto inst = std::make_unique<PufInstance>(pid, std::move(seed), n_bits);
  if (crp_log_) inst->set_crp_log(crp_log_);
  auto& ref = *inst;
  instances_.emplace(pid, std::move(inst));
  by_dsn_[dsn].push_back(pid);
  return ref;
}

PufInstance& PufRegistry::create_random(const std::string& pid, const std::string& dsn,
                                        DetRng& rng, std::size_t n_bits) {
  return create(pid, dsn, rng.bytes(32), n_bits);
}

PufInstance& PufRegistry::instance(const std::string& pid) {
  auto it = instances_.find(pid);
  if (it == instances_.end()) throw Error(Errc::unknown_pid, pid);
  return *it->second;
}

const PufInstance& PufRegistry::instance(const std::string& pid) const {
  auto it = instances_.find(pid);
  if (it == instances_.end()) throw Error(Errc::unknown_pid, pid);
  return *it->second;
}

bool PufRegistry::has(const std::string& pid) const { return instances_.count(pid) > 0; }

void PufRegistry::destroy(const std::string& pid) { instance(pid).destroy(); }

const std::vector<std::string>& PufRegistry::device_pids(const std::string& dsn) const {
  auto it = by_dsn_.find(dsn);
  if (it == by_dsn_.end())
    throw Error(Errc::unknown_pid, "no instances on device " + dsn);
  return it->second;
}

const std::string& PufRegistry::dsn_of(const std::string& pid) const {
  for (auto& [dsn, pids] : by_dsn_)
    for (auto& p : pids)
      if (p == pid) return dsn;
  throw Error(Errc::unknown_pid, pid);
}

void PufRegistry::enable_crp_recording() {
  if (!crp_log_) crp_log_ = std::make_shared<CrpLog>();
  for (auto& [pid, inst] : instances_) inst->set_crp_log(crp_log_);
}

std::uint64_t PufRegistry::total_evals() const {
  std::uint64_t total = 0;
  for (auto& [pid, inst] : instances_) total += inst->eval_count();
  return total;
}

std::string PufRegistry::manifest_json() const {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (auto& [dsn, pids] : by_dsn_) {
    for (auto& pid : pids) {
      auto& inst = *instances_.at(pid);
      out.push_back({{"pid", pid},
                     {"n", inst.n_bits()},
                     {"dsn", dsn},
                     {"state", inst.intact() ? "intact" : "destroyed"}});
    }
  }
  return out.dump(2);
}

std::string PufRegistry::secret_fixture_json() const {
  nlohmann::ordered_json out;
  out["format"] = "janus-puf-secret-fixture";  // seeds inside, test use only
  auto arr = nlohmann::ordered_json::array();
  for (auto& [dsn, pids] : by_dsn_) {
    for (auto& pid : pids) {
      auto& inst = *instances_.at(pid);
      arr.push_back({{"pid", pid},
                     {"n", inst.n_bits()},
                     {"dsn", dsn},
                     {"state", inst.intact() ? "intact" : "destroyed"},
                     {"seed", hex_encode(inst.seed_for_fixture())}});
    }
  }
  out["instances"] = arr;
  return out.dump(2);
}

std::unique_ptr<PufRegistry> PufRegistry::from_secret_fixture(const std::string& json) {
  auto doc = nlohmann::json::parse(json);
  if (doc.value("format", "") != "janus-puf-secret-fixture")
    throw Error(Errc::malformed_config, "not a puf secret fixture");
  auto reg = std::make_unique<PufRegistry>();
  for (auto& item : doc.at("instances")) {
    auto seed = hex_decode(item.at("seed").get<std::string>());
    if (!seed) throw Error(Errc::malformed_config, "bad seed hex");
    auto& inst = reg->create(item.at("pid").get<std::string>(),
                             item.at("dsn").get<std::string>(), std::move(*seed),
                             item.at("n").get<std::size_t>());
    if (item.value("state", "intact") == "destroyed") inst.destroy();
  }
  return reg;
}

}  // namespace janus
