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

#include "janus/scenario.hpp"

#include <nlohmann/json.hpp>

#include "janus/errors.hpp"
#include "janus/suite.hpp"

namespace janus {

const char* adversary_kind_name(AdversaryKind k) {
  switch (k) {
    case AdversaryKind::tamper: return "tamper";
    case AdversaryKind::replay: return "replay";
    case AdversaryKind::reflect: return "reflect";
    case AdversaryKind::flood: return "flood";
    case AdversaryKind::leak_tee_key: return "leak-tee-key";
    case AdversaryKind::leak_mk: return "leak-mk";
    case AdversaryKind::destroy_puf: return "destroy-puf";
    case AdversaryKind::corrupt_verifier: return "corrupt-verifier";
    case AdversaryKind::crp_harvest: return "crp-harvest";
  }
  return "?";
}

std::optional<AdversaryKind> adversary_kind_parse(const std::string& name) {
  for (auto k : {AdversaryKind::tamper, AdversaryKind::replay, AdversaryKind::reflect,
                 AdversaryKind::flood, AdversaryKind::leak_tee_key, AdversaryKind::leak_mk,
                 AdversaryKind::destroy_puf, AdversaryKind::corrupt_verifier,
                 AdversaryKind::crp_harvest})
    if (name == adversary_kind_name(k)) return k;
  return std::nullopt;
}

void Scenario::validate() const {
  auto bad = [](const std::string& why) { throw Error(Errc::scenario_invalid, why); };
  if (population.attesters == 0) bad("population.attesters must be positive");
  if (population.verifiers == 0) bad("population.verifiers must be positive");
  if (population.attesters_per_device == 0) bad("attesters_per_device must be positive");
  if (population.attester_groups == 0) bad("attester_groups must be positive");
  if (population.verifier_groups == 0) bad("verifier_groups must be positive");
  if (population.verifier_groups > population.verifiers)
    bad("more verifier groups than verifiers");
  if (population.attesters_per_device == 1 &&
      population.attester_groups > population.attesters)
    bad("more attester groups than attesters");
  if (n_bits == 0 || n_bits % 8 != 0) bad("n must be a positive multiple of 8");
  if (workload.on_chain_fraction < 0.0 || workload.on_chain_fraction > 1.0)
    bad("on_chain_fraction outside [0, 1]");
  try {
    CipherSuite::get(suite);
  } catch (const Error&) {
    bad("unknown suite: " + suite);
  }
  for (auto& ev : adversary) {
    if (ev.kind == AdversaryKind::tamper || ev.kind == AdversaryKind::replay ||
        ev.kind == AdversaryKind::reflect) {
      if (ev.round < 1 || ev.round > 3) bad("channel events need round in 1..3");
    }
    if (ev.kind == AdversaryKind::tamper && ev.field.empty())
      bad("tamper events need a field");
    if (ev.kind == AdversaryKind::flood && ev.count <= 0)
      bad("flood events need a positive count");
  }
}

Scenario Scenario::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::scenario_invalid, std::string("json: ") + e.what());
  }
  Scenario sc;
  try {
    sc.name = doc.value("name", sc.name);
    sc.seed = doc.value("seed", sc.seed);
    sc.suite = doc.value("suite", sc.suite);
    sc.n_bits = doc.value("n", sc.n_bits);
    if (doc.contains("population")) {
      auto& p = doc["population"];
      sc.population.attesters = p.value("attesters", sc.population.attesters);
      sc.population.verifiers = p.value("verifiers", sc.population.verifiers);
      sc.population.attesters_per_device =
          p.value("attesters_per_device", sc.population.attesters_per_device);
      sc.population.attester_groups =
          p.value("attester_groups", sc.population.attester_groups);
      sc.population.verifier_groups =
          p.value("verifier_groups", sc.population.verifier_groups);
      sc.population.validators = p.value("validators", sc.population.validators);
    }
    if (doc.contains("workload")) {
      auto& w = doc["workload"];
      sc.workload.sessions = w.value("sessions", sc.workload.sessions);
      sc.workload.on_chain_fraction =
          w.value("on_chain_fraction", sc.workload.on_chain_fraction);
      sc.workload.local_sessions = w.value("local_sessions", sc.workload.local_sessions);
    }
    if (doc.contains("options")) {
      auto& o = doc["options"];
      sc.options.freshness_window =
          o.value("freshness_window", sc.options.freshness_window);
      sc.options.jobs = o.value("jobs", sc.options.jobs);
      sc.options.audit_sessions = o.value("audit_sessions", sc.options.audit_sessions);
      sc.options.live_resolver = o.value("live_resolver", sc.options.live_resolver);
    }
    if (doc.contains("adversary")) {
      for (auto& e : doc["adversary"]) {
        AdversaryEvent ev;
        auto kind = adversary_kind_parse(e.value("kind", ""));
        if (!kind)
          throw Error(Errc::scenario_invalid,
                      "unknown adversary kind: " + e.value("kind", ""));
        ev.kind = *kind;
        ev.session = e.value("session", ev.session);
        ev.target = e.value("target", ev.target);
        ev.round = e.value("round", ev.round);
        ev.field = e.value("field", ev.field);
        ev.count = e.value("count", ev.count);
        ev.mode = e.value("mode", ev.mode);
        sc.adversary.push_back(std::move(ev));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::scenario_invalid, std::string("shape: ") + e.what());
  }
  sc.validate();
  return sc;
}

std::string Scenario::to_json() const {
  nlohmann::ordered_json doc;
  doc["name"] = name;
  doc["seed"] = seed;
  doc["suite"] = suite;
  doc["n"] = n_bits;
  doc["population"] = {{"attesters", population.attesters},
                       {"verifiers", population.verifiers},
                       {"attesters_per_device", population.attesters_per_device},
                       {"attester_groups", population.attester_groups},
                       {"verifier_groups", population.verifier_groups},
                       {"validators", population.validators}};
  doc["workload"] = {{"sessions", workload.sessions},
                     {"on_chain_fraction", workload.on_chain_fraction},
                     {"local_sessions", workload.local_sessions}};
  doc["options"] = {{"freshness_window", options.freshness_window},
                    {"jobs", options.jobs},
                    {"audit_sessions", options.audit_sessions},
                    {"live_resolver", options.live_resolver}};
  auto events = nlohmann::ordered_json::array();
  for (auto& ev : adversary) {
    events.push_back({{"kind", adversary_kind_name(ev.kind)},
                      {"session", ev.session},
                      {"target", ev.target},
                      {"round", ev.round},
                      {"field", ev.field},
                      {"count", ev.count},
                      {"mode", ev.mode}});
  }
  doc["adversary"] = events;
  return doc.dump(2);
}

}  // namespace janus
