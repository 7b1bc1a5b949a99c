// Copyright 2026 The zksbom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zksbom/protocol_harness.h"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "json.hpp"
#include "zksbom/advisory_db.h"
#include "zksbom/client_tools.h"
#include "zksbom/errors.h"
#include "zksbom/operator_service.h"
#include "zksbom/sbom_ingest.h"
#include "zksbom/transparency_log.h"
#include "zksbom/zks_engine.h"

namespace zksbom::harness {
namespace {

namespace fs = std::filesystem;
using Kind = Verdict::Kind;

constexpr std::pair<Adversary, std::string_view> kAdversaryNames[] = {
    {Adversary::kNone, "None"},
    {Adversary::kTamperOperator, "TamperOperator"},
    {Adversary::kForgeProofConsumer, "ForgeProofConsumer"},
    {Adversary::kRetroactiveHide, "RetroactiveHide"},
    {Adversary::kRepudiate, "Repudiate"},
    {Adversary::kSplitView, "SplitView"},
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kFixtureError, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

class TempDir {
 public:
  TempDir() {
    auto seed = crypto::random_seed();
    auto tag = to_hex(ByteView(seed).first(8));
    path_ = fs::temp_directory_path() / ("zksbom-sim-" + tag);
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

// All actors of one protocol run.
class Run {
 public:
  explicit Run(const Scenario& scenario)
      : scenario_(scenario),
        sbom_(read_file(scenario.sbom_path)),
        db_(load_db(scenario.advisory_path)),
        operator_(store_.path(), db_),
        supplier_(crypto::keygen(crypto::random_seed())),
        log_(tlog::tl_setup()) {
    transcript_.scenario = scenario.name;
    transcript_.adversary = scenario.adversary;
    if (scenario.artifact_path) {
      auto bytes = read_file(*scenario.artifact_path);
      artifact_.assign(bytes.begin(), bytes.end());
    } else {
      std::string bytes = "artifact:" + scenario.name;
      artifact_.assign(bytes.begin(), bytes.end());
    }
    for (const auto& cve : scenario.cves) {
      if (!db_.contains(cve)) throw Error(ErrorCode::kFixtureError, "unknown CVE " + cve);
    }
    compute_ground_truth();
  }

  Transcript& transcript() { return transcript_; }
  const advisory::AdvisoryDb& db() const { return db_; }
  const std::string& sbom() const { return sbom_; }
  const Bytes& artifact() const { return artifact_; }
  op::OperatorService& operator_service() { return operator_; }
  const crypto::KeyPair& supplier() const { return supplier_; }
  tlog::LogState& log() { return log_; }

  void step(std::string actor, int box, std::string action, std::string outcome,
            bool ok = true) {
    transcript_.steps.push_back(
        {std::move(actor), box, std::move(action), std::move(outcome), ok});
  }

  void detected(int box, std::string how) {
    transcript_.attack_detected = true;
    transcript_.detected_at_box = box;
    transcript_.detection = std::move(how);
  }

  op::UploadResult commit() {
    auto up = operator_.upload_sbom(sbom_);
    step("operator", 1, "commit", "commitment " + up.commitment.root.hex() + " over " +
                                       std::to_string(up.stats.parsed) + " components");
    return up;
  }

  bool supplier_check(const zks::Seed& seed, const zks::Commitment& claimed) {
    bool ok = client::supplier_check_commitment(sbom_, seed, claimed);
    step("supplier", 2, "recompute commitment", ok ? "matches" : "MISMATCH", ok);
    return ok;
  }

  tlog::LogDigest publish(const zks::Commitment& c) {
    auto digest = client::supplier_publish(artifact_, c, supplier_.private_key, log_);
    step("supplier", 3, "publish", "log digest " + digest.hex());
    return digest;
  }

  void deliver() {
    step("supplier", 4, "deliver artifact", std::to_string(artifact_.size()) + " bytes");
  }

  std::optional<zks::Commitment> check_publication(const tlog::LogDigest& digest) {
    auto pub = client::consumer_check_publication(artifact_, digest, log_,
                                                  supplier_.public_key);
    step("consumer", 5, "check publication", pub.detail, pub.ok);
    return pub.ok ? pub.commitment : std::nullopt;
  }

  std::vector<ComponentProof> generate(const zks::Commitment& c, const std::string& cve) {
    auto proofs = operator_.query_vulnerability(c, cve);
    step("operator", 6, "prove " + cve, std::to_string(proofs.size()) + " proofs");
    // Through the wire format, as a remote consumer would receive them.
    auto body = proof_response_to_json({cve, proofs});
    return proof_response_from_json(body).proofs;
  }

  Verdict verify(const zks::Commitment& c, const std::string& cve,
                 const std::vector<ComponentProof>& proofs, const std::string& label) {
    Verdict v = client::consumer_verify_proofs(c, cve, proofs, db_);
    step("consumer", 7, "verify " + label,
         std::string(verdict_name(v.kind)) + ": " + v.detail, v.kind != Kind::kInvalid);
    return v;
  }

  // Runs boxes 1-5 honestly; nullopt if any of them fails.
  std::optional<std::pair<zks::Commitment, tlog::LogDigest>> honest_prefix() {
    auto up = commit();
    if (!supplier_check(up.seed, up.commitment)) return std::nullopt;
    auto digest = publish(up.commitment);
    deliver();
    auto c = check_publication(digest);
    if (!c) return std::nullopt;
    return std::make_pair(*c, digest);
  }

  // An SBOM component some queried CVE affects, with that CVE.
  std::optional<std::pair<std::string, std::string>> included_affected() const {
    for (const auto& cve : scenario_.cves) {
      for (const auto& c : db_.resolve(cve)) {
        auto id = canonical_id(c);
        if (sbom_ids_.count(id)) return std::make_pair(id, cve);
      }
    }
    return std::nullopt;
  }

  const std::set<std::string>& sbom_ids() const { return sbom_ids_; }

 private:
  static advisory::AdvisoryDb load_db(const fs::path& path) {
    try {
      return advisory::AdvisoryDb::load(path);
    } catch (const Error& e) {
      throw Error(ErrorCode::kFixtureError, e.what());
    }
  }

  void compute_ground_truth() {
    for (const auto& c : sbom::parse_cyclonedx(sbom_).components) {
      sbom_ids_.insert(canonical_id(c));
    }
    for (const auto& cve : scenario_.cves) {
      bool hit = false;
      for (const auto& c : db_.resolve(cve)) hit = hit || sbom_ids_.count(canonical_id(c));
      transcript_.ground_truth[cve] = hit ? Kind::kAffected : Kind::kNotAffected;
    }
  }

  const Scenario& scenario_;
  TempDir store_;
  std::string sbom_;
  advisory::AdvisoryDb db_;
  op::OperatorService operator_;
  crypto::KeyPair supplier_;
  tlog::LogState log_;
  Bytes artifact_;
  std::set<std::string> sbom_ids_;
  Transcript transcript_;
};

void tamper_operator(Run& run) {
  // The operator drops a component (or injects one into an empty SBOM)
  // before committing, and returns the seed as usual.
  auto datastore = sbom::to_datastore(sbom::parse_cyclonedx(run.sbom()));
  Datastore tampered =
      datastore.empty()
          ? Datastore::from_canonical_ids({"injected@0.0.0@NPM"})
          : datastore.without(datastore.entries().front().label);
  auto seed = crypto::random_seed();
  auto [c, state] = zks::commit(tampered, seed);
  run.step("operator", 1, "commit (tampered)",
           "commitment " + c.root.hex() + " over " + std::to_string(tampered.size()) +
               " components");
  if (!run.supplier_check(seed, c)) {
    run.detected(2, "supplier recomputation does not match the operator's commitment");
  }
}

void forge_proof_consumer(Run& run, const std::vector<std::string>& cves) {
  auto prefix = run.honest_prefix();
  if (!prefix) return;
  const auto& c = prefix->first;
  bool all_rejected = true;
  for (const auto& cve : cves) {
    auto proofs = run.generate(c, cve);
    using Forgery = std::function<void(std::vector<ComponentProof>&)>;
    const std::vector<std::pair<std::string, Forgery>> forgeries = {
        {"flipped present flag",
         [](auto& ps) {
           auto& p = ps.front();
           p.present = !p.present;
           if (p.present) {
             p.value = canonical_id(p.component);
           } else {
             p.value.reset();
           }
         }},
        {"altered proof byte",
         [](auto& ps) {
           auto& hex = ps.front().proof_hex;
           hex[hex.size() - 1] = hex.back() == '0' ? '1' : '0';
         }},
        {"unrelated value",
         [](auto& ps) {
           ps.front().present = true;
           ps.front().value = "unrelated@0.0.0@NPM";
         }},
    };
    for (const auto& [what, forge] : forgeries) {
      auto forged = proofs;
      forge(forged);
      Verdict v = run.verify(c, cve, forged, cve + " (" + what + ")");
      run.transcript().verdicts[cve + " / " + what] = v;
      all_rejected = all_rejected && v.kind == Kind::kInvalid;
    }
  }
  if (all_rejected && !cves.empty()) {
    run.detected(7, "every altered proof set verifies as Invalid");
  }
}

void retroactive_hide(Run& run) {
  auto target = run.included_affected();
  if (!target) {
    throw Error(ErrorCode::kFixtureError,
                "RetroactiveHide needs a queried CVE that affects the SBOM");
  }
  auto prefix = run.honest_prefix();
  if (!prefix) return;
  const auto& [published, digest] = *prefix;
  const auto& [component, cve] = *target;

  auto record = run.operator_service().store().load_record(published);
  Datastore doctored = record.datastore.without(component_label(component));
  zks::CommittedSet hidden({record.seed, doctored});
  std::vector<ComponentProof> proofs;
  for (const auto& affected : run.db().resolve(cve)) {
    auto result = hidden.query(component_label(canonical_id(affected)));
    proofs.push_back({affected, result.value.has_value(), result.value,
                      to_hex(zks::encode_proof(result.proof))});
  }
  run.step("operator", 6, "prove " + cve + " from doctored state",
           "hides " + component);
  Verdict v = run.verify(published, cve, proofs, cve + " against published commitment");
  run.transcript().verdicts[cve] = v;

  // Re-anchoring the doctored set is blocked too.
  bool republish_blocked = false;
  try {
    client::supplier_publish(run.artifact(), hidden.commitment(),
                             run.supplier().private_key, run.log());
  } catch (const Error& e) {
    republish_blocked = e.code() == ErrorCode::kDuplicateArtifact;
    run.step("supplier", 3, "republish doctored commitment", e.what(), false);
  }
  if (v.kind == Kind::kInvalid && republish_blocked) {
    run.detected(7, "non-inclusion proof for " + component +
                        " fails against the published commitment");
  }
}

void repudiate(Run& run) {
  auto prefix = run.honest_prefix();
  if (!prefix) return;
  run.step("supplier", 5, "deny publication", "claims the SBOM is not official");
  auto hash = crypto::hash(run.artifact());
  auto lookup = tlog::tl_lookup(run.log(), hash);
  bool logged = tlog::tl_verify(prefix->second, hash, lookup.found, lookup.entry,
                                lookup.proof) &&
                lookup.found;
  bool signed_by_supplier = false;
  if (logged) {
    const auto& e = *lookup.entry;
    auto message = client::BindingMessage{e.artifact_hash, e.commitment}.encode();
    signed_by_supplier = e.supplier_public_key == run.supplier().public_key &&
                         crypto::verify_sig(e.signature, message, run.supplier().public_key);
  }
  run.step("consumer", 5, "audit signature",
           signed_by_supplier ? "logged entry carries the supplier's valid signature"
                              : "no attributable entry",
           signed_by_supplier);
  if (signed_by_supplier) run.detected(5, "signature over the logged entry refutes the denial");
}

void split_view(Run& run) {
  auto up = run.commit();
  if (!run.supplier_check(up.seed, up.commitment)) return;
  run.publish(up.commitment);
  // A second, sanitised SBOM for the same artifact.
  auto datastore = sbom::to_datastore(sbom::parse_cyclonedx(run.sbom()));
  if (auto target = run.included_affected()) {
    datastore = datastore.without(component_label(target->first));
  }
  auto [second, state] = zks::commit(datastore, crypto::random_seed());
  try {
    client::supplier_publish(run.artifact(), second, run.supplier().private_key, run.log());
    run.step("supplier", 3, "publish second commitment", "accepted", true);
  } catch (const Error& e) {
    run.step("supplier", 3, "publish second commitment", e.what(), false);
    if (e.code() == ErrorCode::kDuplicateArtifact) {
      run.detected(3, "log refuses a second commitment for the same artifact");
    }
  }
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since)
      .count();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

std::vector<ComponentId> ids_with_prefix(const std::string& prefix, std::size_t n) {
  std::vector<ComponentId> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back({std::nullopt, prefix + std::to_string(i), "1.0.0", Ecosystem::kNpm});
  }
  return out;
}

struct ProofTiming {
  double gen_ms = 0;
  double verify_ms = 0;
  std::size_t bytes = 0;
  std::size_t max_single = 0;
  std::size_t count = 0;
};

ProofTiming time_proofs(const zks::CommittedSet& set, const std::string& cve,
                        const advisory::AdvisoryDb& db, std::size_t repeats) {
  std::vector<double> gen, ver;
  ProofTiming out;
  for (std::size_t r = 0; r < repeats; ++r) {
    auto start = std::chrono::steady_clock::now();
    std::vector<ComponentProof> proofs;
    for (const auto& c : db.resolve(cve)) {
      auto result = set.query(component_label(canonical_id(c)));
      proofs.push_back({c, result.value.has_value(), result.value,
                        to_hex(zks::encode_proof(result.proof))});
    }
    gen.push_back(elapsed_ms(start));

    start = std::chrono::steady_clock::now();
    Verdict v = client::consumer_verify_proofs(set.commitment(), cve, proofs, db);
    ver.push_back(elapsed_ms(start));
    if (v.kind == Kind::kInvalid) {
      throw Error(ErrorCode::kFixtureError, "perf proofs failed: " + v.detail);
    }
    out.bytes = proof_response_to_json({cve, proofs}).size();
    out.count = proofs.size();
    out.max_single = 0;
    for (const auto& p : proofs) out.max_single = std::max(out.max_single, p.proof_hex.size() / 2);
  }
  out.gen_ms = median(gen);
  out.verify_ms = median(ver);
  return out;
}

PerfRow measure(const std::string& panel, std::size_t n, std::size_t vulnerable,
                std::size_t repeats) {
  PerfRow row;
  row.panel = panel;
  row.components = n;
  row.vulnerable = vulnerable;

  const std::string sbom_json = synthetic_sbom(n, vulnerable);
  std::vector<double> commits;
  std::shared_ptr<zks::CommittedSet> set;
  for (std::size_t r = 0; r < std::max<std::size_t>(repeats, 1); ++r) {
    auto start = std::chrono::steady_clock::now();
    auto datastore = sbom::to_datastore(sbom::parse_cyclonedx(sbom_json));
    set = std::make_shared<zks::CommittedSet>(
        zks::SecretState{crypto::random_seed(), std::move(datastore)});
    row.record_bytes = op::serialize_record(
                           {set->commitment(), set->state().seed, set->state().datastore, {}})
                           .size();
    commits.push_back(elapsed_ms(start));
  }
  row.commit_ms = median(commits);

  std::vector<advisory::Advisory> advisories;
  const std::size_t k = std::max<std::size_t>(vulnerable, 1);
  if (vulnerable > 0) advisories.push_back({"SYNTH-INCLUSION", ids_with_prefix("vulnerable-", vulnerable)});
  advisories.push_back({"SYNTH-EXCLUSION", ids_with_prefix("absent-", k)});
  auto db = advisory::AdvisoryDb::from_advisories(std::move(advisories));

  const std::size_t reps = std::max<std::size_t>(repeats, 1);
  if (vulnerable > 0) {
    auto inc = time_proofs(*set, "SYNTH-INCLUSION", db, reps);
    row.inclusion_gen_ms = inc.gen_ms;
    row.inclusion_verify_ms = inc.verify_ms;
    row.inclusion_proof_bytes = inc.bytes;
    row.max_single_proof_bytes = inc.max_single;
    row.proof_count = inc.count;
  }
  auto exc = time_proofs(*set, "SYNTH-EXCLUSION", db, reps);
  row.exclusion_gen_ms = exc.gen_ms;
  row.exclusion_verify_ms = exc.verify_ms;
  row.exclusion_proof_bytes = exc.bytes;
  row.max_single_proof_bytes = std::max(row.max_single_proof_bytes, exc.max_single);
  if (vulnerable == 0) row.proof_count = 0;
  return row;
}

}  // namespace

std::string_view adversary_name(Adversary adversary) {
  for (const auto& [a, name] : kAdversaryNames) {
    if (a == adversary) return name;
  }
  return "";
}

std::optional<Adversary> parse_adversary(std::string_view name) {
  for (const auto& [a, n] : kAdversaryNames) {
    if (n == name) return a;
  }
  return std::nullopt;
}

Scenario load_scenario(const fs::path& path) {
  auto doc = nlohmann::json::parse(read_file(path), nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw Error(ErrorCode::kFixtureError, path.string() + " is not a JSON object");
  }
  auto base = path.parent_path();
  auto resolve = [&](const std::string& p) {
    fs::path candidate(p);
    return candidate.is_absolute() ? candidate : base / candidate;
  };
  try {
    Scenario s;
    s.name = doc.value("name", path.stem().string());
    s.sbom_path = resolve(doc.at("sbom").get<std::string>());
    s.advisory_path = resolve(doc.at("advisories").get<std::string>());
    s.cves = doc.at("cves").get<std::vector<std::string>>();
    auto adversary = parse_adversary(doc.value("adversary", std::string("None")));
    if (!adversary) throw Error(ErrorCode::kFixtureError, "unknown adversary");
    s.adversary = *adversary;
    if (doc.contains("artifact")) s.artifact_path = resolve(doc["artifact"].get<std::string>());
    for (const auto& p : {s.sbom_path, s.advisory_path}) {
      if (!fs::exists(p)) throw Error(ErrorCode::kFixtureError, "missing " + p.string());
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kFixtureError, e.what());
  }
}

bool Transcript::steps_in_order() const {
  for (std::size_t i = 1; i < steps.size(); ++i) {
    const int prev = steps[i - 1].box, cur = steps[i].box;
    // Each further query restarts at proof generation.
    if (cur < prev && !(prev == 7 && cur == 6)) {
      // Detected attacks may retry an earlier box (e.g. a second publish).
      if (adversary == Adversary::kNone) return false;
    }
  }
  return true;
}

bool Transcript::verdicts_sound() const {
  for (const auto& [cve, v] : verdicts) {
    if (adversary != Adversary::kNone) {
      if (v.kind != Kind::kInvalid) return false;
      continue;
    }
    auto it = ground_truth.find(cve);
    if (it == ground_truth.end() || it->second != v.kind) return false;
  }
  return true;
}

std::string Transcript::to_json() const {
  nlohmann::json steps_json = nlohmann::json::array();
  for (const auto& s : steps) {
    steps_json.push_back({{"actor", s.actor}, {"box", s.box}, {"action", s.action},
                          {"outcome", s.outcome}, {"ok", s.ok}});
  }
  nlohmann::json verdicts_json = nlohmann::json::object();
  for (const auto& [cve, v] : verdicts) {
    verdicts_json[cve] = {{"verdict", verdict_name(v.kind)}, {"detail", v.detail}};
  }
  nlohmann::json truth = nlohmann::json::object();
  for (const auto& [cve, k] : ground_truth) truth[cve] = verdict_name(k);
  nlohmann::json out{{"scenario", scenario},
                     {"adversary", adversary_name(adversary)},
                     {"steps", steps_json},
                     {"verdicts", verdicts_json},
                     {"ground_truth", truth}};
  if (adversary != Adversary::kNone) {
    out["attack_detected"] = attack_detected;
    out["detected_at_box"] = detected_at_box;
    out["detection"] = detection;
  }
  return out.dump(2);
}

Transcript run_happy_path(const Scenario& scenario) {
  Run run(scenario);
  auto prefix = run.honest_prefix();
  if (prefix) {
    for (const auto& cve : scenario.cves) {
      auto proofs = run.generate(prefix->first, cve);
      run.transcript().verdicts[cve] = run.verify(prefix->first, cve, proofs, cve);
    }
  }
  return run.transcript();
}

Transcript run_adversarial(const Scenario& scenario) {
  Run run(scenario);
  switch (scenario.adversary) {
    case Adversary::kNone:
      throw Error(ErrorCode::kFixtureError, "scenario has no adversary");
    case Adversary::kTamperOperator:
      tamper_operator(run);
      break;
    case Adversary::kForgeProofConsumer:
      forge_proof_consumer(run, scenario.cves);
      break;
    case Adversary::kRetroactiveHide:
      retroactive_hide(run);
      break;
    case Adversary::kRepudiate:
      repudiate(run);
      break;
    case Adversary::kSplitView:
      split_view(run);
      break;
  }
  return run.transcript();
}

Transcript run(const Scenario& scenario) {
  return scenario.adversary == Adversary::kNone ? run_happy_path(scenario)
                                                : run_adversarial(scenario);
}

std::string synthetic_sbom(std::size_t n, std::size_t vulnerable) {
  nlohmann::json components = nlohmann::json::array();
  for (std::size_t i = 0; i < n; ++i) {
    const std::string name =
        (i < vulnerable ? "vulnerable-" : "synthetic-") + std::to_string(i);
    components.push_back({{"type", "library"},
                          {"name", name},
                          {"version", "1.0.0"},
                          {"purl", "pkg:npm/" + name + "@1.0.0"}});
  }
  nlohmann::json doc{{"bomFormat", "CycloneDX"},
                     {"specVersion", "1.5"},
                     {"version", 1},
                     {"metadata", {{"component", {{"type", "application"},
                                                  {"name", "synthetic-app"}}}}},
                     {"components", components}};
  return doc.dump();
}

std::vector<PerfRow> run_perf_sweep(const PerfConfig& config) {
  std::vector<PerfRow> rows;
  for (std::size_t n : config.component_counts) {
    rows.push_back(measure("components", n, n > 0 ? 1 : 0, config.repeats));
  }
  for (std::size_t k : config.vulnerable_counts) {
    if (k > config.fixed_components) {
      throw Error(ErrorCode::kMalformedInput, "more vulnerable than total components");
    }
    rows.push_back(measure("vulnerable", config.fixed_components, k, config.repeats));
  }
  return rows;
}

std::string perf_rows_to_csv(const std::vector<PerfRow>& rows) {
  std::ostringstream out;
  out << "panel,components,vulnerable,commit_ms,inclusion_gen_ms,inclusion_verify_ms,"
         "exclusion_gen_ms,exclusion_verify_ms,record_bytes,inclusion_proof_bytes,"
         "exclusion_proof_bytes,max_single_proof_bytes,proof_count\n";
  auto opt = [](const auto& v) {
    std::ostringstream s;
    if (v) s << *v;
    return s.str();
  };
  for (const auto& r : rows) {
    out << r.panel << ',' << r.components << ',' << r.vulnerable << ',' << r.commit_ms << ','
        << opt(r.inclusion_gen_ms) << ',' << opt(r.inclusion_verify_ms) << ','
        << r.exclusion_gen_ms << ',' << r.exclusion_verify_ms << ',' << r.record_bytes << ','
        << opt(r.inclusion_proof_bytes) << ',' << r.exclusion_proof_bytes << ','
        << r.max_single_proof_bytes << ',' << r.proof_count << '\n';
  }
  return out.str();
}

}  // namespace zksbom::harness
