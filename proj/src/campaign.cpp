#include "grskew/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "grskew/util.hpp"

namespace grskew {

std::vector<std::string> default_group_names() {
  std::vector<std::string> names;
  for (int n = 2; n <= 16; ++n) names.push_back("C" + std::to_string(n));
  names.insert(names.end(), {"C2xC2", "C2xC2xC2", "C2xC2xC2xC2", "C2xC4", "C2xC8", "C4xC4"});
  for (int n = 3; n <= 8; ++n) names.push_back("D" + std::to_string(n));
  names.insert(names.end(), {"Q8", "Dic3", "Q16"});
  return names;
}

std::vector<std::string> default_ring_specs() {
  return {"Z3", "Z4", "Z5", "Z8", "Z9", "Z12", "Z4xZ3", "Z4xZ4", "Z8xZ3"};
}

CampaignConfig default_config() {
  CampaignConfig config;
  config.groups = default_group_names();
  config.rings = default_ring_specs();
  return config;
}

namespace {

Group group_token(std::string_view token) {
  auto digits = [&](size_t from) -> int {
    if (from >= token.size()) fail(errc::parse_error, "group name: missing parameter digits");
    for (size_t i = from; i < token.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(token[i])))
        fail(errc::parse_error, "group name: bad parameter in '" + std::string(token) + "'");
    return std::stoi(std::string(token.substr(from)));
  };
  char head = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
  if (head == 'C') return catalog_group(GroupFamily::cyclic, digits(1));
  if (head == 'E') {
    int order = digits(1);
    int k = 0;
    while ((1 << k) < order) ++k;
    if ((1 << k) != order || order < 2)
      fail(errc::parse_error, "elementary abelian order must be a power of 2");
    return catalog_group(GroupFamily::elementary_abelian, k);
  }
  if (head == 'Q') {
    int order = digits(1);
    if (order % 4 != 0 || order < 8)
      fail(errc::parse_error, "generalized quaternion order must be 8, 16, 32, ...");
    return catalog_group(GroupFamily::dicyclic, order / 4);
  }
  if (head == 'D') {
    size_t from = 1;
    bool dic = token.size() > 3 &&
               std::tolower(static_cast<unsigned char>(token[1])) == 'i' &&
               std::tolower(static_cast<unsigned char>(token[2])) == 'c';
    if (dic) from = 3;
    int n = digits(from);
    return catalog_group(dic ? GroupFamily::dicyclic : GroupFamily::dihedral, n);
  }
  fail(errc::parse_error, "unknown group name '" + std::string(token) + "'");
}

}  // namespace

Group group_by_name(std::string_view name) {
  std::vector<std::string_view> tokens;
  size_t start = 0;
  for (size_t i = 0; i <= name.size(); ++i) {
    if (i == name.size() || name[i] == 'x' || name[i] == 'X') {
      if (i == start) fail(errc::parse_error, "empty token in group name");
      tokens.push_back(name.substr(start, i - start));
      start = i + 1;
    }
  }
  if (tokens.empty()) fail(errc::parse_error, "empty group name");
  Group g = group_token(tokens[0]);
  for (size_t i = 1; i < tokens.size(); ++i) g = direct_product(g, group_token(tokens[i]));
  g.rename(std::string(name));
  return g;
}

void validate_config(const CampaignConfig& config) {
  if (config.groups.empty()) fail(errc::validation_error, "config lists no groups");
  if (config.rings.empty()) fail(errc::validation_error, "config lists no rings");
  if (config.format != "json" && config.format != "csv")
    fail(errc::validation_error, "report format must be json or csv");
  if (config.workers < 1) fail(errc::validation_error, "workers must be >= 1");
  for (const auto& name : config.groups) {
    Group g = group_by_name(name);
    if (g.order() > config.max_group_order)
      fail(errc::validation_error, "group " + name + " exceeds max_group_order " +
                                       std::to_string(config.max_group_order));
  }
  for (const auto& spec : config.rings) {
    Ring r = parse_ring_spec(spec);
    if (r.characteristic() == 2)
      fail(errc::characteristic_two, "ring " + spec + " has characteristic 2");
    if (has_characteristic_two_component(r))
      fail(errc::validation_error,
           "ring " + spec + " hides a characteristic-2 residue factor");
  }
}

CampaignConfig config_from_json(const ojson& j) {
  CampaignConfig config = default_config();
  if (j.contains("groups")) config.groups = j.at("groups").get<std::vector<std::string>>();
  if (j.contains("rings")) config.rings = j.at("rings").get<std::vector<std::string>>();
  if (j.contains("max_group_order")) config.max_group_order = j.at("max_group_order").get<int>();
  if (j.contains("workers")) config.workers = j.at("workers").get<int>();
  if (j.contains("format")) config.format = j.at("format").get<std::string>();
  if (j.contains("fail_fast")) config.fail_fast = j.at("fail_fast").get<bool>();
  if (j.contains("timeout_ms")) config.timeout_ms = j.at("timeout_ms").get<int>();
  if (j.contains("include_timings")) config.include_timings = j.at("include_timings").get<bool>();
  return config;
}

ojson config_to_json(const CampaignConfig& config) {
  return ojson{{"groups", config.groups},
               {"rings", config.rings},
               {"max_group_order", config.max_group_order},
               {"workers", config.workers},
               {"format", config.format},
               {"fail_fast", config.fail_fast},
               {"timeout_ms", config.timeout_ms},
               {"include_timings", config.include_timings}};
}

namespace {

std::string structural_digest_input(const Group& g, const Involution& tau,
                                    const Ring& r, const Orientation& sigma) {
  std::string s = "g:" + std::to_string(g.order()) + ":";
  for (int v : g.table()) s += std::to_string(v) + ",";
  s += "|t:";
  for (int v : tau.perm) s += std::to_string(v) + ",";
  s += "|r:";
  for (int m : r.moduli()) s += std::to_string(m) + ",";
  s += "|s:";
  for (int v : sigma.values) s += std::to_string(v) + ",";
  return s;
}

std::string sigma_digest(const Ring& r, const Orientation& sigma) {
  std::string s;
  for (int v : sigma.values) {
    for (int res : r.residues(v)) s += std::to_string(res) + ",";
    s += ";";
  }
  return hex16(fnv1a64(s));
}

}  // namespace

InstanceContext EnumeratedInstance::make_context() const {
  return build_context(group, tau, ring, sigma);
}

std::vector<EnumeratedInstance> enumerate_instances(const CampaignConfig& config) {
  validate_config(config);

  std::vector<std::shared_ptr<const Ring>> rings;
  for (const auto& spec : config.rings)
    rings.push_back(std::make_shared<Ring>(parse_ring_spec(spec)));

  std::vector<EnumeratedInstance> out;
  for (const auto& group_name : config.groups) {
    auto group = std::make_shared<Group>(group_by_name(group_name));
    std::vector<Involution> involutions = enumerate_involutions(*group);
    QuotientView ab = quotient_view(*group, group->derived_subgroup());

    // Homomorphisms into each unit group factor through the abelianization;
    // computed once per (group, ring) and shared across involutions.
    std::vector<std::vector<Orientation>> pullbacks(rings.size());
    for (size_t ri = 0; ri < rings.size(); ++ri) {
      const Ring& r = *rings[ri];
      UnitGroup u = units(r);
      for (const auto& hom : all_homomorphisms(ab.group, u.group)) {
        Orientation sigma;
        sigma.values.resize(static_cast<size_t>(group->order()));
        for (int x = 0; x < group->order(); ++x)
          sigma.values[static_cast<size_t>(x)] = u.codes[static_cast<size_t>(
              hom[static_cast<size_t>(ab.projection[static_cast<size_t>(x)])])];
        if (is_trivial(r, sigma)) continue;
        pullbacks[ri].push_back(std::move(sigma));
      }
    }

    for (size_t ti = 0; ti < involutions.size(); ++ti) {
      for (size_t ri = 0; ri < rings.size(); ++ri) {
        const Ring& r = *rings[ri];
        std::vector<Orientation> compatible;
        for (const auto& sigma : pullbacks[ri])
          if (is_compatible(*group, involutions[ti], r, sigma)) compatible.push_back(sigma);
        std::sort(compatible.begin(), compatible.end(),
                  [](const Orientation& a, const Orientation& b) { return a.values < b.values; });
        for (auto& sigma : compatible) {
          EnumeratedInstance inst;
          inst.instance_id =
              hex16(fnv1a64(structural_digest_input(*group, involutions[ti], r, sigma)));
          inst.group_name = group_name;
          inst.group = group;
          inst.involution_index = static_cast<int>(ti);
          inst.tau = involutions[ti];
          inst.ring_spec = config.rings[ri];
          inst.ring = rings[ri];
          inst.sigma = std::move(sigma);
          out.push_back(std::move(inst));
        }
      }
    }
  }
  return out;
}

InstanceRecord evaluate_instance(const EnumeratedInstance& instance, int timeout_ms) {
  InstanceRecord record;
  record.instance_id = instance.instance_id;
  record.group = instance.group_name;
  record.group_order = instance.group->order();
  record.involution_index = instance.involution_index;
  record.ring = instance.ring_spec;
  record.sigma_digest = sigma_digest(*instance.ring, instance.sigma);

  const auto started = std::chrono::steady_clock::now();
  Deadline deadline = timeout_ms >= 0 ? Deadline::after(std::chrono::milliseconds(timeout_ms))
                                      : Deadline();
  try {
    InstanceContext ctx = instance.make_context();

    OracleVerdict oracle = oracle_anticommutative(ctx, deadline);
    record.oracle = oracle.anticommutative;
    record.oracle_generators = oracle.generator_count;
    if (oracle.witness) record.oracle_witness = oracle_verdict_to_json(ctx, oracle)["witness"].dump();

    ClassificationVerdict thm = classify_oriented(ctx, deadline);
    record.thm_2_12 = thm.anticommutative;
    record.case_label = std::string(case_label_string(thm.case_label));
    record.disagreement = record.oracle != record.thm_2_12;

    if (is_classic(ctx.ring(), ctx.sigma()))
      record.cor_2_13 = classify_classic(ctx, deadline).anticommutative;
    if (exp2_quotient_applicable(ctx))
      record.prop_2_14 = classify_exp2_quotient(ctx, deadline).anticommutative;

    if (record.oracle) {
      std::string failed;
      for (const auto& lemma : lemma_suite(ctx, true, deadline))
        if (!lemma.holds) failed += (failed.empty() ? "" : ",") + lemma.id;
      record.lemmas = failed.empty() ? "pass" : "fail:" + failed;
    }

    // The restriction of sigma* to RN is the plain involution, so the plain
    // classification of (N, tau|N, R) must match the oracle on RN.
    {
      SubgroupView nv = subgroup_view(ctx.group(), ctx.sigma_kernel());
      Involution tau_n;
      tau_n.perm.resize(nv.to_parent.size());
      for (size_t i = 0; i < nv.to_parent.size(); ++i)
        tau_n.perm[i] = nv.from_parent[static_cast<size_t>(ctx.tau_of(nv.to_parent[i]))];
      auto sub_group = std::make_shared<Group>(nv.group);
      InstanceContext plain = build_plain_context(sub_group, tau_n, instance.ring);
      bool plain_oracle = oracle_anticommutative(plain, deadline).anticommutative;
      bool plain_class = classify_plain(nv.group, tau_n, *instance.ring).anticommutative;
      record.plain_consistent = plain_oracle == plain_class;
    }
  } catch (const Error& e) {
    record.status = e.code() == errc::timed_out ? "timeout" : "error";
    record.error = e.what();
  }
  record.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(
                          std::chrono::steady_clock::now() - started)
                          .count();
  return record;
}

namespace {

void accumulate(CampaignSummary& summary, const InstanceRecord& record) {
  ++summary.instances;
  if (record.status == "error") ++summary.errors;
  if (record.status == "timeout") ++summary.timeouts;
  if (record.status != "ok") return;
  if (record.oracle) ++summary.anticommutative;
  if (record.disagreement) ++summary.disagreements;
  if (record.oracle && record.lemmas != "pass") ++summary.lemma_violations;
  if (record.cor_2_13 && *record.cor_2_13 != record.thm_2_12) ++summary.classic_mismatches;
  if (record.prop_2_14 && *record.prop_2_14 != record.thm_2_12) ++summary.prop_mismatches;
  if (record.plain_consistent && !*record.plain_consistent) ++summary.plain_mismatches;
  if (record.oracle_generators == 0) ++summary.vacuous_oracle;
}

}  // namespace

Report run_campaign(const CampaignConfig& config) {
  const auto started = std::chrono::steady_clock::now();
  std::vector<EnumeratedInstance> instances = enumerate_instances(config);

  Report report;
  report.records.resize(instances.size());

  if (config.fail_fast) {
    size_t processed = 0;
    for (size_t i = 0; i < instances.size(); ++i) {
      report.records[i] = evaluate_instance(instances[i], config.timeout_ms);
      ++processed;
      const InstanceRecord& r = report.records[i];
      if (r.status != "ok" || r.disagreement || (r.oracle && r.lemmas != "pass")) break;
    }
    report.records.resize(processed);
  } else {
    int workers = std::max(1, config.workers);
    if (workers == 1) {
      for (size_t i = 0; i < instances.size(); ++i)
        report.records[i] = evaluate_instance(instances[i], config.timeout_ms);
    } else {
      std::atomic<size_t> next{0};
      auto run = [&]() {
        while (true) {
          size_t i = next.fetch_add(1);
          if (i >= instances.size()) break;
          report.records[i] = evaluate_instance(instances[i], config.timeout_ms);
        }
      };
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(run);
      for (auto& t : pool) t.join();
    }
  }

  for (const auto& record : report.records) accumulate(report.summary, record);
  report.summary.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                  std::chrono::steady_clock::now() - started)
                                  .count();
  return report;
}

InstanceRecord check_instance_json(const ojson& doc) {
  if (!doc.is_object()) fail(errc::parse_error, "instance file must hold a JSON object");
  for (const char* key : {"group", "involution", "ring", "sigma"})
    if (!doc.contains(key))
      fail(errc::validation_error, std::string("instance file: missing \"") + key + "\"");

  const ojson& gj = doc.at("group");
  Group g = gj.contains("table")
                ? group_from_json(gj)
                : group_by_name(gj.at("name").get<std::string>());
  auto ring = std::make_shared<Ring>(parse_ring_spec(doc.at("ring").get<std::string>()));
  Involution tau = involution_from_json(doc.at("involution"));
  validate_involution(g, tau);
  Orientation sigma = orientation_from_json(*ring, doc.at("sigma"));

  auto group = std::make_shared<Group>(std::move(g));
  // Surfaces TrivialOrientation / IncompatibleOrientation / CharacteristicTwo
  // before any evaluation runs.
  build_context(group, tau, ring, sigma);

  EnumeratedInstance inst;
  inst.group_name = group->name().empty() ? "custom" : group->name();
  inst.group = group;
  inst.tau = tau;
  inst.ring_spec = ring->spec_string();
  inst.ring = ring;
  inst.sigma = std::move(sigma);
  inst.instance_id = hex16(fnv1a64(structural_digest_input(*group, tau, *ring, inst.sigma)));
  inst.involution_index = -1;
  auto involutions = enumerate_involutions(*group);
  for (size_t i = 0; i < involutions.size(); ++i)
    if (involutions[i] == tau) inst.involution_index = static_cast<int>(i);

  return evaluate_instance(inst, 30000);
}

InstanceRecord check_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io_error, "cannot open instance file " + path);
  ojson doc;
  try {
    doc = ojson::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(errc::parse_error, std::string("instance file ") + path + ": " + e.what());
  }
  return check_instance_json(doc);
}

namespace {

ojson record_to_json(const InstanceRecord& r, bool include_timings) {
  ojson j{{"instance_id", r.instance_id},
          {"group", r.group},
          {"group_order", r.group_order},
          {"involution_index", r.involution_index},
          {"ring", r.ring},
          {"sigma_digest", r.sigma_digest},
          {"status", r.status},
          {"oracle", r.oracle},
          {"oracle_generators", r.oracle_generators},
          {"thm_2_12", r.thm_2_12},
          {"case", r.case_label},
          {"lemmas", r.lemmas},
          {"disagreement", r.disagreement}};
  if (r.cor_2_13) j["cor_2_13"] = *r.cor_2_13;
  if (r.prop_2_14) j["prop_2_14"] = *r.prop_2_14;
  if (r.plain_consistent) j["plain_consistent"] = *r.plain_consistent;
  if (!r.oracle_witness.empty()) j["oracle_witness"] = ojson::parse(r.oracle_witness);
  if (!r.error.empty()) j["error"] = r.error;
  if (include_timings) j["elapsed_us"] = r.elapsed_us;
  return j;
}

InstanceRecord record_from_json(const ojson& j) {
  InstanceRecord r;
  r.instance_id = j.at("instance_id").get<std::string>();
  r.group = j.at("group").get<std::string>();
  r.group_order = j.at("group_order").get<int>();
  r.involution_index = j.at("involution_index").get<int>();
  r.ring = j.at("ring").get<std::string>();
  r.sigma_digest = j.at("sigma_digest").get<std::string>();
  r.status = j.at("status").get<std::string>();
  r.oracle = j.at("oracle").get<bool>();
  r.oracle_generators = j.at("oracle_generators").get<size_t>();
  r.thm_2_12 = j.at("thm_2_12").get<bool>();
  r.case_label = j.at("case").get<std::string>();
  r.lemmas = j.at("lemmas").get<std::string>();
  r.disagreement = j.at("disagreement").get<bool>();
  if (j.contains("cor_2_13")) r.cor_2_13 = j.at("cor_2_13").get<bool>();
  if (j.contains("prop_2_14")) r.prop_2_14 = j.at("prop_2_14").get<bool>();
  if (j.contains("plain_consistent")) r.plain_consistent = j.at("plain_consistent").get<bool>();
  if (j.contains("oracle_witness")) r.oracle_witness = j.at("oracle_witness").dump();
  if (j.contains("error")) r.error = j.at("error").get<std::string>();
  if (j.contains("elapsed_us")) r.elapsed_us = j.at("elapsed_us").get<long long>();
  return r;
}

std::string csv_escape(const std::string& field) {
  bool needs_quotes = field.find_first_of(",\"\n") != std::string::npos;
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string opt_bool(const std::optional<bool>& v) {
  if (!v) return "";
  return *v ? "true" : "false";
}

}  // namespace

ojson report_to_json(const Report& report, bool include_timings) {
  ojson summary{{"instances", report.summary.instances},
                {"anticommutative", report.summary.anticommutative},
                {"disagreements", report.summary.disagreements},
                {"lemma_violations", report.summary.lemma_violations},
                {"classic_mismatches", report.summary.classic_mismatches},
                {"prop_mismatches", report.summary.prop_mismatches},
                {"plain_mismatches", report.summary.plain_mismatches},
                {"vacuous_oracle", report.summary.vacuous_oracle},
                {"errors", report.summary.errors},
                {"timeouts", report.summary.timeouts}};
  if (include_timings) summary["runtime_ms"] = report.summary.runtime_ms;
  ojson records = ojson::array();
  for (const auto& r : report.records) records.push_back(record_to_json(r, include_timings));
  return ojson{{"summary", std::move(summary)}, {"records", std::move(records)}};
}

Report report_from_json(const ojson& j) {
  Report report;
  const ojson& s = j.at("summary");
  report.summary.instances = s.at("instances").get<long long>();
  report.summary.anticommutative = s.at("anticommutative").get<long long>();
  report.summary.disagreements = s.at("disagreements").get<long long>();
  report.summary.lemma_violations = s.at("lemma_violations").get<long long>();
  report.summary.classic_mismatches = s.at("classic_mismatches").get<long long>();
  report.summary.prop_mismatches = s.at("prop_mismatches").get<long long>();
  report.summary.plain_mismatches = s.at("plain_mismatches").get<long long>();
  report.summary.vacuous_oracle = s.at("vacuous_oracle").get<long long>();
  report.summary.errors = s.at("errors").get<long long>();
  report.summary.timeouts = s.at("timeouts").get<long long>();
  if (s.contains("runtime_ms")) report.summary.runtime_ms = s.at("runtime_ms").get<long long>();
  for (const auto& rec : j.at("records")) report.records.push_back(record_from_json(rec));
  return report;
}

std::string report_to_csv(const Report& report, bool include_timings) {
  std::ostringstream out;
  out << "instance_id,group,group_order,involution_index,ring,sigma_digest,status,oracle,"
         "oracle_generators,thm_2_12,case,cor_2_13,prop_2_14,lemmas,plain_consistent,"
         "disagreement,oracle_witness,error";
  if (include_timings) out << ",elapsed_us";
  out << "\n";
  for (const auto& r : report.records) {
    out << csv_escape(r.instance_id) << ',' << csv_escape(r.group) << ',' << r.group_order << ','
        << r.involution_index << ',' << csv_escape(r.ring) << ',' << csv_escape(r.sigma_digest)
        << ',' << r.status << ',' << (r.oracle ? "true" : "false") << ',' << r.oracle_generators
        << ',' << (r.thm_2_12 ? "true" : "false") << ',' << csv_escape(r.case_label) << ','
        << opt_bool(r.cor_2_13) << ',' << opt_bool(r.prop_2_14) << ',' << csv_escape(r.lemmas)
        << ',' << opt_bool(r.plain_consistent) << ',' << (r.disagreement ? "true" : "false")
        << ',' << csv_escape(r.oracle_witness) << ',' << csv_escape(r.error);
    if (include_timings) out << ',' << r.elapsed_us;
    out << "\n";
  }
  return out.str();
}

void emit_report(const Report& report, const std::string& format, const std::string& path,
                 bool include_timings) {
  std::string payload;
  if (format == "json") {
    payload = report_to_json(report, include_timings).dump(2);
    payload += "\n";
  } else if (format == "csv") {
    payload = report_to_csv(report, include_timings);
  } else {
    fail(errc::validation_error, "report format must be json or csv");
  }
  if (path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::io_error, "cannot open report path " + path);
  out << payload;
  if (!out) fail(errc::io_error, "failed writing report to " + path);
}

}  // namespace grskew
