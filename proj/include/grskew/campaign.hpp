#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grskew/classifier.hpp"
#include "grskew/json_io.hpp"
#include "grskew/orientation.hpp"

namespace grskew {

struct CampaignConfig {
  std::vector<std::string> groups;
  std::vector<std::string> rings;
  int max_group_order = 16;
  int workers = 1;
  std::string format = "json";  // "json" | "csv"
  bool fail_fast = false;
  int timeout_ms = 30000;       // per instance; negative disables the deadline
  bool include_timings = false; // timings make reports run-dependent, so off by default
};

std::vector<std::string> default_group_names();
std::vector<std::string> default_ring_specs();
CampaignConfig default_config();

/// Resolves catalog names: Cn, Dn (order 2n), Dicn (order 4n), Q8/Q16/Q32,
/// E4/E8/E16, and x-joined products such as "C2xC4".
Group group_by_name(std::string_view name);

void validate_config(const CampaignConfig& config);
CampaignConfig config_from_json(const ojson& j);
ojson config_to_json(const CampaignConfig& config);

/// One enumerated campaign instance; contexts are rebuilt from these pieces
/// inside the workers.
struct EnumeratedInstance {
  std::string instance_id;  // hash of the structural serialization
  std::string group_name;
  std::shared_ptr<const Group> group;
  int involution_index = 0;
  Involution tau;
  std::string ring_spec;
  std::shared_ptr<const Ring> ring;
  Orientation sigma;

  InstanceContext make_context() const;
};

/// Deterministic stream: for each configured group, each involution, each
/// ring, each compatible nontrivial orientation.
std::vector<EnumeratedInstance> enumerate_instances(const CampaignConfig& config);

struct InstanceRecord {
  std::string instance_id;
  std::string group;
  int group_order = 0;
  int involution_index = -1;
  std::string ring;
  std::string sigma_digest;
  std::string status = "ok";  // "ok" | "error" | "timeout"
  std::string error;
  bool oracle = false;
  std::string oracle_witness;  // JSON text, empty when anticommutative
  size_t oracle_generators = 0;
  bool thm_2_12 = false;
  std::string case_label = "none";
  std::optional<bool> cor_2_13;   // present iff the orientation is classic
  std::optional<bool> prop_2_14;  // present iff the hypotheses apply
  std::string lemmas = "n/a";     // "pass" | "fail:<ids>" | "n/a"
  std::optional<bool> plain_consistent;
  bool disagreement = false;
  long long elapsed_us = 0;

  bool operator==(const InstanceRecord&) const = default;
};

struct CampaignSummary {
  long long instances = 0;
  long long anticommutative = 0;
  long long disagreements = 0;       // oracle vs main classification
  long long lemma_violations = 0;
  long long classic_mismatches = 0;
  long long prop_mismatches = 0;
  long long plain_mismatches = 0;
  long long vacuous_oracle = 0;      // empty generator sets (expected never)
  long long errors = 0;
  long long timeouts = 0;
  long long runtime_ms = 0;

  bool clean() const {
    return disagreements == 0 && lemma_violations == 0 && classic_mismatches == 0 &&
           prop_mismatches == 0 && plain_mismatches == 0 && vacuous_oracle == 0 && errors == 0 &&
           timeouts == 0;
  }

  bool operator==(const CampaignSummary&) const = default;
};

struct Report {
  CampaignSummary summary;
  std::vector<InstanceRecord> records;

  bool operator==(const Report&) const = default;
};

InstanceRecord evaluate_instance(const EnumeratedInstance& instance, int timeout_ms);

/// Runs every instance through the oracle, the main classification, and the
/// applicable specializations; collects the cross-check counters.  Results
/// are deterministic and independent of the worker count.
Report run_campaign(const CampaignConfig& config);

/// Single-instance record from an instance file:
///   {"group": {"name": ...} | {"table": [[...]]},
///    "involution": {"perm": [...]}, "ring": "Z8", "sigma": [[...], ...]}
InstanceRecord check_instance(const std::string& path);
InstanceRecord check_instance_json(const ojson& doc);

ojson report_to_json(const Report& report, bool include_timings = false);
Report report_from_json(const ojson& j);
std::string report_to_csv(const Report& report, bool include_timings = false);

/// Serializes the report ("json" or "csv") to the path, byte-stable for
/// identical inputs; "-" writes to stdout.
void emit_report(const Report& report, const std::string& format, const std::string& path,
                 bool include_timings = false);

}  // namespace grskew
