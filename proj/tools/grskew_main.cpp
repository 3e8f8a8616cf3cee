#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "grskew/campaign.hpp"

using namespace grskew;

namespace {

int run_campaign_command(const std::string& config_path, std::string out_path,
                         const std::string& format_flag, int workers_flag, bool fail_fast,
                         bool timings) {
  CampaignConfig config = default_config();
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "cannot open config " << config_path << "\n";
      return 2;
    }
    config = config_from_json(ojson::parse(in));
  }
  if (!format_flag.empty()) config.format = format_flag;
  if (workers_flag > 0) config.workers = workers_flag;
  if (fail_fast) config.fail_fast = true;
  if (timings) config.include_timings = true;
  validate_config(config);
  if (out_path.empty()) out_path = "report." + config.format;

  Report report = run_campaign(config);
  emit_report(report, config.format, out_path, config.include_timings);

  const CampaignSummary& s = report.summary;
  std::cerr << "instances=" << s.instances << " anticommutative=" << s.anticommutative
            << " disagreements=" << s.disagreements << " lemma_violations=" << s.lemma_violations
            << " classic_mismatches=" << s.classic_mismatches
            << " prop_mismatches=" << s.prop_mismatches
            << " plain_mismatches=" << s.plain_mismatches << " vacuous=" << s.vacuous_oracle
            << " errors=" << s.errors << " timeouts=" << s.timeouts << " runtime_ms="
            << s.runtime_ms << "\n";
  return s.clean() ? 0 : 1;
}

int run_check_command(const std::string& instance_path) {
  InstanceRecord record = check_instance(instance_path);
  ojson j{{"instance_id", record.instance_id},
          {"group", record.group},
          {"group_order", record.group_order},
          {"involution_index", record.involution_index},
          {"ring", record.ring},
          {"sigma_digest", record.sigma_digest},
          {"status", record.status},
          {"oracle", record.oracle},
          {"oracle_generators", record.oracle_generators},
          {"thm_2_12", record.thm_2_12},
          {"case", record.case_label},
          {"lemmas", record.lemmas},
          {"disagreement", record.disagreement}};
  if (record.cor_2_13) j["cor_2_13"] = *record.cor_2_13;
  if (record.prop_2_14) j["prop_2_14"] = *record.prop_2_14;
  if (record.plain_consistent) j["plain_consistent"] = *record.plain_consistent;
  if (!record.oracle_witness.empty()) j["oracle_witness"] = ojson::parse(record.oracle_witness);
  if (!record.error.empty()) j["error"] = record.error;
  std::cout << j.dump(2) << "\n";
  return (record.status == "ok" && !record.disagreement) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decides anticommutativity of the skew-symmetric elements of finite group rings "
               "under generalized oriented involutions, by brute-force oracle and by the "
               "structural classification, and cross-checks the two."};
  app.require_subcommand(1);

  auto* campaign = app.add_subcommand("campaign", "run an enumeration campaign");
  std::string config_path, out_path, format;
  int workers = 0;
  bool fail_fast = false, timings = false;
  campaign->add_option("--config", config_path, "campaign config JSON file");
  campaign->add_option("--out", out_path, "report output path ('-' for stdout)");
  campaign->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  campaign->add_option("--workers", workers, "parallel worker count");
  campaign->add_flag("--fail-fast", fail_fast, "stop at the first inconsistency");
  campaign->add_flag("--timings", timings, "include wall-clock fields in the report");

  auto* check = app.add_subcommand("check", "evaluate a single instance file");
  std::string instance_path;
  check->add_option("--instance", instance_path, "instance JSON file")->required();

  auto* list_groups = app.add_subcommand("list-groups", "print the default group catalog");
  auto* list_rings = app.add_subcommand("list-rings", "print the default ring specs");

  CLI11_PARSE(app, argc, argv);

  try {
    if (campaign->parsed())
      return run_campaign_command(config_path, out_path, format, workers, fail_fast, timings);
    if (check->parsed()) return run_check_command(instance_path);
    if (list_groups->parsed()) {
      for (const auto& name : default_group_names()) {
        Group g = group_by_name(name);
        std::cout << name << "  order=" << g.order()
                  << (g.is_abelian() ? "  abelian" : "") << "\n";
      }
      return 0;
    }
    if (list_rings->parsed()) {
      for (const auto& spec : default_ring_specs()) {
        Ring r = parse_ring_spec(spec);
        std::cout << spec << "  characteristic=" << r.characteristic()
                  << "  size=" << r.size() << "\n";
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
