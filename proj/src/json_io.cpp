#include "grskew/json_io.hpp"

namespace grskew {

ojson group_to_json(const Group& g) {
  ojson table = ojson::array();
  for (int x = 0; x < g.order(); ++x) {
    ojson row = ojson::array();
    for (int y = 0; y < g.order(); ++y) row.push_back(g.mul(x, y));
    table.push_back(std::move(row));
  }
  return ojson{{"name", g.name()},
               {"order", g.order()},
               {"table", std::move(table)},
               {"identity", g.identity()}};
}

Group group_from_json(const ojson& j) {
  if (!j.is_object() || !j.contains("table"))
    fail(errc::validation_error, "group object needs a \"table\" field");
  std::vector<std::vector<int>> table;
  for (const auto& row : j.at("table")) table.push_back(row.get<std::vector<int>>());
  std::optional<int> hint;
  if (j.contains("identity")) hint = j.at("identity").get<int>();
  std::string name = j.contains("name") ? j.at("name").get<std::string>() : std::string();
  Group g = build_group(table, hint, name);
  if (j.contains("order") && j.at("order").get<int>() != g.order())
    fail(errc::validation_error, "declared order does not match the table");
  return g;
}

ojson involution_to_json(const Involution& tau) { return ojson{{"perm", tau.perm}}; }

Involution involution_from_json(const ojson& j) {
  if (!j.is_object() || !j.contains("perm"))
    fail(errc::validation_error, "involution object needs a \"perm\" field");
  return Involution{j.at("perm").get<std::vector<int>>()};
}

ojson orientation_to_json(const Ring& r, const Orientation& sigma) {
  ojson out = ojson::array();
  for (int v : sigma.values) out.push_back(r.residues(v));
  return out;
}

Orientation orientation_from_json(const Ring& r, const ojson& j) {
  if (!j.is_array()) fail(errc::validation_error, "orientation must be an array of residue tuples");
  Orientation sigma;
  for (const auto& tuple : j)
    sigma.values.push_back(r.from_residues(tuple.get<std::vector<int>>()));
  return sigma;
}

ojson group_ring_elem_to_json(const Ring& r, const GroupRingElem& a) {
  ojson out = ojson::array();
  for (int v : a.coeffs) out.push_back(r.residues(v));
  return out;
}

ojson verdict_to_json(const ClassificationVerdict& v) {
  ojson diags = ojson::array();
  for (const auto& d : v.diagnostics) {
    ojson entry{{"id", d.id}, {"pass", d.pass}, {"evaluated", d.evaluated}};
    if (!d.witness.empty()) entry["witness"] = ojson::parse(d.witness);
    diags.push_back(std::move(entry));
  }
  return ojson{{"anticommutative", v.anticommutative},
               {"case_label", std::string(case_label_string(v.case_label))},
               {"condition_diagnostics", std::move(diags)},
               {"slc_note", std::string(group_shape_string(v.slc_note))}};
}

ojson oracle_verdict_to_json(const InstanceContext& ctx, const OracleVerdict& v) {
  ojson out{{"anticommutative", v.anticommutative}, {"generators", v.generator_count}};
  if (v.witness) {
    out["witness"] = ojson{{"first_index", v.witness->first_index},
                           {"second_index", v.witness->second_index},
                           {"first", v.witness->first_label},
                           {"second", v.witness->second_label},
                           {"product_sum", group_ring_elem_to_json(ctx.ring(), v.witness->product_sum)}};
  }
  return out;
}

}  // namespace grskew
