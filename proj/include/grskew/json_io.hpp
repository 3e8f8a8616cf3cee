#pragma once

#include <string>

#include "json.hpp"

#include "grskew/classifier.hpp"
#include "grskew/group.hpp"
#include "grskew/group_ring.hpp"
#include "grskew/orientation.hpp"
#include "grskew/ring.hpp"

namespace grskew {

using ojson = nlohmann::ordered_json;

ojson group_to_json(const Group& g);
/// Accepts {"table": [[...]], "name"?, "identity"?}.
Group group_from_json(const ojson& j);

ojson involution_to_json(const Involution& tau);
Involution involution_from_json(const ojson& j);

/// List of residue tuples indexed by group element.
ojson orientation_to_json(const Ring& r, const Orientation& sigma);
Orientation orientation_from_json(const Ring& r, const ojson& j);

ojson group_ring_elem_to_json(const Ring& r, const GroupRingElem& a);

ojson verdict_to_json(const ClassificationVerdict& v);
ojson oracle_verdict_to_json(const InstanceContext& ctx, const OracleVerdict& v);

}  // namespace grskew
