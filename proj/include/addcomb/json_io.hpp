#pragma once

#include <json.hpp>

#include "addcomb/energy.hpp"
#include "addcomb/examples.hpp"
#include "addcomb/search.hpp"
#include "addcomb/theorems.hpp"

namespace addcomb {

using json = nlohmann::ordered_json;

json group_to_json(const GroupSpec& g);  // {"orders": [...]}

/// {"theorem","holds","branch","lhs","rhs","witness","elapsed_ns"};
/// witness is {"A_prime","B_prime","l","H","rho"} or null. Timing fields are
/// dropped when include_timing is false so record streams stay byte-stable.
json verdict_to_json(const TheoremVerdict& v, bool include_timing = true);

/// One JSONL search record; deterministic (no timing fields).
json record_to_json(const CampaignRecord& rec);

json energy_report_to_json(const EnergyReport& r);

json example_to_json(const ExampleInstance& inst, std::int64_t measured);

}  // namespace addcomb
