#include "addcomb/json_io.hpp"

namespace addcomb {

json group_to_json(const GroupSpec& g) { return json{{"orders", g.orders()}}; }

json verdict_to_json(const TheoremVerdict& v, bool include_timing) {
    json j;
    j["theorem"] = theorem_name(v.theorem);
    j["holds"] = v.holds;
    j["branch"] = branch_name(v.branch);
    j["lhs"] = v.lhs;
    j["rhs"] = v.rhs;
    if (v.witness) {
        j["witness"] = json{{"A_prime", v.witness->A_prime.indices()},
                            {"B_prime", v.witness->B_prime.indices()},
                            {"l", v.witness->l},
                            {"H", v.witness->H.carrier().indices()},
                            {"rho", v.witness->rho}};
    } else {
        j["witness"] = nullptr;
    }
    if (include_timing) j["elapsed_ns"] = v.elapsed_ns;
    return j;
}

json record_to_json(const CampaignRecord& rec) {
    json verdicts = json::array();
    for (const auto& v : rec.verdicts) verdicts.push_back(verdict_to_json(v, false));
    return json{{"group", json{{"orders", rec.group_factors}}},
                {"A", rec.A},
                {"B", rec.B},
                {"t", rec.t},
                {"verdicts", std::move(verdicts)},
                {"tightness_gap", rec.tightness_gap}};
}

json energy_report_to_json(const EnergyReport& r) {
    return json{{"group", group_to_json(*r.group)},
                {"energy", r.energy},
                {"T", r.T.indices()},
                {"k", r.k},
                {"t", r.t},
                {"lower_bound", r.lower_bound},
                {"upper_bound_rhs", r.upper_bound_rhs}};
}

json example_to_json(const ExampleInstance& inst, std::int64_t measured) {
    return json{{"family", inst.family},
                {"group", group_to_json(*inst.G)},
                {"A", inst.A.indices()},
                {"B", inst.B.indices()},
                {"periodizer", inst.periodizer.carrier().indices()},
                {"t", inst.t},
                {"x", inst.x},
                {"s", inst.s},
                {"r", inst.r},
                {"predicted_defect", inst.predicted_defect},
                {"measured_defect", measured},
                {"identity_holds", measured == inst.predicted_defect}};
}

}  // namespace addcomb
