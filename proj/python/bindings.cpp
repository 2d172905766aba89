#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "addcomb/energy.hpp"
#include "addcomb/examples.hpp"
#include "addcomb/literal.hpp"
#include "addcomb/search.hpp"
#include "addcomb/theorems.hpp"

namespace py = pybind11;
using namespace addcomb;

namespace {

// The library passes groups as shared_ptr<const GroupSpec>; pybind holders
// are non-const, so binding glue casts at the boundary (GroupSpec is
// immutable).
Group as_group(const std::shared_ptr<GroupSpec>& g) { return g; }
std::shared_ptr<GroupSpec> unconst(const Group& g) {
    return std::const_pointer_cast<GroupSpec>(g);
}

RepKernel kernel_from(const std::string& name) {
    if (name == "auto") return RepKernel::Auto;
    if (name == "naive") return RepKernel::Naive;
    if (name == "bitset") return RepKernel::Bitset;
    if (name == "transform") return RepKernel::Transform;
    throw std::invalid_argument("kernel must be auto|naive|bitset|transform");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "sumsets, t-representable sums, and Kneser/Pollard-type checks "
              "over finite abelian groups";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<GroupSpec, std::shared_ptr<GroupSpec>>(m, "Group")
        .def(py::init<std::vector<std::uint32_t>>(), py::arg("orders"))
        .def_property_readonly("orders", &GroupSpec::orders)
        .def_property_readonly("order", &GroupSpec::order)
        .def_property_readonly("rank", &GroupSpec::rank)
        .def("add", &GroupSpec::add)
        .def("sub", &GroupSpec::sub)
        .def("neg", &GroupSpec::neg)
        .def("element_order", &GroupSpec::element_order)
        .def("invariant_factors", &GroupSpec::invariant_factors)
        .def("is_cyclic", &GroupSpec::is_cyclic)
        .def("__eq__", [](const GroupSpec& a, const GroupSpec& b) { return a == b; })
        .def("__repr__", [](const GroupSpec& g) { return "<Group " + g.describe() + ">"; });

    m.def("make_group",
          [](std::vector<std::uint32_t> orders) {
              return std::make_shared<GroupSpec>(std::move(orders));
          },
          py::arg("orders"));

    py::class_<GSet>(m, "GSet")
        .def(py::init([](const std::shared_ptr<GroupSpec>& g,
                         const std::vector<std::uint32_t>& indices) {
                 return GSet::from_indices(as_group(g), indices);
             }),
             py::arg("group"), py::arg("indices"))
        .def_property_readonly("group", [](const GSet& s) { return unconst(s.group()); })
        .def_property_readonly("card", &GSet::card)
        .def("indices", &GSet::indices)
        .def("contains", &GSet::contains)
        .def("translated", &GSet::translated)
        .def("negated", &GSet::negated)
        .def("union", &GSet::united)
        .def("intersection", &GSet::intersected)
        .def("difference", &GSet::minus)
        .def("complement", &GSet::complement)
        .def("with_element", &GSet::with)
        .def("without_element", &GSet::without)
        .def("subset_of", &GSet::subset_of)
        .def("__or__", &GSet::united)
        .def("__and__", &GSet::intersected)
        .def("__sub__", &GSet::minus)
        .def("__len__", &GSet::card)
        .def("__contains__", &GSet::contains)
        .def("__eq__", [](const GSet& a, const GSet& b) { return a == b; })
        .def("__repr__", [](const GSet& s) { return "<GSet " + s.to_string() + ">"; });

    m.def("full_set",
          [](const std::shared_ptr<GroupSpec>& g) { return GSet::full(as_group(g)); });
    m.def("parse_set",
          [](const std::string& text, const std::shared_ptr<GroupSpec>& g) {
              return parse_set(text, as_group(g));
          });
    m.def("format_set", &format_set);

    py::class_<Subgroup>(m, "Subgroup")
        .def_property_readonly("carrier", &Subgroup::carrier)
        .def_property_readonly("order", &Subgroup::order)
        .def("is_trivial", &Subgroup::is_trivial)
        .def("is_full", &Subgroup::is_full)
        .def("contains", &Subgroup::contains)
        .def("coset", &Subgroup::coset)
        .def("__eq__", [](const Subgroup& a, const Subgroup& b) { return a == b; })
        .def("__repr__",
             [](const Subgroup& h) { return "<Subgroup " + h.carrier().to_string() + ">"; });

    m.def("subgroup_from_carrier", &Subgroup::from_carrier);
    m.def("subgroup_generated_by",
          [](const std::shared_ptr<GroupSpec>& g, const std::vector<std::uint32_t>& gens) {
              return subgroup_generated_by(as_group(g), gens);
          });
    m.def("stabilizer", &stabilizer);
    m.def("subgroup_lattice",
          [](const std::shared_ptr<GroupSpec>& g, std::uint64_t max_order) {
              return subgroup_lattice(as_group(g), max_order);
          },
          py::arg("group"), py::arg("max_order") = 256);
    m.def("max_proper_subgroup_size",
          [](const std::shared_ptr<GroupSpec>& g) {
              return max_proper_subgroup_size(as_group(g));
          });
    m.def("holes_rho", &holes_rho);
    m.def("is_periodic", &is_periodic);

    py::class_<RepProfile>(m, "RepProfile")
        .def_property_readonly("counts", [](const RepProfile& p) { return p.counts; })
        .def_property_readonly("total", [](const RepProfile& p) { return p.total; })
        .def_property_readonly("max_count", [](const RepProfile& p) { return p.max_count; })
        .def("at_least", &RepProfile::at_least)
        .def("above", &RepProfile::above)
        .def("sum_min", &RepProfile::sum_min);

    m.def("rep_counts",
          [](const GSet& A, const GSet& B, const std::string& kernel) {
              return rep_counts(A, B, kernel_from(kernel));
          },
          py::arg("A"), py::arg("B"), py::arg("kernel") = "auto");
    m.def("sumset", &sumset);
    m.def("i_representable",
          [](const GSet& A, const GSet& B, std::uint32_t i, const std::string& kernel) {
              return i_representable(A, B, i, kernel_from(kernel));
          },
          py::arg("A"), py::arg("B"), py::arg("i"), py::arg("kernel") = "auto");
    m.def("pollard_sum",
          [](const GSet& A, const GSet& B, std::uint32_t t, const std::string& kernel) {
              return pollard_sum(A, B, t, kernel_from(kernel));
          },
          py::arg("A"), py::arg("B"), py::arg("t"), py::arg("kernel") = "auto");
    m.def("dyson_transform", &dyson_transform);
    m.def("is_sidon", &is_sidon);
    m.def("additive_energy",
          [](const GSet& A, const GSet& B) { return additive_energy(A, B); });
    m.def("transform_kernel_available", &transform_kernel_available);

    py::class_<WitnessData>(m, "WitnessData")
        .def_property_readonly("A_prime", [](const WitnessData& w) { return w.A_prime; })
        .def_property_readonly("B_prime", [](const WitnessData& w) { return w.B_prime; })
        .def_readonly("l", &WitnessData::l)
        .def_property_readonly("H", [](const WitnessData& w) { return w.H; })
        .def_readonly("rho", &WitnessData::rho);

    py::class_<TheoremVerdict>(m, "TheoremVerdict")
        .def_property_readonly("theorem",
                               [](const TheoremVerdict& v) { return theorem_name(v.theorem); })
        .def_readonly("holds", &TheoremVerdict::holds)
        .def_property_readonly("branch",
                               [](const TheoremVerdict& v) { return branch_name(v.branch); })
        .def_readonly("lhs", &TheoremVerdict::lhs)
        .def_readonly("rhs", &TheoremVerdict::rhs)
        .def_property_readonly("witness",
                               [](const TheoremVerdict& v) -> py::object {
                                   if (!v.witness) return py::none();
                                   return py::cast(*v.witness);
                               })
        .def_readonly("elapsed_ns", &TheoremVerdict::elapsed_ns)
        .def("__repr__", [](const TheoremVerdict& v) {
            return std::string("<TheoremVerdict ") + theorem_name(v.theorem) + " " +
                   (v.holds ? "holds" : "FAILS") + " [" + branch_name(v.branch) + "] " +
                   std::to_string(v.lhs) + " vs " + std::to_string(v.rhs) + ">";
        });

    m.def("check_kneser", &check_kneser);
    m.def("check_pollard_cyclic", &check_pollard_cyclic);
    m.def("check_chowla_pollard", &check_chowla_pollard);
    m.def("check_green_ruzsa",
          [](const GSet& A, const GSet& B, std::uint32_t t) {
              return check_green_ruzsa(A, B, t);
          });
    m.def("check_main_theorem",
          [](const GSet& A, const GSet& B, std::uint32_t t) {
              return check_main_theorem(A, B, t);
          });
    m.def("check_t2_theorem", &check_t2_theorem);
    m.def("check_corollary",
          [](const GSet& A, const GSet& B) { return check_corollary(A, B); });
    m.def("check_multiplicity_prop", &check_multiplicity_prop);
    m.def("check_critical_pair", &check_critical_pair);
    m.def("check_double_rep_remark", &check_double_rep_remark);
    m.def("revalidate_witness", &revalidate_witness);
    m.def("find_structural_witness",
          [](const GSet& A, const GSet& B, std::uint32_t t, std::uint32_t l_max)
              -> py::object {
              const auto w = find_structural_witness(A, B, t, l_max);
              if (!w) return py::none();
              return py::cast(*w);
          });

    m.def("derive_exceptional_set", &derive_exceptional_set);
    m.def("energy_lower_bound", &energy_lower_bound);
    m.def("check_energy_upper_bound",
          [](const GSet& A, const GSet& B, const GSet& T, std::uint32_t k) {
              return check_energy_upper_bound(A, B, T, k);
          });
    m.def("check_energy_lemma",
          [](const GSet& A, const GSet& B, std::uint32_t k, std::uint32_t t) {
              return check_energy_lemma(A, B, k, t);
          });

    py::class_<EnergyReport>(m, "EnergyReport")
        .def_readonly("energy", &EnergyReport::energy)
        .def_property_readonly("T", [](const EnergyReport& r) { return r.T; })
        .def_readonly("k", &EnergyReport::k)
        .def_readonly("t", &EnergyReport::t)
        .def_readonly("lower_bound", &EnergyReport::lower_bound)
        .def_readonly("upper_bound_rhs", &EnergyReport::upper_bound_rhs);
    m.def("energy_report", &energy_report);

    py::class_<ExampleInstance>(m, "ExampleInstance")
        .def_readonly("family", &ExampleInstance::family)
        .def_property_readonly("G", [](const ExampleInstance& e) { return unconst(e.G); })
        .def_property_readonly("A", [](const ExampleInstance& e) { return e.A; })
        .def_property_readonly("B", [](const ExampleInstance& e) { return e.B; })
        .def_property_readonly("periodizer",
                               [](const ExampleInstance& e) { return e.periodizer; })
        .def_readonly("t", &ExampleInstance::t)
        .def_readonly("x", &ExampleInstance::x)
        .def_readonly("s", &ExampleInstance::s)
        .def_readonly("r", &ExampleInstance::r)
        .def_readonly("predicted_defect", &ExampleInstance::predicted_defect);

    m.def("build_example1", &build_example1, py::arg("H_order"), py::arg("quotient_order"),
          py::arg("d"), py::arg("s"), py::arg("r"), py::arg("x"));
    m.def("build_example2",
          [](const std::shared_ptr<GroupSpec>& g, const Subgroup& H, const Subgroup& L,
             std::uint32_t r, std::uint32_t x) {
              return build_example2(as_group(g), H, L, r, x);
          });
    m.def("measured_defect", &measured_defect);

    m.def("enumerate_abelian_groups", [](std::uint32_t max_order) {
        std::vector<std::shared_ptr<GroupSpec>> out;
        for (const auto& g : enumerate_abelian_groups(max_order)) out.push_back(unconst(g));
        return out;
    });

    py::class_<CampaignRecord>(m, "CampaignRecord")
        .def_readonly("group_factors", &CampaignRecord::group_factors)
        .def_readonly("A", &CampaignRecord::A)
        .def_readonly("B", &CampaignRecord::B)
        .def_readonly("t", &CampaignRecord::t)
        .def_readonly("verdicts", &CampaignRecord::verdicts)
        .def_readonly("tightness_gap", &CampaignRecord::tightness_gap)
        .def("all_hold", &CampaignRecord::all_hold);

    py::class_<CampaignResult>(m, "CampaignResult")
        .def_readonly("records", &CampaignResult::records)
        .def_readonly("failures", &CampaignResult::failures)
        .def_readonly("witness_records", &CampaignResult::witness_records)
        .def_readonly("max_witness_l", &CampaignResult::max_witness_l)
        .def_property_readonly("counterexample",
                               [](const CampaignResult& r) -> py::object {
                                   if (!r.counterexample) return py::none();
                                   return py::cast(*r.counterexample);
                               });

    m.def(
        "run_campaign",
        [](std::uint32_t max_order, std::uint32_t t_min, std::uint32_t t_max,
           const std::string& mode, std::uint64_t samples, std::uint64_t seed,
           unsigned threads, py::object on_record) {
            CampaignConfig cfg;
            cfg.max_order = max_order;
            cfg.t_min = t_min;
            cfg.t_max = t_max;
            cfg.mode = mode == "sample" ? CampaignConfig::Mode::Sampled
                                        : CampaignConfig::Mode::Exhaustive;
            cfg.samples_per_group = samples;
            cfg.seed = seed;
            cfg.threads = threads;
            if (on_record.is_none()) {
                py::gil_scoped_release release;
                return run_campaign(cfg, nullptr);
            }
            return run_campaign(cfg, [&](const CampaignRecord& rec) {
                on_record(py::cast(rec));
            });
        },
        py::arg("max_order") = 8, py::arg("t_min") = 1, py::arg("t_max") = 3,
        py::arg("mode") = "exhaustive", py::arg("samples") = 1000, py::arg("seed") = 0,
        py::arg("threads") = 0, py::arg("on_record") = py::none());

    m.attr("__version__") = "0.1.0";
}
