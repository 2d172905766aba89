"""Sumsets, t-representable sums, and Kneser/Pollard-type verification over
finite abelian groups. Thin wrapper around the C++ core."""

from ._core import (  # noqa: F401
    CampaignRecord,
    CampaignResult,
    EnergyReport,
    ExampleInstance,
    Group,
    GSet,
    ParseError,
    RepProfile,
    Subgroup,
    TheoremVerdict,
    WitnessData,
    additive_energy,
    build_example1,
    build_example2,
    check_chowla_pollard,
    check_corollary,
    check_critical_pair,
    check_double_rep_remark,
    check_energy_lemma,
    check_energy_upper_bound,
    check_green_ruzsa,
    check_kneser,
    check_main_theorem,
    check_multiplicity_prop,
    check_pollard_cyclic,
    check_t2_theorem,
    derive_exceptional_set,
    dyson_transform,
    energy_lower_bound,
    energy_report,
    enumerate_abelian_groups,
    find_structural_witness,
    format_set,
    full_set,
    holes_rho,
    i_representable,
    is_periodic,
    is_sidon,
    make_group,
    max_proper_subgroup_size,
    measured_defect,
    parse_set,
    pollard_sum,
    rep_counts,
    revalidate_witness,
    run_campaign,
    stabilizer,
    subgroup_from_carrier,
    subgroup_generated_by,
    subgroup_lattice,
    sumset,
    transform_kernel_available,
    __version__,
)
