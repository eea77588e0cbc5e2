"""rpgsim: simulator for Hamiltonicity and matchings in randomly perturbed dense graphs."""

from .augment import (
    BoostSet,
    OrientedCycle,
    SprinkleConfig,
    SprinkleTrace,
    apply_cycle_boost,
    apply_matching_boost,
    build_oriented_cycle,
    cycle_boost_set,
    exchange_extension,
    find_long_cycle,
    free_insertion,
    matching_boost_set,
    sprinkle_hamiltonian,
    sprinkle_pm,
)
from .experiments import (
    BipartiteFamily,
    ThresholdEstimate,
    TwoCliquesFamily,
    conjecture_pm_constant,
    estimate_probability,
    linear_forest_threshold_scan,
    locate_threshold,
    two_connectivity_experiment,
    wilson_interval,
    y_statistics,
)
from .graph import (
    Graph,
    articulation_points,
    is_2_connected,
    is_connected,
    min_degree,
    read_edge_list,
    union,
    write_edge_list,
)
from .models import (
    PerturbationSpec,
    RandomSource,
    complete_bipartite,
    couple_gnm_gnp,
    gnm,
    gnp,
    two_cliques,
)
from .oracles import (
    CapacityError,
    CycleCert,
    MatchingCert,
    cycle_lengths_exact,
    extremal_ham_predicate,
    extremal_pm_predicate,
    hamiltonian_exact,
    longest_cycle_exact,
    max_linear_forest,
    max_matching,
    pancyclic_exact,
)

__version__ = "0.1.0"
