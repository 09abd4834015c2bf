"""nervelab: exact nerve / wedge / cyclic-bar constructions over finite
monoids, with integral homology as the verification backend."""

from .algebra import (
    AxiomViolation,
    DiscreteMonoid,
    GAugmentedSituation,
    MonoidMap,
    OperationSituation,
    TwoSidedAction,
    check_action,
    cyclic_monoid,
    monoid_from_table,
    semidirect_monoid,
    semidirect_opsit,
    symmetric_monoid,
    zero_monoid,
)
from .bar import (
    comparison_suite,
    composable_tuples,
    cyclic_bar,
    cyclic_bar_simplicial,
    diag_cyclic_wedge,
    generalized_wedge,
    generalized_wedge_sset,
    intermediate_t,
    map_u,
    map_v,
    map_w,
    naturality_check,
    nerve,
    pointed_space_situation,
    shear_map,
    wedge_action,
    wedge_tuples,
)
from .bisset import BisimplicialMap, BisimplicialSet, diagonal, external_product, partial_diagonal
from .constructions import (
    boundary_simplex,
    product,
    pushout,
    quotient,
    simplicial_circle,
    smash,
    std_simplex,
    wedge,
)
from .homology import (
    ChainComplex,
    HomologyGroup,
    homological_connectivity,
    homology,
    homology_table,
    map_homological_connectivity,
    mapping_cone,
    normalized_chains,
    smith_normal_form,
)
from .loopgroup import kan_loop_group, sample_identity_check
from .simplexes import Simplex
from .sset import SimplicialMap, SimplicialSet, Violation, validate_identities

__version__ = "0.1.0"
