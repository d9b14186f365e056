"""monoidgeom: properties and factorizations of geometric morphisms between
presheaf toposes of finite monoid actions."""

from .actions import (
    BiAction,
    EquivariantMap,
    LeftAction,
    RightAction,
    category_of_elements,
    co_category_of_elements,
    components,
    constant_action,
    elements_over_completion,
    find_regular_retract,
    fixed_points,
    is_discrete_fibration,
    is_discrete_opfibration,
    is_flat,
    is_locally_constant,
    regular_left,
    regular_right,
    strong_generators,
    strong_generators_left,
    sub_acts,
    terminal_right,
    underlying_set,
)
from .classify import (
    ClassificationReport,
    ClassifyOptions,
    classify_biact,
    classify_hom,
    enumerate_right_congruences,
)
from .closures import FactorableClosureResult, closure_equals_all, factorable_closure
from .core import (
    Congruence,
    FiniteCategory,
    FiniteMonoid,
    FunctorData,
    Partition,
    SemigroupHom,
    compose_homs,
    congruence_closure,
    corner,
    equivalence_closure,
    enumerate_monoid_homs,
    enumerate_semigroup_homs,
    find_collapsing_object,
    functor_properties,
    hom_by_labels,
    identity_hom,
    opposite_hom,
    idempotent_completion,
    idempotents,
    invertibles,
    is_idempotent_complete,
    is_isomorphic,
    is_morita_corner,
    lift_hom_to_completion,
    monoid_isomorphism,
    opposite,
    quotient_by_congruence,
    validate_monoid,
)
from .factorize import (
    PureCsFactorization,
    TcEtaleFactorization,
    ThreePartFactorization,
    collapse_cos_slice,
    collapse_slice,
    factor_pure_cs_biact,
    factor_pure_cs_hom,
    factor_tc_etale,
    factor_three,
)
from .galois import (
    Groupification,
    LcEtaleClassification,
    classify_lc_etale,
    coset_action,
    groupification,
    pullback_action,
    subgroups,
)
from .presentations import Presentation, enumerate_presentation, presentation
from .tensor import (
    TensorResult,
    compose_biacts,
    find_biaction_iso,
    find_left_action_iso,
    find_right_action_iso,
    hom_to_biact,
    pullback_terminal_dual,
    pushforward_terminal,
    tensor,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
