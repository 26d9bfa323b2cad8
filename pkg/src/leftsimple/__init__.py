"""Reflexive unitary subsemigroups of finite left simple semigroups.

Cayley-table algorithms for principal congruences, quotient groups, the
correspondence with subgroups, the Zassenhaus lemma, Schreier refinement
and Jordan-Hoelder uniqueness of composition series.
"""

from .congruence import (
    Congruence,
    PrincipalCongruence,
    QuotientSemigroup,
    context,
    correspondence_check,
    intersection_iso,
    is_group_with_identity,
    principal_congruence,
    quotient,
    restrict,
    saturates,
    zassenhaus,
)
from .factory import CorpusSpec, build_corpus, double, group_catalog, group_name, left_group, left_zero
from .semigroup import (
    ElemSet,
    IsoWitness,
    Semigroup,
    closure,
    direct_product,
    idempotents,
    is_isomorphic,
    is_left_simple,
    new_semigroup,
    set_product,
)
from .series import (
    NormalSeries,
    common_tail_refine,
    factors,
    find_composition_series,
    is_composition_series,
    jordan_holder_check,
    schreier_refine,
    series_isomorphic,
    validate_series,
)
from .subsets import (
    enumerate_ru_subsemigroups,
    enumerate_unitary_subsemigroups_over,
    is_left_unitary,
    is_reflexive,
    is_right_unitary,
    is_unitary,
    join_hn,
    subset_report,
)

__version__ = "0.1.0"
