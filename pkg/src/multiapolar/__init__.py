"""Exact multigraded apolarity on products of projective spaces.

The library computes annihilator ideals of divided-power duals, multigraded
Hilbert functions of monomial ideals and point configurations, saturations
with respect to the irrelevant ideal, and combinatorial certificates of
border-rank lower bounds for torus-fixed targets.
"""

from .exactla import DEFAULT_PRIME, Field, RATIONALS, Subspace, DegreewiseSubspace
from .ring import Space, Window
from .monideal import MonomialIdeal, intersect_ideals, irrelevant_ideal
from .apolar import (
    DualElement,
    DualSubspace,
    annihilator_degree,
    annihilator_monomial,
    apolarity_check,
    catalecticant,
    containment_in_annihilator,
    contract,
)
from .points import (
    Point,
    PointConfiguration,
    check_add_point,
    check_generic_hf,
    check_nested_inequality,
    evaluation_dual,
    hilbert_function_points,
    ideal_degree_piece,
    random_configuration,
)
from .certifier import (
    Certificate,
    TruncatedIdealFlag,
    brute_force_certify,
    certify,
    lower_bound_scan,
    validate_candidate,
)
from .rng import CounterRng

__all__ = [
    "DEFAULT_PRIME", "Field", "RATIONALS", "Subspace", "DegreewiseSubspace",
    "Space", "Window", "MonomialIdeal", "intersect_ideals", "irrelevant_ideal",
    "DualElement", "DualSubspace", "annihilator_degree", "annihilator_monomial",
    "apolarity_check", "catalecticant", "containment_in_annihilator", "contract",
    "Point", "PointConfiguration", "check_add_point", "check_generic_hf",
    "check_nested_inequality", "evaluation_dual", "hilbert_function_points",
    "ideal_degree_piece", "random_configuration",
    "Certificate", "TruncatedIdealFlag", "brute_force_certify", "certify",
    "lower_bound_scan", "validate_candidate", "CounterRng",
]
