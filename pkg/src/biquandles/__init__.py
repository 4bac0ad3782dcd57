"""Finite quandles and biquandles on link diagrams.

Exhaustive axiom checking and census enumeration, coloring enumeration with
an independent brute-force oracle, the explicit two-sided correspondence
between derived-quandle colorings and biquandle colorings, and cocycle state
sums together with their shadow counterparts.
"""

from .algebra import (
    AxiomError,
    AxiomReport,
    FiniteBiquandle,
    FiniteQuandle,
    FunctionalBiquandle,
    StructureError,
    biquandle_census,
    check_biquandle_axioms,
    check_quandle_axioms,
    derived_quandle,
    group_pair_biquandle,
    integer_biquandle,
    integer_pair_biquandle,
    kink_map,
    operator_group,
    quandle_as_biquandle,
    sampled_axiom_check,
)
from .cocycle import (
    AbelianGroup,
    BiquandleCocycle,
    GroupRingElement,
    ShadowCocycle,
    biquandle_cocycle_invariant,
    check_biquandle_cocycle,
    check_shadow_cocycle,
    coboundary,
    enumerate_cocycles,
    shadow_cocycle_invariant,
    zero_cocycle,
)
from .coloring import (
    enumerate_biquandle_colorings,
    enumerate_colorings_bruteforce,
    enumerate_quandle_colorings,
    fold_arc_word,
    fold_semiarc_word,
    region_coloring,
    shadow_coloring,
    step_arc_state,
    step_semiarc_state,
)
from .correspondence import (
    BijectionReport,
    biquandle_to_quandle,
    lift_group_word,
    project_group_word,
    quandle_to_biquandle,
    verify_bijection,
    verify_naturality,
    word_roundtrip_ok,
)
from .diagram import Crossing, LinkDiagram, MovePair, Region, ZeroCircle, parse_diagram, transport_colorings

__version__ = "0.1.0"
