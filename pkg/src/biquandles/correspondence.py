"""The two directions of the coloring correspondence and their verification.

``quandle_to_biquandle`` reads each semi-arc's color through the state of its
specified region: with f the region state and a the arc color, the semi-arc
receives f(a).  ``biquandle_to_quandle`` undoes the region action: with P the
permutation state of the specified region and v the semi-arc color, the arc
receives P^-1(v); that value is constant along each arc, which is asserted.

Both maps are implemented purely through region states; no diagram surgery
or move sequences are involved.  The word-level functions translate group
words over one algebra's generators into words over the other's, carrying the
action states along, and are the bounded stand-in for the group-level
bijectivity statements (full group equality is not decidable here, so reports
are explicitly bounded).
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import FiniteBiquandle, derived_quandle, kink_map
from .coloring import (
    GroupWord,
    enumerate_biquandle_colorings,
    enumerate_quandle_colorings,
    fold_semiarc_word,
    identity_state,
    region_coloring,
    step_arc_state,
    step_semiarc_state,
)
from .diagram import LinkDiagram, MovePair, transport_colorings


def quandle_to_biquandle(
    x: FiniteBiquandle, d: LinkDiagram, qcol: dict[int, int]
) -> dict[int, int]:
    """Turn a coloring by the derived quandle into a biquandle coloring.

    The output is re-checked against the crossing equations at runtime; a
    failure is a bug, not an input error.
    """
    states = region_coloring(d, qcol, "quandle", x)
    out = {
        s: states[d.specified_region(s)][qcol[d.arc_index[s]]] for s in d.semiarcs
    }
    for cr in d.crossings:
        u, o, ud, od = (out[cr.slots[p]] for p in cr.role_positions)
        assert ud == x.under[u][o] and od == x.over[o][u], (
            "lifted coloring violates a crossing equation"
        )
    return out


def biquandle_to_quandle(
    x: FiniteBiquandle, d: LinkDiagram, bqcol: dict[int, int]
) -> dict[int, int]:
    """Turn a biquandle coloring into a coloring by the derived quandle."""
    states = region_coloring(d, bqcol, "biquandle", x)
    q = derived_quandle(x)
    out: dict[int, int] = {}
    for s in d.semiarcs:
        perm = states[d.specified_region(s)]
        value = perm.index(bqcol[s])
        arc = d.arc_index[s]
        if arc in out:
            assert out[arc] == value, "projected colors differ along one arc"
        else:
            out[arc] = value
    for cr in d.crossings:
        u, o, ud, _ = (cr.slots[p] for p in cr.role_positions)
        assert out[d.arc_index[ud]] == q.op[out[d.arc_index[u]]][out[d.arc_index[o]]], (
            "projected coloring violates a quandle relation"
        )
    return out


@dataclass(frozen=True)
class BijectionReport:
    biquandle_count: int
    quandle_count: int
    counts_equal: bool
    projection_inverts_lift: bool
    lift_inverts_projection: bool

    @property
    def passed(self) -> bool:
        return self.counts_equal and self.projection_inverts_lift and self.lift_inverts_projection

    def to_json(self) -> dict:
        return {
            "biquandle_count": self.biquandle_count,
            "quandle_count": self.quandle_count,
            "counts_equal": self.counts_equal,
            "projection_inverts_lift": self.projection_inverts_lift,
            "lift_inverts_projection": self.lift_inverts_projection,
            "passed": self.passed,
        }


def verify_bijection(x: FiniteBiquandle, d: LinkDiagram) -> BijectionReport:
    """Count both coloring sets and check the two maps invert each other pointwise."""
    q = derived_quandle(x)
    bq_cols = enumerate_biquandle_colorings(x, d)
    q_cols = enumerate_quandle_colorings(q, d)
    proj_ok = True
    for qc in q_cols:
        lifted = quandle_to_biquandle(x, d, qc)
        if biquandle_to_quandle(x, d, lifted) != qc:
            proj_ok = False
            break
    lift_ok = True
    for bc in bq_cols:
        projected = biquandle_to_quandle(x, d, bc)
        if quandle_to_biquandle(x, d, projected) != bc:
            lift_ok = False
            break
    return BijectionReport(
        biquandle_count=len(bq_cols),
        quandle_count=len(q_cols),
        counts_equal=len(bq_cols) == len(q_cols),
        projection_inverts_lift=proj_ok,
        lift_inverts_projection=lift_ok,
    )


# ---------------------------------------------------------------------------
# Word-level machinery


@dataclass(frozen=True)
class LiftedWord:
    """A word over derived-quandle generators with its translation.

    ``state`` is the arc-state fold of ``word``; ``image`` is the word over
    the biquandle's generators built by the recursion that appends, for a
    positive letter a, the current state's value at a, and for a negative
    letter, the post-step state's value at a with exponent -1.
    """

    word: GroupWord
    state: tuple[int, ...]
    image: GroupWord


@dataclass(frozen=True)
class ProjectedWord:
    word: GroupWord
    state: tuple[int, ...]
    image: GroupWord


def lift_group_word(x: FiniteBiquandle, word: GroupWord) -> LiftedWord:
    kink = kink_map(x)
    state = identity_state(x.n)
    image: list[tuple[int, int]] = []
    for gen, exp in word:
        if exp > 0:
            image.append((state[gen], 1))
            state = step_arc_state(x, state, gen, 1, kink)
        else:
            state = step_arc_state(x, state, gen, -1, kink)
            image.append((state[gen], -1))
    return LiftedWord(tuple(word), state, tuple(image))


def project_group_word(x: FiniteBiquandle, word: GroupWord) -> ProjectedWord:
    state = identity_state(x.n)
    image: list[tuple[int, int]] = []
    for gen, exp in word:
        if exp > 0:
            image.append((state.index(gen), 1))
            state = step_semiarc_state(x, state, gen, 1)
        else:
            state = step_semiarc_state(x, state, gen, -1)
            image.append((state.index(gen), -1))
    return ProjectedWord(tuple(word), state, tuple(image))


def word_roundtrip_ok(x: FiniteBiquandle, word: GroupWord) -> bool:
    """Bounded two-sided roundtrip check at action-state granularity.

    For a word over the derived quandle, the semi-arc-state fold of its lifted
    image must equal its own arc-state fold; elementwise that says projecting
    the lift of any (state, element) pair returns the element.  The mirrored
    check runs from a word over the biquandle.  Equality of group elements is
    never decided; these state equalities are the bounded surrogate.
    """
    lifted = lift_group_word(x, word)
    if fold_semiarc_word(x, lifted.image) != lifted.state:
        return False
    projected = project_group_word(x, word)
    from .coloring import fold_arc_word

    return fold_arc_word(x, projected.image) == projected.state


def verify_naturality(x: FiniteBiquandle, pair: MovePair) -> bool:
    """Check the lift commutes with the move's coloring transport.

    For every quandle coloring c of the before diagram:
    transport(lift(c)) == lift(transport(c)).
    """
    q = derived_quandle(x)
    t_q = transport_colorings(pair, x, "quandle")
    t_bq = transport_colorings(pair, x, "biquandle")
    for qc in enumerate_quandle_colorings(q, pair.before):
        lifted = quandle_to_biquandle(x, pair.before, qc)
        via_bq = t_bq[tuple(sorted(lifted.items()))]
        via_q = quandle_to_biquandle(x, pair.after, t_q[tuple(sorted(qc.items()))])
        if via_bq != via_q:
            return False
    return True
