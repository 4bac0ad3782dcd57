"""Cocycle conditions, coboundaries, and state-sum invariants.

A biquandle n-cocycle is a map from n-tuples of colors to a finite abelian
group satisfying an alternating-sum identity over (n+1)-tuples together with
a degeneracy condition (adjacent equal arguments give zero).  The state sum
of a 2-cocycle over a diagram attaches a signed weight to every crossing of
every coloring and collects the per-coloring totals into a multiset, an
element of the integer group ring.

Weight convention, frozen here and guarded by the move-invariance and
state-sum-equality test suites: a crossing of sign e contributes
``e * theta(color[under_src], color[over_src])`` evaluated on the crossing's
source pair (slots 0 and 3 at positive crossings, slots 2 and 3 at negative
ones).  The shadow variant evaluates the pulled-back cocycle at the state of
the crossing's source region on the corresponding arc colors.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from typing import Iterable, Mapping

from .algebra import AxiomError, AxiomReport, FiniteBiquandle, StructureError, derived_quandle
from .coloring import (
    enumerate_biquandle_colorings,
    enumerate_quandle_colorings,
    reachable_arc_states,
    region_coloring,
    step_arc_state,
)
from .diagram import LinkDiagram


@dataclass(frozen=True)
class AbelianGroup:
    """Direct sum of cyclic groups; elements are tuples mod the orders."""

    orders: tuple[int, ...]

    def __post_init__(self):
        if not self.orders or any(m < 1 for m in self.orders):
            raise StructureError(f"bad cyclic orders {self.orders}")

    @property
    def zero(self) -> tuple[int, ...]:
        return (0,) * len(self.orders)

    def add(self, a, b) -> tuple[int, ...]:
        return tuple((x + y) % m for x, y, m in zip(a, b, self.orders))

    def neg(self, a) -> tuple[int, ...]:
        return tuple((-x) % m for x, m in zip(a, self.orders))

    def scale(self, a, k: int) -> tuple[int, ...]:
        return tuple((x * k) % m for x, m in zip(a, self.orders))

    def elements(self) -> Iterable[tuple[int, ...]]:
        return itertools.product(*(range(m) for m in self.orders))

    def coerce(self, value) -> tuple[int, ...]:
        t = tuple(int(v) % m for v, m in zip(value, self.orders))
        if len(t) != len(self.orders) or len(value) != len(self.orders):
            raise StructureError(f"element {value!r} has wrong rank for orders {self.orders}")
        return t


class GroupRingElement:
    """Integer multiset over a finite abelian group: the value of a state sum."""

    def __init__(self, group: AbelianGroup, counts: Mapping[tuple, int] | None = None):
        self.group = group
        self.counts: dict[tuple, int] = {}
        for k, v in (counts or {}).items():
            if v:
                self.counts[group.coerce(k)] = self.counts.get(group.coerce(k), 0) + v

    def add_term(self, value, mult: int = 1):
        value = self.group.coerce(value)
        self.counts[value] = self.counts.get(value, 0) + mult
        if self.counts[value] == 0:
            del self.counts[value]

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        out = GroupRingElement(self.group, self.counts)
        for k, v in other.counts.items():
            out.add_term(k, v)
        return out

    def total(self) -> int:
        return sum(self.counts.values())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupRingElement)
            and self.group.orders == other.group.orders
            and self.counts == other.counts
        )

    def __hash__(self):
        return hash((self.group.orders, tuple(sorted(self.counts.items()))))

    def __repr__(self):
        terms = " + ".join(f"{m}*[{','.join(map(str, v))}]" for v, m in sorted(self.counts.items()))
        return terms or "0"

    def to_json(self) -> dict:
        return {
            "invariant": [
                {"value": list(v), "mult": m} for v, m in sorted(self.counts.items())
            ]
        }


def constant_invariant(group: AbelianGroup, multiplicity: int) -> GroupRingElement:
    """multiplicity * [0], the value every coboundary state sum must take."""
    out = GroupRingElement(group)
    if multiplicity:
        out.add_term(group.zero, multiplicity)
    return out


# ---------------------------------------------------------------------------
# The cocycle condition


def _cocycle_defect(
    x: FiniteBiquandle, group: AbelianGroup, values: Mapping, tup: tuple[int, ...]
) -> tuple[int, ...]:
    """Alternating sum of the cocycle identity on one (n+1)-tuple."""
    total = group.zero
    n1 = len(tup)
    for i in range(n1):
        xi = tup[i]
        face = tup[:i] + tup[i + 1 :]
        acted = tuple(
            x.under[v][xi] if pos < i else x.over[v][xi]
            for pos, v in enumerate(face)
        )
        sign = 1 if i % 2 == 0 else -1
        term = group.add(values[face], group.neg(values[acted]))
        total = group.add(total, group.scale(term, sign))
    return total


def check_biquandle_cocycle(
    values: Mapping, arity: int, x: FiniteBiquandle, group: AbelianGroup
) -> AxiomReport:
    """Exhaustive check of the n-cocycle and degeneracy conditions, n in {2, 3}."""
    if arity not in (2, 3):
        raise StructureError("cocycle arity must be 2 or 3")
    table = {}
    for tup in itertools.product(range(x.n), repeat=arity):
        if tup not in values:
            raise StructureError(f"cocycle table is missing entry {tup}")
        table[tup] = group.coerce(values[tup])
    violations = []
    for tup in itertools.product(range(x.n), repeat=arity):
        if any(tup[j] == tup[j + 1] for j in range(arity - 1)):
            if table[tup] != group.zero:
                violations.append(("degeneracy", tup))
                break
    for tup in itertools.product(range(x.n), repeat=arity + 1):
        if _cocycle_defect(x, group, table, tup) != group.zero:
            violations.append(("cocycle", tup))
            break
    return AxiomReport(not violations, tuple(violations), checked=x.n ** (arity + 1))


class BiquandleCocycle:
    """A validated n-cocycle table; construction re-checks both conditions."""

    def __init__(
        self, x: FiniteBiquandle, group: AbelianGroup, values: Mapping, arity: int = 2
    ):
        report = check_biquandle_cocycle(values, arity, x, group)
        if not report.passed:
            raise AxiomError(f"not a biquandle {arity}-cocycle: {report.violations}")
        self.x = x
        self.group = group
        self.arity = arity
        self.values = {
            tup: group.coerce(values[tup])
            for tup in itertools.product(range(x.n), repeat=arity)
        }

    def __call__(self, *args: int) -> tuple[int, ...]:
        return self.values[args]

    def __eq__(self, other):
        return (
            isinstance(other, BiquandleCocycle)
            and self.values == other.values
            and self.group.orders == other.group.orders
        )

    def __hash__(self):
        return hash((self.group.orders, tuple(sorted(self.values.items()))))

    def to_json(self) -> dict:
        return {
            "arity": self.arity,
            "A": list(self.group.orders),
            "values": {
                ",".join(map(str, k)): list(v) for k, v in sorted(self.values.items())
            },
        }

    @classmethod
    def from_json(cls, x: FiniteBiquandle, data: dict | str) -> "BiquandleCocycle":
        if isinstance(data, str):
            data = json.loads(data)
        group = AbelianGroup(tuple(data["A"]))
        values = {
            tuple(int(p) for p in key.split(",")): tuple(val)
            for key, val in data["values"].items()
        }
        return cls(x, group, values, arity=int(data.get("arity", 2)))


def zero_cocycle(x: FiniteBiquandle, group: AbelianGroup, arity: int = 2) -> BiquandleCocycle:
    values = {
        tup: group.zero for tup in itertools.product(range(x.n), repeat=arity)
    }
    return BiquandleCocycle(x, group, values, arity)


def coboundary(eta: Mapping[int, tuple], x: FiniteBiquandle, group: AbelianGroup) -> BiquandleCocycle:
    """The 2-cocycle (d eta)(a, b) = eta(b) - eta(b over a) - eta(a) + eta(a under b).

    Degeneracy on the diagonal follows from the first biquandle axiom, and
    the cocycle condition holds because d squares to zero; both are still
    re-checked by the constructor.
    """
    vals = {}
    for a in range(x.n):
        for b in range(x.n):
            term = group.coerce(eta[b])
            term = group.add(term, group.neg(group.coerce(eta[x.over[b][a]])))
            term = group.add(term, group.neg(group.coerce(eta[a])))
            term = group.add(term, group.coerce(eta[x.under[a][b]]))
            vals[(a, b)] = term
    return BiquandleCocycle(x, group, vals, arity=2)


def random_coboundary(
    x: FiniteBiquandle, group: AbelianGroup, rng: random.Random
) -> BiquandleCocycle:
    eta = {
        a: tuple(rng.randrange(m) for m in group.orders) for a in range(x.n)
    }
    return coboundary(eta, x, group)


# ---------------------------------------------------------------------------
# 2-cocycle enumeration by solving the linear system mod a prime


def _solve_mod_p(rows: list[list[int]], p: int) -> list[list[int]]:
    """Nullspace basis of a homogeneous system over Z/p (p prime)."""
    nvars = len(rows[0]) if rows else 0
    mat = [row[:] for row in rows]
    pivots: list[int] = []
    r = 0
    for col in range(nvars):
        pivot = next((i for i in range(r, len(mat)) if mat[i][col] % p), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = pow(mat[r][col], p - 2, p)
        mat[r] = [(v * inv) % p for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] % p:
                f = mat[i][col]
                mat[i] = [(a - f * b) % p for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    free = [c for c in range(nvars) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0] * nvars
        vec[fc] = 1
        for ri, pc in enumerate(pivots):
            vec[pc] = (-mat[ri][fc]) % p
        basis.append(vec)
    return basis


def enumerate_cocycles(
    x: FiniteBiquandle, group: AbelianGroup, cap: int = 200
) -> list[BiquandleCocycle]:
    """All 2-cocycles over the group, solved factor by factor, capped.

    Each cyclic order must be prime (Gaussian elimination needs a field).
    The solution space is enumerated in lexicographic order of the nullspace
    coefficient vectors, so the selection under the cap is deterministic.
    """
    for m in group.orders:
        if m < 2 or any(m % q == 0 for q in range(2, m)):
            raise StructureError(f"cocycle enumeration needs prime cyclic orders, got {m}")
    pairs = list(itertools.product(range(x.n), repeat=2))
    idx = {pr: i for i, pr in enumerate(pairs)}
    rows = []
    for a in range(x.n):  # degeneracy: theta(a, a) = 0
        row = [0] * len(pairs)
        row[idx[(a, a)]] = 1
        rows.append(row)
    for tup in itertools.product(range(x.n), repeat=3):
        row = [0] * len(pairs)
        for i in range(3):
            xi = tup[i]
            face = tup[:i] + tup[i + 1 :]
            acted = tuple(
                x.under[v][xi] if pos < i else x.over[v][xi] for pos, v in enumerate(face)
            )
            sign = 1 if i % 2 == 0 else -1
            row[idx[face]] += sign
            row[idx[acted]] -= sign
        rows.append(row)

    per_factor: list[list[tuple[int, ...]]] = []
    for m in group.orders:
        basis = _solve_mod_p([[v % m for v in row] for row in rows], m)
        sols = []
        for coeffs in itertools.product(range(m), repeat=len(basis)):
            vec = [0] * len(pairs)
            for c, b in zip(coeffs, basis):
                if c:
                    vec = [(v + c * bv) % m for v, bv in zip(vec, b)]
            sols.append(tuple(vec))
        per_factor.append(sols)

    out = []
    for combo in itertools.product(*per_factor):
        values = {
            pr: tuple(framed[idx[pr]] for framed in combo) for pr in pairs
        }
        out.append(BiquandleCocycle(x, group, values, arity=2))
        if len(out) >= cap:
            break
    return out


# ---------------------------------------------------------------------------
# State sums


def crossing_weight_slots(cr) -> tuple[int, int]:
    """Semi-arc ids whose colors feed the weight: the crossing's source pair."""
    return cr.source_pair()


def coloring_weight(
    x: FiniteBiquandle, theta: BiquandleCocycle, d: LinkDiagram, coloring: dict[int, int]
) -> tuple[int, ...]:
    group = theta.group
    total = group.zero
    for cr in d.crossings:
        u, o = crossing_weight_slots(cr)
        w = theta.values[(coloring[u], coloring[o])]
        total = group.add(total, w if cr.sign > 0 else group.neg(w))
    return total


def biquandle_cocycle_invariant(
    x: FiniteBiquandle, theta: BiquandleCocycle, d: LinkDiagram
) -> GroupRingElement:
    """Multiset of per-coloring signed weight sums over all biquandle colorings."""
    out = GroupRingElement(theta.group)
    for coloring in enumerate_biquandle_colorings(x, d):
        out.add_term(coloring_weight(x, theta, d, coloring))
    return out


def shadow_coloring_weight(
    x: FiniteBiquandle,
    theta: BiquandleCocycle,
    d: LinkDiagram,
    qcol: dict[int, int],
    region_states: dict[int, tuple[int, ...]] | None = None,
) -> tuple[int, ...]:
    """Signed weight sum of one derived-quandle coloring under the pullback.

    At each crossing the pulled-back cocycle is evaluated at the state of the
    source region on the source under-arc and over-arc colors: the state maps
    both arc colors to semi-arc colors and theta is read there.
    """
    if region_states is None:
        region_states = region_coloring(d, qcol, "quandle", x)
    group = theta.group
    total = group.zero
    for ci, cr in enumerate(d.crossings):
        state = region_states[d.source_region(ci)]
        u, o = crossing_weight_slots(cr)
        a = qcol[d.arc_index[u]]
        b = qcol[d.arc_index[o]]
        w = theta.values[(state[a], state[b])]
        total = group.add(total, w if cr.sign > 0 else group.neg(w))
    return total


def shadow_cocycle_invariant(
    x: FiniteBiquandle, theta: BiquandleCocycle, d: LinkDiagram
) -> GroupRingElement:
    """Multiset of shadow weight sums over all derived-quandle colorings."""
    q = derived_quandle(x)
    out = GroupRingElement(theta.group)
    for qcol in enumerate_quandle_colorings(q, d):
        out.add_term(shadow_coloring_weight(x, theta, d, qcol))
    return out


# ---------------------------------------------------------------------------
# The pulled-back cocycle as a shadow cocycle


class ShadowCocycle:
    """Evaluator for the pullback of a table along region states.

    ``evaluate(state, elems)`` computes theta(state[a1], ..., state[an]).
    When the table is a genuine cocycle the degeneracy condition is inherited
    pointwise and the shadow cocycle condition holds on every reachable
    state; ``check_shadow_cocycle`` re-verifies both, and accepts evaluators
    built from arbitrary tables precisely so broken ones produce witnesses.
    """

    def __init__(self, group: AbelianGroup, values: Mapping, arity: int = 2):
        self.group = group
        self.arity = arity
        self.values = {tuple(k): group.coerce(v) for k, v in values.items()}

    @classmethod
    def from_cocycle(cls, theta: BiquandleCocycle) -> "ShadowCocycle":
        return cls(theta.group, theta.values, theta.arity)

    def evaluate(self, state: tuple[int, ...], elems: tuple[int, ...]) -> tuple[int, ...]:
        return self.values[tuple(state[a] for a in elems)]


def check_shadow_cocycle(
    evaluator: ShadowCocycle, x: FiniteBiquandle, word_len_bound: int
) -> AxiomReport:
    """Shadow cocycle + degeneracy conditions on all states within the bound.

    The shadow condition alternates removal of one argument against acting on
    the earlier arguments with the derived-quandle operation while the state
    absorbs the removed generator.
    """
    if word_len_bound < 0:
        raise StructureError("word length bound must be >= 0")
    group = evaluator.group
    arity = evaluator.arity
    q = derived_quandle(x)
    from .algebra import kink_map

    kink = kink_map(x)
    states = reachable_arc_states(x, word_len_bound)
    violations = []
    checked = 0
    for state in states:
        for tup in itertools.product(range(x.n), repeat=arity):
            if any(tup[j] == tup[j + 1] for j in range(arity - 1)):
                if evaluator.evaluate(state, tup) != group.zero:
                    violations.append(("degeneracy", (state, tup)))
                    break
        for tup in itertools.product(range(x.n), repeat=arity + 1):
            checked += 1
            total = group.zero
            for i in range(arity + 1):
                ai = tup[i]
                face = tup[:i] + tup[i + 1 :]
                acted_state = step_arc_state(x, state, ai, 1, kink)
                acted = tuple(
                    q.op[v][ai] if pos < i else v for pos, v in enumerate(face)
                )
                sign = 1 if i % 2 == 0 else -1
                term = group.add(
                    evaluator.evaluate(state, face),
                    group.neg(evaluator.evaluate(acted_state, acted)),
                )
                total = group.add(total, group.scale(term, sign))
            if total != group.zero:
                violations.append(("shadow-cocycle", (state, tup)))
                break
        if violations:
            break
    return AxiomReport(not violations, tuple(violations), checked=checked)
