"""Finite quandles and biquandles as explicit operation tables.

A quandle is a set with one binary operation * that is idempotent,
right-invertible and right self-distributive.  A biquandle carries two
operations, written ``under`` and ``over`` here: ``x under y`` is the color a
strand picks up when it passes below a strand colored ``y``, and ``x over y``
the color it picks up when it passes above.  Carriers are always ``0..n-1``;
anything with external names gets mapped to integers at the I/O boundary.

Inverse tables are precomputed at construction time since inverse lookups
dominate the coloring search downstream.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

Table = tuple[tuple[int, ...], ...]


class StructureError(ValueError):
    """Malformed input (non-square table, out-of-range entry, bad diagram)."""


class AxiomError(ValueError):
    """A constructor was handed data that fails its defining axioms."""


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of an axiom check.

    ``violations`` holds ``(axiom_id, witness)`` pairs, one minimal witness
    per violated instance, and ``passed`` is true exactly when it is empty.
    ``mode`` is ``"exhaustive"`` for table checks and ``"sampled"`` for
    functional (infinite-carrier) checks, which prove nothing beyond the
    sampled tuples.
    """

    passed: bool
    violations: tuple[tuple[str, tuple], ...]
    mode: str = "exhaustive"
    checked: int = 0

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "mode": self.mode,
            "checked": self.checked,
            "violations": [{"axiom": a, "witness": list(w)} for a, w in self.violations],
        }


def _as_table(rows: Sequence[Sequence[int]]) -> Table:
    table = tuple(tuple(row) for row in rows)
    n = len(table)
    if n == 0:
        raise StructureError("empty table")
    for row in table:
        if len(row) != n:
            raise StructureError(f"table is not square: row of length {len(row)}, expected {n}")
        for v in row:
            if not isinstance(v, int) or not 0 <= v < n:
                raise StructureError(f"table entry {v!r} outside carrier 0..{n - 1}")
    return table


def _columns_are_permutations(table: Table) -> int | None:
    """Return a witness column index whose map is not a bijection, else None."""
    n = len(table)
    for y in range(n):
        if len({table[x][y] for x in range(n)}) != n:
            return y
    return None


def _inverse_table(table: Table) -> Table:
    """inv[z][y] = the unique x with table[x][y] = z; columns must be bijective."""
    n = len(table)
    inv = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            inv[table[x][y]][y] = x
    return tuple(tuple(row) for row in inv)


def check_quandle_axioms(op: Sequence[Sequence[int]]) -> AxiomReport:
    """Exhaustively check idempotence, right-invertibility, self-distributivity."""
    table = _as_table(op)
    n = len(table)
    violations: list[tuple[str, tuple]] = []
    for a in range(n):
        if table[a][a] != a:
            violations.append(("Q1", (a,)))
            break
    bad = _columns_are_permutations(table)
    if bad is not None:
        violations.append(("Q2", (bad,)))
    done = False
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if table[table[a][b]][c] != table[table[a][c]][table[b][c]]:
                    violations.append(("Q3", (a, b, c)))
                    done = True
                    break
            if done:
                break
        if done:
            break
    return AxiomReport(not violations, tuple(violations), checked=n ** 3)


def check_biquandle_axioms(
    under: Sequence[Sequence[int]], over: Sequence[Sequence[int]]
) -> AxiomReport:
    """Exhaustively check the three biquandle axioms.

    Besides column bijectivity of both operations, the second axiom requires
    the pair map H(x, y) = (y over x, x under y) to be a bijection of the n^2
    pairs; that is what makes crossings with both strands entering from the
    same side uniquely resolvable.
    """
    tu = _as_table(under)
    to = _as_table(over)
    if len(tu) != len(to):
        raise StructureError(f"table sizes differ: {len(tu)} vs {len(to)}")
    n = len(tu)
    violations: list[tuple[str, tuple]] = []
    for x in range(n):
        if tu[x][x] != to[x][x]:
            violations.append(("BQ1", (x,)))
            break
    for name, t in (("BQ2-under", tu), ("BQ2-over", to)):
        bad = _columns_are_permutations(t)
        if bad is not None:
            violations.append((name, (bad,)))
    seen: dict[tuple[int, int], tuple[int, int]] = {}
    for x in range(n):
        for y in range(n):
            h = (to[y][x], tu[x][y])
            if h in seen:
                violations.append(("BQ2-pairmap", (seen[h], (x, y))))
                break
            seen[h] = (x, y)
        else:
            continue
        break
    for eq, check in (
        ("BQ3-1", lambda x, y, z: tu[tu[x][y]][tu[z][y]] == tu[tu[x][z]][to[y][z]]),
        ("BQ3-2", lambda x, y, z: to[to[x][y]][to[z][y]] == to[to[x][z]][tu[y][z]]),
        ("BQ3-3", lambda x, y, z: to[tu[x][y]][tu[z][y]] == tu[to[x][z]][to[y][z]]),
    ):
        found = next(
            (
                (x, y, z)
                for x in range(n)
                for y in range(n)
                for z in range(n)
                if not check(x, y, z)
            ),
            None,
        )
        if found is not None:
            violations.append((eq, found))
    return AxiomReport(not violations, tuple(violations), checked=n ** 3)


class FiniteQuandle:
    """A quandle on ``0..n-1`` given by its operation table ``op[a][b] = a * b``."""

    def __init__(self, op: Sequence[Sequence[int]]):
        table = _as_table(op)
        report = check_quandle_axioms(table)
        if not report.passed:
            raise AxiomError(f"not a quandle: {report.violations}")
        self.n = len(table)
        self.op = table
        self.inv_op = _inverse_table(table)

    def mul(self, a: int, b: int) -> int:
        return self.op[a][b]

    def mul_inv(self, a: int, b: int) -> int:
        return self.inv_op[a][b]

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteQuandle) and self.op == other.op

    def __hash__(self) -> int:
        return hash(self.op)

    def __repr__(self) -> str:
        return f"FiniteQuandle(n={self.n})"

    def to_json(self) -> dict:
        return {"n": self.n, "op": [list(r) for r in self.op]}

    @classmethod
    def from_json(cls, data: dict | str) -> "FiniteQuandle":
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, dict) or "op" not in data:
            raise StructureError("quandle JSON needs an 'op' table")
        q = cls(data["op"])
        if "n" in data and data["n"] != q.n:
            raise StructureError(f"declared n={data['n']} but table has n={q.n}")
        return q


class FiniteBiquandle:
    """A biquandle on ``0..n-1`` given by its two operation tables."""

    def __init__(self, under: Sequence[Sequence[int]], over: Sequence[Sequence[int]]):
        report = check_biquandle_axioms(under, over)
        if not report.passed:
            raise AxiomError(f"not a biquandle: {report.violations}")
        self.under = _as_table(under)
        self.over = _as_table(over)
        self.n = len(self.under)
        self.under_inv = _inverse_table(self.under)
        self.over_inv = _inverse_table(self.over)
        # Inverse of the pair map H(x,y) = (y over x, x under y); used to
        # resolve a crossing from its two derived semi-arc colors.
        self.pair_inv = {
            (self.over[y][x], self.under[x][y]): (x, y)
            for x in range(self.n)
            for y in range(self.n)
        }

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteBiquandle)
            and self.under == other.under
            and self.over == other.over
        )

    def __hash__(self) -> int:
        return hash((self.under, self.over))

    def __repr__(self) -> str:
        return f"FiniteBiquandle(n={self.n})"

    def is_quandle_shaped(self) -> bool:
        """True when the over operation is trivial, i.e. x over y = x."""
        return all(self.over[x][y] == x for x in range(self.n) for y in range(self.n))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "under": [list(r) for r in self.under],
            "over": [list(r) for r in self.over],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "FiniteBiquandle":
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, dict) or "under" not in data or "over" not in data:
            raise StructureError("biquandle JSON needs 'under' and 'over' tables")
        x = cls(data["under"], data["over"])
        if "n" in data and data["n"] != x.n:
            raise StructureError(f"declared n={data['n']} but tables have n={x.n}")
        return x


def derived_quandle(x: FiniteBiquandle) -> FiniteQuandle:
    """The quandle on the same carrier with a * b = (a under b) over_inv b.

    The construction is re-verified on every call: FiniteQuandle's constructor
    checks the axioms rather than taking them on faith.
    """
    n = x.n
    op = tuple(
        tuple(x.over_inv[x.under[a][b]][b] for b in range(n)) for a in range(n)
    )
    return FiniteQuandle(op)


def kink_map(x: FiniteBiquandle) -> tuple[int, ...]:
    """The unique bijection k with (k(v) over k(v)) = v for every v.

    It inverts the diagonal map v -> v over v, which is injective for any
    biquandle because the pair map is; uniqueness is asserted by checking the
    diagonal is a permutation.  k controls how colors transport through a
    single kink.
    """
    diag = [x.over[v][v] for v in range(x.n)]
    if sorted(diag) != list(range(x.n)):
        raise AxiomError(f"diagonal map is not a bijection: {diag}")
    k = [0] * x.n
    for v, d in enumerate(diag):
        k[d] = v
    return tuple(k)


def quandle_as_biquandle(q: FiniteQuandle) -> FiniteBiquandle:
    """Embed a quandle as the biquandle with trivial over operation."""
    over = tuple(tuple(x for _ in range(q.n)) for x in range(q.n))
    return FiniteBiquandle(q.op, over)


def _tables_with_permutation_columns(n: int) -> list[Table]:
    cols = list(itertools.permutations(range(n)))
    out = []
    for choice in itertools.product(cols, repeat=n):
        out.append(tuple(tuple(choice[y][x] for y in range(n)) for x in range(n)))
    return out


def biquandle_census(n: int) -> list[FiniteBiquandle]:
    """Every biquandle structure on 0..n-1, n <= 3, no isomorphism reduction.

    Both operation tables must have permutation columns, so candidates are
    column products rather than raw tables; the remaining axioms are filtered
    exhaustively.  Output is sorted by the row-major encoding of
    (under, over), which pins a deterministic order however the candidate
    space gets partitioned.
    """
    if not 1 <= n <= 3:
        raise StructureError("census enumeration is limited to carriers of size 1..3")
    candidates = _tables_with_permutation_columns(n)
    found: list[tuple[Table, Table]] = []
    for under in candidates:
        for over in candidates:
            if any(under[v][v] != over[v][v] for v in range(n)):
                continue
            seen = set()
            ok = True
            for a in range(n):
                for b in range(n):
                    h = (over[b][a], under[a][b])
                    if h in seen:
                        ok = False
                        break
                    seen.add(h)
                if not ok:
                    break
            if not ok:
                continue
            for a in range(n):
                for b in range(n):
                    for c in range(n):
                        if (
                            under[under[a][b]][under[c][b]] != under[under[a][c]][over[b][c]]
                            or over[over[a][b]][over[c][b]] != over[over[a][c]][under[b][c]]
                            or over[under[a][b]][under[c][b]] != under[over[a][c]][over[b][c]]
                        ):
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    break
            if ok:
                found.append((under, over))
    found.sort()
    return [FiniteBiquandle(u, o) for u, o in found]


# ---------------------------------------------------------------------------
# Functional biquandles: computable operations on a countable carrier.  Axioms
# can only be sampled, never proved, and reports say so.


@dataclass(frozen=True)
class FunctionalBiquandle:
    name: str
    under: Callable
    over: Callable
    under_inv: Callable
    over_inv: Callable
    sample: Callable  # rng -> carrier element

    def __repr__(self) -> str:
        return f"FunctionalBiquandle({self.name})"


def sampled_axiom_check(
    x: FunctionalBiquandle, samples: int = 10_000, seed: int = 0
) -> AxiomReport:
    """Evaluate the biquandle axioms on pseudo-random tuples drawn from seed.

    A sampling contract, not a proof: the second axiom's bijectivity turns
    into the inverse-law identities plus injectivity of the pair map across
    the sampled pairs.
    """
    if samples < 1:
        raise StructureError("sample count must be >= 1")
    rng = random.Random(seed)
    violations: list[tuple[str, tuple]] = []
    seen_pairs: dict = {}
    for _ in range(samples):
        a, b, c = x.sample(rng), x.sample(rng), x.sample(rng)
        if x.under(a, a) != x.over(a, a):
            violations.append(("BQ1", (a,)))
            break
        if x.under_inv(x.under(a, b), b) != a or x.under(x.under_inv(a, b), b) != a:
            violations.append(("BQ2-under-inverse", (a, b)))
            break
        if x.over_inv(x.over(a, b), b) != a or x.over(x.over_inv(a, b), b) != a:
            violations.append(("BQ2-over-inverse", (a, b)))
            break
        h = (x.over(b, a), x.under(a, b))
        prev = seen_pairs.get(h)
        if prev is not None and prev != (a, b):
            violations.append(("BQ2-pairmap", (prev, (a, b))))
            break
        seen_pairs[h] = (a, b)
        if (
            x.under(x.under(a, b), x.under(c, b)) != x.under(x.under(a, c), x.over(b, c))
            or x.over(x.over(a, b), x.over(c, b)) != x.over(x.over(a, c), x.under(b, c))
            or x.over(x.under(a, b), x.under(c, b)) != x.under(x.over(a, c), x.over(b, c))
        ):
            violations.append(("BQ3", (a, b, c)))
            break
    return AxiomReport(not violations, tuple(violations), mode="sampled", checked=samples)


def integer_biquandle() -> FunctionalBiquandle:
    """The biquandle on the integers where both operations shift by one."""
    return FunctionalBiquandle(
        name="Z-shift",
        under=lambda a, b: a + 1,
        over=lambda a, b: a + 1,
        under_inv=lambda a, b: a - 1,
        over_inv=lambda a, b: a - 1,
        sample=lambda rng: rng.randint(-50, 50),
    )


def integer_pair_biquandle() -> FunctionalBiquandle:
    """The biquandle on Z^2 with (x,a) . (y,b) = (x+1, a+y) for both operations.

    Generated by the single element (0, 0); unlike the plain integer shift,
    its right translations depend on the acting element, which is what makes
    it able to distinguish one-generator quotients.
    """
    return FunctionalBiquandle(
        name="Z2-shift",
        under=lambda p, q: (p[0] + 1, p[1] + q[0]),
        over=lambda p, q: (p[0] + 1, p[1] + q[0]),
        under_inv=lambda p, q: (p[0] - 1, p[1] - q[0]),
        over_inv=lambda p, q: (p[0] - 1, p[1] - q[0]),
        sample=lambda rng: (rng.randint(-50, 50), rng.randint(-50, 50)),
    )


def right_translation(x: FunctionalBiquandle, b) -> Callable:
    """The map v -> v under b, for probing whether translations coincide."""
    return lambda v: x.under(v, b)


# ---------------------------------------------------------------------------
# Biquandle structure on G x Q for a finite permutation group G acting on a
# quandle Q.  This is the finite stand-in for the group-paired biquandle of a
# link exterior; G must contain the right-translation permutation of every
# quandle element and be closed as a group.

Perm = tuple[int, ...]


def _perm_mul(p: Perm, q: Perm) -> Perm:
    """Right-action composition: (p*q)[v] = q[p[v]]."""
    return tuple(q[v] for v in p)


def _perm_inv(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


@dataclass(frozen=True)
class PermutationGroup:
    """A finite group of permutations of 0..n-1, closed under product/inverse."""

    degree: int
    elements: frozenset

    def __post_init__(self):
        elems = self.elements
        ident = tuple(range(self.degree))
        if ident not in elems:
            raise StructureError("permutation group is missing the identity")
        for p in elems:
            if _perm_inv(p) not in elems:
                raise StructureError(f"group not closed under inverse: {p}")
        for p in elems:
            for q in elems:
                if _perm_mul(p, q) not in elems:
                    raise StructureError(f"group not closed under product: {p} * {q}")

    def __len__(self):
        return len(self.elements)


def operator_group(q: FiniteQuandle) -> PermutationGroup:
    """Closure of the right-translation permutations a -> a * b of a quandle."""
    gens = [tuple(q.op[a][b] for a in range(q.n)) for b in range(q.n)]
    ident = tuple(range(q.n))
    elems = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                for cand in (_perm_mul(p, g), _perm_mul(p, _perm_inv(g))):
                    if cand not in elems:
                        elems.add(cand)
                        nxt.append(cand)
        frontier = nxt
    return PermutationGroup(q.n, frozenset(elems))


def group_pair_biquandle(
    q: FiniteQuandle, group: PermutationGroup | None = None
) -> FunctionalBiquandle:
    """Biquandle operations on G x Q.

    (g,a) under (h,b) = (g.b, a*b) and (g,a) over (h,b) = (h.b.h^-1.g, a),
    where ``.b`` denotes the right-translation permutation of b.  The default
    group is the closure of those translations, the smallest G making both
    operations well defined.
    """
    group = group if group is not None else operator_group(q)
    gens = [tuple(q.op[a][b] for a in range(q.n)) for b in range(q.n)]
    for b, g in enumerate(gens):
        if g not in group.elements:
            raise StructureError(f"group does not contain the translation of element {b}")
    elements = sorted(group.elements)

    def under(p, r):
        (g, a), (_, b) = p, r
        return (_perm_mul(g, gens[b]), q.op[a][b])

    def under_inv(p, r):
        (g, a), (_, b) = p, r
        return (_perm_mul(g, _perm_inv(gens[b])), q.inv_op[a][b])

    def over(p, r):
        (g, a), (h, b) = p, r
        conj = _perm_mul(_perm_mul(h, gens[b]), _perm_inv(h))
        return (_perm_mul(conj, g), a)

    def over_inv(p, r):
        (g, a), (h, b) = p, r
        conj = _perm_mul(_perm_mul(h, gens[b]), _perm_inv(h))
        return (_perm_mul(_perm_inv(conj), g), a)

    return FunctionalBiquandle(
        name=f"grouppair(n={q.n},|G|={len(group)})",
        under=under,
        over=over,
        under_inv=under_inv,
        over_inv=over_inv,
        sample=lambda rng: (rng.choice(elements), rng.randrange(q.n)),
    )
