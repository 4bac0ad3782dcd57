"""Verification suites: the machine-checkable content of the theory.

Each suite fills a matrix of (algebra, diagram) cells; a failing cell carries
a witness and fails the whole run.  All randomness flows from one seed.

Suites:

* ``main``        coloring-count equality and the two-sided identity of the
                  coloring correspondence, for the order-3 census plus the
                  dihedral and Alexander algebras, over the eight fixtures;
* ``naturality``  commutation of the lift with Reidemeister-move transport on
                  the packaged move pairs;
* ``cocycle``     equality of biquandle state sums with shadow state sums of
                  the pulled-back cocycle (including per-coloring weights),
                  move invariance of state sums, and triviality of coboundary
                  state sums;
* ``all``         everything above plus the action-state checks (relator
                  invariance, the lifted-coloring identity on reachable
                  states, and bounded word roundtrips).
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

from . import catalog
from .algebra import FiniteBiquandle, derived_quandle, kink_map, quandle_as_biquandle
from .cocycle import (
    AbelianGroup,
    biquandle_cocycle_invariant,
    coloring_weight,
    constant_invariant,
    enumerate_cocycles,
    random_coboundary,
    shadow_coloring_weight,
    shadow_cocycle_invariant,
)
from .coloring import (
    enumerate_biquandle_colorings,
    enumerate_colorings_bruteforce,
    enumerate_quandle_colorings,
    fold_arc_word,
    reachable_arc_states,
    region_coloring,
    step_arc_state,
)
from .correspondence import quandle_to_biquandle, verify_bijection, verify_naturality, word_roundtrip_ok
from .diagram import transport_colorings


@dataclass
class Cell:
    algebra: str
    diagram: str
    check: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "algebra": self.algebra,
            "diagram": self.diagram,
            "check": self.check,
            "passed": self.passed,
        }
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class VerificationMatrix:
    suite: str
    seed: int
    cells: list[Cell] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cells)

    def failures(self) -> list[Cell]:
        return [c for c in self.cells if not c.passed]

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "passed": self.passed,
            "cells": [c.to_json() for c in self.cells],
            "elapsed_seconds": round(self.elapsed, 3),
        }


def _census_named() -> list[tuple[str, FiniteBiquandle]]:
    return [(f"census3_{i}", x) for i, x in enumerate(catalog.census3())]


def main_suite_algebras() -> list[tuple[str, FiniteBiquandle]]:
    extra = [
        ("dihedral3", quandle_as_biquandle(catalog.dihedral_quandle(3))),
        ("dihedral5", quandle_as_biquandle(catalog.dihedral_quandle(5))),
    ]
    for s in (1, 2):
        for t in (1, 2):
            extra.append((f"alexander3_{s}_{t}", catalog.alexander_biquandle(3, s, t)))
    return _census_named() + extra


def run_main(matrix: VerificationMatrix) -> None:
    fixtures = catalog.standard_fixtures()
    for alg_name, x in main_suite_algebras():
        for fix_name, d in fixtures:
            report = verify_bijection(x, d)
            matrix.cells.append(
                Cell(alg_name, fix_name, "coloring-correspondence", report.passed,
                     {} if report.passed else report.to_json())
            )


def run_naturality(matrix: VerificationMatrix) -> None:
    pairs = [catalog.get_move_pair(name) for name in catalog.MOVE_PAIR_NAMES]
    for alg_name, x in _census_named():
        for pair in pairs:
            ok = verify_naturality(x, pair)
            matrix.cells.append(Cell(alg_name, pair.name, "move-naturality", ok))


def _cocycle_groups() -> list[AbelianGroup]:
    return [AbelianGroup((2,)), AbelianGroup((3,))]


def run_cocycle(matrix: VerificationMatrix, seed: int, coboundaries: int = 20) -> None:
    rng = random.Random(seed)
    fixtures = catalog.standard_fixtures()
    pairs = [catalog.get_move_pair(name) for name in catalog.MOVE_PAIR_NAMES]
    for alg_name, x in _census_named():
        for group in _cocycle_groups():
            thetas = enumerate_cocycles(x, group, cap=200)
            for fix_name, d in fixtures:
                q = derived_quandle(x)
                qcols = enumerate_quandle_colorings(q, d)
                bqcols = enumerate_biquandle_colorings(x, d)
                shadow_data = [
                    (qc, region_coloring(d, qc, "quandle", x)) for qc in qcols
                ]
                lifted = [quandle_to_biquandle(x, d, qc) for qc in qcols]
                ok = True
                witness: dict = {}
                for theta in thetas:
                    lhs = sorted(coloring_weight(x, theta, d, bc) for bc in bqcols)
                    rhs = sorted(
                        shadow_coloring_weight(x, theta, d, qc, states)
                        for qc, states in shadow_data
                    )
                    if lhs != rhs:
                        ok = False
                        witness = {"theta": theta.to_json(), "state_sums": [lhs, rhs]}
                        break
                    for (qc, states), bc in zip(shadow_data, lifted):
                        if coloring_weight(x, theta, d, bc) != shadow_coloring_weight(
                            x, theta, d, qc, states
                        ):
                            ok = False
                            witness = {"theta": theta.to_json(), "per_coloring": dict(qc)}
                            break
                    if not ok:
                        break
                matrix.cells.append(
                    Cell(alg_name, fix_name, f"state-sum-equality-Z{group.orders[0]}", ok, witness)
                )
            # move invariance of the biquandle state sum
            for pair in pairs:
                ok = True
                witness = {}
                for theta in thetas:
                    before = biquandle_cocycle_invariant(x, theta, pair.before)
                    after = biquandle_cocycle_invariant(x, theta, pair.after)
                    if before != after:
                        ok = False
                        witness = {
                            "theta": theta.to_json(),
                            "before": before.to_json(),
                            "after": after.to_json(),
                        }
                        break
                matrix.cells.append(
                    Cell(alg_name, pair.name, f"state-sum-invariance-Z{group.orders[0]}", ok, witness)
                )
            # coboundaries give the trivial invariant
            ok = True
            witness = {}
            for _ in range(coboundaries):
                theta = random_coboundary(x, group, rng)
                for fix_name, d in fixtures:
                    value = biquandle_cocycle_invariant(x, theta, d)
                    expected = constant_invariant(
                        group, len(enumerate_biquandle_colorings(x, d))
                    )
                    if value != expected:
                        ok = False
                        witness = {"diagram": fix_name, "value": value.to_json()}
                        break
                if not ok:
                    break
            matrix.cells.append(
                Cell(alg_name, "all-fixtures", f"coboundary-trivial-Z{group.orders[0]}", ok, witness)
            )


def relator_insertion_ok(x: FiniteBiquandle, rng: random.Random, trials: int) -> bool:
    """Folding is blind to defining relations of the associated group.

    Inserts one instance of the relation  a.b = b.(a*b)  of the derived
    quandle's associated group at a random position of a random word and
    compares the two folds.
    """
    q = derived_quandle(x)
    for _ in range(trials):
        length = rng.randrange(0, 7)
        word = [(rng.randrange(x.n), rng.choice((1, -1))) for _ in range(length)]
        pos = rng.randrange(0, length + 1)
        a, b = rng.randrange(x.n), rng.randrange(x.n)
        left = word[:pos] + [(a, 1), (b, 1)] + word[pos:]
        right = word[:pos] + [(b, 1), (q.op[a][b], 1)] + word[pos:]
        if fold_arc_word(x, tuple(left)) != fold_arc_word(x, tuple(right)):
            return False
    return True


def lifted_product_identity_ok(x: FiniteBiquandle, word_len_bound: int) -> bool:
    """On every reachable state f:  f(a) under f(b) = (f after b)(a * b)."""
    q = derived_quandle(x)
    kink = kink_map(x)
    for state in reachable_arc_states(x, word_len_bound):
        for b in range(x.n):
            stepped = step_arc_state(x, state, b, 1, kink)
            for a in range(x.n):
                if x.under[state[a]][state[b]] != stepped[q.op[a][b]]:
                    return False
    return True


def bounded_word_roundtrips_ok(x: FiniteBiquandle, max_len: int) -> bool:
    """Exhaustive roundtrip identity over all words of length <= max_len.

    The identity for a word compares its arc-state fold with the semi-arc
    fold of its translated image (and symmetrically starting from the other
    side), and both folds factor through the current state pair, so distinct
    words reaching the same pair need checking only once: a breadth-first
    walk over reachable pairs covers every word within the bound.
    """
    from .algebra import kink_map
    from .coloring import identity_state, step_arc_state, step_semiarc_state

    kink = kink_map(x)
    ident = identity_state(x.n)

    def lift_next(f, p, gen, exp):
        if exp > 0:
            letter = f[gen]
            return (
                step_arc_state(x, f, gen, 1, kink),
                step_semiarc_state(x, p, letter, 1),
            )
        f2 = step_arc_state(x, f, gen, -1, kink)
        return f2, step_semiarc_state(x, p, f2[gen], -1)

    def project_next(p, h, gen, exp):
        if exp > 0:
            letter = p.index(gen)
            return (
                step_semiarc_state(x, p, gen, 1),
                step_arc_state(x, h, letter, 1, kink),
            )
        p2 = step_semiarc_state(x, p, gen, -1)
        return p2, step_arc_state(x, h, p2.index(gen), -1, kink)

    for advance, check in (
        (lift_next, lambda a, b: a == b),
        (project_next, lambda a, b: a == b),
    ):
        seen = {(ident, ident)}
        frontier = [(ident, ident)]
        for _ in range(max_len):
            nxt = []
            for a, b in frontier:
                for gen in range(x.n):
                    for exp in (1, -1):
                        pair = advance(a, b, gen, exp)
                        if not check(*pair):
                            return False
                        if pair not in seen:
                            seen.add(pair)
                            nxt.append(pair)
            frontier = nxt
    return True


def run_states(matrix: VerificationMatrix, seed: int, trials: int = 1000,
               state_bound: int = 4, word_bound: int = 6) -> None:
    for alg_name, x in _census_named():
        rng = random.Random(f"{seed}:{alg_name}")
        matrix.cells.append(
            Cell(alg_name, "-", "relator-invariance", relator_insertion_ok(x, rng, trials))
        )
        matrix.cells.append(
            Cell(alg_name, "-", "lifted-product-identity",
                 lifted_product_identity_ok(x, state_bound))
        )
        matrix.cells.append(
            Cell(alg_name, "-", "word-roundtrips", bounded_word_roundtrips_ok(x, word_bound))
        )


def run_oracle(matrix: VerificationMatrix) -> None:
    fixtures = catalog.standard_fixtures()
    for alg_name, x in _census_named():
        q = derived_quandle(x)
        for fix_name, d in fixtures:
            fast_bq = len(enumerate_biquandle_colorings(x, d))
            slow_bq = len(enumerate_colorings_bruteforce(x, d, "biquandle"))
            fast_q = len(enumerate_quandle_colorings(q, d))
            slow_q = len(enumerate_colorings_bruteforce(q, d, "quandle"))
            ok = fast_bq == slow_bq and fast_q == slow_q
            matrix.cells.append(
                Cell(alg_name, fix_name, "oracle-agreement", ok,
                     {} if ok else {"backtracking": [fast_bq, fast_q],
                                    "bruteforce": [slow_bq, slow_q]})
            )


SUITES = ("main", "naturality", "cocycle", "all")


def run_suite(suite: str, seed: int = 0) -> VerificationMatrix:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    matrix = VerificationMatrix(suite=suite, seed=seed)
    start = time.perf_counter()
    if suite in ("main", "all"):
        run_main(matrix)
    if suite in ("naturality", "all"):
        run_naturality(matrix)
    if suite in ("cocycle", "all"):
        run_cocycle(matrix, seed)
    if suite == "all":
        run_states(matrix, seed)
        run_oracle(matrix)
    matrix.elapsed = time.perf_counter() - start
    return matrix
