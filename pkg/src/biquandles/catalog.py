"""Built-in algebras, shipped diagram fixtures, and move pairs.

Algebra names:

* ``trivial_q{n}``     the trivial quandle a * b = a on n elements
* ``dihedral{n}``      a * b = 2b - a mod n
* ``alexander{m}_{s}_{t}``  the biquandle on Z/m with
                       x under y = t*x + (s-t)*y and x over y = s*x,
                       for units s, t
* ``census3_{i}``      entry i of the exhaustive order-3 biquandle census

Quandle entries resolve to quandles; pass them through
``quandle_as_biquandle`` where a biquandle is needed.  Every catalog algebra
passes its axiom check at load time because the constructors check.
"""

from __future__ import annotations

import json
import math
import re
from functools import lru_cache
from importlib import resources

from .algebra import (
    FiniteBiquandle,
    FiniteQuandle,
    StructureError,
    biquandle_census,
    quandle_as_biquandle,
)
from .diagram import LinkDiagram, MovePair, parse_diagram

DIAGRAM_NAMES = (
    "unknot0",
    "unknot0_cw",
    "unknot_kink_pos",
    "unknot_kink_neg",
    "hopf_pos",
    "trefoil_right",
    "figure8",
    "r2_before",
    "r2_after",
    "r3_before",
    "r3_after",
)

# The eight standard test diagrams; move pairs contribute their before sides.
FIXTURE_NAMES = (
    "unknot0",
    "unknot_kink_pos",
    "unknot_kink_neg",
    "hopf_pos",
    "trefoil_right",
    "figure8",
    "r2_before",
    "r3_before",
)

MOVE_PAIR_NAMES = ("r1_pos_pair", "r1_neg_pair", "r2_pair", "r3_pair")


def trivial_quandle(n: int) -> FiniteQuandle:
    return FiniteQuandle([[a] * n for a in range(n)])


def dihedral_quandle(n: int) -> FiniteQuandle:
    return FiniteQuandle([[(2 * b - a) % n for b in range(n)] for a in range(n)])


def alexander_biquandle(m: int, s: int, t: int) -> FiniteBiquandle:
    """x under y = t*x + (s-t)*y, x over y = s*x over Z/m; s, t must be units."""
    if m < 1:
        raise StructureError("modulus must be positive")
    for name, u in (("s", s), ("t", t)):
        if math.gcd(u % m, m) != 1:
            raise StructureError(f"{name}={u} is not a unit mod {m}")
    under = [[(t * x + (s - t) * y) % m for y in range(m)] for x in range(m)]
    over = [[(s * x) % m for _ in range(m)] for x in range(m)]
    return FiniteBiquandle(under, over)


@lru_cache(maxsize=1)
def census3() -> tuple[FiniteBiquandle, ...]:
    return tuple(biquandle_census(3))


_PATTERNS = (
    (re.compile(r"^trivial_q(\d+)$"), lambda m: trivial_quandle(int(m.group(1)))),
    (re.compile(r"^dihedral(\d+)$"), lambda m: dihedral_quandle(int(m.group(1)))),
    (
        re.compile(r"^alexander(\d+)_(\d+)_(\d+)$"),
        lambda m: alexander_biquandle(int(m.group(1)), int(m.group(2)), int(m.group(3))),
    ),
    (re.compile(r"^census3_(\d+)$"), lambda m: _census_entry(int(m.group(1)))),
)


def _census_entry(i: int) -> FiniteBiquandle:
    entries = census3()
    if not 0 <= i < len(entries):
        raise StructureError(f"census3 has {len(entries)} entries, index {i} out of range")
    return entries[i]


def get_algebra(name: str) -> FiniteQuandle | FiniteBiquandle:
    for pattern, build in _PATTERNS:
        m = pattern.match(name)
        if m:
            return build(m)
    raise StructureError(f"unknown algebra {name!r}")


def get_biquandle(name: str) -> FiniteBiquandle:
    alg = get_algebra(name)
    return alg if isinstance(alg, FiniteBiquandle) else quandle_as_biquandle(alg)


def _fixture_text(filename: str) -> str:
    return resources.files("biquandles.fixtures").joinpath(filename).read_text()


@lru_cache(maxsize=None)
def get_diagram(name: str) -> LinkDiagram:
    if name not in DIAGRAM_NAMES:
        raise StructureError(f"unknown diagram {name!r}; known: {', '.join(DIAGRAM_NAMES)}")
    return parse_diagram(_fixture_text(name + ".json"))


@lru_cache(maxsize=None)
def get_move_pair(name: str) -> MovePair:
    if name not in MOVE_PAIR_NAMES:
        raise StructureError(f"unknown move pair {name!r}; known: {', '.join(MOVE_PAIR_NAMES)}")
    data = json.loads(_fixture_text(name + ".json"))
    return MovePair(
        name=data["name"],
        before=get_diagram(data["before"]),
        after=get_diagram(data["after"]),
        boundary={int(k): int(v) for k, v in data["boundary"].items()},
    )


def standard_fixtures() -> list[tuple[str, LinkDiagram]]:
    return [(name, get_diagram(name)) for name in FIXTURE_NAMES]


def catalog_listing() -> dict:
    return {
        "algebras": [
            "trivial_q{n}",
            "dihedral{n}",
            "alexander{m}_{s}_{t}",
            f"census3_{{0..{len(census3()) - 1}}}",
        ],
        "diagrams": list(DIAGRAM_NAMES),
        "fixtures": list(FIXTURE_NAMES),
        "move_pairs": list(MOVE_PAIR_NAMES),
    }
