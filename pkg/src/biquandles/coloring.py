"""Coloring enumeration and region/shadow colorings.

A biquandle coloring assigns carrier elements to semi-arcs so that at every
crossing ``under_dst = under_src under over_src`` and
``over_dst = over_src over under_src`` hold for the crossing's source pair.
A quandle coloring assigns elements to arcs with the single relation
``out = in * over`` at positive crossings and ``out = in *^-1 over`` at
negative ones.

Region colorings assign associated-group elements to regions, starting from
the identity on the unbounded region and multiplying by a generator each time
a semi-arc is crossed along its normal.  Group elements are represented by
their action, never by canonical words:

* quandle mode: a region state is the map sending each arc color to the
  semi-arc color it reads as at that region (``arc state``);
* biquandle mode: a region state is the permutation by which the region acts
  on semi-arc colors through the over operation (``semi-arc state``).

Word problems in the associated group are never solved; every downstream
formula factors through these finite states.
"""

from __future__ import annotations

import itertools
from typing import Iterable

from .algebra import FiniteBiquandle, FiniteQuandle, StructureError
from .diagram import LinkDiagram

BRUTE_FORCE_GUARD = 10_000_000

GroupWord = tuple[tuple[int, int], ...]  # ((element, +1/-1), ...)


# ---------------------------------------------------------------------------
# Enumeration


def _semiarc_order(d: LinkDiagram) -> list[int]:
    """Semi-arcs in crossing-connectivity order, so propagation fires early."""
    order: list[int] = []
    seen: set[int] = set()
    for cr in d.crossings:
        for s in cr.slots:
            if s not in seen:
                seen.add(s)
                order.append(s)
    for circ in d.components:
        order.append(circ.semiarc)
    return order


def enumerate_biquandle_colorings(x: FiniteBiquandle, d: LinkDiagram) -> list[dict[int, int]]:
    """All biquandle colorings, sorted by their color tuple over sorted semi-arcs.

    Depth-first search with constraint propagation: any adjacent pair of
    known slot values at a crossing forces the other two (source and derived
    pairs via the tables, mixed pairs via an inverse table or the pair map
    inverse), so branching only happens on genuinely free semi-arcs.
    """
    crossings = d.crossings
    order = _semiarc_order(d)
    assign: dict[int, int] = {}
    out: list[dict[int, int]] = []
    by_semiarc: dict[int, list[int]] = {}
    for ci, cr in enumerate(crossings):
        for s in set(cr.slots):
            by_semiarc.setdefault(s, []).append(ci)

    def propagate(dirty: list[int]) -> bool:
        while dirty:
            ci = dirty.pop()
            cr = crossings[ci]
            u, o, ud, od = (cr.slots[p] for p in cr.role_positions)
            vu, vo = assign.get(u), assign.get(o)
            vud, vod = assign.get(ud), assign.get(od)
            # One semi-arc may fill two slots of the same crossing (kinks,
            # wrap-around strands), so derivations are kept as pairs and
            # checked one by one instead of merged into a dict.
            derived: list[tuple[int, int]] = []
            if vu is not None and vo is not None:
                derived.append((ud, x.under[vu][vo]))
                derived.append((od, x.over[vo][vu]))
            elif vud is not None and vo is not None:
                su = x.under_inv[vud][vo]
                derived.append((u, su))
                derived.append((od, x.over[vo][su]))
            elif vod is not None and vu is not None:
                so = x.over_inv[vod][vu]
                derived.append((o, so))
                derived.append((ud, x.under[vu][so]))
            elif vud is not None and vod is not None:
                su, so = x.pair_inv[(vod, vud)]
                derived.append((u, su))
                derived.append((o, so))
            else:
                continue
            for s, v in derived:
                prev = assign.get(s)
                if prev is None:
                    assign[s] = v
                    dirty.extend(by_semiarc[s])  # includes ci: recheck may force more
                elif prev != v:
                    return False
        return True

    def search(pos: int):
        while pos < len(order) and order[pos] in assign:
            pos += 1
        if pos == len(order):
            out.append(dict(assign))
            return
        s = order[pos]
        for v in range(x.n):
            snapshot = dict(assign)
            assign[s] = v
            if propagate(list(by_semiarc.get(s, []))):
                search(pos + 1)
            assign.clear()
            assign.update(snapshot)

    search(0)
    key_ids = d.semiarcs
    out.sort(key=lambda c: tuple(c[s] for s in key_ids))
    return out


def enumerate_quandle_colorings(q: FiniteQuandle, d: LinkDiagram) -> list[dict[int, int]]:
    """All quandle colorings as maps arc index -> element, sorted."""
    crossings = d.crossings
    arc_index = d.arc_index
    n_arcs = len(d.arcs)
    triples = []
    for cr in crossings:
        u, o, ud, _ = (cr.slots[p] for p in cr.role_positions)
        triples.append((arc_index[u], arc_index[o], arc_index[ud]))
    by_arc: dict[int, list[int]] = {}
    for ti, (a, b, c) in enumerate(triples):
        for arc in {a, b, c}:
            by_arc.setdefault(arc, []).append(ti)
    assign: dict[int, int] = {}
    out: list[dict[int, int]] = []

    def propagate(dirty: list[int]) -> bool:
        while dirty:
            ti = dirty.pop()
            a, b, c = triples[ti]
            va, vb, vc = assign.get(a), assign.get(b), assign.get(c)
            derived = {}
            if va is not None and vb is not None:
                derived[c] = q.op[va][vb]
            elif vc is not None and vb is not None:
                derived[a] = q.inv_op[vc][vb]
            else:
                continue
            for arc, v in derived.items():
                prev = assign.get(arc)
                if prev is None:
                    assign[arc] = v
                    dirty.extend(t for t in by_arc[arc] if t != ti)
                elif prev != v:
                    return False
        return True

    def search(arc: int):
        while arc < n_arcs and arc in assign:
            arc += 1
        if arc == n_arcs:
            out.append(dict(assign))
            return
        for v in range(q.n):
            snapshot = dict(assign)
            assign[arc] = v
            if propagate(list(by_arc.get(arc, []))):
                search(arc + 1)
            assign.clear()
            assign.update(snapshot)

    search(0)
    out.sort(key=lambda c: tuple(c[a] for a in range(n_arcs)))
    return out


def _check_biquandle_coloring(x: FiniteBiquandle, d: LinkDiagram, coloring: dict[int, int]) -> bool:
    for cr in d.crossings:
        u, o, ud, od = (coloring[cr.slots[p]] for p in cr.role_positions)
        if ud != x.under[u][o] or od != x.over[o][u]:
            return False
    return True


def _check_quandle_coloring(q: FiniteQuandle, d: LinkDiagram, coloring: dict[int, int]) -> bool:
    for cr in d.crossings:
        u, o, ud, _ = (cr.slots[p] for p in cr.role_positions)
        if coloring[d.arc_index[ud]] != q.op[coloring[d.arc_index[u]]][coloring[d.arc_index[o]]]:
            return False
    return True


def enumerate_colorings_bruteforce(algebra, d: LinkDiagram, mode: str) -> list[dict[int, int]]:
    """Raw product-space enumeration with no propagation.

    Kept deliberately independent of the backtracking enumerator so it can
    certify it.  Refuses instances beyond n**cells = 10^7.
    """
    if mode == "biquandle":
        cells = d.semiarcs
        n = algebra.n
        check = lambda c: _check_biquandle_coloring(algebra, d, c)
        wrap = lambda vals: dict(zip(cells, vals))
    elif mode == "quandle":
        cells = tuple(range(len(d.arcs)))
        n = algebra.n
        check = lambda c: _check_quandle_coloring(algebra, d, c)
        wrap = lambda vals: dict(zip(cells, vals))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    if n ** len(cells) > BRUTE_FORCE_GUARD:
        raise StructureError(
            f"brute-force space {n}^{len(cells)} exceeds the guard {BRUTE_FORCE_GUARD}"
        )
    out = []
    for vals in itertools.product(range(n), repeat=len(cells)):
        c = wrap(vals)
        if check(c):
            out.append(c)
    return out


# ---------------------------------------------------------------------------
# Action states.  Both kinds are total maps carrier -> carrier stored as
# tuples; the identity group element is the identity tuple.


def identity_state(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def step_arc_state(
    x: FiniteBiquandle, state: tuple[int, ...], gen: int, exponent: int,
    kink: tuple[int, ...] | None = None,
) -> tuple[int, ...]:
    """Advance a quandle-mode region state by one generator.

    With f the current state, a positive step by b sends a to
    ``f(a) over f(b)``; a negative step sends a to ``f(a) over^-1 k(f(b))``
    where k is the kink map.  The two steps are mutually inverse pointwise.
    """
    if kink is None:
        from .algebra import kink_map

        kink = kink_map(x)
    if exponent > 0:
        v = state[gen]
        return tuple(x.over[a][v] for a in state)
    v = kink[state[gen]]
    return tuple(x.over_inv[a][v] for a in state)


def step_semiarc_state(
    x: FiniteBiquandle, state: tuple[int, ...], gen: int, exponent: int
) -> tuple[int, ...]:
    """Advance a biquandle-mode region state: compose with (over gen)^exponent."""
    if exponent > 0:
        return tuple(x.over[v][gen] for v in state)
    return tuple(x.over_inv[v][gen] for v in state)


def fold_arc_word(
    x: FiniteBiquandle, word: GroupWord, start: tuple[int, ...] | None = None
) -> tuple[int, ...]:
    from .algebra import kink_map

    kink = kink_map(x)
    state = identity_state(x.n) if start is None else start
    for gen, exp in word:
        state = step_arc_state(x, state, gen, exp, kink)
    return state


def fold_semiarc_word(
    x: FiniteBiquandle, word: GroupWord, start: tuple[int, ...] | None = None
) -> tuple[int, ...]:
    state = identity_state(x.n) if start is None else start
    for gen, exp in word:
        state = step_semiarc_state(x, state, gen, exp)
    return state


def reachable_arc_states(x: FiniteBiquandle, word_len_bound: int) -> list[tuple[int, ...]]:
    """All distinct quandle-mode states reachable by words up to the bound."""
    from .algebra import kink_map

    kink = kink_map(x)
    seen = {identity_state(x.n)}
    frontier = list(seen)
    for _ in range(word_len_bound):
        nxt = []
        for st in frontier:
            for gen in range(x.n):
                for exp in (1, -1):
                    new = step_arc_state(x, st, gen, exp, kink)
                    if new not in seen:
                        seen.add(new)
                        nxt.append(new)
        frontier = nxt
    return sorted(seen)


# ---------------------------------------------------------------------------
# Region and shadow colorings


def region_coloring(
    d: LinkDiagram, coloring: dict[int, int], mode: str, x: FiniteBiquandle
) -> dict[int, tuple[int, ...]]:
    """Breadth-first region coloring from the unbounded region.

    Crossing a semi-arc along its normal (left region to right region)
    multiplies the region's group element on the right by the semi-arc's
    generator; crossing against the normal multiplies by its inverse.  Any
    region reached along two paths must receive the same state: a mismatch
    means the conventions or the algebra are broken, so it raises rather than
    returning silently.
    """
    from .algebra import kink_map

    if mode == "quandle":
        kink = kink_map(x)
        step = lambda st, s, e: step_arc_state(x, st, coloring[d.arc_index[s]], e, kink)
    elif mode == "biquandle":
        step = lambda st, s, e: step_semiarc_state(x, st, coloring[s], e)
    else:
        raise ValueError(f"unknown mode {mode!r}")

    neighbors: dict[int, list[tuple[int, int, int]]] = {}
    for s in d.semiarcs:
        left, right = d.region_sides(s)
        neighbors.setdefault(left, []).append((right, s, +1))
        neighbors.setdefault(right, []).append((left, s, -1))

    states = {d.unbounded_region: identity_state(x.n)}
    frontier = [d.unbounded_region]
    while frontier:
        nxt = []
        for r in frontier:
            for other, s, exp in neighbors.get(r, ()):
                st = step(states[r], s, exp)
                if other in states:
                    if states[other] != st:
                        raise AssertionError(
                            f"region coloring inconsistent at region {other} "
                            f"across semi-arc {s}"
                        )
                else:
                    states[other] = st
                    nxt.append(other)
        frontier = nxt
    if len(states) != d.n_regions:
        raise AssertionError("region coloring did not reach every region")
    return states


def shadow_coloring(
    d: LinkDiagram, coloring: dict[int, int], mode: str, x: FiniteBiquandle
) -> dict[int, tuple[tuple[int, ...], int]]:
    """Pair each semi-arc with (state of its specified region, its color)."""
    regions = region_coloring(d, coloring, mode, x)
    out = {}
    for s in d.semiarcs:
        color = coloring[s] if mode == "biquandle" else coloring[d.arc_index[s]]
        out[s] = (regions[d.specified_region(s)], color)
    return out


# ---------------------------------------------------------------------------
# Coloring JSON


def coloring_to_json(d: LinkDiagram, coloring: dict[int, int], mode: str) -> dict:
    if mode == "biquandle":
        colors = {str(s): coloring[s] for s in d.semiarcs}
    else:
        colors = {str(s): coloring[d.arc_index[s]] for s in d.semiarcs}
    kind = "biquandle" if mode == "biquandle" else "quandle"
    return {"kind": kind, "colors": colors}


def coloring_from_json(d: LinkDiagram, data: dict | str) -> tuple[str, dict[int, int]]:
    """Parse a coloring; quandle colorings may name any one semi-arc per arc."""
    import json as _json

    if isinstance(data, str):
        data = _json.loads(data)
    kind = data.get("kind")
    if kind not in ("quandle", "biquandle"):
        raise StructureError("coloring JSON needs kind 'quandle' or 'biquandle'")
    raw = {int(k): int(v) for k, v in data.get("colors", {}).items()}
    for s in raw:
        if s not in d.arc_index:
            raise StructureError(f"unknown semi-arc id {s}")
    if kind == "biquandle":
        missing = [s for s in d.semiarcs if s not in raw]
        if missing:
            raise StructureError(f"missing colors for semi-arcs {missing}")
        return "biquandle", {s: raw[s] for s in d.semiarcs}
    out: dict[int, int] = {}
    for s, v in raw.items():
        a = d.arc_index[s]
        if a in out and out[a] != v:
            raise StructureError(f"conflicting colors on arc {a}")
        out[a] = v
    missing_arcs = [a for a in range(len(d.arcs)) if a not in out]
    if missing_arcs:
        raise StructureError(f"missing colors for arcs {missing_arcs}")
    return "quandle", out
