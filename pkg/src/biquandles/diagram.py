"""Oriented link diagrams as combinatorial crossing data.

A diagram is a list of crossings, each holding the four incident semi-arc ids
in counterclockwise order starting from the incoming under semi-arc, plus a
sign.  Sign +1 means the incoming over semi-arc sits at slot 1 (so the slot
cycle reads in, in, out, out); sign -1 puts it at slot 3 (in, out, out, in).
Crossing-free circles are carried separately, one semi-arc id each.

Conventions frozen here and relied on everywhere else:

* The normal of a semi-arc is its direction rotated clockwise, so the
  specified region (the one the normal points away from) lies on the LEFT of
  the oriented semi-arc.
* At a crossing, the "source" pair is the under/over semi-arc pair whose
  specified regions coincide: (slot 0, slot 3) at a positive crossing and
  (slot 2, slot 3) at a negative one.  The coloring relations read
  ``color[under_dst] = color[under_src] under color[over_src]`` and
  ``color[over_dst] = color[over_src] over color[under_src]``.

With those choices the walk around any crossing realizes a defining relation
of the associated group, which is what makes region colorings consistent.
Both choices are validated indirectly: an inconsistent mix breaks the move
invariance and state-sum equality test families.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebra import StructureError


@dataclass(frozen=True)
class Crossing:
    sign: int
    slots: tuple[int, int, int, int]

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise StructureError(f"crossing sign must be +1 or -1, got {self.sign}")
        if len(self.slots) != 4:
            raise StructureError("crossing needs exactly 4 semi-arc slots")

    @property
    def role_positions(self) -> tuple[int, int, int, int]:
        """Slot positions (under_src, over_src, under_dst, over_dst)."""
        return (0, 3, 2, 1) if self.sign > 0 else (2, 3, 0, 1)

    @property
    def incoming_flags(self) -> tuple[bool, bool, bool, bool]:
        """Whether each slot's semi-arc points into the crossing."""
        return (True, True, False, False) if self.sign > 0 else (True, False, False, True)

    def source_pair(self) -> tuple[int, int]:
        u, o, _, _ = self.role_positions
        return self.slots[u], self.slots[o]


@dataclass(frozen=True)
class ZeroCircle:
    """A crossing-free circle component; ccw fixes which side is specified."""

    semiarc: int
    ccw: bool = True


@dataclass(frozen=True)
class Region:
    """A connected face, identified by the crossing corners it contains.

    Corners use internal sector indexing: (crossing, k) is the sector swept
    counterclockwise from slot k to slot k+1.  ``boundary`` lists the incident
    semi-arcs with the side ("left"/"right") this region lies on.
    """

    index: int
    corners: tuple[tuple[int, int], ...]
    boundary: tuple[tuple[int, str], ...]


class LinkDiagram:
    """Parsed diagram with derived arcs, regions, and side maps."""

    def __init__(
        self,
        crossings: Sequence[Crossing],
        components: Sequence[ZeroCircle] = (),
        unbounded_corner: tuple[int, int] | None = None,
        _unbounded_override: int | None = None,
    ):
        self.crossings = tuple(crossings)
        self.components = tuple(components)
        self._validate_occurrences()
        self.semiarcs = self._collect_semiarcs()
        self.n_semiarcs = len(self.semiarcs)
        self.arcs, self.arc_index = self._compute_arcs()
        self._face_of, crossing_faces = self._traverse_faces()
        self._validate_euler(crossing_faces)
        self.unbounded_region = self._resolve_unbounded(
            crossing_faces, unbounded_corner, _unbounded_override
        )
        self._sides = self._compute_sides(crossing_faces)
        self.regions = self._build_regions(crossing_faces)
        self.unbounded_corner = unbounded_corner

    # -- validation and derivation -----------------------------------------

    def _validate_occurrences(self):
        circle_ids = [c.semiarc for c in self.components]
        if len(set(circle_ids)) != len(circle_ids):
            raise StructureError("duplicate zero-crossing circle ids")
        occ: dict[int, list[tuple[int, int]]] = {}
        for ci, cr in enumerate(self.crossings):
            for j, s in enumerate(cr.slots):
                if not isinstance(s, int) or s < 0:
                    raise StructureError(f"semi-arc ids must be non-negative ints, got {s!r}")
                occ.setdefault(s, []).append((ci, j))
        for s in circle_ids:
            if s in occ:
                raise StructureError(f"semi-arc {s} is both a circle and a crossing slot")
        heads: dict[int, int] = {}
        tails: dict[int, int] = {}
        for s, ends in occ.items():
            if len(ends) != 2:
                raise StructureError(
                    f"semi-arc {s} occurs {len(ends)} times in crossings, expected 2"
                )
        # Orientation consistency doubles as the sign cross-check: a wrong
        # sign flips the in/out status of slots 1 and 3 and leaves some
        # semi-arc with two heads or two tails.
        for ci, cr in enumerate(self.crossings):
            flags = cr.incoming_flags
            for j, s in enumerate(cr.slots):
                side = heads if flags[j] else tails
                if s in side:
                    kind = "incoming" if flags[j] else "outgoing"
                    raise StructureError(
                        f"semi-arc {s} is {kind} at two crossings; "
                        "a crossing sign is inconsistent with the orientations"
                    )
                side[s] = ci
        self._occurrences = occ

    def _collect_semiarcs(self) -> tuple[int, ...]:
        ids = set(self._occurrences)
        ids.update(c.semiarc for c in self.components)
        if not ids:
            raise StructureError("empty diagram")
        return tuple(sorted(ids))

    def _compute_arcs(self):
        parent = {s: s for s in self.semiarcs}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for cr in self.crossings:
            # the over strand runs through slots 1 and 3 in one arc; the
            # under strand is divided here, so slots 0 and 2 stay separate
            a, b = find(cr.slots[1]), find(cr.slots[3])
            parent[a] = b
        groups: dict[int, list[int]] = {}
        for s in self.semiarcs:
            groups.setdefault(find(s), []).append(s)
        arcs = tuple(sorted(tuple(sorted(g)) for g in groups.values()))
        arc_index = {s: i for i, arc in enumerate(arcs) for s in arc}
        return arcs, arc_index

    def _twin(self, ci: int, j: int) -> tuple[int, int]:
        a, b = self._occurrences[self.crossings[ci].slots[j]]
        return b if a == (ci, j) else a

    def _traverse_faces(self):
        """Orbit decomposition of the 4c corner sectors.

        From sector (i, k), exit along the semi-arc at slot k+1 and re-enter
        at the twin end (i', j'), landing in sector (i', j').  Orbits are the
        faces of the underlying 4-valent planar map.
        """
        face_of: dict[tuple[int, int], int] = {}
        faces: list[list[tuple[int, int]]] = []
        for ci in range(len(self.crossings)):
            for k in range(4):
                start = (ci, k)
                if start in face_of:
                    continue
                orbit = []
                cur = start
                while cur not in face_of:
                    face_of[cur] = len(faces)
                    orbit.append(cur)
                    i, k2 = cur
                    cur = self._twin(i, (k2 + 1) % 4)
                faces.append(orbit)
        return face_of, faces

    def _crossing_graph_connected(self) -> bool:
        if len(self.crossings) <= 1:
            return True
        adj: dict[int, set[int]] = {i: set() for i in range(len(self.crossings))}
        for s, ((a, _), (b, _)) in self._occurrences.items():
            adj[a].add(b)
            adj[b].add(a)
        seen = {0}
        stack = [0]
        while stack:
            for nb in adj[stack.pop()]:
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        return len(seen) == len(self.crossings)

    def _validate_euler(self, crossing_faces):
        c = len(self.crossings)
        if c == 0:
            return
        if not self._crossing_graph_connected():
            raise StructureError("crossing diagram is disconnected; split diagrams "
                                 "must be given as separate components")
        if len(crossing_faces) != c + 2:
            raise StructureError(
                f"face traversal gives {len(crossing_faces)} regions for {c} crossings; "
                "the corner structure is not planar"
            )

    def _resolve_unbounded(self, crossing_faces, corner, override):
        if override is not None:
            return override
        if not self.crossings:
            return 0  # ambient region of a circles-only diagram
        if corner is None:
            corner = (0, 0)
        ci, j = corner
        if not (0 <= ci < len(self.crossings)) or not (0 <= j < 4):
            raise StructureError(f"unbounded corner {corner} out of range")
        # (crossing, slot) names the corner clockwise of that slot, i.e. the
        # sector between slots j-1 and j.
        return self._face_of[(ci, (j - 1) % 4)]

    def _compute_sides(self, crossing_faces):
        """semiarc -> (left_region, right_region); left is the specified side."""
        sides: dict[int, tuple[int, int]] = {}
        for ci, cr in enumerate(self.crossings):
            flags = cr.incoming_flags
            for j, s in enumerate(cr.slots):
                if flags[j]:
                    left = self._face_of[(ci, (j - 1) % 4)]
                    right = self._face_of[(ci, j)]
                else:
                    left = self._face_of[(ci, j)]
                    right = self._face_of[(ci, (j - 1) % 4)]
                prior = sides.get(s)
                if prior is not None and prior != (left, right):
                    raise StructureError(f"inconsistent sides for semi-arc {s}")
                sides[s] = (left, right)
        # Circles sit inside the unbounded region, side by side.  A ccw circle
        # has its interior on the left of travel, so the interior is its
        # specified side.  Region ids: crossing faces first (or the single
        # ambient region 0 when there are no crossings), then interiors.
        base = len(crossing_faces) if self.crossings else 1
        next_region = base
        self._circle_regions = {}
        for circ in self.components:
            interior = next_region
            next_region += 1
            self._circle_regions[circ.semiarc] = interior
            ambient = self.unbounded_region
            sides[circ.semiarc] = (interior, ambient) if circ.ccw else (ambient, interior)
        self.n_regions = next_region
        return sides

    def _build_regions(self, crossing_faces) -> tuple[Region, ...]:
        boundary: dict[int, list[tuple[int, str]]] = {i: [] for i in range(self.n_regions)}
        for s, (left, right) in sorted(self._sides.items()):
            boundary[left].append((s, "left"))
            boundary[right].append((s, "right"))
        regions = []
        for i in range(self.n_regions):
            corners = tuple(crossing_faces[i]) if i < len(crossing_faces) else ()
            regions.append(Region(i, corners, tuple(boundary[i])))
        return tuple(regions)

    # -- public surface ------------------------------------------------------

    def specified_region(self, semiarc: int) -> int:
        """Region on the specified (left-of-travel) side of a semi-arc."""
        return self._sides[semiarc][0]

    def region_sides(self, semiarc: int) -> tuple[int, int]:
        return self._sides[semiarc]

    def source_region(self, ci: int) -> int:
        """The region at crossing ci from which both incident normals point away.

        It is the shared specified region of the crossing's source pair:
        sector 3 at a positive crossing, sector 2 at a negative one.  The slot
        pattern makes that sector unique, which the side maps already encode.
        """
        cr = self.crossings[ci]
        k = 3 if cr.sign > 0 else 2
        region = self._face_of[(ci, k)]
        u, o = cr.source_pair()
        assert self.specified_region(u) == region == self.specified_region(o)
        return region

    def with_unbounded(self, region: int) -> "LinkDiagram":
        """Same diagram with a different face chosen as the unbounded one."""
        if not 0 <= region < self.n_regions - len(self.components):
            raise StructureError(f"region {region} is not a crossing face")
        return LinkDiagram(self.crossings, self.components, _unbounded_override=region)

    def crossing_face_count(self) -> int:
        return self.n_regions - len(self.components)

    def __repr__(self) -> str:
        return (
            f"LinkDiagram(crossings={len(self.crossings)}, semiarcs={self.n_semiarcs}, "
            f"arcs={len(self.arcs)}, regions={self.n_regions})"
        )

    def to_json(self) -> dict:
        data: dict = {
            "crossings": [{"sign": c.sign, "slots": list(c.slots)} for c in self.crossings]
        }
        if self.components:
            data["components"] = [
                c.semiarc if c.ccw else {"id": c.semiarc, "ccw": False}
                for c in self.components
            ]
        if self.unbounded_corner is not None:
            ci, j = self.unbounded_corner
            data["unbounded"] = {"crossing": ci, "slot": j}
        return data


def parse_diagram(data: dict | str) -> LinkDiagram:
    """Parse the diagram JSON format.

    ``{"crossings": [{"sign": +-1, "slots": [s0, s1, s2, s3]}, ...],
       "components": [id or {"id": id, "ccw": bool}, ...],
       "unbounded": {"crossing": i, "slot": j}}``

    ``components`` lists crossing-free circles.  ``unbounded`` names a corner
    contained in the unbounded region: the corner clockwise of slot j at
    crossing i.  Default is the corner clockwise of slot 0 at crossing 0.
    """
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict):
        raise StructureError("diagram JSON must be an object")
    crossings = []
    for entry in data.get("crossings", []):
        try:
            crossings.append(Crossing(entry["sign"], tuple(entry["slots"])))
        except (KeyError, TypeError) as exc:
            raise StructureError(f"bad crossing entry {entry!r}") from exc
    components = []
    for entry in data.get("components", []):
        if isinstance(entry, int):
            components.append(ZeroCircle(entry))
        elif isinstance(entry, dict):
            components.append(ZeroCircle(entry["id"], bool(entry.get("ccw", True))))
        else:
            raise StructureError(f"bad component entry {entry!r}")
    corner = None
    if "unbounded" in data:
        u = data["unbounded"]
        corner = (u["crossing"], u["slot"])
    return LinkDiagram(crossings, components, unbounded_corner=corner)


@dataclass(frozen=True)
class MovePair:
    """Before/after diagrams of one packaged Reidemeister move.

    ``boundary`` maps each semi-arc outside the move disk in the before
    diagram to its counterpart in the after diagram.  Fixtures ship as
    explicit pairs; there is no general move engine.
    """

    name: str
    before: LinkDiagram
    after: LinkDiagram
    boundary: dict[int, int]


def _coloring_key(coloring: dict, diagram: LinkDiagram, semiarcs: Iterable[int], mode: str):
    if mode == "biquandle":
        return tuple(coloring[s] for s in semiarcs)
    return tuple(coloring[diagram.arc_index[s]] for s in semiarcs)


def transport_colorings(pair: MovePair, algebra, mode: str) -> dict:
    """The bijection on colorings induced by a packaged move.

    Sends each coloring of the before diagram to the unique coloring of the
    after diagram that agrees on the boundary semi-arcs.  Totality and
    bijectivity are asserted; valid fixtures cannot fail them.
    """
    from . import coloring as coloring_mod
    from .algebra import FiniteBiquandle, derived_quandle

    if mode == "biquandle":
        before_cols = coloring_mod.enumerate_biquandle_colorings(algebra, pair.before)
        after_cols = coloring_mod.enumerate_biquandle_colorings(algebra, pair.after)
    elif mode == "quandle":
        q = derived_quandle(algebra) if isinstance(algebra, FiniteBiquandle) else algebra
        before_cols = coloring_mod.enumerate_quandle_colorings(q, pair.before)
        after_cols = coloring_mod.enumerate_quandle_colorings(q, pair.after)
    else:
        raise ValueError(f"unknown mode {mode!r}")

    ext_before = sorted(pair.boundary)
    ext_after = [pair.boundary[s] for s in ext_before]
    index = {}
    for c in after_cols:
        key = _coloring_key(c, pair.after, ext_after, mode)
        assert key not in index, f"boundary colors extend ambiguously in {pair.name}"
        index[key] = c
    out = {}
    for c in before_cols:
        key = _coloring_key(c, pair.before, ext_before, mode)
        assert key in index, f"no extension across {pair.name} for boundary {key}"
        out[tuple(sorted(c.items()))] = index[key]
    assert len(before_cols) == len(after_cols) == len(out)
    return out
