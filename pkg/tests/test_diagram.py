import json
import random

import pytest

from biquandles import LinkDiagram, StructureError, parse_diagram, quandle_as_biquandle
from biquandles.catalog import (
    FIXTURE_NAMES,
    MOVE_PAIR_NAMES,
    dihedral_quandle,
    get_diagram,
    get_move_pair,
)
from biquandles.diagram import Crossing, ZeroCircle, transport_colorings

# (crossings, semiarcs, arcs, regions) frozen from Euler counts:
# a connected diagram with c crossings has c + 2 regions, plus one region
# per crossing-free circle.
EXPECTED_SHAPE = {
    "unknot0": (0, 1, 1, 2),
    "unknot0_cw": (0, 1, 1, 2),
    "unknot_kink_pos": (1, 2, 1, 3),
    "unknot_kink_neg": (1, 2, 1, 3),
    "hopf_pos": (2, 4, 2, 4),
    "trefoil_right": (3, 6, 3, 5),
    "figure8": (4, 8, 4, 6),
    "r2_before": (2, 4, 3, 4),
    "r2_after": (0, 2, 2, 3),
    "r3_before": (3, 6, 3, 5),
    "r3_after": (3, 6, 3, 5),
}


@pytest.mark.parametrize("name", sorted(EXPECTED_SHAPE))
def test_fixture_shapes(name):
    d = get_diagram(name)
    c, sa, arcs, regions = EXPECTED_SHAPE[name]
    assert len(d.crossings) == c
    assert d.n_semiarcs == sa
    assert len(d.arcs) == arcs
    assert d.n_regions == regions


@pytest.mark.parametrize("name", sorted(EXPECTED_SHAPE))
def test_corner_partition(name):
    d = get_diagram(name)
    corners = [c for r in d.regions for c in r.corners]
    assert len(corners) == 4 * len(d.crossings)
    assert len(set(corners)) == len(corners)


def test_unknot_parse_matches_schema():
    d = parse_diagram('{"components": [1]}')
    assert d.n_semiarcs == 1 and len(d.arcs) == 1 and d.n_regions == 2
    # counterclockwise circle: interior on the left, so the specified side
    # is the bounded region, not the unbounded one
    assert d.specified_region(1) != d.unbounded_region
    cw = parse_diagram('{"components": [{"id": 1, "ccw": false}]}')
    assert cw.specified_region(1) == cw.unbounded_region


def test_trefoil_outer_region_on_specified_side():
    d = get_diagram("trefoil_right")
    # in the shipped embedding the braid axis strands keep the unbounded
    # region on their left, which is the specified side
    assert d.specified_region(0) == d.unbounded_region


def test_reducible_crossing_region_meets_twice():
    # a kink's crossing is reducible: one region holds two opposite corners
    d = get_diagram("unknot_kink_pos")
    outer = d.regions[d.unbounded_region]
    assert len(outer.corners) == 2
    assert {k for _, k in outer.corners} == {0, 2}


def test_sides_are_distinct_regions():
    # no semi-arc of a connected diagram can bound the same region twice
    # (the underlying 4-valent map has no bridges)
    for name in EXPECTED_SHAPE:
        d = get_diagram(name)
        for s in d.semiarcs:
            left, right = d.region_sides(s)
            assert left != right


def test_arc_partition_invariant_under_relabeling():
    d = get_diagram("figure8")
    rng = random.Random(11)
    ids = list(d.semiarcs)
    relabel = dict(zip(ids, rng.sample(range(100, 200), len(ids))))
    crossings = [
        Crossing(c.sign, tuple(relabel[s] for s in c.slots)) for c in d.crossings
    ]
    d2 = LinkDiagram(crossings, unbounded_corner=(0, 3))
    arcs2 = {tuple(sorted(relabel[s] for s in arc)) for arc in d.arcs}
    assert set(d2.arcs) == arcs2
    assert d2.n_regions == d.n_regions


def test_duplicate_occurrence_rejected():
    with pytest.raises(StructureError):
        parse_diagram({"crossings": [{"sign": 1, "slots": [0, 1, 1, 1]}]})


def test_wrong_sign_rejected():
    # flipping the sign of one trefoil crossing gives some semi-arc two heads
    data = json.loads(json.dumps(get_diagram("trefoil_right").to_json()))
    data["crossings"][0]["sign"] = -1
    with pytest.raises(StructureError):
        parse_diagram(data)
    with pytest.raises(StructureError):
        parse_diagram({"crossings": [{"sign": 2, "slots": [0, 1, 2, 3]}]})


def test_nonplanar_code_rejected():
    # two crossings wired so that face traversal closes into too few regions
    data = {
        "crossings": [
            {"sign": 1, "slots": [0, 1, 2, 3]},
            {"sign": 1, "slots": [2, 3, 0, 1]},
        ]
    }
    with pytest.raises(StructureError):
        parse_diagram(data)


def test_split_crossing_diagram_rejected():
    trefoil = get_diagram("trefoil_right").to_json()
    doubled = {
        "crossings": trefoil["crossings"]
        + [
            {"sign": c["sign"], "slots": [s + 10 for s in c["slots"]]}
            for c in trefoil["crossings"]
        ]
    }
    with pytest.raises(StructureError):
        parse_diagram(doubled)


def test_json_roundtrip():
    for name in EXPECTED_SHAPE:
        d = get_diagram(name)
        d2 = parse_diagram(json.dumps(d.to_json()))
        assert d2.to_json() == d.to_json()
        assert d2.n_regions == d.n_regions


def test_unbounded_default_rule():
    data = get_diagram("trefoil_right").to_json()
    del data["unbounded"]
    d = parse_diagram(data)
    # the shipped trefoil names the default corner explicitly
    assert d.unbounded_region == get_diagram("trefoil_right").unbounded_region


def test_with_unbounded_reindexes_nothing():
    d = get_diagram("trefoil_right")
    for r in range(d.crossing_face_count()):
        d2 = d.with_unbounded(r)
        assert d2.unbounded_region == r
        assert d2.arcs == d.arcs


def test_source_region_unique_and_shared():
    for name in EXPECTED_SHAPE:
        d = get_diagram(name)
        for ci, cr in enumerate(d.crossings):
            r = d.source_region(ci)
            u, o = cr.source_pair()
            assert d.specified_region(u) == r == d.specified_region(o)


@pytest.mark.parametrize("pair_name", MOVE_PAIR_NAMES)
def test_transport_is_bijective(pair_name):
    pair = get_move_pair(pair_name)
    x = quandle_as_biquandle(dihedral_quandle(3))
    for mode in ("biquandle", "quandle"):
        mapping = transport_colorings(pair, x, mode)
        images = {tuple(sorted(c.items())) for c in mapping.values()}
        assert len(images) == len(mapping)


def test_r2_transport_restores_external_colors():
    pair = get_move_pair("r2_pair")
    x = quandle_as_biquandle(dihedral_quandle(3))
    mapping = transport_colorings(pair, x, "biquandle")
    for key, after in mapping.items():
        before = dict(key)
        assert after[pair.boundary[0]] == before[0]
        assert after[pair.boundary[2]] == before[2]


def test_r1_transport_identity_for_trivial_algebra():
    from biquandles.catalog import trivial_quandle

    pair = get_move_pair("r1_pos_pair")
    x = quandle_as_biquandle(trivial_quandle(3))
    mapping = transport_colorings(pair, x, "biquandle")
    for key, after in mapping.items():
        assert after[1] == dict(key)[0]
