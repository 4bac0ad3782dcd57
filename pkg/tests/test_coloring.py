import random

import pytest

from biquandles import (
    FiniteBiquandle,
    derived_quandle,
    enumerate_biquandle_colorings,
    enumerate_colorings_bruteforce,
    enumerate_quandle_colorings,
    fold_arc_word,
    kink_map,
    quandle_as_biquandle,
    region_coloring,
    shadow_coloring,
    step_arc_state,
    step_semiarc_state,
)
from biquandles.algebra import StructureError, biquandle_census
from biquandles.catalog import dihedral_quandle, get_diagram, standard_fixtures
from biquandles.coloring import (
    coloring_from_json,
    coloring_to_json,
    identity_state,
    reachable_arc_states,
)


def shift_biquandle(n):
    t = [[(x + 1) % n for _ in range(n)] for x in range(n)]
    return FiniteBiquandle(t, t)


DIH3 = quandle_as_biquandle(dihedral_quandle(3))


def test_unknot_has_n_colorings():
    d = get_diagram("unknot0")
    for x in (DIH3, shift_biquandle(4)):
        assert len(enumerate_biquandle_colorings(x, d)) == x.n
    assert len(enumerate_quandle_colorings(dihedral_quandle(5), d)) == 5


def test_trefoil_dihedral3_counts():
    d = get_diagram("trefoil_right")
    assert len(enumerate_biquandle_colorings(DIH3, d)) == 9
    assert len(enumerate_quandle_colorings(dihedral_quandle(3), d)) == 9


def test_figure8_and_hopf_dihedral_counts():
    assert len(enumerate_quandle_colorings(dihedral_quandle(3), get_diagram("figure8"))) == 3
    assert len(enumerate_quandle_colorings(dihedral_quandle(3), get_diagram("hopf_pos"))) == 3
    assert len(enumerate_quandle_colorings(dihedral_quandle(5), get_diagram("figure8"))) == 25


def test_kink_shift2_has_two_colorings():
    x = shift_biquandle(2)
    cols = enumerate_biquandle_colorings(x, get_diagram("unknot_kink_pos"))
    assert len(cols) == 2
    for c in cols:
        assert c[1] == (c[0] + 1) % 2  # the loop color is the shifted one


def test_backtracking_matches_bruteforce_everywhere():
    fixtures = standard_fixtures()
    for x in biquandle_census(3)[::5]:
        q = derived_quandle(x)
        for _, d in fixtures:
            fast = enumerate_biquandle_colorings(x, d)
            slow = enumerate_colorings_bruteforce(x, d, "biquandle")
            assert sorted(tuple(sorted(c.items())) for c in fast) == sorted(
                tuple(sorted(c.items())) for c in slow
            )
            fast_q = enumerate_quandle_colorings(q, d)
            slow_q = enumerate_colorings_bruteforce(q, d, "quandle")
            assert sorted(tuple(sorted(c.items())) for c in fast_q) == sorted(
                tuple(sorted(c.items())) for c in slow_q
            )


def test_enumeration_is_sorted_and_deterministic():
    d = get_diagram("trefoil_right")
    cols = enumerate_biquandle_colorings(DIH3, d)
    keys = [tuple(c[s] for s in d.semiarcs) for c in cols]
    assert keys == sorted(keys)
    assert cols == enumerate_biquandle_colorings(DIH3, d)


def test_bruteforce_guard():
    d = get_diagram("figure8")
    big = quandle_as_biquandle(dihedral_quandle(9))
    with pytest.raises(StructureError):
        enumerate_colorings_bruteforce(big, d, "biquandle")


def test_counts_independent_of_unbounded_choice():
    d = get_diagram("trefoil_right")
    baseline = len(enumerate_biquandle_colorings(DIH3, d))
    for r in range(d.crossing_face_count()):
        assert len(enumerate_biquandle_colorings(DIH3, d.with_unbounded(r))) == baseline


# -- action states ------------------------------------------------------------


def test_identity_step_is_over_action():
    x = biquandle_census(3)[20]
    f = identity_state(3)
    for b in range(3):
        stepped = step_arc_state(x, f, b, 1)
        assert stepped == tuple(x.over[a][b] for a in range(3))


def test_embedded_quandle_states_stay_identity():
    f = identity_state(3)
    for b in range(3):
        for exp in (1, -1):
            assert step_arc_state(DIH3, f, b, exp) == f


def test_steps_are_mutually_inverse():
    for x in biquandle_census(3)[::4]:
        for f in reachable_arc_states(x, 2):
            for b in range(3):
                up = step_arc_state(x, f, b, 1)
                assert step_arc_state(x, up, b, -1) == f
                down = step_arc_state(x, f, b, -1)
                assert step_arc_state(x, down, b, 1) == f
                p = step_semiarc_state(x, f, b, 1)
                assert step_semiarc_state(x, p, b, -1) == f


def test_relator_insertion_invariance_seeded():
    rng = random.Random(7)
    for x in biquandle_census(3)[::6]:
        q = derived_quandle(x)
        for _ in range(200):
            length = rng.randrange(0, 6)
            word = [(rng.randrange(3), rng.choice((1, -1))) for _ in range(length)]
            pos = rng.randrange(0, length + 1)
            a, b = rng.randrange(3), rng.randrange(3)
            with_rel = tuple(word[:pos] + [(b, 1), (q.op[a][b], 1)] + word[pos:])
            swapped = tuple(word[:pos] + [(a, 1), (b, 1)] + word[pos:])
            assert fold_arc_word(x, with_rel) == fold_arc_word(x, swapped)


def test_lifted_product_identity_on_reachable_states():
    # f(a) under f(b) equals the stepped state's value at a * b
    for x in biquandle_census(3)[::6]:
        q = derived_quandle(x)
        kink = kink_map(x)
        for f in reachable_arc_states(x, 4):
            for b in range(3):
                stepped = step_arc_state(x, f, b, 1, kink)
                for a in range(3):
                    assert x.under[f[a]][f[b]] == stepped[q.op[a][b]]


# -- region and shadow colorings ----------------------------------------------


def test_unknot_region_states():
    d = get_diagram("unknot0")
    x = shift_biquandle(3)
    coloring = {1: 2}
    states = region_coloring(d, coloring, "biquandle", x)
    assert states[d.unbounded_region] == identity_state(3)
    inner = d.specified_region(1)
    assert states[inner] == step_semiarc_state(x, identity_state(3), 2, -1)
    shadows = shadow_coloring(d, coloring, "biquandle", x)
    assert shadows[1] == (states[inner], 2)


def test_unknot_cw_shadow_pairs_identity():
    d = get_diagram("unknot0_cw")
    x = shift_biquandle(3)
    shadows = shadow_coloring(d, {1: 2}, "biquandle", x)
    assert shadows[1] == (identity_state(3), 2)


def test_all_zero_trefoil_states_are_powers_of_one_step():
    d = get_diagram("trefoil_right")
    for x in biquandle_census(3)[::7]:
        coloring = {a: 0 for a in range(len(d.arcs))}
        states = region_coloring(d, coloring, "quandle", x)
        orbit = {identity_state(3)}
        f = identity_state(3)
        for _ in range(2 * len(states)):
            f = step_arc_state(x, f, 0, 1)
            orbit.add(f)
        g = identity_state(3)
        for _ in range(2 * len(states)):
            g = step_arc_state(x, g, 0, -1)
            orbit.add(g)
        assert set(states.values()) <= orbit


def test_region_coloring_consistent_for_all_fixture_colorings():
    for x in biquandle_census(3)[::5]:
        q = derived_quandle(x)
        for _, d in standard_fixtures():
            for c in enumerate_biquandle_colorings(x, d):
                region_coloring(d, c, "biquandle", x)
            for c in enumerate_quandle_colorings(q, d):
                region_coloring(d, c, "quandle", x)


def test_hopf_biquandle_shadow_states():
    d = get_diagram("hopf_pos")
    x = biquandle_census(3)[20]
    for c in enumerate_biquandle_colorings(x, d):
        shadows = shadow_coloring(d, c, "biquandle", x)
        for s, (state, color) in shadows.items():
            assert color == c[s]
            assert len(state) == 3


def test_coloring_json_roundtrip():
    d = get_diagram("trefoil_right")
    bq = enumerate_biquandle_colorings(DIH3, d)[4]
    kind, parsed = coloring_from_json(d, coloring_to_json(d, bq, "biquandle"))
    assert kind == "biquandle" and parsed == bq
    qc = enumerate_quandle_colorings(dihedral_quandle(3), d)[2]
    kind, parsed = coloring_from_json(d, coloring_to_json(d, qc, "quandle"))
    assert kind == "quandle" and parsed == qc
    with pytest.raises(StructureError):
        coloring_from_json(d, {"kind": "biquandle", "colors": {"0": 1}})
