import random

import pytest

from biquandles import (
    AxiomError,
    FiniteBiquandle,
    FiniteQuandle,
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
from biquandles.algebra import FunctionalBiquandle, right_translation
from biquandles.catalog import dihedral_quandle, trivial_quandle


def shift_tables(n):
    t = [[(x + 1) % n for _ in range(n)] for x in range(n)]
    return t, [row[:] for row in t]


def test_dihedral_tables_pass():
    for n in (3, 5):
        op = [[(2 * b - a) % n for b in range(n)] for a in range(n)]
        assert check_quandle_axioms(op).passed


def test_trivial_quandle_passes():
    assert check_quandle_axioms([[a] * 4 for a in range(4)]).passed


def test_idempotence_violation_witness():
    report = check_quandle_axioms([[1, 0], [1, 1]])
    assert not report.passed
    assert ("Q1", (0,)) in report.violations


def test_distributivity_violation_reported():
    # idempotent with permutation columns, but (0*1)*2 = 2 != 1 = (0*2)*(1*2)
    op = [[0, 2, 1], [1, 1, 0], [2, 0, 2]]
    report = check_quandle_axioms(op)
    assert not report.passed
    assert report.violations == (("Q3", (0, 1, 2)),)


def test_malformed_table_is_structural():
    with pytest.raises(StructureError):
        check_quandle_axioms([[0, 1], [1]])
    with pytest.raises(StructureError):
        check_quandle_axioms([[0, 7], [1, 0]])


def test_trivial_biquandle_passes():
    under = [[x] * 3 for x in range(3)]
    assert check_biquandle_axioms(under, under).passed


def test_shift_biquandle_mod5_passes():
    under, over = shift_tables(5)
    assert check_biquandle_axioms(under, over).passed


def test_shift_under_trivial_over_fails_bq1():
    under, _ = shift_tables(2)
    over = [[x] * 2 for x in range(2)]
    report = check_biquandle_axioms(under, over)
    assert not report.passed
    assert ("BQ1", (0,)) in report.violations


def test_constructor_rejects_non_biquandle():
    under, _ = shift_tables(2)
    with pytest.raises(AxiomError):
        FiniteBiquandle(under, [[x] * 2 for x in range(2)])


def test_inverse_tables():
    x = FiniteBiquandle(*shift_tables(5))
    for a in range(5):
        for b in range(5):
            assert x.under_inv[x.under[a][b]][b] == a
            assert x.under[x.under_inv[a][b]][b] == a
            assert x.over_inv[x.over[a][b]][b] == a
            assert x.over[x.over_inv[a][b]][b] == a
    q = dihedral_quandle(5)
    for a in range(5):
        for b in range(5):
            assert q.inv_op[q.op[a][b]][b] == a
            assert q.op[q.inv_op[a][b]][b] == a


def test_derived_quandle_of_embedded_quandle_is_identity():
    q = dihedral_quandle(3)
    x = quandle_as_biquandle(q)
    assert derived_quandle(x).op == q.op


def test_derived_quandle_of_shift_is_trivial():
    x = FiniteBiquandle(*shift_tables(5))
    q = derived_quandle(x)
    assert q.op == tuple(tuple(a for _ in range(5)) for a in range(5))


def test_kink_map_identity_for_embedded_quandle():
    x = quandle_as_biquandle(dihedral_quandle(3))
    assert kink_map(x) == (0, 1, 2)


def test_kink_map_of_shift_is_decrement():
    for n in (2, 3, 5):
        x = FiniteBiquandle(*shift_tables(n))
        assert kink_map(x) == tuple((v - 1) % n for v in range(n))


def test_kink_map_defining_equation_on_census():
    for x in biquandle_census(3):
        k = kink_map(x)
        for v in range(3):
            assert x.over[k[v]][k[v]] == v
            assert x.under[k[v]][k[v]] == v


def test_quandle_as_biquandle_roundtrip():
    for q in (trivial_quandle(2), dihedral_quandle(3)):
        x = quandle_as_biquandle(q)
        assert x.is_quandle_shaped()
        assert derived_quandle(x).op == q.op


def test_census_sizes_and_validity():
    assert len(biquandle_census(1)) == 1
    assert len(biquandle_census(2)) == 2
    census = biquandle_census(3)
    assert len(census) == 36
    for x in census:
        assert check_biquandle_axioms(x.under, x.over).passed
        assert check_quandle_axioms(derived_quandle(x).op).passed


def test_census_is_sorted_by_encoding():
    census = biquandle_census(3)
    encodings = [(x.under, x.over) for x in census]
    assert encodings == sorted(encodings)


def test_census_guard():
    with pytest.raises(StructureError):
        biquandle_census(4)


def test_single_entry_perturbations_fail(seeded=0):
    rng = random.Random(seeded)
    for x in random.Random(1).sample(biquandle_census(3), 6):
        under = [list(r) for r in x.under]
        a, b = rng.randrange(3), rng.randrange(3)
        under[a][b] = (under[a][b] + 1) % 3
        report = check_biquandle_axioms(under, x.over)
        assert not report.passed


def test_json_roundtrip():
    x = FiniteBiquandle(*shift_tables(3))
    assert FiniteBiquandle.from_json(x.to_json()) == x
    q = dihedral_quandle(5)
    assert FiniteQuandle.from_json(q.to_json()) == q
    with pytest.raises(StructureError):
        FiniteQuandle.from_json({"n": 4, "op": dihedral_quandle(3).op})


# -- functional biquandles ---------------------------------------------------


def test_integer_biquandle_sampled():
    report = sampled_axiom_check(integer_biquandle(), samples=10_000, seed=0)
    assert report.passed
    assert report.mode == "sampled"


def test_integer_pair_biquandle_sampled():
    report = sampled_axiom_check(integer_pair_biquandle(), samples=10_000, seed=0)
    assert report.passed


def test_broken_pair_shift_caught_immediately():
    good = integer_pair_biquandle()
    bad = FunctionalBiquandle(
        name="broken",
        under=lambda p, q: (p[0] + 2, p[1] + q[0]),
        over=good.over,
        under_inv=lambda p, q: (p[0] - 2, p[1] - q[0]),
        over_inv=good.over_inv,
        sample=good.sample,
    )
    report = sampled_axiom_check(bad, samples=1, seed=0)
    assert not report.passed
    assert report.violations[0][0] == "BQ1"


def test_pair_shift_distinguishes_right_translations():
    x = integer_pair_biquandle()
    assert x.under((0, 0), (0, 0)) == (1, 0)
    assert x.under((0, 0), (1, 0)) == (1, 1)
    t0 = right_translation(x, (0, 0))
    t1 = right_translation(x, (1, 0))
    assert t0((0, 0)) != t1((0, 0))
    # while the plain integer shift cannot tell acting elements apart
    z = integer_biquandle()
    assert right_translation(z, 0)(7) == right_translation(z, 5)(7)


def test_group_pair_biquandle_trivial():
    q = trivial_quandle(1)
    x = group_pair_biquandle(q)
    report = sampled_axiom_check(x, samples=50, seed=0)
    assert report.passed


def test_group_pair_biquandle_dihedral():
    q = dihedral_quandle(3)
    g = operator_group(q)
    assert len(g) == 6  # the translations are transpositions; closure is S3
    x = group_pair_biquandle(q, g)
    report = sampled_axiom_check(x, samples=2000, seed=3)
    assert report.passed


def test_group_pair_requires_translations():
    from biquandles.algebra import PermutationGroup

    q = dihedral_quandle(3)
    rotations = PermutationGroup(3, frozenset({(0, 1, 2), (1, 2, 0), (2, 0, 1)}))
    with pytest.raises(StructureError):
        group_pair_biquandle(q, rotations)
