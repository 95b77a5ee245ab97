import pytest

import oracles
from helpers import sub
from bisetplus import (ConstantFunctor, FiberedFunctor, GhostElement, PlusElement, group_from_spec,
                       mark, mobius_inverse, plus_ring, table_of_marks, verify_mark_identities)
from bisetplus.lattice import enumerate_subgroups
from bisetplus.mark import ghost_spanning_set, mark_via_restriction

CONST = ConstantFunctor()
FIB2 = FiberedFunctor(2)

# |(S4/K)^L| over the 11 class representatives in lattice order, frozen from the
# fixed-point counting oracle in oracles.marks_matrix
S4_MARKS = [
    [24, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [12, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [12, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0],
    [8, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0],
    [6, 2, 2, 0, 2, 0, 0, 0, 0, 0, 0],
    [6, 0, 6, 0, 0, 6, 0, 0, 0, 0, 0],
    [6, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0],
    [4, 2, 0, 1, 0, 0, 0, 1, 0, 0, 0],
    [3, 1, 3, 0, 1, 3, 1, 0, 1, 0, 0],
    [2, 0, 2, 2, 0, 2, 0, 0, 0, 2, 0],
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
]

S3_MARKS = [[6, 0, 0, 0], [3, 1, 0, 0], [2, 0, 2, 0], [1, 1, 1, 1]]


def int_table(G):
    _, _, rows = table_of_marks(G)
    return [[v.get(1, 0) for v in r] for r in rows]


def const_ghost(G, values):
    reps = enumerate_subgroups(G).representatives
    return GhostElement(G, CONST, {H: {1: v} for H, v in zip(reps, values)})


def test_s3_table():
    assert int_table(group_from_spec("S3")) == S3_MARKS


def test_s4_table_frozen_and_oracle():
    G = group_from_spec("S4")
    reps = [frozenset(H.elements) for H in enumerate_subgroups(G).representatives]
    assert oracles.marks_matrix(list(G.elements), reps) == S4_MARKS
    assert int_table(G) == S4_MARKS


@pytest.mark.parametrize("name", ["C4", "V4", "C6", "D4", "Q8", "A4", "D6"])
def test_tables_match_oracle(name):
    G = group_from_spec(name)
    reps = [frozenset(H.elements) for H in enumerate_subgroups(G).representatives]
    assert int_table(G) == oracles.marks_matrix(list(G.elements), reps)


def test_diagonal_is_normalizer_index():
    G = group_from_spec("S4")
    lat = enumerate_subgroups(G)
    table = int_table(G)
    for k, i in enumerate(lat.class_reps):
        assert table[k][k] == lat.normalizer(i).order // lat.subgroups[i].order


def test_mark_of_top_pair():
    G = group_from_spec("D4")
    for a in FIB2.basis(G):
        m = mark(PlusElement(G, FIB2, {(G, a): 1}))
        assert m.component(G) == {a: 1}


def test_fibered_mark_on_c2():
    C2 = group_from_spec("C2")
    triv, sgn = FIB2.basis(C2)
    one = C2.trivial_subgroup()
    m = mark(PlusElement(C2, FIB2, {(C2, sgn): 1}))
    assert m.component(one) == {FIB2.one(one): 1}
    assert m.component(C2) == {sgn: 1}


def test_mark_two_routes():
    for name in ("S3", "D4", "A4"):
        G = group_from_spec(name)
        for F in (CONST, FIB2):
            ring = plus_ring(G, F)
            for K, a in ring.canonical_basis():
                x = ring.generator(K, a)
                assert mark(x) == mark_via_restriction(x)


def test_mobius_inverse_on_c2():
    C2 = group_from_spec("C2")
    one = C2.trivial_subgroup()
    assert mobius_inverse(const_ghost(C2, [1, 1])) == PlusElement(C2, CONST, {(C2, 1): 2})
    assert mobius_inverse(const_ghost(C2, [2, 0])) == PlusElement(C2, CONST, {(one, 1): 2})


def test_mobius_inverse_on_trivial_group():
    G = group_from_spec("1")
    assert mobius_inverse(const_ghost(G, [7])) == PlusElement(G, CONST, {(G, 1): 7})


def test_n_after_m_in_s3():
    S3 = group_from_spec("S3")
    x = PlusElement(S3, CONST, {(sub(S3, 2), 1): 1})
    assert mobius_inverse(mark(x)) == 6 * x


@pytest.mark.parametrize("name", ["S3", "D4", "Q8", "A4"])
@pytest.mark.parametrize("F", [CONST, FIB2, FiberedFunctor(3)], ids=["const", "fib2", "fib3"])
def test_identities(name, F):
    for scalars in ("z", "q"):
        r = verify_mark_identities(group_from_spec(name), F, scalars)
        assert r["pass"], r["failures"]


def test_spanning_set_rank_matches_plus_rank():
    for name in ("S3", "D4", "A4"):
        G = group_from_spec(name)
        for F in (CONST, FIB2):
            assert len(ghost_spanning_set(G, F)) == plus_ring(G, F).rank


def test_mark_cokernel_is_torsion():
    # marks of [1] and [C2] are (2,0) and (1,1), so (1,0) is only hit after scaling by |C2|
    C2 = group_from_spec("C2")
    y = const_ghost(C2, [1, 0])
    n = mobius_inverse(y)
    assert n == PlusElement(C2, CONST, {(C2.trivial_subgroup(), 1): 1})
    assert mark(n) == 2 * y
