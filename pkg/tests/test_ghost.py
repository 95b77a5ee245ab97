import pytest

import oracles
from helpers import sub
from bisetplus import (BisetElement, ConstantFunctor, FiberedFunctor, GhostElement, defl,
                       group_from_spec, ghost_act, ghost_mult, ghost_unit, ind, mark, plus_ring, res)
from bisetplus.functors import FunctorError
from bisetplus.ghost import ghost_compress, ghost_expand
from bisetplus.groups import GroupError
from bisetplus.lattice import enumerate_subgroups

CONST = ConstantFunctor()
FIB2 = FiberedFunctor(2)


def const_ghost(G, values):
    reps = enumerate_subgroups(G).representatives
    return GhostElement(G, CONST, {H: {1: v} for H, v in zip(reps, values)})


def as_tuple(x):
    return [x.component(H).get(1, 0) for H in enumerate_subgroups(x.group).representatives]


def test_expand_copies_to_conjugates():
    S3 = group_from_spec("S3")
    full = ghost_expand(const_ghost(S3, [5, 7, 11, 13]))
    twos = [full[H] for H in full if H.order == 2]
    assert twos == [{1: 7}] * 3
    assert ghost_compress(S3, CONST, full) == const_ghost(S3, [5, 7, 11, 13])


def test_expand_on_trivial_group():
    G = group_from_spec("1")
    x = const_ghost(G, [4])
    assert ghost_expand(x) == {G: {1: 4}}


def test_components_need_class_representatives():
    S3 = group_from_spec("S3")
    not_rep = [H for H in enumerate_subgroups(S3).subgroups if H.order == 2][-1]
    with pytest.raises(GroupError):
        GhostElement(S3, CONST, {not_rep: {1: 1}})


def test_components_must_be_normalizer_fixed():
    D8 = group_from_spec("D4")
    ring = plus_ring(D8, FIB2)
    moved = [(V, a) for V in enumerate_subgroups(D8).representatives for a in FIB2.basis(V)
             if ring.canonicalize_pair(V, a)[1] != a]
    assert moved
    V, a = moved[0]
    with pytest.raises(FunctorError):
        GhostElement(D8, FIB2, {V: {a: 1}})
    b = ring.canonicalize_pair(V, a)[1]
    assert GhostElement(D8, FIB2, {V: {a: 1, b: 1}}).component(V) == {a: 1, b: 1}


def test_identity_action():
    G = group_from_spec("S3")
    x = const_ghost(G, [1, 2, 3, 4])
    assert ghost_act(BisetElement.identity(G), x) == x


def test_induction_from_c3():
    S3 = group_from_spec("S3")
    C3 = sub(S3, 3)
    x = const_ghost(C3, [5, 7])
    assert as_tuple(ghost_act(ind(S3, C3), x)) == [10, 0, 14, 0]


@pytest.mark.parametrize("name", ["S3", "S4"])
def test_restriction_of_marks_is_fixed_point_restriction(name):
    G = group_from_spec(name)
    ring = plus_ring(G, CONST)
    for H in enumerate_subgroups(G).representatives[1:-1]:
        repsH = enumerate_subgroups(H).representatives
        for K, _ in ring.canonical_basis():
            got = as_tuple(ghost_act(res(G, H), mark(ring.generator(K, 1))))
            want = [oracles.fixed_points(list(G.elements), set(K), set(L)) for L in repsH]
            assert got == want


def test_deflation_needs_right_free():
    C4 = group_from_spec("C4")
    x = const_ghost(C4, [1, 1, 1])
    with pytest.raises(FunctorError):
        ghost_act(defl(C4, sub(C4, 2)), x)


def test_unit_and_products():
    S3 = group_from_spec("S3")
    one = ghost_unit(S3, CONST)
    assert as_tuple(one) == [1, 1, 1, 1]
    x = const_ghost(S3, [2, 3, 0, 5])
    assert one * x == x
    assert as_tuple(ghost_mult(x, x)) == [4, 9, 0, 25]


def test_fibered_sign_squares_to_one():
    C2 = group_from_spec("C2")
    one, sgn = FIB2.basis(C2)
    trivial = C2.trivial_subgroup()
    x = GhostElement(C2, FIB2, {trivial: {FIB2.one(trivial): 1}, C2: {sgn: 1}})
    assert x * x == ghost_unit(C2, FIB2)


def test_linear_structure():
    G = group_from_spec("C4")
    x, y = const_ghost(G, [1, 2, 3]), const_ghost(G, [4, 0, -3])
    assert as_tuple(x + y) == [5, 2, 0]
    assert as_tuple(x - y) == [-3, 2, 6]
    assert as_tuple(3 * x) == [3, 6, 9]
