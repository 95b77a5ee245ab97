import pytest

import oracles
from bisetplus import GroupError, GroupHom, PermGroup, group_from_spec, quotient_group
from bisetplus.groups import (commutator_subgroup, direct_product, double_cosets, find_isomorphism,
                              left_transversal, normalizer)
from bisetplus.lattice import enumerate_subgroups

ORDERS = {"1": 1, "C2": 2, "C3": 3, "C4": 4, "V4": 4, "C6": 6, "S3": 6, "D4": 8,
          "Q8": 8, "A4": 12, "D6": 12, "S4": 24}


@pytest.mark.parametrize("name", sorted(ORDERS))
def test_preset_orders(name):
    G = group_from_spec(name)
    assert G.order == ORDERS[name]
    assert oracles.closure(list(G.generators), G.identity) == frozenset(G.elements)


def test_elements_are_closed_and_sorted():
    G = group_from_spec("S4")
    assert list(G.elements) == sorted(G.elements)
    S = set(G.elements)
    for a in G.elements[:6]:
        for b in G.elements:
            assert oracles.mul(a, b) in S


def test_group_from_generators_mapping():
    G = group_from_spec({"degree": 3, "generators": [[1, 0, 2], [1, 2, 0]]})
    assert G.order == 6
    assert G == group_from_spec("S3")


def test_bad_generator_rejected():
    with pytest.raises(GroupError):
        PermGroup(3, [(0, 0, 1)])
    with pytest.raises(GroupError):
        group_from_spec("Z9")


def test_normal_and_abelian():
    S3 = group_from_spec("S3")
    lat = enumerate_subgroups(S3)
    normal = [H.order for H in lat.subgroups if H.is_normal_in(S3)]
    assert sorted(normal) == [1, 3, 6]
    assert not S3.is_abelian()
    assert group_from_spec("V4").is_abelian()


def test_quotient_order():
    S4 = group_from_spec("S4")
    V = next(H for H in enumerate_subgroups(S4).subgroups if H.order == 4 and H.is_normal_in(S4))
    Q, proj = quotient_group(S4, V)[:2]
    assert Q.order == 6
    assert proj.kernel() == V


def test_double_cosets_match_oracle():
    G = group_from_spec("S4")
    subs = enumerate_subgroups(G).representatives
    for A in subs[1:5]:
        for B in subs[2:6]:
            ours = double_cosets(G, A, B)
            ref = oracles.double_cosets(list(G.elements), set(A), set(B))
            assert ours == [min(d) for d in ref]
            assert sum(len(d) for d in ref) == 24


def test_left_transversal():
    G = group_from_spec("A4")
    H = enumerate_subgroups(G).representatives[2]
    T = [G.elements[i] for i in left_transversal(G, H)]
    assert len(T) == G.order // H.order
    cosets = {frozenset(oracles.mul(t, h) for h in H) for t in T}
    assert len(cosets) == len(T)


def test_normalizer_and_commutator():
    S4 = group_from_spec("S4")
    for H in enumerate_subgroups(S4).representatives:
        N = normalizer(S4, H)
        ref = [g for g in S4.elements if oracles.conjugate(g, frozenset(H)) == frozenset(H)]
        assert sorted(N.elements) == sorted(ref)
    assert commutator_subgroup(S4).order == 12
    assert commutator_subgroup(group_from_spec("Q8")).order == 2


def test_hom_from_generators_checks():
    C4, C2 = group_from_spec("C4"), group_from_spec("C2")
    g, = C4.generators
    t, = C2.generators
    f = GroupHom.from_generators(C4, C2, {g: t})
    assert f.kernel().order == 2
    C3 = group_from_spec("C3")
    with pytest.raises(GroupError):
        GroupHom.from_generators(C3, C2, {C3.generators[0]: t})


def test_direct_product_order():
    P = direct_product(group_from_spec("S3"), group_from_spec("C2"))[0]
    assert P.order == 12


def test_find_isomorphism():
    D3 = group_from_spec("D3")
    S3 = group_from_spec("S3")
    f = find_isomorphism(D3, S3)
    assert f is not None and f.kernel().order == 1
    assert find_isomorphism(group_from_spec("C6"), S3) is None
    assert find_isomorphism(group_from_spec("Q8"), group_from_spec("D4")) is None
