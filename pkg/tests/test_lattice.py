import pytest

import oracles
from bisetplus import group_from_spec
from bisetplus.lattice import enumerate_subgroups

# (subgroups, conjugacy classes), from the brute-force closure oracle
COUNTS = {"1": (1, 1), "C2": (2, 2), "C3": (2, 2), "C4": (3, 3), "V4": (5, 5), "C6": (4, 4),
          "S3": (6, 4), "D4": (10, 8), "Q8": (6, 6), "A4": (10, 5), "D6": (16, 10), "S4": (30, 11)}


@pytest.mark.parametrize("name", sorted(COUNTS))
def test_subgroup_counts(name):
    lat = enumerate_subgroups(group_from_spec(name))
    assert (len(lat.subgroups), len(lat.representatives)) == COUNTS[name]


@pytest.mark.parametrize("name", ["S3", "D4", "A4", "S4"])
def test_subgroups_match_oracle(name):
    G = group_from_spec(name)
    ours = {frozenset(H.elements) for H in enumerate_subgroups(G).subgroups}
    assert ours == oracles.all_subgroups(list(G.elements))


def test_representatives_sorted_by_order():
    lat = enumerate_subgroups(group_from_spec("S4"))
    orders = [H.order for H in lat.representatives]
    assert orders == sorted(orders)
    assert orders[0] == 1 and orders[-1] == 24


def test_rep_of_is_conjugate():
    G = group_from_spec("S4")
    lat = enumerate_subgroups(G)
    for H in lat.subgroups:
        R = lat.rep_of(H)
        conj = {oracles.conjugate(g, frozenset(H.elements)) for g in G.elements}
        assert frozenset(R.elements) in conj


def test_class_sizes_sum():
    G = group_from_spec("D6")
    lat = enumerate_subgroups(G)
    total = 0
    for i in lat.class_reps:
        total += G.order // lat.normalizer(i).order
    assert total == len(lat.subgroups)


@pytest.mark.parametrize("name", ["C4", "S3", "Q8", "A4", "S4"])
def test_mobius_matches_recursion(name):
    G = group_from_spec(name)
    lat = enumerate_subgroups(G)
    subs = [frozenset(H.elements) for H in lat.subgroups]
    for i, L in enumerate(lat.subgroups):
        for j, K in enumerate(lat.subgroups):
            if lat.contains(i, j):
                assert lat.mobius(L, K) == oracles.mobius(subs, subs[i], subs[j])


@pytest.mark.parametrize("name,value", [("S3", 3), ("A4", 4), ("S4", -12), ("Q8", 0), ("V4", 2)])
def test_mobius_bottom_to_top(name, value):
    G = group_from_spec(name)
    lat = enumerate_subgroups(G)
    assert lat.mobius(lat.representatives[0], G) == value


def test_lattice_json_shape():
    obj = enumerate_subgroups(group_from_spec("S3")).to_json()
    assert isinstance(obj, dict)
