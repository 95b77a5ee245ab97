import pytest

import oracles
from helpers import sub
from bisetplus import (ConstantFunctor, FiberedFunctor, PlusElement, check_species_theorem,
                       enumerate_species, evaluate_species, group_from_spec, plus_ring)
from bisetplus.lattice import enumerate_subgroups
from bisetplus.species import evaluation_matrix

CONST = ConstantFunctor()
FIB2 = FiberedFunctor(2)


@pytest.mark.parametrize("name,count", [("1", 1), ("S3", 4), ("S4", 11), ("A4", 5)])
def test_constant_counts(name, count):
    assert len(enumerate_species(group_from_spec(name), CONST)) == count


def test_fibered_c2():
    species = enumerate_species(group_from_spec("C2"), FIB2)
    assert len(species) == 3
    assert sorted(s.subgroup.order for s in species) == [1, 2, 2]


@pytest.mark.parametrize("name", ["C2", "C4", "V4", "S3", "D4", "Q8"])
def test_fibered_counts_match_pair_orbits(name):
    G = group_from_spec(name)
    assert len(enumerate_species(G, FIB2)) == oracles.fibered_plus_rank(list(G.elements), 2)


def test_constant_values_are_marks():
    S3 = group_from_spec("S3")
    C2 = sub(S3, 2)
    s = next(s for s in enumerate_species(S3, CONST) if s.subgroup.order == 2)
    assert evaluate_species(s, CONST, PlusElement(S3, CONST, {(C2, 1): 1})) == 1


@pytest.mark.parametrize("F", [CONST, FIB2, FiberedFunctor(4)], ids=["const", "fib2", "fib4"])
@pytest.mark.parametrize("name", ["C4", "S3", "D4", "A4"])
def test_unit_and_normalizer_index(F, name):
    G = group_from_spec(name)
    lat = enumerate_subgroups(G)
    ring = plus_ring(G, F)
    for s in enumerate_species(G, F):
        assert evaluate_species(s, F, ring.unit()) == 1
        H = s.subgroup
        N = lat.normalizer(lat.index_of(H))
        val = evaluate_species(s, F, ring.generator(H, F.one(H)))
        assert val == N.order // H.order


@pytest.mark.parametrize("F", [CONST, FIB2, FiberedFunctor(4)], ids=["const", "fib2", "fib4"])
@pytest.mark.parametrize("name", ["1", "C2", "C4", "V4", "S3", "Q8", "A4"])
def test_theorem(F, name):
    r = check_species_theorem(group_from_spec(name), F)
    assert r["pass"], r["failures"][:3]
    assert r["species"] == r["rank"] == r["matrix_rank"]


def test_evaluation_matrix_shape():
    species, basis, rows = evaluation_matrix(group_from_spec("S3"), FIB2)
    assert len(rows) == len(species) == len(basis) == 6
    assert all(len(r) == 6 for r in rows)


def test_fibered4_values_are_cyclotomic():
    G = group_from_spec("C4")
    F = FiberedFunctor(4)
    values = [v for r in evaluation_matrix(G, F)[2] for v in r]
    assert any(not v.is_rational() for v in values)
