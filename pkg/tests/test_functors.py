import pytest

import oracles
from helpers import sub
from bisetplus import (ConstantFunctor, FiberedFunctor, FunctorElement, check_functor_laws, defl,
                       functor_from_selector, group_from_spec, inf, res)
from bisetplus.functors import CorruptedFunctor, FunctorError, abelianization, hom_group

SMALL = [group_from_spec(n) for n in ("1", "C2", "C3", "S3")]


def only(x):
    (D,) = x.terms
    return D


def test_constant_actions():
    F = ConstantFunctor()
    S3 = group_from_spec("S3")
    C4 = group_from_spec("C4")
    assert F.act(only(res(S3, sub(S3, 2))), {1: 1}) == {1: 1}
    assert F.act(only(defl(C4, sub(C4, 2))), {1: 3}) == {1: 3}
    assert F.value_mult(S3, {1: 2}, {1: 5}) == {1: 10}


@pytest.mark.parametrize("name,factors", [("S3", [2]), ("C6", [6]), ("Q8", [2, 2]), ("1", []),
                                          ("A4", [3]), ("D4", [2, 2])])
def test_abelianization(name, factors):
    facs = abelianization(group_from_spec(name))[0]
    assert sorted(facs) == factors


@pytest.mark.parametrize("name", ["1", "C2", "C3", "C4", "V4", "C6", "S3", "D4", "Q8", "A4"])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_hom_counts_match_brute_force(name, n):
    G = group_from_spec(name)
    assert len(hom_group(G, n)) == oracles.hom_count(list(G.elements), n)


def test_hom_examples():
    assert len(hom_group(group_from_spec("S3"), 2)) == 2
    assert len(hom_group(group_from_spec("C3"), 2)) == 1
    assert len(hom_group(group_from_spec("1"), 5)) == 1
    with pytest.raises(FunctorError):
        hom_group(group_from_spec("C2"), 0)


def test_homs_are_homomorphisms():
    G = group_from_spec("D4")
    for phi in hom_group(G, 4):
        for i in range(G.order):
            for j in range(G.order):
                assert phi[G.mul[i][j]] == (phi[i] + phi[j]) % 4


def test_fibered_restriction():
    F = FiberedFunctor(2)
    S3 = group_from_spec("S3")
    C2 = sub(S3, 2)
    sign = next(p for p in F.basis(S3) if any(p))
    out = F.act(only(res(S3, C2)), {sign: 1})
    ((psi, c),) = out.items()
    assert c == 1
    assert [psi[C2.index[h]] for h in C2] == [sign[S3.index[h]] for h in C2]


def test_fibered_deflation_kills_nontrivial_on_kernel():
    C4 = group_from_spec("C4")
    N = sub(C4, 2)
    D = only(defl(C4, N))
    # every C4 -> Z/2 vanishes on the squares, so modulo 2 nothing is killed
    F2 = FiberedFunctor(2)
    assert all(F2.act(D, {p: 1}) for p in F2.basis(C4))
    F = FiberedFunctor(4)
    faithful = [p for p in F.basis(C4) if any(p[C4.index[h]] for h in N)]
    assert len(faithful) == 2
    for p in faithful:
        assert F.act(D, {p: 1}) == {}
    assert F.act(D, {F.one(C4): 1}) == {F.one(D.left): 1}


def test_fibered_inflation_composes_with_projection():
    F = FiberedFunctor(2)
    C4 = group_from_spec("C4")
    D = only(inf(C4, sub(C4, 2)))
    Q = D.right
    for phibar in F.basis(Q):
        ((psi, _),) = F.act(D, {phibar: 1}).items()
        for a, b in D.index_pairs:
            assert psi[a] == phibar[b]


def test_fibered_product_adds():
    F = FiberedFunctor(3)
    C3 = group_from_spec("C3")
    a, b, c = F.basis(C3)
    assert F.value_mult(C3, {b: 1}, {c: 1}) in ({a: 1}, {b: 1}, {c: 1})
    assert F.value_mult(C3, {b: 1}, {F.one(C3): 1}) == {b: 1}


@pytest.mark.parametrize("F", [ConstantFunctor(), FiberedFunctor(2)], ids=["const", "fibered2"])
def test_laws_hold(F):
    report = check_functor_laws(F, SMALL)
    assert all(v["pass"] for v in report.values())
    assert report["composition"]["checked"] > 0


def test_corrupted_functor_is_caught():
    report = check_functor_laws(CorruptedFunctor(ConstantFunctor()), SMALL)
    assert not report["composition"]["pass"]
    assert report["composition"]["failures"]


def test_selector():
    assert isinstance(functor_from_selector("const"), ConstantFunctor)
    assert functor_from_selector("fibered:4").n == 4
    with pytest.raises(FunctorError):
        functor_from_selector("fibered:x")
    with pytest.raises(FunctorError):
        functor_from_selector("character")


def test_functor_element_json():
    F = FiberedFunctor(2)
    G = group_from_spec("V4")
    phi = F.basis(G)[2]
    a = FunctorElement(G, F, {phi: 3, F.one(G): -1})
    assert FunctorElement.from_json(a.to_json()) == a
    with pytest.raises(FunctorError):
        FunctorElement(G, F, {(1, 1, 1, 1): 1})
