import json
import random

import pytest

import oracles

from bisetplus import ConstantFunctor, FiberedFunctor, group_from_spec, run_suite
from bisetplus.functors import CorruptedFunctor
from bisetplus.groups import GroupError
from bisetplus.verify import (BurnsideGSetTarget, PlusTarget, SuiteReport, adjunction_check,
                              burnside_identification, burnside_psi, check_closures,
                              check_functoriality, class_from_json, class_json,
                              deflation_square_holds, eta_psi, gset_product, pinned_deflation_case,
                              random_class, suite_groups)
from bisetplus.category import CategorySpec
from bisetplus.lattice import enumerate_subgroups

SMALL = "1,C2,C3,C4,V4,S3"


def test_report_bookkeeping():
    r = SuiteReport("x")
    r.check(True)
    r.check(False, {"w": 1}, n=3)
    assert (r.cases, r.failure_count, r.passed) == (4, 1, False)
    r.expect_failure(False, {"pin": 1})
    assert r.expected_failures == [{"pin": 1}] and r.failure_count == 1
    r.expect_failure(True, {"pin": 2})
    assert r.failure_count == 2
    doc = r.to_json(include_time=False)
    assert "wall_time" not in doc and json.dumps(doc)
    assert r.text().startswith("x: FAIL cases=6")


def test_suite_group_selection():
    assert [G.order for G in suite_groups()] == [1, 2, 3, 4, 4, 6, 6, 8, 8, 12, 12, 24]
    assert len(suite_groups("preset:upto8")) == 9
    assert [G.name for G in suite_groups("S3, C2")] == ["S3", "C2"]


def test_class_json_roundtrip():
    rng = random.Random(5)
    G, H = group_from_spec("S4"), group_from_spec("D4")
    for _ in range(10):
        D = random_class(G, H, rng)
        assert class_from_json(json.loads(json.dumps(class_json(D)))) == D
        assert random_class(G, H, rng, right_free=True).k2_mask == 1


@pytest.mark.parametrize("name", ["biset", "functor-laws", "plus-functor", "ghost-functor", "green",
                                  "mobius", "species", "adjunction"])
@pytest.mark.parametrize("F", [ConstantFunctor(), FiberedFunctor(2)], ids=["const", "fib2"])
def test_suites_pass_on_small_groups(name, F):
    r = run_suite(name, functor=F, groups=SMALL, budget=100)
    assert r.passed, r.failures[:3]
    assert r.cases > 0


def test_mark_suite_confirms_pinned_failure():
    r = run_suite("mark", groups=SMALL)
    assert r.passed
    assert r.expected_failures == [{"group": "C4", "normal_subgroup_order": 2, "functor": "const"}]


def test_pinned_deflation_fails_and_others_hold():
    G, N, F = pinned_deflation_case()
    assert not deflation_square_holds(G, N, F)
    # deflation by the trivial subgroup is an isogation, so the square commutes
    S3 = group_from_spec("S3")
    assert deflation_square_holds(S3, S3.trivial_subgroup(), F)


def test_axioms_suite_small():
    r = run_suite("axioms", groups="1,C2,C3,S3")
    assert r.passed, r.failures[:3]
    assert r.details["axioms:p1"]["v"] is False


def test_closures_report():
    r = check_closures(CategorySpec.from_conditions(["k1", "p1"]), suite_groups("C2,S3"))
    assert r.passed and r.cases > 0


def test_unknown_suite():
    with pytest.raises(GroupError):
        run_suite("nope")


def test_corrupted_functor_breaks_functoriality():
    r = check_functoriality([CorruptedFunctor(ConstantFunctor())], suite_groups("1,C2,C3,S3"),
                            "plus")
    assert not r.passed and r.failures


def test_corrupted_functor_breaks_laws_suite():
    r = run_suite("functor-laws", functor=CorruptedFunctor(ConstantFunctor()), groups="1,C2,C3,S3")
    assert not r.passed


def test_non_natural_psi_is_reported():
    def regular(G, a):
        return (G, {G.trivial_subgroup(): 1})
    r = adjunction_check(ConstantFunctor(), BurnsideGSetTarget(), regular,
                         suite_groups("1,C2,C3,S3"), samples=60)
    assert r.details["psi_natural"] is False
    assert not r.passed


def test_eta_gives_identity():
    F = FiberedFunctor(2)
    r = adjunction_check(F, PlusTarget(F), eta_psi(F), suite_groups("1,C2,C4,S3"),
                         multiplicative=True, expect_identity=True, samples=50)
    assert r.passed and r.details["psi_natural"]


def test_burnside_target():
    r = adjunction_check(ConstantFunctor(), BurnsideGSetTarget(), burnside_psi(),
                         suite_groups("1,C2,S3"), samples=40, multiplicative=True)
    assert r.passed


@pytest.mark.parametrize("name", ["S3", "D4", "A4"])
def test_gset_product_matches_oracle(name):
    G = group_from_spec(name)
    reps = enumerate_subgroups(G).representatives
    for H in reps:
        for K in reps:
            out = gset_product(G, H, K)
            sizes = sorted(S.order for S, c in out.items() for _ in range(c))
            assert sizes == oracles.gset_product_counts(list(G.elements), set(H), set(K))


def test_burnside_identification_small():
    assert burnside_identification(group_from_spec("S3")).passed
