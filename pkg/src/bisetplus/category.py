"""Admissible groups and subgroup conditions ``(𝒢, 𝒮)``, their closures, and axiom checks.

A :class:`CategorySpec` fixes which groups are admissible and which subgroups
``D ≤ G × H`` are allowed as morphism labels.  Conditions are the four
surjectivity/kernel conditions ``p1, p2, k1, k2`` or a custom predicate.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .groups import GroupError, PermGroup, _direct_product, bits, double_coset_indices, order_cap
from .lattice import class_rep_masks, conjugacy_orbit, enumerate_subgroups
from .products import ProductSubgroup, restrict_left, restrict_right, star, star_left, star_right

CONDITIONS = ("k1", "k2", "p1", "p2")
AXIOMS = ("i", "ii", "iii", "iv", "v", "vi", "vii")
EXHAUSTIVE_LIMIT = 144


def satisfies(D: ProductSubgroup, cond: str) -> bool:
    if cond == "k1":
        return D.k1_mask == 1
    if cond == "k2":
        return D.k2_mask == 1
    if cond == "p1":
        return D.p1.order == D.left.order
    if cond == "p2":
        return D.p2.order == D.right.order
    raise GroupError(f"unknown condition {cond!r}")


@dataclass(frozen=True, eq=False)
class CategorySpec:
    """Admissible groups plus a membership rule for ``𝒮(G, H)``.

    ``groups=None`` admits every group up to the order cap.  Otherwise the
    admissible class is the given list closed under subgroups and quotients
    (see :meth:`complete`).  ``predicate``, if given, replaces the condition
    set as the membership rule.
    """

    groups: tuple | None = None
    condition: frozenset = frozenset()
    predicate: Callable | None = None
    label: str = ""
    _closure: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        bad = set(self.condition) - set(CONDITIONS)
        if bad:
            raise GroupError(f"unknown conditions {sorted(bad)}")
        object.__setattr__(self, "condition", frozenset(self.condition))
        if self.groups is not None:
            object.__setattr__(self, "groups", tuple(self.groups))

    @classmethod
    def from_conditions(cls, conds: Iterable[str], groups=None) -> "CategorySpec":
        conds = frozenset(conds)
        return cls(groups, conds, label="S_{" + ",".join(sorted(conds)) + "}")

    def complete(self) -> set:
        """The admissible class: listed groups closed under subgroups and quotients."""
        if self.groups is None:
            return set()
        if "set" in self._closure:
            return self._closure["set"]
        from .groups import quotient_group
        seen = set()
        todo = list(self.groups)
        while todo:
            G = todo.pop()
            if G in seen:
                continue
            seen.add(G)
            lat = enumerate_subgroups(G)
            for H in lat.subgroups:
                if H not in seen:
                    todo.append(H)
            for H in lat.subgroups:
                if H.order > 1 and H.is_normal_in(G):
                    Q = quotient_group(G, H)[0]
                    if Q not in seen:
                        todo.append(Q)
        self._closure["set"] = seen
        return seen

    def admits(self, G: PermGroup) -> bool:
        if self.groups is None:
            return G.order <= order_cap()
        return G in self.complete()

    def _raw(self, D: ProductSubgroup) -> bool:
        if self.predicate is not None:
            return bool(self.predicate(D))
        return all(satisfies(D, c) for c in self.condition)

    def member(self, D: ProductSubgroup) -> bool:
        if not (self.admits(D.left) and self.admits(D.right)):
            raise GroupError("ambient group is not admissible")
        return self._raw(D)

    def to_json(self) -> dict:
        from .groups import group_to_spec
        return {"groups": None if self.groups is None else [group_to_spec(G) for G in self.groups],
                "condition": sorted(self.condition)}

    @classmethod
    def from_json(cls, obj) -> "CategorySpec":
        from .groups import group_from_spec
        gs = obj.get("groups")
        groups = None if gs is None else [group_from_spec(g) for g in gs]
        return cls.from_conditions(obj.get("condition", []), groups)


def s_member(spec: CategorySpec, D: ProductSubgroup) -> bool:
    return spec.member(D)


def s_plus_member(spec: CategorySpec, D: ProductSubgroup) -> bool:
    """``p1(D) ∈ 𝒢`` and ``D ∈ 𝒮(p1(D), H)``."""
    if not (spec.admits(D.left) and spec.admits(D.right)):
        raise GroupError("ambient group is not admissible")
    P1 = D.p1
    return spec.admits(P1) and spec.member(D.with_ambient(P1, D.right))


def s_upper_member(spec: CategorySpec, D: ProductSubgroup) -> bool:
    """``p1(D), p2(D) ∈ 𝒢`` and ``D ∈ 𝒮(p1(D), p2(D))``."""
    if not (spec.admits(D.left) and spec.admits(D.right)):
        raise GroupError("ambient group is not admissible")
    P1, P2 = D.p1, D.p2
    return spec.admits(P1) and spec.admits(P2) and spec.member(D.with_ambient(P1, P2))


def plus_spec(spec: CategorySpec) -> CategorySpec:
    return CategorySpec(spec.groups, frozenset(), lambda D: s_plus_member(spec, D),
                        label=f"({spec.label})_+")


def upper_spec(spec: CategorySpec) -> CategorySpec:
    return CategorySpec(spec.groups, frozenset(), lambda D: s_upper_member(spec, D),
                        label=f"({spec.label})^+")


def _admissible_subgroups(spec, G):
    return [K for K in enumerate_subgroups(G).subgroups if spec.admits(K)]


def s_plus_by_restrictions(spec: CategorySpec, D: ProductSubgroup) -> bool:
    """``D * K ∈ 𝒢`` and ``D * Δ(K) ∈ 𝒮(D*K, K)`` for every admissible ``K ≤ H``."""
    for K in _admissible_subgroups(spec, D.right):
        if not spec.admits(star_right(D, K)):
            return False
        if not spec.member(restrict_right(D, K)):
            return False
    return True


def s_upper_via_p2(spec: CategorySpec, D: ProductSubgroup) -> bool:
    """Right-hand characterization: quantifies over admissible ``L ≤ p2(D)``."""
    if not spec.admits(D.p2):
        return False
    for L in _admissible_subgroups(spec, D.p2):
        if not spec.admits(star_right(D, L)):
            return False
        if not spec.member(restrict_right(D, L)):
            return False
    return True


def s_upper_via_p1(spec: CategorySpec, D: ProductSubgroup) -> bool:
    """Left-hand characterization: quantifies over admissible ``K ≤ p1(D)``."""
    if not spec.admits(D.p1):
        return False
    for K in _admissible_subgroups(spec, D.p1):
        if not spec.admits(star_left(K, D)):
            return False
        if not spec.member(restrict_left(K, D)):
            return False
    return True


# --- axiom checks ------------------------------------------------------------------

@dataclass
class AxiomReport:
    results: dict = field(default_factory=dict)

    def record(self, axiom, ok, witness=None):
        r = self.results.setdefault(axiom, {"pass": True, "checked": 0, "counterexamples": []})
        r["checked"] += 1
        if not ok:
            r["pass"] = False
            if len(r["counterexamples"]) < 5 and witness is not None:
                r["counterexamples"].append(witness)

    def passed(self, axiom) -> bool:
        return self.results[axiom]["pass"]

    def summary(self) -> dict:
        return {a: r["pass"] for a, r in self.results.items()}

    def to_json(self) -> dict:
        return {a: dict(r) for a, r in self.results.items()}


def _witness(*subgroups):
    out = []
    for D in subgroups:
        if isinstance(D, ProductSubgroup):
            out.append([[list(g), list(h)] for g, h in D.pairs()])
        else:
            out.append([list(g) for g in D.generators])
    return out


def _all_product_subgroups(G, H):
    P = _direct_product(G, H)[0]
    for rep in class_rep_masks(P):
        for m in conjugacy_orbit(P, rep):
            yield ProductSubgroup(G, H, m)


def _rep_product_subgroups(G, H):
    P = _direct_product(G, H)[0]
    return [ProductSubgroup(G, H, m) for m in class_rep_masks(P)]


def check_axioms(spec: CategorySpec, which=AXIOMS, universe=None, budget: int = 2000,
                 seed: int = 0) -> AxiomReport:
    """Check the requested axioms over ``universe`` (defaults to ``spec.groups``).

    Membership is tested on every subgroup of ``G × H`` when ``|G×H| ≤ 144``.
    Axioms (iii), (iv) and (vii) quantify over class representatives of ``D``
    (and of ``E``, with the double-coset twists ``^(t,1)E``), which covers all
    pairs once (ii) holds; triples are exhaustive when ``|G|·|H|·|K| ≤ 144``
    and sampled (``budget`` cases, seeded) otherwise.
    """
    groups = list(universe if universe is not None else (spec.groups or ()))
    if not groups:
        raise GroupError("axiom check needs a finite universe of groups")
    groups = [G for G in groups if spec.admits(G)]
    rng = random.Random(seed)
    rep = AxiomReport()
    which = set(which)
    pairs = [(G, H) for G in groups for H in groups]

    if "i" in which:
        for G in groups:
            D = ProductSubgroup.diagonal(G, G)
            rep.record("i", spec.member(D), _witness(D))
    if "ii" in which:
        for G, H in pairs:
            if G.order * H.order > EXHAUSTIVE_LIMIT:
                P = _direct_product(G, H)[0]
                for m in rng.sample(class_rep_masks(P), min(20, len(class_rep_masks(P)))):
                    orbit = conjugacy_orbit(P, m)
                    vals = {spec.member(ProductSubgroup(G, H, x)) for x in orbit}
                    rep.record("ii", len(vals) == 1, _witness(ProductSubgroup(G, H, m)))
                continue
            P = _direct_product(G, H)[0]
            for m in class_rep_masks(P):
                vals = {spec.member(ProductSubgroup(G, H, x)) for x in conjugacy_orbit(P, m)}
                rep.record("ii", len(vals) == 1, _witness(ProductSubgroup(G, H, m)))
    if "iii" in which:
        triples = [(G, H, K) for G in groups for H in groups for K in groups]
        small = [t for t in triples if t[0].order * t[1].order * t[2].order <= EXHAUSTIVE_LIMIT]
        big = [t for t in triples if t[0].order * t[1].order * t[2].order > EXHAUSTIVE_LIMIT]
        for G, H, K in small:
            Ds = [D for D in _rep_product_subgroups(G, H) if spec.member(D)]
            Es = [E for E in _rep_product_subgroups(H, K) if spec.member(E)]
            for D in Ds:
                for E in Es:
                    _check_star(spec, rep, D, E)
        for _ in range(budget if big else 0):
            G, H, K = rng.choice(big)
            D = rng.choice(_rep_product_subgroups(G, H))
            E = rng.choice(_rep_product_subgroups(H, K))
            if spec.member(D) and spec.member(E):
                _check_star(spec, rep, D, E)
    for ax in ("iv", "vii"):
        if ax not in which:
            continue
        for G, H in pairs:
            Ds = _rep_product_subgroups(G, H)
            if G.order * H.order > EXHAUSTIVE_LIMIT:
                Ds = rng.sample(Ds, min(len(Ds), 40))
            for D in Ds:
                if not spec.member(D):
                    continue
                if ax == "vii":
                    if not spec.admits(D.p2):
                        rep.record(ax, False, _witness(D))
                        continue
                    Ks = _admissible_subgroups(spec, D.p2)
                else:
                    Ks = _admissible_subgroups(spec, H)
                for K in Ks:
                    ok = spec.admits(star_right(D, K)) and spec.member(restrict_right(D, K))
                    rep.record(ax, ok, _witness(D, K))
    for ax in ("v", "vi"):
        if ax not in which:
            continue
        for G in groups:
            for H in _admissible_subgroups(spec, G):
                D = ProductSubgroup.diagonal(G, H, H) if ax == "v" else ProductSubgroup.diagonal(H, G, H)
                rep.record(ax, spec.member(D), _witness(D))
    return rep


def _check_star(spec, rep, D, E):
    H = D.right
    for t in double_coset_indices(H, list(bits(D.p2_mask)), list(bits(E.p1_mask))):
        Et = E.conjugate(t, 0)
        S = star(D, Et)
        rep.record("iii", spec.member(S), _witness(D, Et))


def predicted_axioms(conds) -> dict:
    """Which axioms hold for ``𝒮_C`` when 𝒢 contains all groups considered."""
    conds = set(conds)
    out = {a: True for a in AXIOMS}
    out["v"] = "p1" not in conds
    out["vi"] = "p2" not in conds
    return out


__all__ = [
    "CONDITIONS", "AXIOMS", "CategorySpec", "satisfies", "s_member", "s_plus_member",
    "s_upper_member", "plus_spec", "upper_spec", "s_plus_by_restrictions", "s_upper_via_p1",
    "s_upper_via_p2", "AxiomReport", "check_axioms", "predicted_axioms",
]
