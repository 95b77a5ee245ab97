"""The mark morphism ``F₊(G) → F⁺(G)`` and its Möbius quasi-inverse."""

from __future__ import annotations

from fractions import Fraction

from .bisets import res
from .functors import BasedFunctor, add_into
from .ghost import GhostElement, ghost_expand, ghost_unit
from .groups import PermGroup, conjugate_subgroup, left_transversal
from .lattice import enumerate_subgroups
from .plus import PlusElement, plus_act, plus_pi, plus_ring
from .products import ProductSubgroup

_MARK: dict = {}


def mark_key(G: PermGroup, F: BasedFunctor, K: PermGroup, a) -> dict:
    """Components of ``m([K, a]_G)``: ``L ↦ Σ_{gK, L ≤ ^gK} F(res^{^gK}_L)(^g a)``."""
    key = (G, F.selector, K, a)
    out = _MARK.get(key)
    if out is not None:
        return out
    lat = enumerate_subgroups(G)
    reps = lat.representatives
    out = {}
    for t in left_transversal(G, K):
        g = G.elements[t]
        gK = conjugate_subgroup(g, K)
        ga = F.conjugate_label(g, K, a)
        for L in reps:
            if L.order <= gK.order and all(l in gK.index for l in L):
                vec = F.act(ProductSubgroup.diagonal(L, gK, L), {ga: 1})
                add_into(out.setdefault(L, {}), vec)
    out = {L: v for L, v in out.items() if v}
    _MARK[key] = out
    return out


def mark(x: PlusElement) -> GhostElement:
    G, F = x.group, x.functor
    comps = {}
    for (K, a), c in x.terms.items():
        for L, vec in mark_key(G, F, K, a).items():
            add_into(comps.setdefault(L, {}), vec, c)
    return GhostElement(G, F, comps, check=False)


def mark_via_restriction(x: PlusElement) -> GhostElement:
    """``L ↦ π_L(F₊(res^G_L)(x))``: the same map, built from the plus action."""
    G, F = x.group, x.functor
    comps = {}
    for L in enumerate_subgroups(G).representatives:
        comps[L] = plus_pi(plus_act(res(G, L), x)).coeffs
    return GhostElement(G, F, comps, check=False)


def mobius_inverse(y: GhostElement) -> PlusElement:
    """``n(y) = Σ_{L ≤ K} |L| μ(L, K) [L, F(res^K_L)(y_K)]_G``."""
    G, F = y.group, y.functor
    lat = enumerate_subgroups(G)
    full = ghost_expand(y)
    subs = lat.subgroups
    mu = lat.mobius_table
    terms = {}
    for j, K in enumerate(subs):
        aK = full.get(K)
        if not aK:
            continue
        for i in lat.below[j]:
            m = mu[(i, j)]
            if not m:
                continue
            L = subs[i]
            vec = F.act(ProductSubgroup.diagonal(L, K, L), aK)
            for lab, c in vec.items():
                add_into(terms, {(L, lab): 1}, L.order * m * c)
    return PlusElement(G, F, terms)


def table_of_marks(G: PermGroup, F: BasedFunctor | None = None):
    """Rows ``m([K, b]_G)`` over the canonical basis, columns over class reps.

    For the constant functor entry ``(K, L)`` is ``|(G/K)^L|``.
    """
    from .functors import ConstantFunctor
    F = F or ConstantFunctor()
    ring = plus_ring(G, F)
    basis = ring.canonical_basis()
    reps = enumerate_subgroups(G).representatives
    rows = []
    for K, a in basis:
        m = mark_key(G, F, K, a)
        rows.append([m.get(L, {}) for L in reps])
    return basis, reps, rows


def verify_mark_identities(G: PermGroup, F: BasedFunctor, scalars: str = "z") -> dict:
    """``n∘m = |G|·id`` on the canonical basis, ``m∘n = |G|·id`` on a ghost spanning set.

    With ``scalars="q"`` the check is that ``m`` and ``|G|⁻¹·n`` are mutually inverse.
    """
    ring = plus_ring(G, F)
    order = G.order
    fails = []
    checked = 0
    scale = Fraction(1, order) if scalars == "q" else 1
    target = 1 if scalars == "q" else order
    for K, a in ring.canonical_basis():
        x = ring.generator(K, a)
        back = scale * mobius_inverse(mark(x))
        checked += 1
        if back != target * x:
            fails.append(("n∘m", K.order, a))
    for y in ghost_spanning_set(G, F):
        back = mark(scale * mobius_inverse(y))
        checked += 1
        if back != target * y:
            fails.append(("m∘n", sorted((H.order for H in y.components))))
    zero = PlusElement(G, F)
    checked += 1
    if mobius_inverse(mark(zero)) != zero:
        fails.append(("zero",))
    # injectivity evidence: marks of the canonical basis are linearly independent
    # exactly when n∘m = |G|·id holds on it (|G| is a nonzerodivisor in ℤ)
    return {"group_order": order, "checked": checked, "failures": fails, "pass": not fails}


def ghost_spanning_set(G: PermGroup, F: BasedFunctor) -> list:
    """For each class rep ``H₀`` and ``N_G(H₀)``-orbit sum of labels, the indicator tuple."""
    lat = enumerate_subgroups(G)
    out = []
    for i in lat.class_reps:
        H = lat.subgroups[i]
        N = lat.normalizer(i)
        seen = set()
        for b in F.basis(H):
            if b in seen:
                continue
            orbit = {F.conjugate_label(n, H, b) for n in N}
            seen |= orbit
            out.append(GhostElement(G, F, {H: {o: 1 for o in orbit}}))
    return out


__all__ = ["mark", "mark_key", "mark_via_restriction", "mobius_inverse", "table_of_marks",
           "verify_mark_identities", "ghost_spanning_set", "ghost_unit"]
