"""The plus construction ``F₊(G) = (⊕_H F(H))_G``.

``F₊(G)`` is free on ``G``-orbits of pairs ``(H, b)`` with ``H ≤ G`` and ``b``
a basis label of ``F(H)``.  A canonical pair uses the class representative
``H₀`` of ``H`` and the least label in the ``N_G(H₀)``-orbit of the transported
label.  Elements are :class:`PlusElement`; the action of bisets is
:func:`plus_act`, the five elementary cases are :func:`plus_elementary`.
"""

from __future__ import annotations

from .bisets import BisetElement
from .category import s_plus_member
from .functors import BasedFunctor, FunctorError, FunctorElement, add_into
from .groups import (GroupError, PermGroup, bits, conjugate_subgroup, double_coset_indices,
                     intersection, invert, left_transversal, quotient_group)
from .lattice import enumerate_subgroups
from .products import ProductSubgroup, restrict_right, star_right


class PlusRing:
    """``F₊(G)`` for one group and one functor: canonical pairs, basis, product."""

    def __init__(self, G: PermGroup, F: BasedFunctor):
        self.group = G
        self.functor = F
        self.lattice = enumerate_subgroups(G)
        self._canon = {}
        self._mult = {}

    def canonicalize_pair(self, H: PermGroup, label) -> tuple:
        key = (H, label)
        out = self._canon.get(key)
        if out is not None:
            return out
        G, F, lat = self.group, self.functor, self.lattice
        try:
            i = lat.index_of(H)
        except KeyError:
            raise GroupError("pair subgroup is not a subgroup of the group") from None
        rep_i = lat.class_reps[lat.class_of[i]]
        H0 = lat.subgroups[rep_i]
        g = G.elements[lat.to_rep[i]]
        b = F.conjugate_label(g, H, label) if H != H0 else label
        orbit = {F.conjugate_label(n, H0, b) for n in lat.normalizer(rep_i)}
        out = (H0, min(orbit))
        self._canon[key] = out
        return out

    def canonical_basis(self) -> list:
        """Canonical keys, ordered by subgroup-class order then label."""
        out = []
        for i in self.lattice.class_reps:
            H0 = self.lattice.subgroups[i]
            labs = {self.canonicalize_pair(H0, b)[1] for b in self.functor.basis(H0)}
            out.extend((H0, b) for b in sorted(labs))
        return out

    @property
    def rank(self) -> int:
        return len(self.canonical_basis())

    def element(self, terms=None) -> "PlusElement":
        return PlusElement(self.group, self.functor, terms)

    def generator(self, H: PermGroup, label, coeff=1) -> "PlusElement":
        return PlusElement(self.group, self.functor, {(H, label): coeff})

    def unit(self) -> "PlusElement":
        G = self.group
        return self.generator(G, self.functor.one(G))

    def mult_keys(self, k1, k2) -> dict:
        """``[H,a]·[K,b] = Σ_{x ∈ H\\G/K} [H∩^xK, res(a)·res(^x b)]``."""
        key = (k1, k2)
        out = self._mult.get(key)
        if out is not None:
            return out
        G, F = self.group, self.functor
        (H, a), (K, b) = k1, k2
        out = {}
        for x in double_coset_indices(G, [G.index[h] for h in H], [G.index[k] for k in K]):
            g = G.elements[x]
            xK = conjugate_subgroup(g, K)
            L = intersection(H, xK)
            ra = F.act(ProductSubgroup.diagonal(L, H, L), {a: 1})
            xb = F.conjugate_label(g, K, b)
            rb = F.act(ProductSubgroup.diagonal(L, xK, L), {xb: 1})
            for lab, c in F.value_mult(L, ra, rb).items():
                add_into(out, {self.canonicalize_pair(L, lab): 1}, c)
        self._mult[key] = out
        return out


_RINGS: dict = {}


def plus_ring(G: PermGroup, F: BasedFunctor) -> PlusRing:
    key = (G, F.selector)
    R = _RINGS.get(key)
    if R is None:
        R = _RINGS[key] = PlusRing(G, F)
    return R


class PlusElement:
    """A finite combination of canonical pairs ``[H, b]_G``."""

    __slots__ = ("group", "functor", "terms")

    def __init__(self, group: PermGroup, functor: BasedFunctor, terms=None):
        self.group = group
        self.functor = functor
        ring = plus_ring(group, functor)
        out = {}
        for (H, lab), c in (terms or {}).items():
            if c:
                add_into(out, {ring.canonicalize_pair(H, lab): 1}, c)
        self.terms = out

    @property
    def ring(self) -> PlusRing:
        return plus_ring(self.group, self.functor)

    def _same(self, other):
        if not isinstance(other, PlusElement) or other.group != self.group \
                or other.functor.selector != self.functor.selector:
            raise GroupError("plus elements over different groups or functors")

    def __add__(self, other):
        self._same(other)
        t = dict(self.terms)
        add_into(t, other.terms)
        return PlusElement(self.group, self.functor, t)

    def __neg__(self):
        return PlusElement(self.group, self.functor, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k):
        return PlusElement(self.group, self.functor, {key: k * c for key, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, PlusElement):
            return plus_mult(self, other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, PlusElement):
            return NotImplemented
        return (self.group == other.group and self.functor.selector == other.functor.selector
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.group, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        from .serialize import render_plus
        return render_plus(self)


def _check_plus(F, D):
    if not s_plus_member(F.base_spec, D):
        raise FunctorError("biset class is not in the plus closure of the functor's category")


_ACT: dict = {}


def plus_act_key(D: ProductSubgroup, F: BasedFunctor, K: PermGroup, a) -> dict:
    """``F₊([G×H/D])([K, a]_H)`` as ``{canonical key: coeff}`` over ``G``."""
    cache_key = (D, F.selector, K, a)
    out = _ACT.get(cache_key)
    if out is not None:
        return out
    G, H = D.left, D.right
    ring = plus_ring(G, F)
    out = {}
    kidx = [H.index[k] for k in K]
    for t in double_coset_indices(H, list(bits(D.p2_mask)), kidx):
        h = H.elements[t]
        hK = conjugate_subgroup(h, K)
        ha = F.conjugate_label(h, K, a)
        L = star_right(D, hK)
        R = restrict_right(D, hK)
        for lab, c in F.act(R, {ha: 1}).items():
            add_into(out, {ring.canonicalize_pair(L, lab): 1}, c)
    _ACT[cache_key] = out
    return out


def plus_act(U: BisetElement, x: PlusElement) -> PlusElement:
    """Apply ``F₊(U)`` to ``x ∈ F₊(H)``, ``U ∈ B(G, H)``."""
    if U.right != x.group:
        raise GroupError("biset and plus element live over different groups")
    F = x.functor
    out = {}
    for D, c in U.terms.items():
        _check_plus(F, D)
        for (K, a), d in x.terms.items():
            add_into(out, plus_act_key(D, F, K, a), c * d)
    return PlusElement(U.left, F, out)


def plus_mult(x: PlusElement, y: PlusElement) -> PlusElement:
    x._same(y)
    ring = x.ring
    out = {}
    for k1, c1 in x.terms.items():
        for k2, c2 in y.terms.items():
            add_into(out, ring.mult_keys(k1, k2), c1 * c2)
    return PlusElement(x.group, x.functor, out)


def plus_pi(x: PlusElement) -> FunctorElement:
    """Keep the ``H = G`` part."""
    G = x.group
    return FunctorElement(G, x.functor, {lab: c for (H, lab), c in x.terms.items() if H == G})


def embed(a: FunctorElement) -> PlusElement:
    """``a ↦ [G, a]_G``."""
    G = a.group
    return PlusElement(G, a.functor, {(G, lab): c for lab, c in a.coeffs.items()})


# --- elementary specializations ---------------------------------------------------------

def plus_iso(alpha, x: PlusElement) -> PlusElement:
    """``[K, a] ↦ [α(K), F(iso_α)(a)]``."""
    F = x.functor
    out = {}
    for (K, a), c in x.terms.items():
        aK = alpha.image(K)
        D = ProductSubgroup.graph(aK, K, {k: alpha(k) for k in K}, reverse=True)
        for lab, d in F.act(D, {a: 1}).items():
            add_into(out, {(aK, lab): 1}, c * d)
    return PlusElement(alpha.target, F, out)


def plus_res(G: PermGroup, H: PermGroup, x: PlusElement) -> PlusElement:
    """``[K, a]_G ↦ Σ_{g ∈ [H\\G/K]} [H ∩ ^gK, F(res)(^g a)]_H``."""
    F = x.functor
    out = {}
    hidx = [G.index[h] for h in H]
    for (K, a), c in x.terms.items():
        for t in double_coset_indices(G, hidx, [G.index[k] for k in K]):
            g = G.elements[t]
            gK = conjugate_subgroup(g, K)
            L = intersection(H, gK)
            ga = F.conjugate_label(g, K, a)
            for lab, d in F.act(ProductSubgroup.diagonal(L, gK, L), {ga: 1}).items():
                add_into(out, {(L, lab): 1}, c * d)
    return PlusElement(H, F, out)


def plus_ind(G: PermGroup, H: PermGroup, x: PlusElement) -> PlusElement:
    """``[K, a]_H ↦ [K, a]_G``."""
    return PlusElement(G, x.functor, dict(x.terms))


def plus_inf(G: PermGroup, N: PermGroup, x: PlusElement) -> PlusElement:
    """``[K/N, a]_{G/N} ↦ [K, F(inf)(a)]_G``."""
    F = x.functor
    Q, pi = quotient_group(G, N)
    out = {}
    for (Kb, a), c in x.terms.items():
        K = PermGroup.from_elements(G.degree, [g for g in G if pi(g) in Kb.index])
        D = ProductSubgroup.graph(K, Kb, {k: pi(k) for k in K})
        for lab, d in F.act(D, {a: 1}).items():
            add_into(out, {(K, lab): 1}, c * d)
    return PlusElement(G, F, out)


def plus_def(G: PermGroup, N: PermGroup, x: PlusElement) -> PlusElement:
    """``[K, a]_G ↦ [KN/N, F([(KN/N)×K / {(kN, k)}])(a)]_{G/N}``."""
    F = x.functor
    Q, pi = quotient_group(G, N)
    out = {}
    for (K, a), c in x.terms.items():
        KN = PermGroup.from_elements(Q.degree, {pi(k) for k in K})
        D = ProductSubgroup.graph(KN, K, {k: pi(k) for k in K}, reverse=True)
        for lab, d in F.act(D, {a: 1}).items():
            add_into(out, {(KN, lab): 1}, c * d)
    return PlusElement(Q, F, out)


def plus_def_factored(G: PermGroup, N: PermGroup, x: PlusElement) -> PlusElement:
    """Deflation through ``K → K/(K∩N) ≅ KN/N``: the factored form, for cross-checks."""
    from .bisets import defl, iso
    from .groups import GroupHom
    F = x.functor
    Q, pi = quotient_group(G, N)
    out = {}
    for (K, a), c in x.terms.items():
        KcapN = intersection(K, N)
        Kq, piK = quotient_group(K, KcapN)
        KN = PermGroup.from_elements(Q.degree, {pi(k) for k in K})
        alpha = GroupHom(Kq, KN, {piK(k): pi(k) for k in K}, "isomorphism")
        d1 = next(iter(defl(K, KcapN).terms))
        d2 = next(iter(iso(alpha).terms))
        val = F.act(d2, F.act(d1, {a: 1}))
        for lab, d in val.items():
            add_into(out, {(KN, lab): 1}, c * d)
    return PlusElement(Q, F, out)


def plus_elementary(kind: str, *args) -> PlusElement:
    """``("iso", alpha, x)``, ``("res", G, H, x)``, ``("ind", G, H, x)``,
    ``("inf", G, N, x)`` or ``("def", G, N, x)``."""
    table = {"iso": plus_iso, "res": plus_res, "ind": plus_ind, "inf": plus_inf, "def": plus_def}
    try:
        fn = table[kind]
    except KeyError:
        raise GroupError(f"unknown elementary kind {kind!r}") from None
    return fn(*args)


__all__ = [
    "PlusRing", "PlusElement", "plus_ring", "plus_act", "plus_act_key", "plus_mult", "plus_pi",
    "embed", "plus_elementary", "plus_iso", "plus_res", "plus_ind", "plus_inf", "plus_def",
    "plus_def_factored",
]
