"""The double Burnside group ``B(G, H)`` and composition of bisets.

A standard basis element ``[G×H/D]`` is represented by the canonical
representative of the conjugacy class of ``D`` (a :class:`ProductSubgroup`).
:func:`mackey_compose` composes by the double-coset formula; the concrete
route (:func:`realize` + :func:`tensor_oracle`) builds ``U ×_H V`` as a set and
decomposes it into orbits, and is kept independent of the formula.
"""

from __future__ import annotations

from collections import defaultdict

import numpy as np

from .groups import (GroupError, GroupHom, PermGroup, _direct_product, double_coset_indices,
                     left_transversal, quotient_group)
from .lattice import class_rep_masks
from .products import ProductSubgroup, star, star_left, star_right

BisetClass = ProductSubgroup


class BisetElement:
    """Integer combination of standard basis elements of ``B(left, right)``."""

    __slots__ = ("left", "right", "terms")

    def __init__(self, left: PermGroup, right: PermGroup, terms=None):
        self.left = left
        self.right = right
        self.terms = {}
        for D, c in (terms or {}).items():
            if D.left != left or D.right != right:
                raise GroupError("term does not live in B(left, right)")
            D = D.canonical()
            c = self.terms.get(D, 0) + c
            if c:
                self.terms[D] = c
            else:
                self.terms.pop(D, None)

    @classmethod
    def basis(cls, D: ProductSubgroup) -> "BisetElement":
        return cls(D.left, D.right, {D: 1})

    @classmethod
    def identity(cls, G: PermGroup) -> "BisetElement":
        return cls.basis(ProductSubgroup.diagonal(G, G))

    def _check(self, other):
        if not isinstance(other, BisetElement) or other.left != self.left or other.right != self.right:
            raise GroupError("biset elements live in different groups")

    def __add__(self, other):
        self._check(other)
        t = dict(self.terms)
        for D, c in other.terms.items():
            t[D] = t.get(D, 0) + c
        return BisetElement(self.left, self.right, t)

    def __neg__(self):
        return BisetElement(self.left, self.right, {D: -c for D, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k: int):
        return BisetElement(self.left, self.right, {D: k * c for D, c in self.terms.items()})

    def __matmul__(self, other):
        return mackey_compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, BisetElement):
            return NotImplemented
        return self.left == other.left and self.right == other.right and self.terms == other.terms

    def __hash__(self):
        return hash((self.left, self.right, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = [f"{c}*[|D|={D.order}]" for D, c in self.terms.items()]
        return " + ".join(parts)


def standard_basis(G: PermGroup, H: PermGroup) -> list:
    """One canonical :class:`ProductSubgroup` per conjugacy class in ``G × H``."""
    P = _direct_product(G, H)[0]
    return [ProductSubgroup(G, H, m) for m in class_rep_masks(P)]


# --- composition ---------------------------------------------------------------

_MACKEY: dict = {}


def compose_classes(D: ProductSubgroup, E: ProductSubgroup, cache: bool = True) -> dict:
    """``[G×H/D] ·_H [H×K/E]`` as ``{canonical class: multiplicity}``.

    Bulk sweeps pass ``cache=False`` to keep memory flat.
    """
    key = (D, E)
    out = _MACKEY.get(key)
    if out is not None:
        return out
    if D.right != E.left:
        raise GroupError("composition: middle groups differ")
    H = D.right
    from .groups import bits
    reps = double_coset_indices(H, list(bits(D.p2_mask)), list(bits(E.p1_mask)))
    out = {}
    for t in reps:
        S = star(D, E.conjugate(t, 0)).canonical()
        out[S] = out.get(S, 0) + 1
    if cache:
        _MACKEY[key] = out
    return out


def mackey_compose(a: BisetElement, b: BisetElement) -> BisetElement:
    """Compose ``a ∈ B(G,H)`` with ``b ∈ B(H,K)`` by the Mackey formula."""
    if a.right != b.left:
        raise GroupError("composition: middle groups differ")
    acc = defaultdict(int)
    for D, x in a.terms.items():
        for E, y in b.terms.items():
            for S, m in compose_classes(D, E).items():
                acc[S] += x * y * m
    return BisetElement(a.left, b.right, {S: c for S, c in acc.items() if c})


def compose_all(*factors: BisetElement) -> BisetElement:
    out = factors[-1]
    for f in reversed(factors[:-1]):
        out = mackey_compose(f, out)
    return out


# --- elementary bisets ------------------------------------------------------------

def res(G: PermGroup, H: PermGroup) -> BisetElement:
    """``res^G_H = [H×G/Δ(H)] ∈ B(H, G)``."""
    if not H.is_subgroup_of(G):
        raise GroupError("restriction to a non-subgroup")
    return BisetElement.basis(ProductSubgroup.diagonal(H, G, H))


def ind(G: PermGroup, H: PermGroup) -> BisetElement:
    """``ind_H^G = [G×H/Δ(H)] ∈ B(G, H)``."""
    if not H.is_subgroup_of(G):
        raise GroupError("induction from a non-subgroup")
    return BisetElement.basis(ProductSubgroup.diagonal(G, H, H))


def inf(G: PermGroup, N: PermGroup) -> BisetElement:
    """``inf^G_{G/N} ∈ B(G, G/N)`` with subgroup ``{(g, gN)}``."""
    Q, pi = quotient_group(G, N)
    return BisetElement.basis(ProductSubgroup.graph(G, Q, pi.mapping))


def defl(G: PermGroup, N: PermGroup) -> BisetElement:
    """``def^G_{G/N} ∈ B(G/N, G)`` with subgroup ``{(gN, g)}``."""
    Q, pi = quotient_group(G, N)
    return BisetElement.basis(ProductSubgroup.graph(Q, G, pi.mapping, reverse=True))


def iso(alpha: GroupHom) -> BisetElement:
    """``iso_α ∈ B(G', G)`` for an isomorphism ``α: G → G'``."""
    if len(set(alpha.mapping.values())) != alpha.source.order or alpha.source.order != alpha.target.order:
        raise GroupError("isogation needs a bijective homomorphism")
    return BisetElement.basis(ProductSubgroup.graph(alpha.target, alpha.source, alpha.mapping,
                                                    reverse=True))


def elementary(kind: str, *args) -> BisetElement:
    """``elementary("res", G, H)``, ``("ind", G, H)``, ``("inf", G, N)``,
    ``("def", G, N)`` or ``("iso", alpha)``."""
    table = {"res": res, "ind": ind, "inf": inf, "def": defl, "iso": iso}
    try:
        return table[kind](*args)
    except KeyError:
        raise GroupError(f"unknown elementary biset {kind!r}") from None


def eta_hom(D: ProductSubgroup):
    """The canonical isomorphism ``p2(D)/k2(D) → p1(D)/k1(D)`` with its quotients."""
    Q1, pi1 = quotient_group(D.p1, D.k1)
    Q2, pi2 = quotient_group(D.p2, D.k2)
    mapping = {}
    for g, h in D.pairs():
        mapping[pi2(h)] = pi1(g)
    return GroupHom(Q2, Q1, mapping, "isomorphism"), (Q1, pi1), (Q2, pi2)


def decompose_standard(D: ProductSubgroup) -> tuple:
    """``(ind, inf, iso, def, res)`` whose composite is ``[G×H/D]``."""
    G, H = D.left, D.right
    P1, K1, P2, K2 = D.p1, D.k1, D.p2, D.k2
    eta, _, _ = eta_hom(D)
    return (ind(G, P1), inf(P1, K1), iso(eta), defl(P2, K2), res(H, P2))


# --- concrete bisets ----------------------------------------------------------------

class ConcreteBiset:
    """A finite ``(G, H)``-biset on points ``0..n-1``.

    ``left_act[g][u]`` is ``g·u`` and ``right_act[h][u]`` is ``u·h``, with group
    elements given by index.
    """

    def __init__(self, left: PermGroup, right: PermGroup, size: int, left_act, right_act):
        self.left = left
        self.right = right
        self.size = size
        self.left_act = np.asarray(left_act, dtype=np.int64).reshape(left.order, size)
        self.right_act = np.asarray(right_act, dtype=np.int64).reshape(right.order, size)

    def check(self, samples=None) -> bool:
        """Actions are actions and commute (on all points)."""
        G, H = self.left, self.right
        L, R = self.left_act, self.right_act
        for a in G.generators:
            i = G.index[a]
            for j in range(G.order):
                if not np.array_equal(L[G.mul[i][j]], L[i][L[j]]):
                    return False
        for a in H.generators:
            i = H.index[a]
            for j in range(H.order):
                # (u·h_j)·h_i = u·(h_j h_i)
                if not np.array_equal(R[H.mul[j][i]], R[i][R[j]]):
                    return False
        for i in range(G.order):
            for j in range(H.order):
                if not np.array_equal(R[j][L[i]], L[i][R[j]]):
                    return False
        return True

    def stabilizer(self, u: int) -> ProductSubgroup:
        """``(G×H)_u = {(g, h) : g u h⁻¹ = u}``."""
        G, H = self.left, self.right
        nH = H.order
        m = 0
        for hi in range(nH):
            # g u h⁻¹ = u  ⇔  g u = u h
            target = self.right_act[hi][u]
            for g in np.flatnonzero(self.left_act[:, u] == target):
                m |= 1 << (int(g) * nH + hi)
        return ProductSubgroup(G, H, m)


_REALIZED: dict = {}


def realize(D: ProductSubgroup) -> ConcreteBiset:
    """``(G×H)/D`` as left cosets ``xD`` with ``g·xD·h = (g, h⁻¹) x D``."""
    cached = _REALIZED.get(D)
    if cached is not None:
        return cached
    G, H = D.left, D.right
    P = _direct_product(G, H)[0]
    Dg = P.from_mask(D.mask)
    reps = left_transversal(P, Dg)
    mul = P.mul
    coset = [0] * P.order
    dcodes = D.codes
    for c, r in enumerate(reps):
        row = mul[r]
        for d in dcodes:
            coset[row[d]] = c
    nH = H.order
    n = len(reps)
    left = np.empty((G.order, n), dtype=np.int64)
    right = np.empty((nH, n), dtype=np.int64)
    hinv = H.inv
    for g in range(G.order):
        row = mul[g * nH]
        left[g] = [coset[row[r]] for r in reps]
    for h in range(nH):
        row = mul[hinv[h]]  # (1, h⁻¹) has index hinv[h] since 1 ∈ G has index 0
        right[h] = [coset[row[r]] for r in reps]
    U = ConcreteBiset(G, H, n, left, right)
    _REALIZED[D] = U
    return U


def orbit_labels(perms, n: int) -> np.ndarray:
    """Label each point by the least point of its orbit under the given permutations."""
    labels = np.arange(n)
    while True:
        new = labels
        for p in perms:
            new = np.minimum(new, new[p])
        new = new[new]
        if np.array_equal(new, labels):
            return labels
        labels = new


def tensor_oracle(U: ConcreteBiset, V: ConcreteBiset) -> BisetElement:
    """Decompose the concrete biset ``U ×_H V`` into transitive pieces.

    Points of ``U × V`` are ``u·|V| + v``; ``H`` acts by ``h(u,v) = (uh⁻¹, hv)``.
    Stabilizers of orbit representatives in ``G × K`` are found by testing
    every ``(g, k)``.
    """
    if U.right != V.left:
        raise GroupError("tensor product: middle groups differ")
    G, H, K = U.left, U.right, V.right
    nU, nV = U.size, V.size
    n = nU * nV
    uu = np.repeat(np.arange(nU), nV)
    vv = np.tile(np.arange(nV), nU)
    hperms = [U.right_act[H.inv[H.index[h]]][uu] * nV + V.left_act[H.index[h]][vv]
              for h in H.generators]
    hlabels = orbit_labels(hperms, n)
    gkperms = [U.left_act[G.index[g]][uu] * nV + vv for g in G.generators]
    gkperms += [uu * nV + V.right_act[K.index[k]][vv] for k in K.generators]
    glabels = orbit_labels(hperms + gkperms, n)
    kinv = np.asarray(K.inv)
    terms = defaultdict(int)
    for p in np.unique(glabels):
        u, v = divmod(int(p), nV)
        gu = U.left_act[:, u]
        vk = V.right_act[kinv, v]
        codes = gu[:, None] * nV + vk[None, :]
        fixed = hlabels[codes] == hlabels[p]
        m = int.from_bytes(np.packbits(fixed.ravel(), bitorder="little").tobytes(), "little")
        terms[ProductSubgroup(G, K, m).canonical()] += 1
    return BisetElement(G, K, dict(terms))


def left_stab(U: ConcreteBiset, u: int, K: PermGroup) -> PermGroup:
    """``^uK = {g ∈ G : ∃ k ∈ K, g u = u k}`` for ``K ≤ U.right``."""
    G, H = U.left, U.right
    targets = {int(U.right_act[H.index[k]][u]) for k in K}
    return PermGroup.from_elements(G.degree, [G.elements[g] for g in range(G.order)
                                              if int(U.left_act[g][u]) in targets])


def right_stab(U: ConcreteBiset, u: int, K: PermGroup) -> PermGroup:
    """``K^u = {h ∈ H : ∃ k ∈ K, k u = u h}`` for ``K ≤ U.left``."""
    G, H = U.left, U.right
    targets = {int(U.left_act[G.index[k]][u]) for k in K}
    return PermGroup.from_elements(H.degree, [H.elements[h] for h in range(H.order)
                                              if int(U.right_act[h][u]) in targets])


__all__ = [
    "BisetClass", "BisetElement", "ConcreteBiset", "standard_basis", "compose_classes",
    "mackey_compose", "compose_all", "res", "ind", "inf", "defl", "iso", "elementary",
    "eta_hom", "decompose_standard", "realize", "tensor_oracle", "left_stab", "right_stab",
    "star", "star_left", "star_right",
]
