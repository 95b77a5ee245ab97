"""Subgroups ``D ≤ G × H`` with their projections and kernels.

A pair ``(g, h)`` is encoded as ``G.index[g] * |H| + H.index[h]``, which is its
index in :func:`~bisetplus.groups.direct_product`, so a product subgroup is a
bitmask over the product group.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable

from .groups import GroupError, PermGroup, _direct_product, bits
from .lattice import canonical_mask


class ProductSubgroup:
    """A subgroup ``D`` of ``left × right``."""

    __slots__ = ("left", "right", "mask", "_hash", "__dict__")

    def __init__(self, left: PermGroup, right: PermGroup, mask: int):
        self.left = left
        self.right = right
        self.mask = mask
        self._hash = hash((left, right, mask))

    # --- construction -----------------------------------------------------

    @classmethod
    def from_index_pairs(cls, G, H, pairs: Iterable) -> "ProductSubgroup":
        nH = H.order
        m = 0
        for a, b in pairs:
            m |= 1 << (a * nH + b)
        return cls(G, H, m)

    @classmethod
    def generate(cls, G: PermGroup, H: PermGroup, pairs) -> "ProductSubgroup":
        """Closure of the given ``(g, h)`` permutation pairs."""
        gens = []
        for g, h in pairs:
            g, h = tuple(g), tuple(h)
            if g not in G.index or h not in H.index:
                raise GroupError("generating pair does not lie in G × H")
            gens.append(G.index[g] * H.order + H.index[h])
        P = cls.product(G, H)
        m = 0
        for i in P.closure_indices(gens):
            m |= 1 << i
        return cls(G, H, m)

    @staticmethod
    def product(G, H) -> PermGroup:
        return _direct_product(G, H)[0]

    @classmethod
    def diagonal(cls, A: PermGroup, B: PermGroup, S: PermGroup | None = None) -> "ProductSubgroup":
        """``Δ(S) = {(s, s)} ≤ A × B`` for ``S ≤ A ∩ B`` (default ``S = A``)."""
        S = A if S is None else S
        ai, bi = A.index, B.index
        try:
            return cls.from_index_pairs(A, B, ((ai[s], bi[s]) for s in S))
        except KeyError:
            raise GroupError("diagonal subgroup does not lie in the product") from None

    @classmethod
    def graph(cls, A: PermGroup, B: PermGroup, mapping: dict, reverse=False) -> "ProductSubgroup":
        """``{(x, f(x))}`` (or ``{(f(x), x)}`` with ``reverse``) for a map ``f``."""
        ai, bi = A.index, B.index
        if reverse:
            return cls.from_index_pairs(A, B, ((ai[v], bi[k]) for k, v in mapping.items()))
        return cls.from_index_pairs(A, B, ((ai[k], bi[v]) for k, v in mapping.items()))

    # --- protocol ---------------------------------------------------------

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, ProductSubgroup):
            return NotImplemented
        return (self.mask == other.mask and self.left == other.left
                and self.right == other.right)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return (f"ProductSubgroup(order={self.order}, |p1|={self.p1.order}, "
                f"|k1|={self.k1.order}, |p2|={self.p2.order}, |k2|={self.k2.order})")

    @property
    def order(self) -> int:
        return self.mask.bit_count()

    @cached_property
    def codes(self) -> tuple:
        return tuple(bits(self.mask))

    @cached_property
    def index_pairs(self) -> tuple:
        nH = self.right.order
        return tuple(divmod(c, nH) for c in self.codes)

    def pairs(self):
        """The elements as ``(g, h)`` permutation pairs."""
        ge, he = self.left.elements, self.right.elements
        return [(ge[a], he[b]) for a, b in self.index_pairs]

    def __contains__(self, pair) -> bool:
        g, h = pair
        try:
            c = self.left.index[tuple(g)] * self.right.order + self.right.index[tuple(h)]
        except KeyError:
            return False
        return bool(self.mask >> c & 1)

    # --- projections and kernels -------------------------------------------

    @cached_property
    def p1_mask(self) -> int:
        m = 0
        for a, _ in self.index_pairs:
            m |= 1 << a
        return m

    @cached_property
    def p2_mask(self) -> int:
        m = 0
        for _, b in self.index_pairs:
            m |= 1 << b
        return m

    @cached_property
    def k1_mask(self) -> int:
        m = 0
        for a, b in self.index_pairs:
            if b == 0:
                m |= 1 << a
        return m

    @cached_property
    def k2_mask(self) -> int:
        m = 0
        for a, b in self.index_pairs:
            if a == 0:
                m |= 1 << b
        return m

    @cached_property
    def p1(self) -> PermGroup:
        return self.left.from_mask(self.p1_mask)

    @cached_property
    def p2(self) -> PermGroup:
        return self.right.from_mask(self.p2_mask)

    @cached_property
    def k1(self) -> PermGroup:
        return self.left.from_mask(self.k1_mask)

    @cached_property
    def k2(self) -> PermGroup:
        return self.right.from_mask(self.k2_mask)

    # --- derived subgroups --------------------------------------------------

    def conjugate(self, a: int, b: int) -> "ProductSubgroup":
        """``^(a,b)D`` for element indices ``a ∈ G``, ``b ∈ H``."""
        ca, cb = self.left.conj[a], self.right.conj[b]
        nH = self.right.order
        m = 0
        for x, y in self.index_pairs:
            m |= 1 << (ca[x] * nH + cb[y])
        return ProductSubgroup(self.left, self.right, m)

    def canonical(self) -> "ProductSubgroup":
        """The class representative of this subgroup's ``G × H``-conjugacy class."""
        P = self.product(self.left, self.right)
        rep = canonical_mask(P, self.mask)
        if rep == self.mask:
            return self
        return ProductSubgroup(self.left, self.right, rep)

    def with_ambient(self, G2: PermGroup, H2: PermGroup) -> "ProductSubgroup":
        """The same set of pairs viewed inside ``G2 × H2``."""
        ge, he = self.left.elements, self.right.elements
        gi, hi = G2.index, H2.index
        try:
            return ProductSubgroup.from_index_pairs(
                G2, H2, ((gi[ge[a]], hi[he[b]]) for a, b in self.index_pairs))
        except KeyError:
            raise GroupError("subgroup does not lie in the new ambient product") from None

    def opposite(self) -> "ProductSubgroup":
        """``{(h, g) : (g, h) ∈ D} ≤ H × G``."""
        return ProductSubgroup.from_index_pairs(self.right, self.left,
                                                ((b, a) for a, b in self.index_pairs))

    def is_subgroup(self) -> bool:
        P = self.product(self.left, self.right)
        mul = P.mul
        codes = self.codes
        m = self.mask
        if not m & 1:
            return False
        return all(m >> mul[x][y] & 1 for x in codes for y in codes)


def star(D: ProductSubgroup, E: ProductSubgroup) -> ProductSubgroup:
    """``D * E = {(g, k) : ∃ h, (g, h) ∈ D, (h, k) ∈ E}``."""
    if D.right != E.left:
        raise GroupError("star product: middle groups differ")
    by_h = {}
    for h, k in E.index_pairs:
        by_h.setdefault(h, []).append(k)
    nK = E.right.order
    m = 0
    for g, h in D.index_pairs:
        ks = by_h.get(h)
        if ks:
            base = g * nK
            for k in ks:
                m |= 1 << (base + k)
    return ProductSubgroup(D.left, E.right, m)


def star_right(D: ProductSubgroup, K: PermGroup) -> PermGroup:
    """``D * K = {g : ∃ k ∈ K, (g, k) ∈ D}`` for ``K ≤ H``."""
    hidx = D.right.index
    km = 0
    for k in K:
        km |= 1 << hidx[k]
    m = 0
    for g, h in D.index_pairs:
        if km >> h & 1:
            m |= 1 << g
    return D.left.from_mask(m)


def star_left(K: PermGroup, D: ProductSubgroup) -> PermGroup:
    """``K * D = {h : ∃ k ∈ K, (k, h) ∈ D}`` for ``K ≤ G``."""
    gidx = D.left.index
    km = 0
    for k in K:
        km |= 1 << gidx[k]
    m = 0
    for g, h in D.index_pairs:
        if km >> g & 1:
            m |= 1 << h
    return D.right.from_mask(m)


def restrict_right(D: ProductSubgroup, K: PermGroup) -> ProductSubgroup:
    """``D * Δ(K) = D ∩ (G × K)``, as a subgroup of ``(D * K) × K``."""
    left = star_right(D, K)
    ge, he = D.left.elements, D.right.elements
    li, ki = left.index, K.index
    pairs = []
    for a, b in D.index_pairs:
        h = he[b]
        if h in ki:
            pairs.append((li[ge[a]], ki[h]))
    return ProductSubgroup.from_index_pairs(left, K, pairs)


def restrict_left(K: PermGroup, D: ProductSubgroup) -> ProductSubgroup:
    """``Δ(K) * D = D ∩ (K × H)``, as a subgroup of ``K × (K * D)``."""
    right = star_left(K, D)
    ge, he = D.left.elements, D.right.elements
    ki, ri = K.index, right.index
    pairs = []
    for a, b in D.index_pairs:
        g = ge[a]
        if g in ki:
            pairs.append((ki[g], ri[he[b]]))
    return ProductSubgroup.from_index_pairs(K, right, pairs)
