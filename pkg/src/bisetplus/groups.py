"""Finite permutation groups, homomorphisms and subgroups of direct products.

Permutations are tuples of images on ``range(degree)``.  Products compose
right-to-left: ``compose(p, q)`` applies ``q`` first.  Every group caches its
full element list, sorted lexicographically, and all index-based tables are
relative to that order.  Subgroups are ordinary :class:`PermGroup` objects on
the same degree; two groups are equal iff they have the same degree and the
same element set.
"""

from __future__ import annotations

import os
from functools import cached_property
from typing import Iterable, Iterator, Sequence

Perm = tuple

DEFAULT_ORDER_CAP = 10000


class GroupError(ValueError):
    """Raised for malformed group data or violated preconditions."""


def order_cap() -> int:
    return int(os.environ.get("BISETPLUS_ORDER_CAP", DEFAULT_ORDER_CAP))


def identity(degree: int) -> Perm:
    return tuple(range(degree))


def compose(p: Perm, q: Perm) -> Perm:
    """``p ∘ q``: apply ``q``, then ``p``."""
    return tuple([p[i] for i in q])


def invert(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def is_permutation(images: Sequence[int], degree: int | None = None) -> bool:
    n = len(images) if degree is None else degree
    return len(images) == n and sorted(images) == list(range(n))


def cycle(degree: int, *cycles: Sequence[int]) -> Perm:
    """Permutation of ``range(degree)`` given by disjoint cycles."""
    img = list(range(degree))
    for c in cycles:
        for a, b in zip(c, list(c[1:]) + [c[0]]):
            img[a] = b
    return tuple(img)


def _closure(degree: int, gens: Sequence[Perm], cap: int) -> set:
    e = identity(degree)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(g, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > cap:
                        raise GroupError(f"group order exceeds cap {cap}")
        frontier = nxt
    return seen


_INTERN: dict = {}


class PermGroup:
    """A finite permutation group with its enumerated, sorted element list."""

    def __init__(self, degree: int, generators: Iterable[Sequence[int]] = (),
                 name: str | None = None, *, cap: int | None = None):
        gens = []
        for g in generators:
            g = tuple(g)
            if not is_permutation(g, degree):
                raise GroupError(f"not a permutation of degree {degree}: {list(g)}")
            gens.append(g)
        cap = order_cap() if cap is None else cap
        self._init(degree, _closure(degree, gens, cap), name)
        self._gens = tuple(g for g in gens if g != identity(degree))

    def _init(self, degree, elements, name):
        self.degree = degree
        self.elements = tuple(sorted(elements))
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.name = name
        self._hash = hash((degree, self.elements))

    @classmethod
    def from_elements(cls, degree: int, elements: Iterable[Perm],
                      name: str | None = None) -> "PermGroup":
        """Group from an element set already known to be closed (interned)."""
        elems = tuple(sorted(elements))
        key = (degree, elems)
        G = _INTERN.get(key)
        if G is None:
            G = cls.__new__(cls)
            G._init(degree, elems, name)
            G._gens = None
            _INTERN[key] = G
        elif name and not G.name:
            G.name = name
        return G

    # --- basic protocol ---------------------------------------------------

    def __len__(self):
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.elements)

    def __contains__(self, g) -> bool:
        return g in self.index

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, PermGroup):
            return NotImplemented
        return (self._hash == other._hash and self.degree == other.degree
                and self.elements == other.elements)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        label = self.name or f"<order {self.order}>"
        return f"PermGroup({label}, degree={self.degree})"

    @property
    def identity(self) -> Perm:
        return self.elements[0]

    @property
    def generators(self) -> tuple:
        """A small generating set (greedy over the sorted element list)."""
        if self._gens is None:
            gens = []
            have = {self.identity}
            for e in self.elements:
                if e not in have:
                    gens.append(e)
                    have = _closure(self.degree, gens, self.order)
                    if len(have) == self.order:
                        break
            self._gens = tuple(gens)
        return self._gens

    # --- tables -----------------------------------------------------------

    @cached_property
    def mul(self) -> list:
        """``mul[i][j]`` is the index of ``elements[i] ∘ elements[j]``."""
        idx = self.index
        els = self.elements
        return [[idx[tuple([a[k] for k in b])] for b in els] for a in els]

    @cached_property
    def inv(self) -> list:
        idx = self.index
        return [idx[invert(e)] for e in self.elements]

    @cached_property
    def conj(self) -> list:
        """``conj[x][y]`` is the index of ``x y x⁻¹``."""
        mul, inv = self.mul, self.inv
        out = []
        for x in range(self.order):
            row = mul[x]
            xi = inv[x]
            out.append([mul[r][xi] for r in row])
        return out

    @cached_property
    def element_orders(self) -> list:
        mul = self.mul
        out = []
        for i in range(self.order):
            k, j = 1, i
            while j != 0:
                j = mul[j][i]
                k += 1
            out.append(k)
        return out

    def mask(self, H: "PermGroup | Iterable[Perm]") -> int:
        idx = self.index
        m = 0
        for e in H:
            m |= 1 << idx[e]
        return m

    def from_mask(self, mask: int) -> "PermGroup":
        els = self.elements
        return PermGroup.from_elements(self.degree, (els[i] for i in bits(mask)))

    def closure_indices(self, gens: Iterable[int]) -> list:
        """Sorted element indices of the subgroup generated by ``gens``."""
        mul = self.mul
        gens = [g for g in gens if g != 0]
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                row = mul[x]
                for g in gens:
                    y = row[g]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen)

    # --- subgroups --------------------------------------------------------

    def subgroup(self, generators: Iterable[Sequence[int]], name=None) -> "PermGroup":
        idx = []
        for g in generators:
            g = tuple(g)
            if g not in self.index:
                raise GroupError(f"{list(g)} is not an element of {self!r}")
            idx.append(self.index[g])
        els = self.elements
        H = PermGroup.from_elements(self.degree, (els[i] for i in self.closure_indices(idx)), name)
        return H

    def is_subgroup_of(self, G: "PermGroup") -> bool:
        return self.degree == G.degree and all(e in G.index for e in self.elements)

    def is_normal_in(self, G: "PermGroup") -> bool:
        return all(compose(compose(g, h), invert(g)) in self.index
                   for g in G.generators for h in self.generators)

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(compose(a, b) == compose(b, a) for a in gens for b in gens)

    def trivial_subgroup(self) -> "PermGroup":
        return PermGroup.from_elements(self.degree, [self.identity])


def bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _require_subgroup(H: PermGroup, G: PermGroup, what="subgroup"):
    if not H.is_subgroup_of(G):
        raise GroupError(f"{what} {H!r} is not contained in {G!r}")


# --- presets -----------------------------------------------------------------

def _preset(name: str) -> PermGroup:
    if name in ("trivial", "1", "C1"):
        return PermGroup(1, [], "1")
    if name == "V4":
        return PermGroup(4, [cycle(4, (0, 1), (2, 3)), cycle(4, (0, 2), (1, 3))], "V4")
    if name == "Q8":
        # regular representation on 8 points: i = [0..7] indexes ±1,±i,±j,±k
        i = cycle(8, (0, 2, 1, 3), (4, 6, 5, 7))
        j = cycle(8, (0, 4, 1, 5), (2, 7, 3, 6))
        return PermGroup(8, [i, j], "Q8")
    kind, num = name[0], name[1:]
    if kind in "CSAD" and num.isdigit():
        n = int(num)
        if kind == "C" and 1 <= n <= 30:
            return PermGroup(n, [tuple((k + 1) % n for k in range(n))] if n > 1 else [], name)
        if kind == "S" and 1 <= n <= 5:
            gens = [cycle(n, (0, 1)), tuple((k + 1) % n for k in range(n))] if n > 1 else []
            return PermGroup(n, gens, name)
        if kind == "A" and 1 <= n <= 5:
            gens = [cycle(n, (0, 1, k)) for k in range(2, n)]
            return PermGroup(n, gens, name)
        if kind == "D" and 1 <= n <= 12:
            # dihedral of order 2n acting on an n-gon (n ≥ 3); small n as abstract groups
            if n == 1:
                return PermGroup(2, [(1, 0)], name)
            if n == 2:
                return PermGroup(4, [cycle(4, (0, 1), (2, 3)), cycle(4, (0, 2), (1, 3))], name)
            rot = tuple((k + 1) % n for k in range(n))
            ref = tuple((-k) % n for k in range(n))
            return PermGroup(n, [rot, ref], name)
    raise GroupError(f"unknown group preset {name!r}")


def group_from_spec(spec) -> PermGroup:
    """Build a group from a preset name or a ``{"degree", "generators"}`` mapping."""
    if isinstance(spec, PermGroup):
        return spec
    if isinstance(spec, str):
        G = _preset(spec)
    else:
        G = PermGroup(int(spec["degree"]), spec.get("generators", []), spec.get("name"))
    if G.order > order_cap():
        raise GroupError(f"group order {G.order} exceeds cap {order_cap()}")
    return G


def group_to_spec(G: PermGroup) -> dict:
    out = {"degree": G.degree, "generators": [list(g) for g in G.generators]}
    if G.name:
        out["name"] = G.name
    return out


# --- homomorphisms -----------------------------------------------------------

class GroupHom:
    """Homomorphism given by its full element map."""

    KINDS = ("isomorphism", "epimorphism", "embedding", "homomorphism")

    def __init__(self, source: PermGroup, target: PermGroup, mapping: dict, kind="homomorphism"):
        self.source = source
        self.target = target
        self.mapping = mapping
        self.kind = kind

    @classmethod
    def from_generators(cls, source, target, images: dict, kind="homomorphism", check=True):
        mapping = {source.identity: target.identity}
        frontier = [source.identity]
        gens = list(images)
        while frontier:
            nxt = []
            for x in frontier:
                fx = mapping[x]
                for g in gens:
                    y = compose(g, x)
                    fy = compose(images[g], fx)
                    if y not in mapping:
                        mapping[y] = fy
                        nxt.append(y)
                    elif check and mapping[y] != fy:
                        raise GroupError("generator images do not define a homomorphism")
            frontier = nxt
        if len(mapping) != source.order:
            raise GroupError("images do not cover the source group")
        hom = cls(source, target, mapping, kind)
        if check:
            hom.check()
        return hom

    def __call__(self, g):
        return self.mapping[g]

    @property
    def images(self) -> dict:
        return {g: self.mapping[g] for g in self.source.generators}

    def check(self):
        t = self.target
        for v in self.mapping.values():
            if v not in t.index:
                raise GroupError("image outside target group")
        src = self.source
        for a in src.generators:
            fa = self.mapping[a]
            for b in src.elements:
                if self.mapping[compose(a, b)] != compose(fa, self.mapping[b]):
                    raise GroupError("map is not a homomorphism")
        imgs = set(self.mapping.values())
        if self.kind == "isomorphism" and not (len(imgs) == src.order == t.order):
            raise GroupError("isomorphism is not bijective")
        if self.kind == "epimorphism" and len(imgs) != t.order:
            raise GroupError("epimorphism is not surjective")
        if self.kind == "embedding" and len(imgs) != src.order:
            raise GroupError("embedding is not injective")

    def kernel(self) -> PermGroup:
        e = self.target.identity
        return PermGroup.from_elements(self.source.degree,
                                       [g for g, v in self.mapping.items() if v == e])

    def image(self, H: PermGroup | None = None) -> PermGroup:
        H = self.source if H is None else H
        return PermGroup.from_elements(self.target.degree, {self.mapping[h] for h in H})

    def inverse(self) -> "GroupHom":
        if self.kind != "isomorphism":
            raise GroupError("only isomorphisms can be inverted")
        return GroupHom(self.target, self.source, {v: k for k, v in self.mapping.items()},
                        "isomorphism")

    def then(self, other: "GroupHom") -> "GroupHom":
        """``other ∘ self``."""
        kind = "isomorphism" if self.kind == other.kind == "isomorphism" else "homomorphism"
        return GroupHom(self.source, other.target,
                        {g: other.mapping[v] for g, v in self.mapping.items()}, kind)

    def restrict(self, H: PermGroup) -> "GroupHom":
        kind = "embedding" if self.kind in ("isomorphism", "embedding") else "homomorphism"
        img = self.image(H)
        if kind == "embedding":
            kind = "isomorphism"
        return GroupHom(H, img, {h: self.mapping[h] for h in H}, kind)


def find_isomorphism(A: PermGroup, B: PermGroup) -> "GroupHom | None":
    """An isomorphism ``A → B`` by backtracking over generator images, or ``None``."""
    if A.order != B.order or sorted(A.element_orders) != sorted(B.element_orders):
        return None
    gens = list(A.generators)
    ords = [A.element_orders[A.index[g]] for g in gens]
    pools = [[b for i, b in enumerate(B.elements) if B.element_orders[i] == o] for o in ords]

    def search(k, images):
        if k == len(gens):
            try:
                return GroupHom.from_generators(A, B, images, "isomorphism")
            except GroupError:
                return None
        for b in pools[k]:
            images[gens[k]] = b
            found = search(k + 1, images)
            if found is not None:
                return found
        images.pop(gens[k], None)
        return None

    return search(0, {})


# --- products ----------------------------------------------------------------

def direct_product(G: PermGroup, H: PermGroup):
    """``G × H`` on the disjoint union of the two domains, with both projections.

    Elements are ``g + (h shifted)``; the lexicographic order makes the index of
    ``(g, h)`` equal to ``G.index[g] * |H| + H.index[h]``.
    """
    n = G.order * H.order
    if n > order_cap():
        raise GroupError(f"product order {n} exceeds cap {order_cap()}")
    return _direct_product(G, H)


_PRODUCTS: dict = {}


def _direct_product(G: PermGroup, H: PermGroup):
    key = (G, H)
    if key in _PRODUCTS:
        return _PRODUCTS[key]
    d = G.degree
    shift = [[x + d for x in h] for h in H.elements]
    els = [g + tuple(s) for g in G.elements for s in shift]
    P = PermGroup.from_elements(d + H.degree, els,
                                f"{G.name or 'G'}x{H.name or 'H'}")
    nH = H.order
    if "mul" not in P.__dict__:
        gm, hm = G.mul, H.mul
        rows = []
        for a in range(G.order):
            ga = gm[a]
            for b in range(nH):
                hb = hm[b]
                rows.append([ga[c] * nH + hb[e] for c in range(G.order) for e in range(nH)])
        P.__dict__["mul"] = rows
        gi, hi = G.inv, H.inv
        P.__dict__["inv"] = [gi[a] * nH + hi[b] for a in range(G.order) for b in range(nH)]
    p1 = GroupHom(P, G, {x: x[:d] for x in els}, "epimorphism")
    p2 = GroupHom(P, H, {x: tuple(v - d for v in x[d:]) for x in els}, "epimorphism")
    _PRODUCTS[key] = (P, p1, p2)
    return _PRODUCTS[key]


# --- cosets, quotients, conjugation -------------------------------------------

def double_cosets(G: PermGroup, A: PermGroup, B: PermGroup) -> list:
    """Minimal representatives of the double cosets ``A g B``, in index order."""
    _require_subgroup(A, G)
    _require_subgroup(B, G)
    mul = G.mul
    ai = [G.index[a] for a in A]
    bi = [G.index[b] for b in B]
    seen = bytearray(G.order)
    reps = []
    for g in range(G.order):
        if seen[g]:
            continue
        reps.append(G.elements[g])
        for a in ai:
            ag = mul[a][g]
            row = mul[ag]
            for b in bi:
                seen[row[b]] = 1
    return reps


def double_coset_indices(G: PermGroup, A_idx, B_idx) -> list:
    """Index version of :func:`double_cosets` (no containment checks)."""
    mul = G.mul
    seen = bytearray(G.order)
    reps = []
    for g in range(G.order):
        if seen[g]:
            continue
        reps.append(g)
        for a in A_idx:
            row = mul[mul[a][g]]
            for b in B_idx:
                seen[row[b]] = 1
    return reps


def left_transversal(G: PermGroup, H: PermGroup) -> list:
    """Minimal representatives of the left cosets ``gH``."""
    mul = G.mul
    hi = [G.index[h] for h in H]
    seen = bytearray(G.order)
    reps = []
    for g in range(G.order):
        if seen[g]:
            continue
        reps.append(g)
        row = mul[g]
        for h in hi:
            seen[row[h]] = 1
    return reps


_QUOTIENTS: dict = {}


def quotient_group(G: PermGroup, N: PermGroup):
    """``G/N`` acting on the left cosets of ``N``, with the natural epimorphism."""
    key = (G, N)
    if key in _QUOTIENTS:
        return _QUOTIENTS[key]
    _require_subgroup(N, G)
    if not N.is_normal_in(G):
        raise GroupError("subgroup is not normal")
    reps = left_transversal(G, N)
    mul = G.mul
    ni = [G.index[n] for n in N]
    coset_of = {}
    for c, r in enumerate(reps):
        for n in ni:
            coset_of[mul[r][n]] = c
    images = {}
    for g in G.elements:
        gi = G.index[g]
        images[g] = tuple(coset_of[mul[gi][r]] for r in reps)
    gname = G.name or "G"
    Q = PermGroup.from_elements(len(reps), set(images.values()),
                                f"{gname}/{N.name}" if N.name else None)
    hom = GroupHom(G, Q, images, "epimorphism")
    _QUOTIENTS[key] = (Q, hom)
    return Q, hom


def normalizer(G: PermGroup, H: PermGroup) -> PermGroup:
    _require_subgroup(H, G)
    conj = G.conj
    hi = [G.index[h] for h in H]
    hs = set(hi)
    out = [G.elements[g] for g in range(G.order) if all(conj[g][h] in hs for h in hi)]
    return PermGroup.from_elements(G.degree, out)


def conjugate_subgroup(g: Perm, H: PermGroup) -> PermGroup:
    gi = invert(g)
    return PermGroup.from_elements(H.degree, [compose(compose(g, h), gi) for h in H])


def conjugation_hom(g: Perm, H: PermGroup) -> GroupHom:
    """``c_g: H → gHg⁻¹``, ``h ↦ g h g⁻¹``."""
    gi = invert(g)
    mapping = {h: compose(compose(g, h), gi) for h in H}
    return GroupHom(H, PermGroup.from_elements(H.degree, mapping.values()), mapping,
                    "isomorphism")


def intersection(A: PermGroup, B: PermGroup) -> PermGroup:
    return PermGroup.from_elements(A.degree, [a for a in A if a in B.index])


def commutator_subgroup(G: PermGroup) -> PermGroup:
    comms = {compose(compose(a, b), compose(invert(a), invert(b)))
             for a in G.elements for b in G.elements}
    return G.subgroup(comms)
