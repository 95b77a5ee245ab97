"""Subgroup enumeration, conjugacy classes and the Möbius function.

Subgroups of a group ``G`` are handled internally as bitmasks over
``G.elements``.  The canonical key of a subgroup is its sorted index tuple;
lattice order is ``(order, key)`` and a class representative is the member of
minimal key.
"""

from __future__ import annotations

from functools import cached_property

from .groups import GroupError, PermGroup, bits, order_cap


def key_less(a: int, b: int) -> bool:
    """Sorted-index-tuple order on equal-size masks: lowest differing bit wins."""
    d = a ^ b
    return bool(d & -d & a)


def mask_key(mask: int) -> tuple:
    return tuple(bits(mask))


def conjugate_mask(G: PermGroup, x: int, mask: int) -> int:
    c = G.conj[x]
    m = 0
    for i in bits(mask):
        m |= 1 << c[i]
    return m


_CANON: dict = {}


def canonical_mask(G: PermGroup, mask: int) -> int:
    """Class representative (minimal key) of the conjugacy class of ``mask``."""
    table = _CANON.setdefault(G, {})
    rep = table.get(mask)
    if rep is not None:
        return rep
    conj = G.conj
    idx = list(bits(mask))
    orbit = {mask}
    for x in range(1, G.order):
        c = conj[x]
        m = 0
        for i in idx:
            m |= 1 << c[i]
        orbit.add(m)
    rep = mask
    for m in orbit:
        if key_less(m, rep):
            rep = m
    for m in orbit:
        table[m] = rep
    return rep


def conjugacy_orbit(G: PermGroup, mask: int) -> list:
    """All conjugates of a subgroup mask, sorted by key."""
    conj = G.conj
    idx = list(bits(mask))
    orbit = set()
    for x in range(G.order):
        c = conj[x]
        m = 0
        for i in idx:
            m |= 1 << c[i]
        orbit.add(m)
    return sorted(orbit, key=mask_key)


def _class_reps(G: PermGroup):
    """Representatives of all conjugacy classes of subgroups, with generators.

    Every subgroup other than ``1`` is ``<S, x>`` for a proper subgroup ``S``;
    conjugating ``S`` onto its representative shows that joining each class
    representative with each cyclic subgroup reaches every class.
    """
    mul = G.mul
    cyclic_gens = {}
    for x in range(1, G.order):
        m = 0
        j = x
        while True:
            m |= 1 << j
            if j == 0:
                break
            j = mul[j][x]
        cyclic_gens.setdefault(m, x)
    cyclics = sorted(cyclic_gens.items(), key=lambda t: t[0].bit_count())
    reps = {1: ()}
    queue = [(1, ())]
    while queue:
        nxt = []
        for smask, sgens in queue:
            for cmask, x in cyclics:
                if cmask & smask == cmask:
                    continue
                gens = sgens + (x,)
                tmask = 0
                for i in G.closure_indices(gens):
                    tmask |= 1 << i
                rep = canonical_mask(G, tmask)
                if rep in reps:
                    continue
                if rep != tmask:
                    # conjugator sending tmask to rep
                    for y in range(G.order):
                        if conjugate_mask(G, y, tmask) == rep:
                            break
                    c = G.conj[y]
                    gens = tuple(c[g] for g in gens)
                reps[rep] = _thin_gens(G, gens, rep)
                nxt.append((rep, reps[rep]))
        queue = nxt
    return reps


def _thin_gens(G, gens, target_mask):
    out = []
    have = 1
    for g in gens:
        if not have >> g & 1:
            out.append(g)
            have = 0
            for i in G.closure_indices(out):
                have |= 1 << i
            if have == target_mask:
                break
    return tuple(out)


def popcount(m: int) -> int:
    return m.bit_count()


class SubgroupLattice:
    """All subgroups of ``parent`` with conjugacy classes and Möbius function."""

    def __init__(self, parent: PermGroup):
        if parent.order > order_cap():
            raise GroupError(f"group order {parent.order} exceeds cap {order_cap()}")
        self.parent = parent
        reps = _class_reps(parent)
        rep_masks = sorted(reps, key=lambda m: (popcount(m), mask_key(m)))
        allmasks = []
        owner = {}
        for r in rep_masks:
            for m in conjugacy_orbit(parent, r):
                owner[m] = r
                allmasks.append(m)
        allmasks.sort(key=lambda m: (popcount(m), mask_key(m)))
        self.masks = allmasks
        self.position = {m: i for i, m in enumerate(allmasks)}
        self.class_reps = [self.position[r] for r in rep_masks]
        rep_class = {r: c for c, r in enumerate(rep_masks)}
        self.class_of = [rep_class[owner[m]] for m in allmasks]
        self.classes = [[] for _ in rep_masks]
        for i, c in enumerate(self.class_of):
            self.classes[c].append(i)
        self._rep_gens = reps

    def __len__(self):
        return len(self.masks)

    @cached_property
    def subgroups(self) -> list:
        return [self.parent.from_mask(m) for m in self.masks]

    def index_of(self, H: PermGroup) -> int:
        return self.position[self.parent.mask(H)]

    def rep_of(self, H: PermGroup) -> PermGroup:
        """Class representative of the conjugacy class of ``H``."""
        return self.subgroups[self.class_reps[self.class_of[self.index_of(H)]]]

    @property
    def representatives(self) -> list:
        return [self.subgroups[i] for i in self.class_reps]

    @cached_property
    def to_rep(self) -> list:
        """``to_rep[i]``: minimal element index ``g`` with ``g H_i g⁻¹`` the class rep."""
        G = self.parent
        out = [None] * len(self.masks)
        for i, m in enumerate(self.masks):
            rep = self.masks[self.class_reps[self.class_of[i]]]
            for g in range(G.order):
                if conjugate_mask(G, g, m) == rep:
                    out[i] = g
                    break
        return out

    @cached_property
    def normalizers(self) -> dict:
        """``N_G(H)`` for each class representative index."""
        from .groups import normalizer
        return {i: normalizer(self.parent, self.subgroups[i]) for i in self.class_reps}

    def normalizer(self, i: int) -> PermGroup:
        if i in self.normalizers:
            return self.normalizers[i]
        from .groups import normalizer
        return normalizer(self.parent, self.subgroups[i])

    @cached_property
    def below(self) -> list:
        """``below[j]``: indices ``i`` with ``H_i ≤ H_j``."""
        ms = self.masks
        return [[i for i in range(j + 1) if ms[i] & mj == ms[i]] for j, mj in enumerate(ms)]

    def contains(self, i: int, j: int) -> bool:
        """``H_i ≤ H_j``."""
        return self.masks[i] & self.masks[j] == self.masks[i]

    @cached_property
    def mobius_table(self) -> dict:
        """``mobius_table[(i, j)] = μ(H_i, H_j)`` for ``H_i ≤ H_j``."""
        mu = {}
        below = self.below
        for j in range(len(self.masks)):
            for i in below[j]:
                if i == j:
                    mu[(i, j)] = 1
        # μ(L, K) = −Σ_{L ≤ M < K} μ(L, M), K processed in increasing order
        for j in range(len(self.masks)):
            bj = below[j]
            for i in bj:
                if i == j:
                    continue
                s = 0
                for m in bj:
                    if m != j and (i, m) in mu:
                        s += mu[(i, m)]
                mu[(i, j)] = -s
        return mu

    def mobius(self, L, K) -> int:
        i = L if isinstance(L, int) else self.index_of(L)
        j = K if isinstance(K, int) else self.index_of(K)
        if not self.contains(i, j):
            raise GroupError("mobius(L, K) requires L ≤ K")
        return self.mobius_table[(i, j)]

    def sigma_g(self, admissible=None) -> list:
        """Indices of subgroups satisfying ``admissible`` (all if ``None``)."""
        if admissible is None:
            return list(range(len(self.masks)))
        return [i for i, H in enumerate(self.subgroups) if admissible(H)]

    def to_json(self) -> dict:
        from .groups import group_to_spec
        G = self.parent
        return {
            "group": group_to_spec(G),
            "subgroups": [
                {"index": i, "order": popcount(m),
                 "generators": [list(G.elements[g]) for g in _thin_gens(G, tuple(bits(m)), m)],
                 "class": self.class_of[i]}
                for i, m in enumerate(self.masks)
            ],
            "classes": [{"representative": self.class_reps[c], "members": members,
                         "normalizer_order": self.normalizer(self.class_reps[c]).order}
                        for c, members in enumerate(self.classes)],
            "mobius": [[i, j, v] for (i, j), v in sorted(self.mobius_table.items())],
        }


_LATTICES: dict = {}


def enumerate_subgroups(G: PermGroup) -> SubgroupLattice:
    lat = _LATTICES.get(G)
    if lat is None:
        lat = _LATTICES[G] = SubgroupLattice(G)
    return lat


_REP_MASKS: dict = {}


def class_rep_masks(G: PermGroup) -> list:
    """Class representative masks only, sorted by ``(order, key)``; no full lattice."""
    out = _REP_MASKS.get(G)
    if out is None:
        out = _REP_MASKS[G] = sorted(_class_reps(G), key=lambda m: (popcount(m), mask_key(m)))
    return out


def mobius(lattice: SubgroupLattice, L, K) -> int:
    return lattice.mobius(L, K)


def sigma_g(lattice: SubgroupLattice, admissible=None) -> list:
    return [lattice.subgroups[i] for i in lattice.sigma_g(admissible)]
