"""The ghost module ``F⁺(G) = (∏_H F(H))^G``.

A :class:`GhostElement` stores one component per subgroup-class
representative ``H₀``; the component must be fixed by ``N_G(H₀)`` and the full
tuple is recovered by ``a_{^gH} = ^g a_H`` (:func:`ghost_expand`).
"""

from __future__ import annotations

from .bisets import BisetElement
from .category import s_upper_member
from .functors import BasedFunctor, FunctorError, add_into
from .groups import GroupError, PermGroup, invert, left_transversal
from .lattice import enumerate_subgroups
from .products import ProductSubgroup, restrict_left, star_left


def _conj_vec(F, g, H, vec: dict) -> dict:
    out = {}
    for lab, c in vec.items():
        add_into(out, {F.conjugate_label(g, H, lab): 1}, c)
    return out


class GhostElement:
    """Components ``{H₀: {label: coeff}}`` over subgroup-class representatives."""

    __slots__ = ("group", "functor", "components")

    def __init__(self, group: PermGroup, functor: BasedFunctor, components=None, check=True):
        self.group = group
        self.functor = functor
        lat = enumerate_subgroups(group)
        reps = set(lat.representatives)
        comps = {}
        for H, vec in (components or {}).items():
            if H not in reps:
                raise GroupError("ghost components are indexed by class representatives")
            vec = {k: v for k, v in vec.items() if v}
            if vec:
                comps[H] = vec
        self.components = comps
        if check:
            self.check_fixed()

    def component(self, H: PermGroup) -> dict:
        return self.components.get(H, {})

    def check_fixed(self):
        lat = enumerate_subgroups(self.group)
        F = self.functor
        for i in lat.class_reps:
            H = lat.subgroups[i]
            vec = self.components.get(H)
            if not vec:
                continue
            for n in lat.normalizer(i).generators:
                if _conj_vec(F, n, H, vec) != vec:
                    raise FunctorError("ghost component is not fixed by the normalizer")

    def _same(self, other):
        if not isinstance(other, GhostElement) or other.group != self.group \
                or other.functor.selector != self.functor.selector:
            raise GroupError("ghost elements over different groups or functors")

    def __add__(self, other):
        self._same(other)
        comps = {H: dict(v) for H, v in self.components.items()}
        for H, v in other.components.items():
            add_into(comps.setdefault(H, {}), v)
        return GhostElement(self.group, self.functor, comps, check=False)

    def __neg__(self):
        return GhostElement(self.group, self.functor,
                            {H: {k: -c for k, c in v.items()} for H, v in self.components.items()},
                            check=False)

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k):
        return GhostElement(self.group, self.functor,
                            {H: {l: k * c for l, c in v.items()} for H, v in self.components.items()},
                            check=False)

    def __mul__(self, other):
        if isinstance(other, GhostElement):
            return ghost_mult(self, other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, GhostElement):
            return NotImplemented
        return (self.group == other.group and self.functor.selector == other.functor.selector
                and self.components == other.components)

    def __hash__(self):
        return hash((self.group, frozenset((H, frozenset(v.items()))
                                           for H, v in self.components.items())))

    def __repr__(self):
        from .serialize import render_ghost
        return render_ghost(self)


def ghost_expand(x: GhostElement) -> dict:
    """The full tuple ``{H: a_H}`` over every subgroup ``H ≤ G``."""
    G, F = x.group, x.functor
    lat = enumerate_subgroups(G)
    out = {}
    for i, H in enumerate(lat.subgroups):
        rep = lat.subgroups[lat.class_reps[lat.class_of[i]]]
        vec = x.components.get(rep, {})
        if H == rep:
            out[H] = dict(vec)
        else:
            # to_rep[i] sends H onto rep, so a_H = ^{g⁻¹} a_rep
            g = G.elements[lat.to_rep[i]]
            out[H] = _conj_vec(F, invert(g), rep, vec)
    return out


def ghost_compress(G: PermGroup, F: BasedFunctor, full: dict) -> GhostElement:
    lat = enumerate_subgroups(G)
    return GhostElement(G, F, {H: full.get(H, {}) for H in lat.representatives})


def ghost_unit(G: PermGroup, F: BasedFunctor) -> GhostElement:
    return GhostElement(G, F, {H: {F.one(H): 1} for H in enumerate_subgroups(G).representatives})


def ghost_mult(x: GhostElement, y: GhostElement) -> GhostElement:
    x._same(y)
    F = x.functor
    comps = {}
    for H, a in x.components.items():
        b = y.components.get(H)
        if b:
            comps[H] = F.value_mult(H, a, b)
    return GhostElement(x.group, F, comps, check=False)


def _check_upper(F, D, right_free=True):
    if right_free and D.k2_mask != 1:
        raise FunctorError("ghost action needs right-free classes (k2 trivial)")
    if not s_upper_member(F.base_spec, D):
        raise FunctorError("biset class is not in the upper closure of the functor's category")


def ghost_act_class(D: ProductSubgroup, x: GhostElement, right_free=True) -> dict:
    """``F⁺([G×H/D])(x)`` as a full tuple over class representatives of ``G``.

    The ``H``-orbits of ``(G×H)/D`` are represented by ``u = (g,1)D`` for
    ``g ∈ [G/p1(D)]``, with stabilizer ``^(g,1)D``.  ``right_free=False``
    evaluates the same formula on a class with nontrivial ``k2``; the result is
    not a functor action and only serves to exhibit the deflation failure.
    """
    G, H = D.left, D.right
    F = x.functor
    _check_upper(F, D, right_free)
    full = ghost_expand(x)
    lat = enumerate_subgroups(G)
    P1 = D.p1
    reps = left_transversal(G, P1)
    stabs = [D.conjugate(g, 0) for g in reps]
    out = {}
    for K in lat.representatives:
        kmask = G.mask(K)
        acc = {}
        for S in stabs:
            if kmask & S.p1_mask != kmask:
                continue
            Ku = star_left(K, S)
            R = restrict_left(K, S)
            add_into(acc, F.act(R, full.get(Ku, {})))
        if acc:
            out[K] = acc
    return out


def ghost_act(U: BisetElement, x: GhostElement, right_free=True) -> GhostElement:
    """Apply ``F⁺(U)`` to ``x ∈ F⁺(H)`` for right-free ``U ∈ B(G, H)``."""
    if U.right != x.group:
        raise GroupError("biset and ghost element live over different groups")
    comps = {}
    for D, c in U.terms.items():
        for K, vec in ghost_act_class(D, x, right_free).items():
            add_into(comps.setdefault(K, {}), vec, c)
    return GhostElement(U.left, x.functor, comps, check=False)


__all__ = ["GhostElement", "ghost_expand", "ghost_compress", "ghost_unit", "ghost_mult",
           "ghost_act", "ghost_act_class"]
