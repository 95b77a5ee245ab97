"""Based coefficient functors: the constant functor and ``Hom(-, ℤ/n)``.

A functor is described through a finite basis of each value ``F(H)`` and the
action of a standard biset ``[P×Q/D]`` with ``p1(D) = P`` on basis labels.
Values are dicts ``{label: coeff}``; coefficients may be ``int`` or ``Fraction``.
"""

from __future__ import annotations

import itertools
import math
import random
from collections import Counter
from fractions import Fraction

from .bisets import BisetElement, compose_classes, defl, inf, iso, res, standard_basis
from .category import CategorySpec
from .groups import GroupError, GroupHom, PermGroup, commutator_subgroup, compose, quotient_group
from .products import ProductSubgroup


class FunctorError(GroupError):
    pass


def add_into(acc: dict, vec: dict, scale=1):
    for k, v in vec.items():
        c = acc.get(k, 0) + scale * v
        if c:
            acc[k] = c
        else:
            acc.pop(k, None)
    return acc


class BasedFunctor:
    """Interface; subclasses provide ``basis``, ``act_label``, ``mult_labels``, ``one``."""

    selector = ""
    conductor = 1

    def __init__(self):
        self.base_spec = CategorySpec.from_conditions({"p1"})

    def basis(self, H: PermGroup) -> tuple:
        raise NotImplementedError

    def act_label(self, D: ProductSubgroup, label) -> dict:
        raise NotImplementedError

    def conjugate_label(self, g, H: PermGroup, label):
        """Transport ``label ∈ F(H)`` along ``c_g: H → ^gH``."""
        raise NotImplementedError

    def mult_labels(self, H: PermGroup, a, b) -> dict:
        raise NotImplementedError

    def one(self, H: PermGroup):
        raise NotImplementedError

    # --- linear extensions -------------------------------------------------

    def _check(self, D):
        if D.p1_mask.bit_count() != D.left.order:
            raise FunctorError("functor defined only on classes with p1(D) = left group")

    def act(self, D: ProductSubgroup, value: dict) -> dict:
        self._check(D)
        out = {}
        for lab, c in value.items():
            add_into(out, self.act_label(D, lab), c)
        return out

    def act_biset(self, x: BisetElement, value: dict) -> dict:
        out = {}
        for D, c in x.terms.items():
            add_into(out, self.act(D, value), c)
        return out

    def value_mult(self, H: PermGroup, a: dict, b: dict) -> dict:
        out = {}
        for la, ca in a.items():
            for lb, cb in b.items():
                add_into(out, self.mult_labels(H, la, lb), ca * cb)
        return out

    def value_one(self, H: PermGroup):
        return self.one(H)

    def label_text(self, H: PermGroup, label) -> str:
        raise NotImplementedError

    def parse_label(self, H: PermGroup, text: str):
        raise NotImplementedError

    def label_json(self, H: PermGroup, label):
        raise NotImplementedError

    def label_from_json(self, H: PermGroup, obj):
        raise NotImplementedError

    def __repr__(self):
        return f"<functor {self.selector}>"


class ConstantFunctor(BasedFunctor):
    """``F(H) = ℤ`` with every biset (``p1`` surjective) acting as the identity.

    The single basis label is ``1``, the unit of ``ℤ``.
    """

    selector = "const"

    def basis(self, H):
        return (1,)

    def act_label(self, D, label):
        return {1: 1}

    def conjugate_label(self, g, H, label):
        return label

    def mult_labels(self, H, a, b):
        return {1: 1}

    def one(self, H):
        return 1

    def label_text(self, H, label):
        return "1"

    def parse_label(self, H, text):
        if text.strip() not in ("1", "*", "∗"):
            raise FunctorError(f"constant functor has the single label 1, got {text!r}")
        return 1

    def label_json(self, H, label):
        return 1

    def label_from_json(self, H, obj):
        if obj not in (1, "1", "*", "∗"):
            raise FunctorError("constant functor has the single label 1")
        return 1


# --- abelianization and Hom(H, Z/n) --------------------------------------------------

def _prime_factors(n):
    out, p = [], 2
    while p * p <= n:
        while n % p == 0:
            out.append(p)
            n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def invariant_factors_of_abelian(A: PermGroup) -> list:
    """Invariant factors ``d1 | d2 | ...`` of an abelian group, from element-order counts.

    For each prime ``p`` with ``p^a`` exactly dividing ``|A|``, the number of
    cyclic ``p``-parts of order at least ``p^k`` is ``n_k - n_{k-1}`` where
    ``p^{n_k} = |{x : x^{p^k} = 1}|``.
    """
    orders = A.element_orders
    parts = {}
    for p in sorted(set(_prime_factors(A.order))):
        a = round(math.log(_p_part(A.order, p), p))
        ns = [0]
        while ns[-1] < a:
            q = p ** len(ns)
            cnt = sum(1 for o in orders if q % o == 0)
            ns.append(round(math.log(cnt, p)))
        at_least = [ns[k] - ns[k - 1] for k in range(1, len(ns))] + [0]
        exps = []
        for k in range(1, len(ns)):
            exps += [k] * (at_least[k - 1] - at_least[k])
        parts[p] = sorted(exps, reverse=True)
    width = max((len(v) for v in parts.values()), default=0)
    facs = [1] * width
    for p, exps in parts.items():
        for i, e in enumerate(exps):
            facs[i] *= p ** e
    return sorted(facs)


def _p_part(n, p):
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def _cyclic_basis(A: PermGroup, facs: list):
    """Elements ``x_i`` of order ``facs[i]`` with ``A = ⟨x_1⟩ × ... × ⟨x_k⟩``."""
    orders = A.element_orders
    mul = A.mul

    def span(idx_list):
        return set(A.closure_indices(idx_list))

    def search(i, chosen, current):
        if i < 0:
            return chosen if len(current) == A.order else None
        d = facs[i]
        for x in range(A.order):
            if orders[x] != d:
                continue
            new = span(chosen + [x])
            if len(new) == len(current) * d:
                r = search(i - 1, [x] + chosen, new)
                if r is not None:
                    return r
        return None

    found = search(len(facs) - 1, [], {0})
    if found is None:
        raise GroupError("no cyclic basis found")
    return [A.elements[x] for x in found]


def abelianization(H: PermGroup):
    """``(invariant_factors, generators, projection)`` for ``H → H/[H,H]``.

    ``generators[i]`` is an element of ``H/[H,H]`` of order ``invariant_factors[i]``
    and the abelianization is the direct product of the cyclic groups they generate.
    """
    Hp = commutator_subgroup(H)
    Q, proj = quotient_group(H, Hp)
    facs = invariant_factors_of_abelian(Q)
    facs = [d for d in facs if d > 1]
    gens = _cyclic_basis(Q, facs) if facs else []
    return facs, gens, proj


def hom_group(H: PermGroup, n: int) -> list:
    """All homomorphisms ``H → ℤ/n`` as residue tuples over ``H.elements``.

    Found by assigning residues to the generators of ``H`` and extending; the
    count is checked against ``∏ gcd(d_i, n)`` over invariant factors.
    """
    if n < 1:
        raise FunctorError("modulus must be positive")
    return list(_homs(H, n))


_HOMS: dict = {}


def _homs(H, n):
    key = (H, n)
    if key in _HOMS:
        return _HOMS[key]
    gens = list(H.generators)
    idx = H.index
    mul = H.mul
    out = []
    for images in itertools.product(range(n), repeat=len(gens)):
        val = [None] * H.order
        val[0] = 0
        frontier = [0]
        ok = True
        gi = [idx[g] for g in gens]
        while frontier and ok:
            nxt = []
            for x in frontier:
                for g, r in zip(gi, images):
                    y = mul[g][x]
                    v = (r + val[x]) % n
                    if val[y] is None:
                        val[y] = v
                        nxt.append(y)
                    elif val[y] != v:
                        ok = False
                        break
                if not ok:
                    break
            frontier = nxt
        if ok and all(val[mul[a][b]] == (val[a] + val[b]) % n
                      for a in gi for b in range(H.order)):
            out.append(tuple(val))
    out = sorted(set(out))
    facs, _, _ = abelianization(H)
    expected = math.prod(math.gcd(d, n) for d in facs)
    if len(out) != expected:
        raise FunctorError("homomorphism count disagrees with abelianization")
    _HOMS[key] = tuple(out)
    return _HOMS[key]


class FiberedFunctor(BasedFunctor):
    """``F(H)`` free on ``Hom(H, ℤ/n)``.

    A class ``D`` with ``p1(D) = P`` sends ``φ`` to ``ψ(p) = φ(q)`` for
    ``(p, q) ∈ D`` when ``φ`` vanishes on ``k2(D)``, and to ``0`` otherwise.
    Labels are residue tuples indexed by ``H.elements``; products add pointwise.
    """

    def __init__(self, n: int):
        super().__init__()
        if n < 1:
            raise FunctorError("modulus must be positive")
        self.n = n
        self.selector = f"fibered:{n}"
        self.conductor = n
        self._act = {}
        self._conj = {}

    def basis(self, H):
        return _homs(H, self.n)

    def act_label(self, D, phi):
        key = (D, phi)
        out = self._act.get(key)
        if out is not None:
            return out
        if any(phi[b] for b in (y for x, y in D.index_pairs if x == 0)):
            out = {}
        else:
            psi = [0] * D.left.order
            for a, b in D.index_pairs:
                psi[a] = phi[b]
            out = {tuple(psi): 1}
        self._act[key] = out
        return out

    def conjugate_label(self, g, H, phi):
        """``(^gφ)(g h g⁻¹) = φ(h)``."""
        key = (g, H, phi)
        out = self._conj.get(key)
        if out is None:
            from .groups import conjugate_subgroup, invert
            K = conjugate_subgroup(g, H)
            gi = invert(g)
            hidx = H.index
            out = tuple(phi[hidx[compose(compose(gi, k), g)]] for k in K.elements)
            self._conj[key] = out
        return out

    def mult_labels(self, H, a, b):
        n = self.n
        return {tuple((x + y) % n for x, y in zip(a, b)): 1}

    def one(self, H):
        return (0,) * H.order

    def label_json(self, H, phi):
        return [phi[H.index[g]] for g in H.generators]

    def label_from_json(self, H, obj):
        imgs = [int(v) % self.n for v in obj]
        gens = list(H.generators)
        if len(imgs) != len(gens):
            raise FunctorError("label needs one residue per generator")
        for phi in self.basis(H):
            if all(phi[H.index[g]] == r for g, r in zip(gens, imgs)):
                return phi
        raise FunctorError("generator images do not define a homomorphism")

    def label_text(self, H, phi):
        return "(" + ",".join(str(v) for v in self.label_json(H, phi)) + ")"

    def parse_label(self, H, text):
        t = text.strip()
        if not (t.startswith("(") and t.endswith(")")):
            raise FunctorError(f"fibered label must look like (r1,r2,...), got {text!r}")
        body = t[1:-1].strip()
        vals = [int(v) for v in body.split(",")] if body else []
        return self.label_from_json(H, vals)


def functor_from_selector(sel: str) -> BasedFunctor:
    sel = sel.strip()
    if sel == "const":
        return ConstantFunctor()
    if sel.startswith("fibered:"):
        try:
            n = int(sel.split(":", 1)[1])
        except ValueError:
            raise FunctorError(f"bad functor selector {sel!r}") from None
        return FiberedFunctor(n)
    raise FunctorError(f"unknown functor selector {sel!r}")


def constant_functor() -> ConstantFunctor:
    return ConstantFunctor()


def fibered_functor(n: int) -> FiberedFunctor:
    return FiberedFunctor(n)


class FunctorElement:
    """An element of ``F(group)`` as ``{label: coeff}``."""

    __slots__ = ("group", "functor", "coeffs")

    def __init__(self, group, functor, coeffs=None):
        self.group = group
        self.functor = functor
        basis = set(functor.basis(group))
        self.coeffs = {}
        for k, v in (coeffs or {}).items():
            if k not in basis:
                raise FunctorError(f"label {k!r} is not a basis element of F(group)")
            if v:
                self.coeffs[k] = self.coeffs.get(k, 0) + v
        self.coeffs = {k: v for k, v in self.coeffs.items() if v}

    def __eq__(self, other):
        return (isinstance(other, FunctorElement) and self.group == other.group
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.group, frozenset(self.coeffs.items())))

    def __repr__(self):
        return f"FunctorElement({self.coeffs})"

    def to_json(self) -> dict:
        from .groups import group_to_spec
        f, G = self.functor, self.group
        return {"group": group_to_spec(G), "functor": f.selector,
                "coeffs": [{"label": f.label_json(G, k), "coeff": _num_json(v)}
                           for k, v in sorted(self.coeffs.items())]}

    @classmethod
    def from_json(cls, obj, functor=None) -> "FunctorElement":
        from .groups import group_from_spec
        G = group_from_spec(obj["group"])
        f = functor or functor_from_selector(obj.get("functor", "const"))
        coeffs = {}
        for t in obj["coeffs"]:
            lab = f.label_from_json(G, t["label"])
            coeffs[lab] = coeffs.get(lab, 0) + _num_from_json(t["coeff"])
        return cls(G, f, coeffs)


def _num_json(v):
    if isinstance(v, Fraction):
        return str(v) if v.denominator != 1 else int(v)
    return v


def _num_from_json(v):
    if isinstance(v, str):
        f = Fraction(v)
        return int(f) if f.denominator == 1 else f
    return v


# --- law checks ---------------------------------------------------------------------

def _p1_full(D):
    return D.p1_mask.bit_count() == D.left.order


def check_functor_laws(F: BasedFunctor, groups, budget: int = 500, seed: int = 0,
                       exhaustive_order: int = 8) -> dict:
    """Identity, composition and Green laws on the given groups.

    Composition is checked on every pair of standard classes (``p1`` full)
    for triples of groups of order ≤ ``exhaustive_order``, and on ``budget``
    seeded samples for the remaining triples.
    """
    rng = random.Random(seed)
    report = {"identity": [0, []], "composition": [0, []], "green": [0, []]}

    def rec(name, ok, wit):
        report[name][0] += 1
        if not ok and len(report[name][1]) < 5:
            report[name][1].append(wit)

    bases = {}

    def classes(G, H):
        if (G, H) not in bases:
            bases[(G, H)] = [D for D in standard_basis(G, H) if _p1_full(D)]
        return bases[(G, H)]

    for G in groups:
        Dg = ProductSubgroup.diagonal(G, G)
        for b in F.basis(G):
            rec("identity", F.act_label(Dg, b) == {b: 1}, (G.order, b))

    def check_pair(D, E):
        for b in F.basis(E.right):
            lhs = {}
            for S, m in compose_classes(D, E).items():
                add_into(lhs, F.act(S, {b: 1}), m)
            rhs = F.act(D, F.act(E, {b: 1}))
            rec("composition", lhs == rhs, (D.left.order, D.right.order, E.right.order, b))

    small = [G for G in groups if G.order <= exhaustive_order]
    for G in small:
        for H in small:
            for K in small:
                for D in classes(G, H):
                    for E in classes(H, K):
                        check_pair(D, E)
    big = [(G, H, K) for G in groups for H in groups for K in groups
           if max(G.order, H.order, K.order) > exhaustive_order]
    for _ in range(budget if big else 0):
        G, H, K = rng.choice(big)
        check_pair(rng.choice(classes(G, H)), rng.choice(classes(H, K)))

    # Green laws: associativity, commutativity, unit; restriction, inflation and
    # isogation are ring maps.
    from .lattice import enumerate_subgroups
    for G in groups:
        B = F.basis(G)
        one = {F.one(G): 1}
        for a in B:
            rec("green", F.value_mult(G, one, {a: 1}) == {a: 1}, ("unit", G.order, a))
            for b in B:
                ab = F.value_mult(G, {a: 1}, {b: 1})
                rec("green", ab == F.value_mult(G, {b: 1}, {a: 1}), ("comm", G.order, a, b))
                for c in B[:4]:
                    lhs = F.value_mult(G, ab, {c: 1})
                    rhs = F.value_mult(G, {a: 1}, F.value_mult(G, {b: 1}, {c: 1}))
                    rec("green", lhs == rhs, ("assoc", G.order, a, b, c))
        lat = enumerate_subgroups(G)
        maps = [next(iter(res(G, H).terms)) for H in lat.subgroups]
        for N in lat.subgroups:
            if N.is_normal_in(G):
                maps.append(next(iter(inf(G, N).terms)))
        for D in maps:
            P, Q = D.left, D.right
            rec("green", F.act(D, {F.one(Q): 1}) == {F.one(P): 1}, ("unit-map", P.order, Q.order))
            for a in F.basis(Q):
                for b in F.basis(Q):
                    lhs = F.act(D, F.value_mult(Q, {a: 1}, {b: 1}))
                    rhs = F.value_mult(P, F.act(D, {a: 1}), F.act(D, {b: 1}))
                    rec("green", lhs == rhs, ("ring-map", P.order, Q.order, a, b))
    return {k: {"checked": v[0], "failures": v[1], "pass": not v[1]} for k, v in report.items()}


class CorruptedFunctor(BasedFunctor):
    """Wraps a functor and perturbs one action (mutation testing of the law checks)."""

    def __init__(self, base: BasedFunctor, bad_order: int = 2):
        super().__init__()
        self.base = base
        self.selector = base.selector + "+corrupt"
        self.bad_order = bad_order

    def basis(self, H):
        return self.base.basis(H)

    def act_label(self, D, label):
        out = self.base.act_label(D, label)
        if D.order == self.bad_order and D.left.order == D.right.order == self.bad_order \
                and D.k1_mask != 1:
            return {k: 2 * v for k, v in out.items()}
        return out

    def conjugate_label(self, g, H, label):
        return self.base.conjugate_label(g, H, label)

    def mult_labels(self, H, a, b):
        return self.base.mult_labels(H, a, b)

    def one(self, H):
        return self.base.one(H)


__all__ = [
    "FunctorError", "BasedFunctor", "ConstantFunctor", "FiberedFunctor", "FunctorElement",
    "abelianization", "hom_group", "invariant_factors_of_abelian", "functor_from_selector",
    "constant_functor", "fibered_functor", "check_functor_laws", "CorruptedFunctor", "add_into",
]
