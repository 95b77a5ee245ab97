"""Species (ring homomorphisms to ``ℚ(ζ_n)``) of ``F₊(G)``.

A species is given by a subgroup-class representative ``H`` and a character
``τ`` of the value ring ``F(H)``; it evaluates ``x`` as ``τ`` of the
``H``-component of the mark of ``x``.  For the constant functor ``τ`` is the
identity of ``ℤ``; for ``Hom(-, ℤ/n)`` the characters of the group ring
``ℤ[Hom(H, ℤ/n)]`` are ``φ ↦ ζ_n^{φ(h)}`` for ``h ∈ H``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import Cyclotomic, rank, root_of_unity
from .functors import BasedFunctor, ConstantFunctor, FiberedFunctor
from .groups import PermGroup
from .lattice import enumerate_subgroups
from .mark import mark, mark_key
from .plus import PlusElement, plus_mult, plus_ring


@dataclass(frozen=True)
class SpeciesDescriptor:
    """``(H, τ)``: ``H`` a class representative, ``τ`` given by exponents per basis label."""

    group: PermGroup
    subgroup: PermGroup
    element: tuple | None  # the element h defining τ (None for the constant functor)
    exponents: tuple       # τ(φ) = ζ^{exponents[i]} for the i-th basis label of F(H)
    conductor: int

    def tau(self, F: BasedFunctor, vec: dict) -> Cyclotomic:
        basis = F.basis(self.subgroup)
        pos = {b: i for i, b in enumerate(basis)}
        n = self.conductor
        acc = Cyclotomic(n)
        for lab, c in vec.items():
            acc = acc + c * root_of_unity(self.exponents[pos[lab]], n)
        return acc


def characters(F: BasedFunctor, H: PermGroup) -> list:
    """Distinct characters of ``F(H)`` as ``(h, exponent tuple)``."""
    if isinstance(F, ConstantFunctor):
        return [(None, (0,))]
    if isinstance(F, FiberedFunctor):
        basis = F.basis(H)
        seen = {}
        for h in H.elements:
            i = H.index[h]
            exps = tuple(phi[i] for phi in basis)
            seen.setdefault(exps, h)
        return [(h, e) for e, h in sorted(seen.items(), key=lambda t: H.index[t[1]])]
    raise TypeError("species are implemented for the constant and fibered functors")


def enumerate_species(G: PermGroup, F: BasedFunctor) -> list:
    """One descriptor per ``G``-orbit of pairs ``(H, τ)``."""
    from .groups import invert
    lat = enumerate_subgroups(G)
    out = []
    for i in lat.class_reps:
        H = lat.subgroups[i]
        chars = characters(F, H)
        if isinstance(F, ConstantFunctor):
            out.append(SpeciesDescriptor(G, H, None, (0,), 1))
            continue
        basis = F.basis(H)
        pos = {b: j for j, b in enumerate(basis)}
        N = lat.normalizer(i)
        done = set()
        for h, exps in chars:
            if exps in done:
                continue
            # the N_G(H)-orbit of τ: (^nτ)(φ) = τ(^{n⁻¹}φ)
            for n in N:
                ni = invert(n)
                moved = tuple(exps[pos[F.conjugate_label(ni, H, phi)]] for phi in basis)
                done.add(moved)
            out.append(SpeciesDescriptor(G, H, h, exps, F.conductor))
    return out


def evaluate_species(s: SpeciesDescriptor, F: BasedFunctor, x: PlusElement) -> Cyclotomic:
    if x.group != s.group:
        raise ValueError("species and element live over different groups")
    comp = mark(x).component(s.subgroup)
    return s.tau(F, comp)


def evaluation_matrix(G: PermGroup, F: BasedFunctor):
    """Rows: species; columns: the canonical basis of ``F₊(G)``."""
    species = enumerate_species(G, F)
    basis = plus_ring(G, F).canonical_basis()
    rows = []
    for s in species:
        rows.append([s.tau(F, mark_key(G, F, K, a).get(s.subgroup, {})) for K, a in basis])
    return species, basis, rows


def check_species_theorem(G: PermGroup, F: BasedFunctor) -> dict:
    """Unital and multiplicative on products of canonical generators; distinct; count = rank."""
    ring = plus_ring(G, F)
    species, basis, rows = evaluation_matrix(G, F)
    gens = [ring.generator(K, a) for K, a in basis]
    unit = ring.unit()
    failures = []
    for s, row in zip(species, rows):
        if evaluate_species(s, F, unit) != 1:
            failures.append(("unit", s.subgroup.order))
        for i, x in enumerate(gens):
            for j in range(i, len(gens)):
                prod = plus_mult(x, gens[j])
                if evaluate_species(s, F, prod) != row[i] * row[j]:
                    failures.append(("mult", s.subgroup.order, i, j))
    distinct = len({tuple(r) for r in rows}) == len(rows)
    r = rank(rows)
    full = r == len(basis) == len(species)
    return {"species": len(species), "rank": len(basis), "matrix_rank": r,
            "multiplicative": not failures, "distinct": distinct, "nonsingular": full,
            "failures": failures[:5], "pass": not failures and distinct and full}


__all__ = ["SpeciesDescriptor", "characters", "enumerate_species", "evaluate_species",
           "evaluation_matrix", "check_species_theorem"]
