"""JSON readers/writers and text rendering for every element type.

Every JSON document carries ``"schema": "bisetplus/1"``.  Subgroups are given
by generator lists; product subgroups by lists of ``[g, h]`` pairs.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .bisets import BisetElement
from .functors import FunctorElement, functor_from_selector
from .ghost import GhostElement
from .groups import GroupError, PermGroup, group_from_spec, group_to_spec
from .lattice import enumerate_subgroups
from .plus import PlusElement
from .products import ProductSubgroup

SCHEMA = "bisetplus/1"


def num_json(v):
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else str(v)
    return v


def num_from_json(v):
    if isinstance(v, str):
        f = Fraction(v)
        return int(f) if f.denominator == 1 else f
    if isinstance(v, bool) or not isinstance(v, int):
        raise GroupError(f"coefficient must be an integer or a fraction string, got {v!r}")
    return v


def subgroup_json(H: PermGroup) -> list:
    return [list(g) for g in H.generators]


def subgroup_from_json(G: PermGroup, gens) -> PermGroup:
    return G.subgroup([tuple(g) for g in gens])


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)


# --- biset elements -------------------------------------------------------------------

def biset_to_json(x: BisetElement) -> dict:
    terms = []
    for D, c in sorted(x.terms.items(), key=lambda t: (t[0].order, t[0].codes)):
        gens = _product_gens(D)
        terms.append({"subgroup_generators": [[list(g), list(h)] for g, h in gens], "coeff": c})
    return {"schema": SCHEMA, "left": group_to_spec(x.left), "right": group_to_spec(x.right),
            "terms": terms}


def _product_gens(D: ProductSubgroup):
    from .groups import _direct_product
    P = _direct_product(D.left, D.right)[0]
    nH = D.right.order
    gens, have = [], {0}
    for c in D.codes:
        if c not in have:
            gens.append(c)
            have = set(P.closure_indices(gens))
            if len(have) == D.order:
                break
    ge, he = D.left.elements, D.right.elements
    return [(ge[c // nH], he[c % nH]) for c in gens]


def biset_from_json(obj) -> BisetElement:
    G = group_from_spec(obj["left"])
    H = group_from_spec(obj["right"])
    terms = {}
    for t in obj["terms"]:
        D = ProductSubgroup.generate(G, H, [(tuple(g), tuple(h)) for g, h in t["subgroup_generators"]])
        D = D.canonical()
        terms[D] = terms.get(D, 0) + int(t["coeff"])
    return BisetElement(G, H, terms)


# --- plus elements --------------------------------------------------------------------

def _key_order(G, key):
    H, lab = key
    lat = enumerate_subgroups(G)
    return (lat.index_of(H), str(lab))


def plus_to_json(x: PlusElement) -> dict:
    G, F = x.group, x.functor
    terms = [{"subgroup_generators": subgroup_json(H), "basis_label": F.label_json(H, lab),
              "coeff": num_json(c)}
             for (H, lab), c in sorted(x.terms.items(), key=lambda t: _key_order(G, t[0]))]
    return {"schema": SCHEMA, "group": group_to_spec(G), "functor": F.selector, "terms": terms}


def plus_from_json(obj, functor=None) -> PlusElement:
    G = group_from_spec(obj["group"])
    F = functor or functor_from_selector(obj["functor"])
    terms = {}
    for t in obj["terms"]:
        H = subgroup_from_json(G, t["subgroup_generators"])
        lab = F.label_from_json(H, t["basis_label"])
        terms[(H, lab)] = terms.get((H, lab), 0) + num_from_json(t["coeff"])
    return PlusElement(G, F, terms)


# --- ghost elements -------------------------------------------------------------------

def _vec_json(F, H, vec):
    if F.selector == "const":
        return num_json(vec.get(1, 0))
    return [{"label": F.label_json(H, lab), "coeff": num_json(c)} for lab, c in sorted(vec.items())]


def _vec_from_json(F, H, val):
    if isinstance(val, list):
        out = {}
        for t in val:
            lab = F.label_from_json(H, t["label"])
            out[lab] = out.get(lab, 0) + num_from_json(t["coeff"])
        return out
    v = num_from_json(val)
    if F.selector != "const":
        raise GroupError("scalar ghost values are only meaningful for the constant functor")
    return {1: v} if v else {}


def ghost_to_json(x: GhostElement) -> dict:
    G, F = x.group, x.functor
    comps = [{"subgroup_generators": subgroup_json(H), "value": _vec_json(F, H, x.component(H))}
             for H in enumerate_subgroups(G).representatives]
    return {"schema": SCHEMA, "group": group_to_spec(G), "functor": F.selector,
            "components": comps}


def ghost_from_json(obj, functor=None) -> GhostElement:
    G = group_from_spec(obj["group"])
    F = functor or functor_from_selector(obj["functor"])
    lat = enumerate_subgroups(G)
    comps = {}
    for c in obj["components"]:
        H = subgroup_from_json(G, c["subgroup_generators"])
        if H not in set(lat.representatives):
            raise GroupError("ghost components must be given at class representatives")
        comps[H] = _vec_from_json(F, H, c["value"])
    return GhostElement(G, F, comps)


def functor_element_to_json(a: FunctorElement) -> dict:
    out = a.to_json()
    out["schema"] = SCHEMA
    return out


def functor_element_from_json(obj) -> FunctorElement:
    return FunctorElement.from_json(obj)


# --- text rendering -------------------------------------------------------------------

def subgroup_text(G: PermGroup, H: PermGroup) -> str:
    if H == G and G.name:
        return G.name
    return str(enumerate_subgroups(G).index_of(H))


def _coeff_text(c):
    return str(c)


def render_plus(x: PlusElement) -> str:
    if not x.terms:
        return "0"
    G, F = x.group, x.functor
    parts = []
    for (H, lab), c in sorted(x.terms.items(), key=lambda t: _key_order(G, t[0])):
        term = f"[{subgroup_text(G, H)}:{F.label_text(H, lab)}]"
        if c != 1:
            term += f"*{_coeff_text(c)}"
        parts.append(term)
    return " + ".join(parts)


def vec_text(F, H, vec) -> str:
    if not vec:
        return "0"
    if F.selector == "const":
        return _coeff_text(vec.get(1, 0))
    parts = []
    for lab, c in sorted(vec.items()):
        t = F.label_text(H, lab)
        parts.append(t if c == 1 else f"{t}*{_coeff_text(c)}")
    return " + ".join(parts)


def render_ghost(x: GhostElement) -> str:
    G, F = x.group, x.functor
    lat = enumerate_subgroups(G)
    return "\t".join(vec_text(F, H, x.component(H)) for H in lat.representatives)


def parse_plus_literal(G: PermGroup, F, text: str) -> PlusElement:
    """Parse ``"H:label*coeff + H:label + ..."``; ``H`` is a lattice index or the group name."""
    lat = enumerate_subgroups(G)
    text = text.strip()
    if text == "0":
        return PlusElement(G, F)
    terms = {}
    for raw in _split_terms(text):
        sign = 1
        raw = raw.strip()
        if raw.startswith("-"):
            sign, raw = -1, raw[1:].strip()
        if raw.startswith("[") and "]" in raw:
            close = raw.index("]")
            raw = raw[1:close] + raw[close + 1:]
        if ":" not in raw:
            raise GroupError(f"term {raw!r} must look like H:label*coeff")
        hs, rest = raw.split(":", 1)
        coeff = 1
        if "*" in rest:
            rest, cs = rest.rsplit("*", 1)
            coeff = num_from_json(cs.strip()) if "/" in cs else int(cs)
        hs = hs.strip()
        if hs == (G.name or "") or hs.lower() == "g":
            H = G
        else:
            try:
                H = lat.subgroups[int(hs)]
            except (ValueError, IndexError):
                raise GroupError(f"unknown subgroup {hs!r}") from None
        lab = F.parse_label(H, rest.strip())
        terms[(H, lab)] = terms.get((H, lab), 0) + sign * coeff
    return PlusElement(G, F, terms)


def _split_terms(text):
    out, depth, cur = [], 0, ""
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "+" and depth == 0:
            out.append(cur)
            cur = ""
        elif ch == "-" and depth == 0 and cur.strip() and not cur.rstrip().endswith("*"):
            out.append(cur)
            cur = "-"
        else:
            cur += ch
        i += 1
    out.append(cur)
    return [t for t in out if t.strip()]


__all__ = [
    "SCHEMA", "biset_to_json", "biset_from_json", "plus_to_json", "plus_from_json",
    "ghost_to_json", "ghost_from_json", "functor_element_to_json", "functor_element_from_json",
    "render_plus", "render_ghost", "parse_plus_literal", "subgroup_text", "dumps",
]
