"""Command-line entry point.

Exit status: 0 on success, 1 on domain errors (and failing ``verify`` runs),
2 on malformed input.  Errors are written to stderr as JSON.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .bisets import (BisetElement, compose_all, decompose_standard, elementary, mackey_compose,
                     realize, standard_basis, tensor_oracle)
from .category import CategorySpec
from .functors import FunctorError, functor_from_selector
from .ghost import GhostElement, ghost_act, ghost_mult
from .groups import GroupError, PermGroup, find_isomorphism, group_from_spec, group_to_spec
from .lattice import enumerate_subgroups
from .mark import mark, mobius_inverse, table_of_marks
from .plus import PlusElement, plus_act, plus_mult, plus_pi, plus_ring
from .products import ProductSubgroup
from .serialize import (SCHEMA, biset_from_json, biset_to_json, ghost_from_json, ghost_to_json,
                        parse_plus_literal, plus_from_json, plus_to_json, render_ghost, render_plus,
                        subgroup_json, vec_text)
from .species import enumerate_species, evaluation_matrix
from .verify import SUITES, CONDITION_PRESETS, run_suite, suite_groups


class InputError(Exception):
    """Malformed command-line input (exit status 2)."""


# --- argument resolution ----------------------------------------------------------------

def resolve_group(token: str) -> PermGroup:
    token = token.strip()
    if token.startswith("{"):
        try:
            return group_from_spec(json.loads(token))
        except json.JSONDecodeError as e:
            raise InputError(f"bad group JSON: {e}") from None
    try:
        return group_from_spec(token)
    except GroupError as e:
        if str(e).startswith("unknown group preset"):
            raise InputError(str(e)) from None
        raise


def resolve_functor(sel: str):
    try:
        return functor_from_selector(sel)
    except FunctorError as e:
        raise InputError(str(e)) from None


def resolve_subgroup(G: PermGroup, token: str) -> PermGroup:
    """A lattice index of ``G``, or a preset name meaning the first isomorphic subgroup."""
    token = token.strip()
    lat = enumerate_subgroups(G)
    if token.lstrip("-").isdigit():
        i = int(token)
        if not 0 <= i < len(lat.subgroups):
            raise GroupError(f"subgroup index {i} out of range 0..{len(lat.subgroups) - 1}")
        return lat.subgroups[i]
    if token == G.name:
        return G
    T = group_from_spec(token)
    for H in lat.subgroups:
        if H.order == T.order and find_isomorphism(T, H) is not None:
            return H
    raise GroupError(f"{G.name or 'group'} has no subgroup isomorphic to {token}")


def _split_quotient(text):
    if "/" not in text:
        raise InputError(f"expected G/N in {text!r}")
    g, n = text.split("/", 1)
    G = resolve_group(g)
    return G, resolve_subgroup(G, n)


def parse_biset(text: str) -> BisetElement:
    """``res:G>H``, ``ind:H>G``, ``inf:G/N``, ``def:G/N``, ``id:G``, ``class:G,H,i`` or ``@file``.

    In ``res`` and ``ind`` the subgroup ``H`` is resolved inside ``G``.
    """
    text = text.strip()
    if text.startswith("@"):
        return biset_from_json(_read_json(text[1:]))
    if ":" not in text:
        raise InputError(f"biset spec {text!r} must look like kind:args")
    kind, arg = text.split(":", 1)
    if kind in ("res", "ind"):
        if ">" not in arg:
            raise InputError(f"{kind} needs the form {kind}:A>B")
        a, b = arg.split(">", 1)
        if kind == "res":
            G = resolve_group(a)
            return elementary("res", G, resolve_subgroup(G, b))
        G = resolve_group(b)
        return elementary("ind", G, resolve_subgroup(G, a))
    if kind in ("inf", "def"):
        G, N = _split_quotient(arg)
        if not N.is_normal_in(G):
            raise GroupError("the quotient needs a normal subgroup")
        return elementary(kind, G, N)
    if kind == "id":
        return BisetElement.identity(resolve_group(arg))
    if kind == "class":
        parts = arg.split(",")
        if len(parts) != 3 or not parts[2].strip().isdigit():
            raise InputError("class needs the form class:G,H,index")
        G, H = resolve_group(parts[0]), resolve_group(parts[1])
        basis = standard_basis(G, H)
        i = int(parts[2])
        if i >= len(basis):
            raise GroupError(f"class index {i} out of range 0..{len(basis) - 1}")
        return BisetElement.basis(basis[i])
    raise InputError(f"unknown biset kind {kind!r}")


def _read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f"cannot read JSON from {path}: {e}") from None


def parse_plus(G, F, text: str) -> PlusElement:
    if text.startswith("@"):
        return plus_from_json(_read_json(text[1:]), F)
    try:
        return parse_plus_literal(G, F, text)
    except (ValueError, IndexError) as e:
        if isinstance(e, GroupError) and "unknown subgroup" not in str(e) and "must look" not in str(e):
            raise
        raise InputError(str(e)) from None


def parse_ghost(G, F, text: str) -> GhostElement:
    """``@file`` JSON, or for the constant functor comma-separated integers over class reps."""
    if text.startswith("@"):
        return ghost_from_json(_read_json(text[1:]), F)
    if F.selector != "const":
        raise InputError("ghost literals for this functor must be given as @file JSON")
    reps = enumerate_subgroups(G).representatives
    try:
        vals = [Fraction(v.strip()) for v in text.split(",")]
    except ValueError:
        raise InputError(f"bad ghost literal {text!r}") from None
    if len(vals) != len(reps):
        raise InputError(f"ghost literal needs {len(reps)} entries (one per subgroup class)")
    comps = {H: {1: int(v) if v.denominator == 1 else v} for H, v in zip(reps, vals) if v}
    return GhostElement(G, F, comps)


# --- rendering --------------------------------------------------------------------------

def _emit(obj, fmt, text):
    if fmt == "json":
        out = dict(obj)
        out.setdefault("schema", SCHEMA)
        print(json.dumps(out, sort_keys=True))
    else:
        print(text)


def _class_text(D: ProductSubgroup) -> str:
    return (f"[|D|={D.order} p1={D.p1.order} k1={D.k1.order} "
            f"p2={D.p2.order} k2={D.k2.order}]")


def render_biset(x: BisetElement) -> str:
    if not x.terms:
        return "0"
    terms = sorted(x.terms.items(), key=lambda t: (t[0].order, t[0].codes))
    return " + ".join(_class_text(D) if c == 1 else f"{c}*{_class_text(D)}" for D, c in terms)


def _group_label(G):
    return G.name or f"<order {G.order}>"


# --- commands ---------------------------------------------------------------------------

def cmd_group(args):
    G = resolve_group(args.group)
    lat = enumerate_subgroups(G)
    if args.format == "json":
        out = lat.to_json()
        out["order"] = G.order
        return _emit(out, "json", None)
    lines = [f"group {_group_label(G)} order {G.order}: {len(lat.subgroups)} subgroups, "
             f"{len(lat.classes)} classes"]
    lines.append("index\torder\tclass\tnormalizer\tgenerators")
    for i, H in enumerate(lat.subgroups):
        c = lat.class_of[i]
        rep = lat.class_reps[c]
        gens = " ".join("".join(map(str, g)) if G.degree <= 10 else ",".join(map(str, g))
                        for g in H.generators) or "-"
        norm = lat.normalizer(rep).order if i == rep else ""
        lines.append(f"{i}\t{H.order}\t{c}{'*' if i == rep else ''}\t{norm}\t{gens}")
    _emit(None, "text", "\n".join(lines))


def cmd_compose(args):
    a, b = parse_biset(args.left), parse_biset(args.right)
    if a.right != b.left:
        raise GroupError("the right group of --left differs from the left group of --right")
    c = mackey_compose(a, b)
    out = biset_to_json(c)
    lines = [render_biset(c)]
    if args.check:
        oracle = BisetElement(c.left, c.right)
        for D, x in a.terms.items():
            for E, y in b.terms.items():
                oracle = oracle + (x * y) * tensor_oracle(realize(D), realize(E))
        out["oracle_agrees"] = oracle == c
        lines.append(f"oracle_agrees: {str(oracle == c).lower()}")
    _emit(out, args.format, "\n".join(lines))


def cmd_decompose(args):
    x = parse_biset(args.biset)
    if len(x.terms) != 1 or next(iter(x.terms.values())) != 1:
        raise GroupError("decompose needs a single standard basis element")
    D = next(iter(x.terms))
    names = ("ind", "inf", "iso", "def", "res")
    factors = decompose_standard(D)
    ok = compose_all(*factors) == x
    out = {"factors": [{"kind": n, "biset": biset_to_json(f)} for n, f in zip(names, factors)],
           "recomposes": ok}
    lines = [f"{n}: B({f.left.order},{f.right.order}) {render_biset(f)}"
             for n, f in zip(names, factors)]
    lines.append(f"recomposes: {str(ok).lower()}")
    _emit(out, args.format, "\n".join(lines))


def _plus_out(x: PlusElement, fmt):
    _emit(plus_to_json(x), fmt, render_plus(x))


def cmd_plus(args):
    F = resolve_functor(args.functor)
    if args.op == "act":
        if not args.biset:
            raise InputError("plus act needs --biset")
        U = parse_biset(args.biset)
        x = parse_plus(U.right, F, args.x)
        return _plus_out(plus_act(U, x), args.format)
    G = resolve_group(args.group) if args.group else None
    if G is None:
        raise InputError(f"plus {args.op} needs --group")
    ring = plus_ring(G, F)
    if args.op == "unit":
        return _plus_out(ring.unit(), args.format)
    if args.op == "basis":
        basis = ring.canonical_basis()
        out = {"group": group_to_spec(G), "functor": F.selector,
               "basis": [{"subgroup_generators": subgroup_json(H), "basis_label": F.label_json(H, a)}
                         for H, a in basis]}
        text = "\n".join(render_plus(ring.generator(H, a)) for H, a in basis)
        return _emit(out, args.format, text)
    x = parse_plus(G, F, args.x)
    if args.op == "mult":
        if args.y is None:
            raise InputError("plus mult needs two elements")
        return _plus_out(plus_mult(x, parse_plus(G, F, args.y)), args.format)
    if args.op == "pi":
        a = plus_pi(x)
        text = vec_text(F, G, a.coeffs)
        out = a.to_json()
        return _emit(out, args.format, text)
    if args.op == "show":
        return _plus_out(x, args.format)
    raise InputError(f"unknown plus operation {args.op!r}")


def _ghost_out(y: GhostElement, fmt):
    _emit(ghost_to_json(y), fmt, render_ghost(y))


def cmd_ghost(args):
    F = resolve_functor(args.functor)
    if args.op == "act":
        if not args.biset:
            raise InputError("ghost act needs --biset")
        U = parse_biset(args.biset)
        return _ghost_out(ghost_act(U, parse_ghost(U.right, F, args.x)), args.format)
    if not args.group:
        raise InputError(f"ghost {args.op} needs --group")
    G = resolve_group(args.group)
    if args.op == "mark":
        return _ghost_out(mark(parse_plus(G, F, args.x)), args.format)
    x = parse_ghost(G, F, args.x)
    if args.op == "mult":
        if args.y is None:
            raise InputError("ghost mult needs two elements")
        return _ghost_out(ghost_mult(x, parse_ghost(G, F, args.y)), args.format)
    raise InputError(f"unknown ghost operation {args.op!r}")


def cmd_marks(args):
    G = resolve_group(args.group)
    F = resolve_functor(args.functor)
    basis, reps, rows = table_of_marks(G, F)
    lat = enumerate_subgroups(G)
    cols = [lat.index_of(L) for L in reps]
    row_names = [render_plus(plus_ring(G, F).generator(K, a)) for K, a in basis]
    cells = [[vec_text(F, L, v) for L, v in zip(reps, row)] for row in rows]
    if args.format == "json":
        def cell(L, v):
            if F.selector == "const":
                return v.get(1, 0)
            return [{"label": F.label_json(L, k), "coeff": c} for k, c in sorted(v.items())]
        out = {"group": group_to_spec(G), "functor": F.selector, "columns": cols,
               "rows": [{"basis": name, "values": [cell(L, v) for L, v in zip(reps, row)]}
                        for name, row in zip(row_names, rows)]}
        return _emit(out, "json", None)
    if args.format == "tsv":
        return _emit(None, "tsv", "\n".join("\t".join(r) for r in cells))
    head = "\t".join(["basis"] + [str(c) for c in cols])
    body = ["\t".join([n] + r) for n, r in zip(row_names, cells)]
    _emit(None, "text", "\n".join([head] + body))


def cmd_unmark(args):
    G = resolve_group(args.group)
    F = resolve_functor(args.functor)
    _plus_out(mobius_inverse(parse_ghost(G, F, args.y)), args.format)


def cmd_species(args):
    G = resolve_group(args.group)
    F = resolve_functor(args.functor)
    species, basis, rows = evaluation_matrix(G, F)
    lat = enumerate_subgroups(G)
    ring = plus_ring(G, F)
    heads = [render_plus(ring.generator(K, a)) for K, a in basis]
    conductor = species[0].conductor if species else 1
    names = []
    for s in species:
        tau = "1" if s.element is None else "h=" + "".join(map(str, s.element))
        names.append(f"({lat.index_of(s.subgroup)},{tau})")
    if args.format == "json":
        out = {"group": group_to_spec(G), "functor": F.selector, "conductor": conductor,
               "columns": heads,
               "species": [{"subgroup": lat.index_of(s.subgroup),
                            "element": list(s.element) if s.element is not None else None,
                            "values": [v.text() for v in row]}
                           for s, row in zip(species, rows)]}
        return _emit(out, "json", None)
    lines = [f"conductor {conductor}; {len(species)} species; rank {len(basis)}",
             "\t".join(["species"] + heads)]
    lines += ["\t".join([n] + [v.text() for v in row]) for n, row in zip(names, rows)]
    _emit(None, "text", "\n".join(lines))


def cmd_verify(args):
    F = resolve_functor(args.functor)
    spec = None
    if args.conditions is not None:
        conds = [c for c in args.conditions.split(",") if c]
        spec = CategorySpec.from_conditions(conds)
    groups = suite_groups(args.groups)
    rep = run_suite(args.suite, spec=spec, functor=F, groups=groups, seed=args.seed,
                    scalars=args.scalars, budget=args.budget)
    _emit(rep.to_json(args.timing), args.format, rep.text(args.timing))
    return 0 if rep.passed else 1


# --- parser -----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bisetplus", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    def fmt(sp, choices=("text", "json"), default="text"):
        sp.add_argument("--format", choices=choices, default=default)

    sp = sub.add_parser("group", help="subgroup lattice and classes")
    sp.add_argument("group")
    fmt(sp)
    sp.set_defaults(func=cmd_group)

    sp = sub.add_parser("compose", help="Mackey composition of two bisets")
    sp.add_argument("--left", required=True)
    sp.add_argument("--right", required=True)
    sp.add_argument("--check", action="store_true", help="compare with the concrete oracle")
    fmt(sp)
    sp.set_defaults(func=cmd_compose)

    sp = sub.add_parser("decompose", help="five-factor elementary decomposition")
    sp.add_argument("biset")
    fmt(sp)
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("plus", help="arithmetic in F_+(G)")
    sp.add_argument("op", choices=("mult", "act", "unit", "basis", "pi", "show"))
    sp.add_argument("x", nargs="?", default="0")
    sp.add_argument("y", nargs="?")
    sp.add_argument("--group")
    sp.add_argument("--biset")
    sp.add_argument("--functor", default="const")
    fmt(sp)
    sp.set_defaults(func=cmd_plus)

    sp = sub.add_parser("ghost", help="arithmetic in F^+(G)")
    sp.add_argument("op", choices=("mult", "act", "mark"))
    sp.add_argument("x")
    sp.add_argument("y", nargs="?")
    sp.add_argument("--group")
    sp.add_argument("--biset")
    sp.add_argument("--functor", default="const")
    fmt(sp)
    sp.set_defaults(func=cmd_ghost)

    sp = sub.add_parser("marks", help="table of marks")
    sp.add_argument("group")
    sp.add_argument("--functor", default="const")
    fmt(sp, ("text", "tsv", "json"), "tsv")
    sp.set_defaults(func=cmd_marks)

    sp = sub.add_parser("unmark", help="Möbius inverse of a ghost element")
    sp.add_argument("group")
    sp.add_argument("y")
    sp.add_argument("--functor", default="const")
    fmt(sp)
    sp.set_defaults(func=cmd_unmark)

    sp = sub.add_parser("species", help="species table")
    sp.add_argument("group")
    sp.add_argument("--functor", default="const")
    fmt(sp)
    sp.set_defaults(func=cmd_species)

    sp = sub.add_parser("verify", help="run a property suite")
    sp.add_argument("--suite", required=True, choices=SUITES)
    sp.add_argument("--groups", default="suite",
                    help="comma-separated presets, 'suite', or preset:uptoN")
    sp.add_argument("--functor", default="const")
    sp.add_argument("--conditions", help="condition set for the axioms suite, e.g. k1,k2")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--budget", type=int, default=500)
    sp.add_argument("--scalars", choices=("z", "q", "both"), default="z")
    sp.add_argument("--timing", action="store_true",
                    help="include wall time (output is otherwise byte-stable)")
    fmt(sp)
    sp.set_defaults(func=cmd_verify)
    return p


def _error(kind, message, code):
    print(json.dumps({"schema": SCHEMA, "error": {"type": kind, "message": message}}),
          file=sys.stderr)
    return code


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        rc = args.func(args)
    except InputError as e:
        return _error("parse", str(e), 2)
    except (GroupError, FunctorError) as e:
        return _error("domain", str(e), 1)
    except (KeyError, ValueError, TypeError) as e:
        return _error("parse", f"{type(e).__name__}: {e}", 2)
    return rc or 0


__all__ = ["main", "build_parser", "parse_biset", "resolve_subgroup", "resolve_group",
           "CONDITION_PRESETS"]
