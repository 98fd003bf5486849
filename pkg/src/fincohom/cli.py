"""Command-line front end.

Exit status: 0 on success, 1 on invalid input or a failed check, 2 when a
size cap refuses the computation.  Errors go to stderr as a JSON object and
nothing is written to ``--out`` unless the command succeeds.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

import numpy as np

from . import serialize as ser
from .cochains import classify_cochain, cohomology, describe
from .extensions import build_extension, classify_extensions
from .groups import (
    FiniteAbelianGroup,
    SizeLimitError,
    ValidationError,
    alternating,
    build_module,
    cyclic,
    dicyclic,
    dihedral,
    product,
    symmetric,
    trivial_group,
)
from .haar import (
    GroupFunction,
    approx_integral,
    constant,
    indicator,
    iphi_properties,
    near_additivity_gap,
    random_function,
)
from .lie import abelian_lie, adjoint_module, ce_cohomology, heisenberg, sl2, trivial_lie_module
from .sequences import long_exact_sequence
from .verify import run_all


class InputError(Exception):
    """Bad command-line input; reported with exit status 1."""


# ---------------------------------------------------------------------------
# input resolution


_SHORTHAND = re.compile(r"^\(?[a-z][a-z0-9]*(:|\)?$)")


def _looks_like_path(spec: str) -> bool:
    # shorthands start with a lowercase kind such as "cyclic:" or "sl2"
    return not _SHORTHAND.match(spec)


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path} at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _split_top(s: str) -> list[str]:
    """Split on commas that are not inside brackets."""
    out, depth, cur = [], 0, []
    for ch in s:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "," and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return [p.strip() for p in out if p.strip()]


def _int(s: str, what: str) -> int:
    try:
        return int(s)
    except ValueError:
        raise InputError(f"{what} must be an integer, got {s!r}") from None


def group_json(spec: str) -> dict:
    """Expand a group shorthand or file into group JSON."""
    if _looks_like_path(spec):
        d = _load_json(spec)
        return d["group"] if isinstance(d, dict) and "group" in d else d
    if spec.startswith("(") and spec.endswith(")"):
        spec = spec[1:-1]
    kind, _, arg = spec.partition(":")
    kind = kind.strip().lower()
    if kind == "trivial":
        G = trivial_group()
    elif kind == "cyclic":
        G = cyclic(_int(arg, "cyclic order"))
    elif kind == "symmetric":
        G = symmetric(_int(arg, "symmetric degree"))
    elif kind == "alternating":
        G = alternating(_int(arg, "alternating degree"))
    elif kind == "dihedral":
        G = dihedral(_int(arg, "dihedral n"))
    elif kind == "dicyclic":
        G = dicyclic(_int(arg, "dicyclic n"))
    elif kind == "quaternion":
        G = dicyclic(2)
    elif kind == "abelian":
        G = FiniteAbelianGroup(tuple(_int(x, "modulus") for x in arg.split(","))).as_group()
    elif kind == "product":
        parts = _split_top(arg)
        if len(parts) < 2:
            raise InputError("product needs at least two factors")
        G = ser.group_from_json(group_json(parts[0]))
        for p in parts[1:]:
            G = product(G, ser.group_from_json(group_json(p)))
    else:
        raise InputError(f"unknown group shorthand {spec!r}")
    return ser.group_to_json(G)


def _moduli(arg: str) -> tuple[int, ...]:
    """``Z/2xZ/3``, ``Z/2 x Z/3`` or ``2,3``."""
    arg = arg.replace(" ", "")
    parts = arg.split("x") if "Z/" in arg else arg.split(",")
    out = []
    for p in parts:
        p = p[2:] if p.startswith("Z/") else p
        out.append(_int(p, "modulus"))
    if not out:
        raise InputError("empty carrier")
    return tuple(out)


def module_json(spec: str, G) -> dict:
    """Expand a module shorthand or file into module JSON over ``G``."""
    if _looks_like_path(spec):
        d = _load_json(spec)
        return d["module"] if isinstance(d, dict) and "module" in d else d
    kind, _, arg = spec.partition(":")
    kind = kind.strip().lower()
    if kind == "trivial":
        return {"moduli": list(_moduli(arg)), "action": {"kind": "trivial"}}
    if kind == "negation":
        # every generator acts by -1; fails unless G admits such an action
        mods = _moduli(arg)
        k = len(mods)
        neg = (-np.eye(k, dtype=np.int64)).tolist()
        M = build_module(FiniteAbelianGroup(mods), G, {g: neg for g in G.generators})
        return ser.module_to_json(M)
    raise InputError(f"unknown module shorthand {spec!r}")


def _function_json(spec: str, G) -> dict:
    if _looks_like_path(spec):
        return _load_json(spec)
    kind, _, arg = spec.partition(":")
    if kind == "const":
        f = constant(G, Fraction(arg or "1"))
    elif kind == "indicator":
        f = indicator(G, [_int(x, "element index") for x in arg.split(",") if x])
    elif kind == "values":
        vals = [Fraction(x) for x in arg.split(",")]
        f = GroupFunction(G, tuple(vals))
    else:
        raise InputError(f"unknown function shorthand {spec!r}")
    return ser.group_function_to_json(f)


def _ses_json(spec: str, G) -> dict:
    if _looks_like_path(spec):
        return _load_json(spec)
    kind, _, arg = spec.partition(":")
    if kind != "mult":
        raise InputError(f"unknown sequence shorthand {spec!r}")
    # 0 -> Z/p -> Z/pq -> Z/q -> 0 with trivial action
    p, q = (_int(x, "modulus") for x in arg.split(","))
    triv = {"kind": "trivial"}
    return {
        "A1": {"moduli": [p], "action": triv},
        "A": {"moduli": [p * q], "action": triv},
        "A2": {"moduli": [q], "action": triv},
        "incl": [[q]],
        "proj": [[1]],
        "section": {},
    }


def _lie_json(spec: str) -> dict:
    if _looks_like_path(spec):
        return _load_json(spec)
    kind, _, arg = spec.partition(":")
    if kind == "sl2":
        return ser.lie_to_json(sl2())
    if kind == "heisenberg":
        return ser.lie_to_json(heisenberg())
    if kind == "abelian":
        return ser.lie_to_json(abelian_lie(_int(arg, "dimension")))
    raise InputError(f"unknown Lie algebra shorthand {spec!r}")


# ---------------------------------------------------------------------------
# commands; each returns (json payload, table text)


def _group_and_module(args):
    gj = group_json(args.group)
    G = ser.group_from_json(gj)
    mj = module_json(args.module, G)
    M = ser.module_from_json(mj, G)
    return gj, mj, G, M


def cmd_cohomology(args):
    gj, mj, G, M = _group_and_module(args)
    if args.emit_input:
        return {"group": gj, "module": mj}, None
    degrees = [args.degree] if args.degree is not None else list(range(args.cap + 1))
    groups = [cohomology(M, n) for n in degrees]
    out = {"group": gj, "module": mj, "cohomology": [ser.cohomology_to_json(H) for H in groups]}
    lines = [f"{'degree':<8}{'H^n':<24}order"]
    lines += [f"{H.degree:<8}{describe(H.factors):<24}{H.order}" for H in groups]
    if args.cocycle:
        f = ser.cochain_from_json(_load_json(args.cocycle), M)
        c = classify_cochain(f)
        verdict = {"is_cocycle": c.is_cocycle, "is_coboundary": c.is_coboundary}
        if not c.is_cocycle:
            verdict["witness"] = list(c.witness)
        elif c.is_coboundary:
            verdict["preimage"] = ser.cochain_to_json(c.witness)
        else:
            verdict["class"] = list(c.cls.coordinates)
        out["classification"] = verdict
        lines.append("cochain: " + ", ".join(f"{k}={v}" for k, v in verdict.items() if k != "preimage"))
    return out, "\n".join(lines)


def cmd_extensions(args):
    if args.cocycle and not args.classify:
        d = _load_json(args.cocycle)
        if isinstance(d, dict) and "group" in d:
            F = ser.extension_input_from_json(d)
        else:
            _, _, _, M = _group_and_module(args)
            F = ser.cochain_from_json(d, M)
        if args.emit_input:
            return ser.extension_input_to_json(F), None
        ext = build_extension(F)
        out = ser.extension_to_json(ext, F)
        return out, f"E of order {ext.E.order} built from the cocycle"
    gj, mj, G, M = _group_and_module(args)
    if args.emit_input:
        return {"group": gj, "module": mj}, None
    entries = classify_extensions(M)
    rows = [
        {"class": list(e.cls.coordinates), "label": e.label, "order": e.extension.E.order, "cocycle": ser.cochain_to_json(e.cls.representative())}
        for e in entries
    ]
    out = {"group": gj, "module": mj, "count": len(rows), "extensions": rows}
    lines = [f"{'class':<16}{'order':<8}type"]
    lines += [f"{str(tuple(r['class'])):<16}{r['order']:<8}{r['label']}" for r in rows]
    return out, "\n".join(lines)


def cmd_les(args):
    gj = group_json(args.group)
    G = ser.group_from_json(gj)
    sj = _ses_json(args.ses, G)
    S = ser.ses_from_json(sj, G)
    if args.emit_input:
        return {"group": gj, "ses": ser.ses_to_json(S)}, None
    rep = long_exact_sequence(S, args.cap)
    out = {"group": gj, "ses": ser.ses_to_json(S), "report": rep.to_json()}
    return out, rep.table() + f"\nexact: {rep.exact}, composites vanish: {rep.complex_ok}"


def cmd_haar(args):
    gj = group_json(args.group)
    G = ser.group_from_json(gj)
    rng = np.random.default_rng(args.seed)

    def fn(spec):
        return ser.group_function_from_json(_function_json(spec, G), G) if spec else random_function(G, rng)

    f, phi = fn(args.f), fn(args.phi)
    g_ref = fn(args.g_ref) if args.g_ref else constant(G)
    f2 = fn(args.f2) if args.f2 else None
    if args.emit_input:
        inp = {"group": gj, "f": ser.group_function_to_json(f), "phi": ser.group_function_to_json(phi), "g_ref": ser.group_function_to_json(g_ref)}
        if f2 is not None:
            inp["f2"] = ser.group_function_to_json(f2)
        return inp, None
    rep = approx_integral(f, phi)
    props = iphi_properties(f, phi, g_ref, f2=f2)
    labels = [str(x) for x in G.elements]
    out = {
        "group": gj,
        "f": ser.group_function_to_json(f),
        "phi": ser.group_function_to_json(phi),
        "g_ref": ser.group_function_to_json(g_ref),
        "approx_integral": {
            "value": str(rep.value),
            "coefficients": {labels[u]: str(c) for u, c in enumerate(rep.coefficients)},
            "dual": {labels[x]: str(y) for x, y in enumerate(rep.dual)},
            "feasible": rep.feasible,
            "certified": rep.certified,
        },
        "relative_integral": str(props.value),
        "properties": {
            "bounds": props.bounds,
            "lower_bound": None if props.lower_bound is None else str(props.lower_bound),
            "upper_bound": None if props.upper_bound is None else str(props.upper_bound),
            "invariance": props.invariance,
            "homogeneity": props.homogeneity,
            "subadditivity": props.subadditivity,
        },
    }
    if f2 is not None:
        out["f2"] = ser.group_function_to_json(f2)
        out["near_additivity_gap"] = str(near_additivity_gap(f, f2, phi, g_ref))
    lines = [
        f"(f; phi)          {rep.value}",
        f"I_phi(f)          {props.value}",
        f"certified         {rep.certified}",
        f"bounds            {props.bounds}",
        f"invariance        {props.invariance}",
        f"homogeneity       {props.homogeneity}",
        f"subadditivity     {props.subadditivity}",
    ]
    return out, "\n".join(lines)


def cmd_lie(args):
    lj = _lie_json(args.algebra)
    L = ser.lie_from_json(lj)
    if args.rep == "trivial":
        V = trivial_lie_module(L)
    elif args.rep == "adjoint":
        V = adjoint_module(L)
    else:
        V = ser.lie_module_from_json(_load_json(args.rep), L)
    if args.emit_input:
        return {"algebra": lj, "module": ser.lie_module_to_json(V)}, None
    degrees = [args.degree] if args.degree is not None else list(range(L.dim + 1))
    results = [ce_cohomology(L, V, n) for n in degrees]
    out = {
        "algebra": lj,
        "module": ser.lie_module_to_json(V),
        "cohomology": [
            {"degree": h.degree, "dim": h.dim, "representatives": [[str(x) for x in r] for r in h.representatives]}
            for h in results
        ],
    }
    lines = [f"{'degree':<8}dim"] + [f"{h.degree:<8}{h.dim}" for h in results]
    return out, "\n".join(lines)


def cmd_verify(args):
    checks = run_all(args.seed)
    out = {"seed": args.seed, "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in checks]}
    out["ok"] = all(c.ok for c in checks)
    lines = [f"{'PASS' if c.ok else 'FAIL'}  {c.name:<36}{c.detail}" for c in checks]
    return out, "\n".join(lines)


COMMANDS = {
    "cohomology": cmd_cohomology,
    "extensions": cmd_extensions,
    "les": cmd_les,
    "haar": cmd_haar,
    "lie": cmd_lie,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fincohom", description="Cohomology of finite groups and related computations.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--out", help="write the result here instead of stdout")
        sp.add_argument("--format", choices=("json", "table"), default="json")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--emit-input", action="store_true", help="print the expanded input JSON and stop")

    sp = sub.add_parser("cohomology", help="H^n(G, A) by invariant factors")
    sp.add_argument("--group", required=True)
    sp.add_argument("--module", required=True)
    sp.add_argument("--degree", type=int)
    sp.add_argument("--cap", type=int, default=2, help="highest degree when --degree is omitted")
    sp.add_argument("--cocycle", help="cochain JSON to classify")
    common(sp)

    sp = sub.add_parser("extensions", help="extensions from a cocycle, or all of them")
    sp.add_argument("--group", default="trivial")
    sp.add_argument("--module", default="trivial:Z/1")
    sp.add_argument("--cocycle", help="cochain JSON, or {group, module, cocycle}")
    sp.add_argument("--classify", action="store_true")
    common(sp)

    sp = sub.add_parser("les", help="long exact sequence of a short exact sequence")
    sp.add_argument("--group", required=True)
    sp.add_argument("--ses", required=True, help="sequence JSON or mult:p,q")
    sp.add_argument("--cap", type=int, default=2)
    common(sp)

    sp = sub.add_parser("haar", help="approximate integrals as exact linear programs")
    sp.add_argument("--group", required=True)
    sp.add_argument("--f", help="function JSON or const:c / indicator:i,j / values:a,b,..; random if omitted")
    sp.add_argument("--phi")
    sp.add_argument("--g-ref", dest="g_ref")
    sp.add_argument("--f2", help="second function for subadditivity and the additivity gap")
    common(sp)

    sp = sub.add_parser("lie", help="Chevalley-Eilenberg cohomology")
    sp.add_argument("--algebra", required=True, help="Lie JSON, sl2, heisenberg or abelian:n")
    sp.add_argument("--rep", default="trivial", help="trivial, adjoint or module JSON")
    sp.add_argument("--degree", type=int)
    common(sp)

    sp = sub.add_parser("verify", help="seeded self-checks")
    common(sp)
    return p


def _file_args(args) -> list[str]:
    out = []
    for name in ("group", "module", "cocycle", "ses", "f", "phi", "g_ref", "f2", "algebra", "rep"):
        v = getattr(args, name, None)
        if v and (name == "cocycle" or (_looks_like_path(v) and v not in ("trivial", "adjoint"))):
            out.append(v)
    return out


def _error(kind: str, message: str, witness=None) -> str:
    err = {"error": {"kind": kind, "message": message}}
    if witness is not None:
        err["error"]["witness"] = json.loads(json.dumps(witness, default=lambda o: o.tolist() if hasattr(o, "tolist") else str(o)))
    return ser.dumps(err)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    missing = [p for p in _file_args(args) if not os.path.isfile(p)]
    if missing:
        sys.stderr.write(_error("MissingFile", f"no such file: {missing[0]}"))
        return 1
    try:
        payload, table = COMMANDS[args.command](args)
    except SizeLimitError as exc:
        sys.stderr.write(_error("SizeLimit", str(exc)))
        return 2
    except ValidationError as exc:
        sys.stderr.write(_error("Validation", str(exc), exc.witness))
        return 1
    except InputError as exc:
        sys.stderr.write(_error("Input", str(exc)))
        return 1
    except (KeyError, TypeError, ValueError) as exc:
        sys.stderr.write(_error("Input", f"malformed input: {exc}"))
        return 1
    text = table + "\n" if args.format == "table" and table is not None else ser.dumps(payload)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.command == "verify" and not payload["ok"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
