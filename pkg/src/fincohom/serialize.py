"""JSON encodings of every domain object.

All encoders return plain dicts of str/int/list; ``dumps`` fixes key order
and indentation so that ``dumps(json.loads(dumps(x))) == dumps(x)``.
Rationals travel as strings ``"p/q"``.
"""

from __future__ import annotations

import json
from fractions import Fraction

import numpy as np

from .cochains import Cochain, CohomologyGroup, cochain
from .extensions import Extension
from .groups import FiniteAbelianGroup, FiniteGroup, GModule, ValidationError, build_module, from_table
from .haar import GroupFunction
from .lie import LieAlgebra, LieModule, build_lie_algebra, build_lie_module
from .sequences import ModuleSES, make_ses


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _ints(x):
    return np.asarray(x, dtype=np.int64).tolist()


def _key(t) -> str:
    return "(" + ",".join(str(int(i)) for i in t) + ")"


def _parse_key(s: str) -> tuple[int, ...]:
    s = s.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValidationError(f"malformed tuple key {s!r}")
    body = s[1:-1].strip().rstrip(",")
    try:
        return tuple(int(x) for x in body.split(",")) if body else ()
    except ValueError:
        raise ValidationError(f"malformed tuple key {s!r}") from None


def _require(d, *keys, what="object"):
    if not isinstance(d, dict):
        raise ValidationError(f"{what} must be a JSON object")
    missing = [k for k in keys if k not in d]
    if missing:
        raise ValidationError(f"{what} is missing key {missing[0]!r}")


# groups and modules


def group_to_json(G: FiniteGroup) -> dict:
    return {"elements": [str(x) for x in G.elements], "table": _ints(G.table)}


def group_from_json(d) -> FiniteGroup:
    _require(d, "elements", "table", what="group")
    if len(d["elements"]) != len(d["table"]):
        raise ValidationError("group needs one label per table row")
    return from_table(d["table"], tuple(str(x) for x in d["elements"]))


def module_to_json(M: GModule) -> dict:
    if M.is_trivial:
        action = {"kind": "trivial"}
    else:
        G = M.group
        action = {"kind": "matrices", "matrices": {str(G.elements[s]): _ints(M.matrices[s]) for s in range(G.order)}}
    return {"moduli": list(M.carrier.moduli), "action": action}


def module_from_json(d, G: FiniteGroup) -> GModule:
    _require(d, "moduli", what="module")
    carrier = FiniteAbelianGroup(tuple(int(m) for m in d["moduli"]))
    action = d.get("action", {"kind": "trivial"})
    kind = action.get("kind", "trivial")
    if kind == "trivial":
        return build_module(carrier, G, "trivial")
    if kind != "matrices":
        raise ValidationError(f"unknown action kind {kind!r}")
    mats = {}
    for label, M in action.get("matrices", {}).items():
        if label not in G.elements:
            raise ValidationError(f"action names unknown element {label!r}")
        mats[G.index(label)] = M
    return build_module(carrier, G, mats)


# cochains and cohomology


def cochain_to_json(f: Cochain) -> dict:
    return {"degree": f.degree, "values": {_key(t): list(a) for t, a in f.items()}}


def cochain_from_json(d, M: GModule) -> Cochain:
    _require(d, "degree", "values", what="cochain")
    n = int(d["degree"])
    g = M.group.order
    vals = {}
    for k, v in d["values"].items():
        t = _parse_key(k)
        if len(t) != n or any(not 0 <= i < g for i in t):
            raise ValidationError(f"cochain key {k!r} is not a {n}-tuple of element indices")
        if len(v) != M.carrier.rank:
            raise ValidationError(f"cochain value at {k} has the wrong length")
        vals[t] = tuple(int(x) for x in v)
    if len(vals) != g**n:
        raise ValidationError(f"cochain must be defined on all {g**n} tuples, got {len(vals)}")
    return cochain(M, n, vals)


def cohomology_to_json(H: CohomologyGroup) -> dict:
    return {
        "degree": H.degree,
        "factors": list(H.factors),
        "representatives": [cochain_to_json(f) for f in H.representatives],
    }


# extensions


def extension_input_to_json(F: Cochain) -> dict:
    M = F.module
    return {"group": group_to_json(M.group), "module": module_to_json(M), "cocycle": cochain_to_json(F)}


def extension_input_from_json(d) -> Cochain:
    _require(d, "group", "module", "cocycle", what="extension input")
    G = group_from_json(d["group"])
    M = module_from_json(d["module"], G)
    return cochain_from_json(d["cocycle"], M)


def extension_to_json(ext: Extension, F: Cochain) -> dict:
    out = extension_input_to_json(F)
    out.update(
        {
            "E": group_to_json(ext.E),
            "inclusion": list(ext.inclusion),
            "projection": list(ext.projection),
            "section": list(ext.section),
        }
    )
    return out


# short exact sequences


def ses_to_json(S: ModuleSES) -> dict:
    return {
        "A1": module_to_json(S.A1),
        "A": module_to_json(S.A),
        "A2": module_to_json(S.A2),
        "incl": _ints(S.incl.matrix),
        "proj": _ints(S.proj.matrix),
        "section": {_key(k): list(v) for k, v in sorted(S.section.items())},
    }


def ses_from_json(d, G: FiniteGroup) -> ModuleSES:
    _require(d, "A1", "A", "A2", "incl", "proj", what="ses")
    A1 = module_from_json(d["A1"], G)
    A = module_from_json(d["A"], G)
    A2 = module_from_json(d["A2"], G)
    section = None
    if d.get("section"):
        section = {_parse_key(k): tuple(int(x) for x in v) for k, v in d["section"].items()}
    incl = np.asarray(d["incl"], dtype=np.int64).reshape(A.carrier.rank, A1.carrier.rank)
    proj = np.asarray(d["proj"], dtype=np.int64).reshape(A2.carrier.rank, A.carrier.rank)
    return make_ses(A1, A, A2, incl, proj, section)


# group functions


def group_function_to_json(f: GroupFunction) -> dict:
    return {"values": {str(f.group.elements[x]): str(v) for x, v in enumerate(f.values)}}


def group_function_from_json(d, G: FiniteGroup) -> GroupFunction:
    _require(d, "values", what="group function")
    vals = [Fraction(0)] * G.order
    for label, v in d["values"].items():
        if label not in G.elements:
            raise ValidationError(f"function names unknown element {label!r}")
        try:
            vals[G.index(label)] = Fraction(str(v))
        except (ValueError, ZeroDivisionError):
            raise ValidationError(f"value {v!r} at {label!r} is not a rational") from None
    return GroupFunction(G, tuple(vals))


# Lie algebras


def lie_to_json(L: LieAlgebra) -> dict:
    brackets = {}
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            row = {str(k): str(c) for k, c in enumerate(L.constants[i][j]) if c}
            if row:
                brackets[f"{i},{j}"] = row
    return {"dim": L.dim, "brackets": brackets}


def lie_from_json(d) -> LieAlgebra:
    _require(d, "dim", "brackets", what="Lie algebra")
    consts = {}
    for key, row in d["brackets"].items():
        try:
            i, j = (int(x) for x in key.split(","))
            consts[(i, j)] = {int(k): Fraction(str(v)) for k, v in row.items()}
        except ValueError:
            raise ValidationError(f"malformed bracket entry {key!r}") from None
    return build_lie_algebra(consts, int(d["dim"]))


def lie_module_to_json(V: LieModule) -> dict:
    return {"dim": V.dim, "rep": [[[str(x) for x in row] for row in M] for M in V.rep]}


def lie_module_from_json(d, L: LieAlgebra) -> LieModule:
    _require(d, "dim", "rep", what="Lie module")
    rep = [[[Fraction(str(x)) for x in row] for row in M] for M in d["rep"]]
    if any(len(M) != int(d["dim"]) or any(len(r) != int(d["dim"]) for r in M) for M in rep):
        raise ValidationError("representation matrices must be dim x dim")
    return build_lie_module(L, rep)
