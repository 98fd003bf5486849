"""Extensions ``1 -> A -> E -> G -> 1`` of a finite group by a finite module.

A 2-cocycle ``F`` gives the group on ``A x G`` with

    (a1, s1)(a2, s2) = (a1 + s1.a2 + F(s1, s2), s1 s2)

whose identity is ``(-F(e, e), e)``, so cocycles need not be normalized.
Conversely a set-theoretic section ``sigma`` of ``E -> G`` gives back the
cocycle ``sigma(s1) sigma(s2) sigma(s1 s2)^-1`` read inside ``A``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .catalog import CATALOG_MAX_ORDER, identify
from .cochains import Cochain, CohomologyClass, cochain, cohomology, first_violation
from .groups import FiniteGroup, GModule, SizeLimitError, ValidationError, validate_group

MAX_SEARCH_ORDER = 64


@dataclass(frozen=True, eq=False)
class Extension:
    """``E`` with ``inclusion`` (carrier index -> E), ``projection`` (E -> G)
    and a section (G -> E)."""

    module: GModule
    E: FiniteGroup
    inclusion: tuple[int, ...]
    projection: tuple[int, ...]
    section: tuple[int, ...]

    @property
    def G(self) -> FiniteGroup:
        return self.module.group

    def with_section(self, section) -> "Extension":
        ext = Extension(self.module, self.E, self.inclusion, self.projection, tuple(int(x) for x in section))
        bad = extension_violations(ext)
        if bad:
            raise ValidationError(bad[0], witness=bad)
        return ext


def extension_violations(ext: Extension) -> list[str]:
    """Exactness, section and conjugation-action checks; empty when valid."""
    out = []
    E, G, A = ext.E, ext.G, ext.module.carrier
    inc, proj, sec = ext.inclusion, ext.projection, ext.section
    elems = A.elements()
    if len(inc) != A.order or len(set(inc)) != A.order:
        return ["inclusion is not injective"]
    for a in elems:
        for b in elems:
            if E.mul(inc[A.index(a)], inc[A.index(b)]) != inc[A.index(A.add(a, b))]:
                return [f"inclusion is not a homomorphism at ({a}, {b})"]
    if len(proj) != E.order:
        return ["projection must list an image for every element of E"]
    for x in range(E.order):
        for y in range(E.order):
            if proj[E.mul(x, y)] != G.mul(proj[x], proj[y]):
                return [f"projection is not a homomorphism at ({x}, {y})"]
    if set(proj) != set(range(G.order)):
        out.append("projection is not surjective")
    kernel = {x for x in range(E.order) if proj[x] == G.identity}
    if kernel != set(inc):
        out.append("image(inclusion) != kernel(projection)")
    if len(sec) != G.order or any(proj[sec[s]] != s for s in range(G.order)):
        out.append("projection o section is not the identity")
        return out
    for s in range(G.order):
        x = sec[s]
        xinv = E.inv(x)
        for a in elems:
            conj = E.mul(E.mul(x, inc[A.index(a)]), xinv)
            if conj != inc[A.index(ext.module.act(s, a))]:
                out.append(f"conjugation by section({G.elements[s]}) does not induce the module action on {a}")
                return out
    return out


def build_extension(F: Cochain) -> Extension:
    """Twisted product on ``A x G`` from a 2-cocycle."""
    if F.degree != 2:
        raise ValidationError("extension data must be a degree-2 cochain")
    bad = first_violation(F)
    if bad is not None:
        names = tuple(F.module.group.elements[i] for i in bad)
        raise ValidationError(f"cocycle identity fails at triple {names}; associativity fails there", witness=bad)
    M = F.module
    G, A = M.group, M.carrier
    g = G.order
    elems = A.elements()
    na = len(elems)
    add = np.array([[A.index(A.add(a, b)) for b in elems] for a in elems], dtype=np.int64).reshape(na, na)
    act = np.array([[A.index(M.act(s, a)) for a in elems] for s in range(g)], dtype=np.int64).reshape(g, na)
    Fi = np.array([[A.index(F(s, t)) for t in range(g)] for s in range(g)], dtype=np.int64)
    # index of (a, s) is a * g + s
    a_idx, s_idx = np.divmod(np.arange(na * g), g)
    a1, a2 = a_idx[:, None], a_idx[None, :]
    s1, s2 = s_idx[:, None], s_idx[None, :]
    a_out = add[add[a1, act[s1, a2]], Fi[s1, s2]]
    table = a_out * g + G.table[s1, s2]
    report = validate_group(table)
    if report:
        raise ValidationError(f"twisted product is not a group: {report[0]}", witness=report)
    labels = tuple(f"({A.index(elems[a]) if A.rank != 1 else elems[a][0]},{G.elements[s]})" for a, s in zip(a_idx, s_idx))
    c = A.neg(F(G.identity, G.identity))
    E = FiniteGroup(labels, table, A.index(c) * g + G.identity, "")
    inclusion = tuple(A.index(A.add(a, c)) * g + G.identity for a in elems)
    projection = tuple(int(s) for s in s_idx)
    section = tuple(A.index(A.zero()) * g + s for s in range(g))
    return Extension(M, E, inclusion, projection, section)


def make_extension(module: GModule, E: FiniteGroup, inclusion, projection, section=None) -> Extension:
    """Validated extension from explicit data.

    Without ``section`` the least element of each fibre of the projection is
    chosen.
    """
    projection = tuple(int(x) for x in projection)
    if section is None:
        section = tuple(min(x for x in range(E.order) if projection[x] == s) for s in range(module.group.order))
    ext = Extension(module, E, tuple(int(x) for x in inclusion), projection, tuple(int(x) for x in section))
    bad = extension_violations(ext)
    if bad:
        raise ValidationError(bad[0], witness=bad)
    return ext


def cocycle_from_section(ext: Extension) -> Cochain:
    """``f(s1, s2) = sigma(s1) sigma(s2) sigma(s1 s2)^-1`` as an element of ``A``."""
    E, G, A = ext.E, ext.G, ext.module.carrier
    back = {x: A.element(i) for i, x in enumerate(ext.inclusion)}
    sec = ext.section
    vals = {}
    for s in range(G.order):
        for t in range(G.order):
            x = E.mul(E.mul(sec[s], sec[t]), E.inv(sec[G.mul(s, t)]))
            if x not in back:
                raise ValidationError(f"sigma(s)sigma(t)sigma(st)^-1 leaves the image of A at {(s, t)}", witness=(s, t))
            vals[(s, t)] = back[x]
    return cochain(ext.module, 2, vals)


def equivalent(E1: Extension, E2: Extension, max_order=MAX_SEARCH_ORDER):
    """Search for ``theta: E1 -> E2`` commuting with inclusions and projections.

    Returns ``(True, theta)`` or ``(False, None)`` once every candidate has been
    rejected.  ``theta`` is fixed on ``A`` and sends ``sigma1(g)`` into the
    fibre of ``g``, so only the ``A``-component over each generator of ``G``
    is searched.
    """
    if E1.module is not E2.module and not (
        E1.G is E2.G and E1.module.carrier == E2.module.carrier and np.array_equal(E1.module.matrices, E2.module.matrices)
    ):
        raise ValidationError("extensions must share the group and the module")
    if E1.E.order > max_order:
        raise SizeLimitError(f"|E| = {E1.E.order} exceeds the search cap {max_order}")
    G, A = E1.G, E1.module.carrier
    ggens = list(G.generators) if G.order > 1 else []
    agens = [A.index(tuple(int(i == j) for i in range(A.rank))) for j in range(A.rank)]
    gens1 = [E1.inclusion[a] for a in agens] + [E1.section[s] for s in ggens]
    fixed = [E2.inclusion[a] for a in agens]
    for choice in np.ndindex(*([A.order] * len(ggens))):
        images = fixed + [E2.E.mul(E2.inclusion[c], E2.section[s]) for c, s in zip(choice, ggens)]
        theta = _extend_hom(E1.E, E2.E, gens1, images)
        if theta is None or len(theta) != E1.E.order or len(set(theta.values())) != E1.E.order:
            continue
        if any(theta[E1.inclusion[i]] != E2.inclusion[i] for i in range(A.order)):
            continue
        if any(E2.projection[theta[x]] != E1.projection[x] for x in range(E1.E.order)):
            continue
        return True, tuple(theta[x] for x in range(E1.E.order))
    return False, None


def _extend_hom(G1, G2, gens, images):
    theta = {G1.identity: G2.identity}
    queue = deque([G1.identity])
    while queue:
        x = queue.popleft()
        for g, h in zip(gens, images):
            y = G1.mul(x, g)
            ty = G2.mul(theta[x], h)
            if y in theta:
                if theta[y] != ty:
                    return None
            else:
                theta[y] = ty
                queue.append(y)
    return theta


@dataclass(frozen=True, eq=False)
class ExtensionEntry:
    cls: CohomologyClass
    extension: Extension
    label: str


def classify_extensions(M: GModule, check_inequivalent=True) -> list[ExtensionEntry]:
    """One extension per element of ``H^2(G, A)``, labelled by isomorphism type."""
    H2 = cohomology(M, 2)
    entries = []
    for cls in H2.classes():
        ext = build_extension(cls.representative())
        label = identify(ext.E) if ext.E.order <= CATALOG_MAX_ORDER else f"order {ext.E.order}"
        entries.append(ExtensionEntry(cls, ext, label))
    if check_inequivalent:
        for i, x in enumerate(entries):
            for y in entries[i + 1:]:
                if equivalent(x.extension, y.extension)[0]:
                    raise AssertionError(f"classes {x.cls.coordinates} and {y.cls.coordinates} give equivalent extensions")
    return entries
