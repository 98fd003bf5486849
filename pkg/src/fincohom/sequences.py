"""Short exact sequences of G-modules and the long exact cohomology sequence."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .cochains import (
    Cochain,
    CohomologyClass,
    CohomologyGroup,
    coboundary,
    cochain,
    cohomology,
    describe,
    first_violation,
    pullback,
)
from .groups import AbelianHom, GModule, ValidationError, abelian_hom, identity_hom
from .intlin import hnf, kernel_and_solver, lcm


def equivariance_violation(f: AbelianHom, source: GModule, target: GModule):
    """First ``(s, a)`` with ``f(s.a) != s.f(a)`` over unit vectors ``a``."""
    k = source.carrier.rank
    for s in range(source.group.order):
        for j in range(k):
            a = tuple(int(i == j) for i in range(k))
            if f(source.act(s, a)) != target.act(s, f(a)):
                return s, a
    return None


def module_map(source: GModule, target: GModule, matrix) -> AbelianHom:
    f = abelian_hom(source.carrier, target.carrier, matrix)
    bad = equivariance_violation(f, source, target)
    if bad is not None:
        raise ValidationError(f"map is not G-equivariant at s={source.group.elements[bad[0]]}, a={bad[1]}", witness=bad)
    return f


@dataclass(frozen=True, eq=False)
class ModuleSES:
    """``0 -> A1 -> A -> A2 -> 0`` with a set-theoretic section of ``proj``."""

    A1: GModule
    A: GModule
    A2: GModule
    incl: AbelianHom
    proj: AbelianHom
    section: dict  # A2 element tuple -> A element tuple
    _pullback: dict = field(repr=False, default_factory=dict)  # image(incl) -> A1

    def lift(self, a2) -> tuple[int, ...]:
        return self.section[tuple(a2)]

    def with_section(self, section) -> "ModuleSES":
        return make_ses(self.A1, self.A, self.A2, self.incl, self.proj, section)


def make_ses(A1: GModule, A: GModule, A2: GModule, incl, proj, section=None) -> ModuleSES:
    """Validate a short exact sequence and fix a section.

    ``section`` may be a dict, a callable on tuples, or ``None``, in which
    case each element of ``A2`` is sent to its least preimage in the
    enumeration order of ``A``.
    """
    if not (A1.group is A.group is A2.group):
        raise ValidationError("all three modules must be over the same group")
    if not isinstance(incl, AbelianHom):
        incl = abelian_hom(A1.carrier, A.carrier, incl)
    if not isinstance(proj, AbelianHom):
        proj = abelian_hom(A.carrier, A2.carrier, proj)
    for f, src, tgt, name in ((incl, A1, A, "incl"), (proj, A, A2, "proj")):
        bad = equivariance_violation(f, src, tgt)
        if bad is not None:
            raise ValidationError(f"{name} is not G-equivariant at s={src.group.elements[bad[0]]}, a={bad[1]}", witness=bad)
    back = {}
    for a1 in A1.carrier.elements():
        img = incl(a1)
        if img in back:
            raise ValidationError(f"incl is not injective: {back[img]} and {a1} both map to {img}", witness=(back[img], a1))
        back[img] = a1
    preimages = {}
    for a in A.carrier.elements():
        preimages.setdefault(proj(a), a)
    missing = [a2 for a2 in A2.carrier.elements() if a2 not in preimages]
    if missing:
        raise ValidationError(f"proj is not surjective: {missing[0]} has no preimage", witness=missing[0])
    zero2 = A2.carrier.zero()
    for a in A.carrier.elements():
        if (proj(a) == zero2) != (a in back):
            raise ValidationError(f"image(incl) != kernel(proj) at {a}", witness=a)
    if section is None:
        sec = dict(preimages)
    elif callable(section) and not isinstance(section, dict):
        sec = {a2: A.carrier.reduce(section(a2)) for a2 in A2.carrier.elements()}
    else:
        sec = {tuple(k): A.carrier.reduce(v) for k, v in section.items()}
    for a2 in A2.carrier.elements():
        if a2 not in sec or proj(sec[a2]) != a2:
            raise ValidationError(f"section fails proj(section(x)) = x at {a2}", witness=a2)
    return ModuleSES(A1, A, A2, incl, proj, sec, back)


def split_ses(A1: GModule, A2: GModule) -> ModuleSES:
    """``0 -> A1 -> A1 (+) A2 -> A2 -> 0`` with the additive section."""
    from .groups import FiniteAbelianGroup, build_module

    k1, k2 = A1.carrier.rank, A2.carrier.rank
    G = A1.group
    mats = np.zeros((G.order, k1 + k2, k1 + k2), dtype=np.int64)
    mats[:, :k1, :k1] = A1.matrices
    mats[:, k1:, k1:] = A2.matrices
    A = build_module(FiniteAbelianGroup(A1.carrier.moduli + A2.carrier.moduli), G, mats, name="direct sum")
    incl = np.vstack([np.eye(k1, dtype=np.int64), np.zeros((k2, k1), dtype=np.int64)])
    proj = np.hstack([np.zeros((k2, k1), dtype=np.int64), np.eye(k2, dtype=np.int64)])
    return make_ses(A1, A, A2, incl, proj, section=lambda a2: (0,) * k1 + tuple(a2))


def connecting_cochain(S: ModuleSES, z: Cochain) -> Cochain:
    """``d(section o z)`` read back in ``A1``."""
    if z.module is not S.A2:
        raise ValidationError("cocycle must take values in the quotient module")
    bad = first_violation(z)
    if bad is not None:
        raise ValidationError(f"not a cocycle: identity fails at {bad}", witness=bad)
    n = z.degree
    k2 = S.A2.carrier.rank
    flat = z.values.reshape(-1, k2)
    lifted = np.array([S.lift(tuple(int(x) for x in v)) for v in flat], dtype=np.int64)
    lifted = lifted.reshape(z.values.shape[:-1] + (S.A.carrier.rank,))
    dl = coboundary(cochain(S.A, n, lifted))
    out = []
    for v in dl.values.reshape(-1, S.A.carrier.rank):
        key = tuple(int(x) for x in v)
        if key not in S._pullback:
            raise ValidationError(f"d(section o z) leaves image(incl) at value {key}; the sequence is broken", witness=key)
        out.append(S._pullback[key])
    out = np.array(out, dtype=np.int64).reshape(dl.values.shape[:-1] + (S.A1.carrier.rank,))
    return cochain(S.A1, n + 1, out)


def connecting(S: ModuleSES, z: Cochain, H_target: CohomologyGroup | None = None) -> CohomologyClass:
    """Class of ``d(section o z)`` in ``H^{n+1}(G, A1)``."""
    c = connecting_cochain(S, z)
    if H_target is None:
        H_target = cohomology(S.A1, z.degree + 1)
    return H_target.class_of(c)


def _map_matrix(images, target: CohomologyGroup) -> np.ndarray:
    cols = [c.coordinates for c in images]
    return np.array(cols, dtype=np.int64).T.reshape(len(target.factors), len(cols))


def connecting_matrix(S: ModuleSES, H2: CohomologyGroup, H1next: CohomologyGroup) -> np.ndarray:
    return _map_matrix([connecting(S, r, H1next) for r in H2.representatives], H1next)


def induced_map_matrix(f: AbelianHom, H_src: CohomologyGroup, H_tgt: CohomologyGroup) -> np.ndarray:
    """Matrix of ``H^n(f)`` on invariant-factor coordinates."""
    phi = identity_hom(H_src.module.group)
    imgs = [H_tgt.class_of(pullback(phi, f, r, H_tgt.module)) for r in H_src.representatives]
    return _map_matrix(imgs, H_tgt)


# ---------------------------------------------------------------------------
# subgroup lattices of Z^r / diag(d)


def image_lattice(F: np.ndarray, src: tuple, tgt: tuple) -> np.ndarray:
    b = len(tgt)
    if b == 0:
        return np.zeros((0, 0), dtype=np.int64)
    e = lcm(*src, *tgt)
    gens = [F[:, j] for j in range(F.shape[1])] + list(np.diag(tgt))
    return hnf(np.array(gens, dtype=np.int64).reshape(-1, b), b, e)


def kernel_lattice(F: np.ndarray, src: tuple, tgt: tuple) -> np.ndarray:
    a = len(src)
    if a == 0:
        return np.zeros((0, 0), dtype=np.int64)
    if len(tgt) == 0:
        return hnf(np.diag(np.ones(a, dtype=np.int64)), a, lcm(*src))
    K, _ = kernel_and_solver(F.T, src, tgt)
    return K


@dataclass
class NodeVerdict:
    node: str
    exact: bool
    witness: object = None


@dataclass
class LESReport:
    groups: dict  # node label -> CohomologyGroup
    maps: dict  # map label -> matrix
    verdicts: list
    complex_ok: bool

    @property
    def exact(self) -> bool:
        return all(v.exact for v in self.verdicts)

    def to_json(self) -> dict:
        return {
            "nodes": [
                {"node": v.node, "factors": list(self.groups[v.node].factors), "exact": v.exact, "witness": v.witness}
                for v in self.verdicts
            ],
            "maps": {k: m.tolist() for k, m in self.maps.items()},
            "composites_vanish": self.complex_ok,
            "exact": self.exact,
        }

    def table(self) -> str:
        lines = []
        for v in self.verdicts:
            lines.append(f"{v.node:<10} {describe(self.groups[v.node].factors):<20} {'exact' if v.exact else 'NOT exact'}")
        return "\n".join(lines)


def _compare(node, im, ker) -> NodeVerdict:
    if np.array_equal(im, ker):
        return NodeVerdict(node, True)
    # witness: a basis vector of one lattice missing from the other
    from .intlin import in_lattice

    for row in ker:
        if not in_lattice(im, row):
            return NodeVerdict(node, False, {"in_kernel_not_image": row.tolist()})
    for row in im:
        if not in_lattice(ker, row):
            return NodeVerdict(node, False, {"in_image_not_kernel": row.tolist()})
    return NodeVerdict(node, False)


def long_exact_sequence(S: ModuleSES, cap: int = 2) -> LESReport:
    """Cohomology of the three modules through degree ``cap`` with all maps.

    Exactness is checked at every node by comparing the image of the
    incoming map with the kernel of the outgoing one as lattices in
    invariant-factor coordinates.
    """
    H = {}
    for n in range(cap + 1):
        H[f"H{n}(A1)"] = cohomology(S.A1, n)
        H[f"H{n}(A)"] = cohomology(S.A, n)
        H[f"H{n}(A2)"] = cohomology(S.A2, n)
    H[f"H{cap + 1}(A1)"] = cohomology(S.A1, cap + 1)
    maps = {}
    for n in range(cap + 1):
        maps[f"i{n}"] = induced_map_matrix(S.incl, H[f"H{n}(A1)"], H[f"H{n}(A)"])
        maps[f"p{n}"] = induced_map_matrix(S.proj, H[f"H{n}(A)"], H[f"H{n}(A2)"])
        maps[f"delta{n}"] = connecting_matrix(S, H[f"H{n}(A2)"], H[f"H{n + 1}(A1)"])

    def fac(label):
        return H[label].factors

    verdicts = []
    for n in range(cap + 1):
        a1, a, a2, nxt = f"H{n}(A1)", f"H{n}(A)", f"H{n}(A2)", f"H{n + 1}(A1)"
        # at H^n(A1): im(delta_{n-1}) = ker(i_n)
        if n == 0:
            im = hnf(np.diag(fac(a1)), len(fac(a1)), lcm(*fac(a1))) if fac(a1) else np.zeros((0, 0), np.int64)
        else:
            im = image_lattice(maps[f"delta{n - 1}"], fac(f"H{n - 1}(A2)"), fac(a1))
        verdicts.append(_compare(a1, im, kernel_lattice(maps[f"i{n}"], fac(a1), fac(a))))
        verdicts.append(_compare(a, image_lattice(maps[f"i{n}"], fac(a1), fac(a)), kernel_lattice(maps[f"p{n}"], fac(a), fac(a2))))
        verdicts.append(_compare(a2, image_lattice(maps[f"p{n}"], fac(a), fac(a2)), kernel_lattice(maps[f"delta{n}"], fac(a2), fac(nxt))))
    return LESReport(H, maps, verdicts, composites_vanish(maps, H, cap))


def _vanishes(F, tgt) -> bool:
    if F.size == 0:
        return True
    mods = np.array(tgt, dtype=np.int64)[:, None]
    return not (F % mods).any()


def composites_vanish(maps, H, cap) -> bool:
    """``p o i``, ``delta o p`` and ``i o delta`` are zero on cohomology."""
    ok = True
    for n in range(cap + 1):
        fa2 = H[f"H{n}(A2)"].factors
        fa1n = H[f"H{n + 1}(A1)"].factors
        ok &= _vanishes(maps[f"p{n}"] @ maps[f"i{n}"], fa2)
        ok &= _vanishes(maps[f"delta{n}"] @ maps[f"p{n}"], fa1n)
        if n + 1 <= cap:
            ok &= _vanishes(maps[f"i{n + 1}"] @ maps[f"delta{n}"], H[f"H{n + 1}(A)"].factors)
    return bool(ok)
