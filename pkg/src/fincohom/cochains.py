"""Inhomogeneous bar cochains C^n(G, A) and their cohomology.

A degree-n cochain is stored as an integer array of shape
``(|G|,) * n + (k,)`` where ``k`` is the number of cyclic factors of the
carrier.  The coboundary is

    d f(s_1..s_{n+1}) = s_1.f(s_2..s_{n+1})
                        + sum_{i=1..n} (-1)^i f(.., s_i s_{i+1}, ..)
                        + (-1)^(n+1) f(s_1..s_n)

Cohomology is read off exactly: the lifted cocycle lattice
``{x in Z^N : d x = 0 mod moduli}`` and the coboundary lattice
``im d + moduli*Z^N`` are put in Hermite normal form and their quotient is
diagonalised by a Smith normal form computation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .groups import (
    AbelianHom,
    FiniteGroup,
    GModule,
    GroupHom,
    SizeLimitError,
    ValidationError,
    build_module,
    fixed_points,
)
from .intlin import Quotient, hnf, kernel_and_solver, lcm, preimage, quotient, reduce_vector

MAX_DEGREE = 3
MAX_TUPLES = 20736


@dataclass(frozen=True, eq=False)
class Cochain:
    module: GModule
    degree: int
    values: np.ndarray

    def __post_init__(self):
        G = self.module.group
        shape = (G.order,) * self.degree + (self.module.carrier.rank,)
        if self.values.shape != shape:
            raise ValidationError(f"cochain values must have shape {shape}, got {self.values.shape}")
        self.values.setflags(write=False)

    def __call__(self, *args) -> tuple[int, ...]:
        return tuple(int(x) for x in self.values[tuple(args)])

    def __add__(self, other: "Cochain") -> "Cochain":
        return cochain(self.module, self.degree, self.values + other.values)

    def __sub__(self, other: "Cochain") -> "Cochain":
        return cochain(self.module, self.degree, self.values - other.values)

    def __neg__(self) -> "Cochain":
        return cochain(self.module, self.degree, -self.values)

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        return self.module is other.module and self.degree == other.degree and np.array_equal(self.values, other.values)

    def __hash__(self):
        return hash((self.degree, self.values.tobytes()))

    def vector(self) -> np.ndarray:
        return self.values.reshape(-1)

    def is_zero(self) -> bool:
        return not self.values.any()

    def items(self):
        """``(tuple, value)`` pairs in lexicographic tuple order."""
        G = self.module.group
        for t in itertools.product(range(G.order), repeat=self.degree):
            yield t, self(*t)


def _moduli_array(M: GModule) -> np.ndarray:
    return np.array(M.carrier.moduli, dtype=np.int64)


def cochain(M: GModule, degree: int, values) -> Cochain:
    """Cochain from an array, a dict ``{tuple: value}`` or a callable."""
    G = M.group
    k = M.carrier.rank
    shape = (G.order,) * degree + (k,)
    if callable(values):
        arr = np.zeros(shape, dtype=np.int64)
        for t in itertools.product(range(G.order), repeat=degree):
            arr[t] = values(*t)
    elif isinstance(values, dict):
        arr = np.zeros(shape, dtype=np.int64)
        for t, v in values.items():
            t = (t,) if isinstance(t, (int, np.integer)) else tuple(t)
            arr[t] = v
    else:
        arr = np.asarray(values, dtype=np.int64).reshape(shape)
    return Cochain(M, degree, arr % _moduli_array(M))


def zero_cochain(M: GModule, degree: int) -> Cochain:
    return cochain(M, degree, np.zeros((M.group.order,) * degree + (M.carrier.rank,), dtype=np.int64))


def random_cochain(M: GModule, degree: int, rng: np.random.Generator) -> Cochain:
    shape = (M.group.order,) * degree + (M.carrier.rank,)
    mods = _moduli_array(M)
    return cochain(M, degree, rng.integers(0, 2**31, size=shape) % mods)


def _coboundary_batch(G: FiniteGroup, mats: np.ndarray, vals: np.ndarray, n: int) -> np.ndarray:
    """Unreduced coboundary of a batch: ``vals`` has a leading batch axis."""
    if n == 0:
        return np.einsum("sij,bj->bsi", mats, vals) - vals[:, None, :]
    g = G.order
    out = np.einsum("sij,b...j->bs...i", mats, vals)
    idx = list(np.indices((g,) * (n + 1)))
    T = G.table
    batch = (slice(None),)
    for i in range(1, n + 1):
        merged = T[idx[i - 1], idx[i]]
        key = tuple(idx[: i - 1]) + (merged,) + tuple(idx[i + 1 :])
        term = vals[batch + key]
        out = out + term if i % 2 == 0 else out - term
    last = vals[batch + tuple(idx[:n])]
    out = out + last if (n + 1) % 2 == 0 else out - last
    return out


def coboundary(f: Cochain) -> Cochain:
    """The bar coboundary ``d f`` (degree raised by one)."""
    M = f.module
    out = _coboundary_batch(M.group, M.matrices, f.values[None], f.degree)[0]
    return cochain(M, f.degree + 1, out)


def _check_size(M: GModule, n: int, max_degree=MAX_DEGREE, max_tuples=MAX_TUPLES):
    if n < 0:
        raise ValidationError(f"degree must be >= 0, got {n}")
    if n > max_degree:
        raise SizeLimitError(f"degree {n} exceeds the degree cap {max_degree}")
    tuples = M.group.order**n
    if tuples > max_tuples:
        raise SizeLimitError(f"|G|^n = {M.group.order}^{n} = {tuples} exceeds the cap {max_tuples}")


def coboundary_images(M: GModule, n: int) -> np.ndarray:
    """Matrix whose row j is ``d^n`` of the j-th unit cochain of degree n."""
    g, k = M.group.order, M.carrier.rank
    N = g**n * k
    basis = np.eye(N, dtype=np.int64).reshape((N,) + (g,) * n + (k,))
    out = _coboundary_batch(M.group, M.matrices, basis, n)
    return out.reshape(N, -1)


def cochain_moduli(M: GModule, n: int) -> tuple[int, ...]:
    return M.carrier.moduli * (M.group.order**n)


@dataclass(frozen=True, eq=False)
class CohomologyClass:
    group: "CohomologyGroup"
    coordinates: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "coordinates", tuple(int(c) % d for c, d in zip(self.coordinates, self.group.factors))
        )

    def is_zero(self) -> bool:
        return not any(self.coordinates)

    def __add__(self, other):
        return CohomologyClass(self.group, tuple(a + b for a, b in zip(self.coordinates, other.coordinates)))

    def __eq__(self, other):
        return (
            isinstance(other, CohomologyClass)
            and self.group is other.group
            and self.coordinates == other.coordinates
        )

    def __hash__(self):
        return hash(self.coordinates)

    def representative(self) -> Cochain:
        return self.group.cochain_of(self.coordinates)

    def __repr__(self):
        return f"CohomologyClass(H^{self.group.degree}, {self.coordinates})"


@dataclass(frozen=True)
class Classification:
    is_cocycle: bool
    is_coboundary: bool
    witness: object  # failing tuple, preimage cochain, or class coordinates
    cls: CohomologyClass | None = None


@dataclass(frozen=True, eq=False)
class CohomologyGroup:
    """``H^n(G, A)`` with invariant factors, representatives and membership data."""

    module: GModule
    degree: int
    quotient: Quotient

    @property
    def factors(self) -> tuple[int, ...]:
        return self.quotient.factors

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return self.quotient.factors

    @property
    def order(self) -> int:
        return self.quotient.order

    @property
    def cocycle_lattice(self) -> np.ndarray:
        return self.quotient.sup

    @property
    def coboundary_lattice(self) -> np.ndarray:
        return self.quotient.sub

    def cochain_of(self, coords) -> Cochain:
        v = self.quotient.vector(coords)
        return cochain(self.module, self.degree, v)

    @cached_property
    def representatives(self) -> tuple[Cochain, ...]:
        return tuple(cochain(self.module, self.degree, np.array(g, dtype=np.int64)) for g in self.quotient.generators)

    def zero(self) -> CohomologyClass:
        return CohomologyClass(self, (0,) * len(self.factors))

    def class_of(self, f: Cochain) -> CohomologyClass:
        """Class of a cocycle; raises ``ValidationError`` for non-cocycles."""
        if f.degree != self.degree or f.module is not self.module:
            raise ValidationError("cochain does not belong to this cohomology group")
        try:
            coords = self.quotient.coordinates(f.vector())
        except ValueError:
            raise ValidationError("cochain is not a cocycle") from None
        return CohomologyClass(self, coords)

    def classes(self):
        for coords in self.quotient.elements():
            yield CohomologyClass(self, coords)

    @cached_property
    def _solver(self):
        if self.degree == 0:
            return None
        M = self.module
        imgs = coboundary_images(M, self.degree - 1)
        _, A = kernel_and_solver(imgs, cochain_moduli(M, self.degree - 1), cochain_moduli(M, self.degree))
        return A

    def preimage(self, f: Cochain) -> Cochain | None:
        """A cochain ``g`` of degree n-1 with ``d g = f``, or ``None``."""
        if self.degree == 0:
            return zero_cochain(self.module, 0) if f.is_zero() else None
        x = preimage(self._solver, len(f.vector()), f.vector())
        if x is None:
            return None
        return cochain(self.module, self.degree - 1, np.array(x, dtype=object).astype(np.int64) if len(x) else np.zeros(0, np.int64))

    def __repr__(self):
        return f"H^{self.degree}({self.module.group.name}, {self.module.name or self.module.carrier}) = {describe(self.factors)}"


def describe(factors) -> str:
    return " x ".join(f"Z/{d}" for d in factors) if factors else "0"


def cohomology(M: GModule, n: int, max_degree=MAX_DEGREE, max_tuples=MAX_TUPLES) -> CohomologyGroup:
    """``H^n(G, A)`` computed from the bar complex by exact lattice algebra."""
    _check_size(M, n, max_degree, max_tuples)
    mods_n = cochain_moduli(M, n)
    N = len(mods_n)
    e = lcm(*M.carrier.moduli)
    if N == 0:
        K = B = np.zeros((0, 0), dtype=np.int64)
        return CohomologyGroup(M, n, quotient(K, B))
    K, _ = kernel_and_solver(coboundary_images(M, n), mods_n, cochain_moduli(M, n + 1))
    gens = [np.diag(mods_n)]
    if n > 0:
        gens.insert(0, coboundary_images(M, n - 1))
    B = hnf(np.concatenate(gens, axis=0), N, e)
    return CohomologyGroup(M, n, quotient(K, B))


def first_violation(f: Cochain):
    """First tuple (lexicographic) where ``d f`` is nonzero, or ``None``."""
    df = coboundary(f)
    bad = np.argwhere(df.values.reshape((-1, f.module.carrier.rank)).any(axis=1))
    if not len(bad):
        return None
    flat = int(bad[0][0])
    return tuple(int(x) for x in np.unravel_index(flat, (f.module.group.order,) * (f.degree + 1)))


def classify_cochain(f: Cochain, H: CohomologyGroup | None = None) -> Classification:
    """Decide cocycle / coboundary and return a witness.

    Non-cocycles come with the first tuple where the cocycle identity fails;
    coboundaries with a preimage under ``d``; other cocycles with their
    coordinates in ``H^n``.
    """
    bad = first_violation(f)
    if bad is not None:
        return Classification(False, False, bad)
    if H is None:
        H = cohomology(f.module, f.degree)
    cls = H.class_of(f)
    if cls.is_zero():
        return Classification(True, True, H.preimage(f), cls)
    return Classification(True, False, cls.coordinates, cls)


def cocycles(M: GModule, n: int):
    """Iterate over every element of ``Z^n(G, A)``."""
    _check_size(M, n)
    mods = cochain_moduli(M, n)
    N = len(mods)
    if N == 0:
        yield zero_cochain(M, n)
        return
    K, _ = kernel_and_solver(coboundary_images(M, n), mods, cochain_moduli(M, n + 1))
    L = hnf(np.diag(mods), N, lcm(*M.carrier.moduli))
    Z = quotient(K, L)
    for coords in Z.elements():
        yield cochain(M, n, Z.vector(coords))


def crossed_homomorphisms(M: GModule) -> list[Cochain]:
    """All maps ``c`` with ``c(st) = s.c(t) + c(s)``: the 1-cocycles."""
    return list(cocycles(M, 1))


def normalize(f: Cochain) -> Cochain:
    """A cohomologous cocycle vanishing whenever some argument is the identity."""
    if f.degree == 0:
        return f
    if first_violation(f) is not None:
        raise ValidationError("only cocycles can be normalized")
    M = f.module
    G = M.group
    n = f.degree
    k = M.carrier.rank
    tuples = list(itertools.product(range(G.order), repeat=n))
    rows = [i for i, t in enumerate(tuples) if G.identity in t]
    cols = [i * k + c for i in rows for c in range(k)]
    imgs = coboundary_images(M, n - 1)[:, cols]
    mods = tuple(M.carrier.moduli) * len(rows)
    _, A = kernel_and_solver(imgs, cochain_moduli(M, n - 1), mods)
    target = f.vector()[cols]
    x = preimage(A, len(cols), target)
    if x is None:
        raise ValidationError("no normalizing coboundary found")
    g = cochain(M, n - 1, np.array(x, dtype=object).astype(np.int64))
    return f - coboundary(g)


# ---------------------------------------------------------------------------
# change of groups


def module_map_violation(phi: GroupHom, psi: AbelianHom, source: GModule, target: GModule):
    """Witness ``(g', a)`` where ``g'.psi(a) != psi(phi(g').a)``, else ``None``."""
    A = source.carrier
    for gp in range(target.group.order):
        for j in range(A.rank):
            a = tuple(int(i == j) for i in range(A.rank))
            lhs = target.act(gp, psi(a))
            rhs = psi(source.act(phi(gp), a))
            if lhs != rhs:
                return gp, a
    return None


def pullback(phi: GroupHom, psi: AbelianHom, f: Cochain, target: GModule) -> Cochain:
    """``f'(s'_1..s'_n) = psi(f(phi s'_1, .., phi s'_n))``."""
    n = f.degree
    m = np.asarray(phi.mapping)
    gp = target.group.order
    idx = np.indices((gp,) * n) if n else ()
    vals = f.values[tuple(m[i] for i in idx)] if n else f.values
    out = np.einsum("ij,...j->...i", psi.matrix, vals)
    return cochain(target, n, out)


def change_of_groups(phi: GroupHom, psi: AbelianHom, x, target: GModule, H_target: CohomologyGroup | None = None):
    """Class over ``(G', A')`` of the transported cocycle.

    ``x`` is a cocycle or a :class:`CohomologyClass` over ``(G, A)``;
    ``phi : G' -> G`` and ``psi : A -> A'`` must satisfy
    ``g'.psi(a) = psi(phi(g').a)``.
    """
    if isinstance(x, CohomologyClass):
        f = x.representative()
    else:
        f = x
    source = f.module
    if phi.target is not source.group or phi.source is not target.group:
        raise ValidationError("phi must map the target group into the source group")
    bad = module_map_violation(phi, psi, source, target)
    if bad is not None:
        raise ValidationError(f"compatibility fails at g'={target.group.elements[bad[0]]}, a={bad[1]}", witness=bad)
    g = pullback(phi, psi, f, target)
    if H_target is None:
        H_target = cohomology(target, f.degree)
    return H_target.class_of(g)


def induced_matrix(phi, psi, H: CohomologyGroup, H_target: CohomologyGroup) -> list[list[int]]:
    """Matrix of the change-of-groups map on invariant-factor coordinates.

    Column j is the image of the j-th generator of ``H``.
    """
    cols = [change_of_groups(phi, psi, r, H_target.module, H_target).coordinates for r in H.representatives]
    return [[c[i] for c in cols] for i in range(len(H_target.factors))]


def restrict_module(M: GModule, phi: GroupHom) -> GModule:
    """``M`` viewed as a module over the source of ``phi``."""
    return build_module(M.carrier, phi.source, M.matrices[list(phi.mapping)], name=M.name)


def restriction(M: GModule, phi: GroupHom, x, H_target=None):
    """Restriction along an injective ``phi`` (psi = identity)."""
    target = H_target.module if H_target is not None else restrict_module(M, phi)
    k = M.carrier.rank
    psi = AbelianHom(M.carrier, M.carrier, np.eye(k, dtype=np.int64))
    return change_of_groups(phi, psi, x, target, H_target)


def h0_matches_fixed_points(M: GModule) -> bool:
    H0 = cohomology(M, 0)
    fp = fixed_points(M)
    h0_elems = {tuple(int(x) for x in H0.cochain_of(c).vector()) for c in H0.quotient.elements()}
    return H0.factors == fp.group.moduli and h0_elems == fp.elements()
