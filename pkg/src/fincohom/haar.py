"""Approximate integrals on a finite group and the invariant integral they define.

``(f; g)`` is the least total weight ``sum c_u`` of nonnegative coefficients
with ``f(x) <= sum_u c_u g(u x)`` for every ``x``.  On a finite group this is
a linear program; it is solved exactly through its dual

    max sum_x f(x) y_x   s.t.   sum_x g(u x) y_x <= 1 for every u,  y >= 0

and the optimal covering coefficients ``c_u`` come back as the dual prices.
Left translation is ``f_u(x) = f(u x)`` throughout, and the measure of a
subset is its cardinality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .groups import FiniteGroup, ValidationError
from .simplex import maximize


@dataclass(frozen=True, eq=False)
class GroupFunction:
    group: FiniteGroup
    values: tuple[Fraction, ...]

    def __post_init__(self):
        vals = tuple(Fraction(v) for v in self.values)
        if len(vals) != self.group.order:
            raise ValidationError(f"need {self.group.order} values, got {len(vals)}")
        if any(v < 0 for v in vals):
            raise ValidationError("group functions must be nonnegative")
        object.__setattr__(self, "values", vals)

    def __call__(self, x: int) -> Fraction:
        return self.values[x]

    def is_zero(self) -> bool:
        return not any(self.values)

    def translate(self, u: int) -> "GroupFunction":
        """``f_u(x) = f(u x)``."""
        G = self.group
        return GroupFunction(G, tuple(self.values[G.mul(u, x)] for x in range(G.order)))

    def __add__(self, other: "GroupFunction") -> "GroupFunction":
        return GroupFunction(self.group, tuple(a + b for a, b in zip(self.values, other.values)))

    def scale(self, c) -> "GroupFunction":
        return GroupFunction(self.group, tuple(Fraction(c) * v for v in self.values))

    def __eq__(self, other):
        return isinstance(other, GroupFunction) and self.group is other.group and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(x for x, v in enumerate(self.values) if v)

    @property
    def total(self) -> Fraction:
        return sum(self.values, Fraction(0))


def constant(G: FiniteGroup, c=1) -> GroupFunction:
    return GroupFunction(G, (Fraction(c),) * G.order)


def indicator(G: FiniteGroup, members) -> GroupFunction:
    members = set(members)
    return GroupFunction(G, tuple(Fraction(int(x in members)) for x in range(G.order)))


def random_function(G: FiniteGroup, rng: np.random.Generator, max_value=6, denominator=3, zero_prob=0.3) -> GroupFunction:
    """Random nonnegative rational function, never identically zero."""
    while True:
        nums = rng.integers(0, max_value * denominator + 1, size=G.order)
        mask = rng.random(G.order) < zero_prob
        nums[mask] = 0
        if nums.any():
            return GroupFunction(G, tuple(Fraction(int(n), denominator) for n in nums))


@dataclass(frozen=True)
class HaarReport:
    """Optimal covering of ``f`` by translates of ``g``."""

    value: Fraction
    coefficients: tuple[Fraction, ...]  # c_u, indexed by u
    dual: tuple[Fraction, ...]  # certificate y_x
    feasible: bool
    certified: bool


def approx_integral(f: GroupFunction, g: GroupFunction) -> HaarReport:
    """``(f; g)`` as an exactly solved covering LP with a duality certificate."""
    if f.group is not g.group:
        raise ValidationError("functions live on different groups")
    if g.is_zero():
        raise ValidationError("(f; g) is undefined for g = 0")
    G = f.group
    n = G.order
    # row u: coverage of each x by the translate g_u
    A = [[g(G.mul(u, x)) for x in range(n)] for u in range(n)]
    sol = maximize(list(f.values), A, [1] * n)
    c, y = sol.dual, sol.primal
    feasible = all(ci >= 0 for ci in c) and all(
        sum(c[u] * A[u][x] for u in range(n)) >= f(x) for x in range(n)
    )
    dual_ok = all(yi >= 0 for yi in y) and all(sum(A[u][x] * y[x] for x in range(n)) <= 1 for u in range(n))
    certified = feasible and dual_ok and sum(c) == sol.value == sum(f(x) * y[x] for x in range(n))
    return HaarReport(sol.value, tuple(c), tuple(y), feasible, certified)


def _cost(f, g) -> Fraction:
    return approx_integral(f, g).value


def relative_integral(f: GroupFunction, phi: GroupFunction, g_ref: GroupFunction | None = None) -> Fraction:
    """``I_phi(f) = (f; phi) / (g_ref; phi)``; ``g_ref`` defaults to the constant 1."""
    if phi.is_zero():
        raise ValidationError("I_phi is undefined for phi = 0")
    if g_ref is None:
        g_ref = constant(f.group)
    if g_ref.is_zero():
        raise ValidationError("the reference function must be nonzero")
    return _cost(f, phi) / _cost(g_ref, phi)


@dataclass(frozen=True)
class PropertyReport:
    value: Fraction
    lower_bound: Fraction | None
    upper_bound: Fraction | None
    bounds: bool
    invariance: bool
    subadditivity: bool | None
    homogeneity: bool

    @property
    def ok(self) -> bool:
        return self.bounds and self.invariance and self.homogeneity and self.subadditivity is not False


def iphi_properties(f, phi, g_ref=None, f2=None, scale=3) -> PropertyReport:
    """Check the four standard properties of ``I_phi`` at ``f`` exactly.

    Bounds ``(g; f)^-1 <= I_phi(f) <= (f; g)``, invariance under every left
    translate, homogeneity under ``scale`` and, when ``f2`` is given,
    subadditivity ``I(f + f2) <= I(f) + I(f2)``.
    """
    G = f.group
    if g_ref is None:
        g_ref = constant(G)
    value = relative_integral(f, phi, g_ref)
    lo = hi = None
    bounds = True
    if not f.is_zero():
        lo = 1 / _cost(g_ref, f)
        hi = _cost(f, g_ref)
        bounds = lo <= value <= hi
    invariance = all(relative_integral(f.translate(x), phi, g_ref) == value for x in range(G.order))
    homogeneity = relative_integral(f.scale(scale), phi, g_ref) == Fraction(scale) * value
    sub = None
    if f2 is not None:
        sub = relative_integral(f + f2, phi, g_ref) <= value + relative_integral(f2, phi, g_ref)
    return PropertyReport(value, lo, hi, bounds, invariance, sub, homogeneity)


def near_additivity_gap(f1, f2, phi, g_ref=None) -> Fraction:
    """``|I_phi(f1) + I_phi(f2) - I_phi(f1 + f2)|``."""
    return abs(relative_integral(f1, phi, g_ref) + relative_integral(f2, phi, g_ref) - relative_integral(f1 + f2, phi, g_ref))


def gap_profile(f1, f2, supports, g_ref=None) -> list[Fraction]:
    """Gaps for ``phi`` the indicator of each support set in turn."""
    G = f1.group
    return [near_additivity_gap(f1, f2, indicator(G, S), g_ref) for S in supports]


@dataclass(frozen=True, eq=False)
class InvariantIntegral:
    """``f -> sum f / sum g_ref``: the relative integral at ``phi = delta_e``."""

    group: FiniteGroup
    g_ref: GroupFunction

    def __call__(self, f: GroupFunction) -> Fraction:
        return f.total / self.g_ref.total

    def matches_lp(self, f: GroupFunction) -> bool:
        delta = indicator(self.group, [self.group.identity])
        return relative_integral(f, delta, self.g_ref) == self(f)

    def certify(self, samples, scale=3) -> dict:
        """Exact positivity, invariance, homogeneity and additivity over ``samples``."""
        G = self.group
        samples = list(samples)
        pos = all(self(f) > 0 for f in samples if not f.is_zero()) and self.g_ref.total > 0
        inv = all(self(f.translate(x)) == self(f) for f in samples for x in range(G.order))
        hom = all(self(f.scale(scale)) == scale * self(f) for f in samples)
        add = all(self(f + h) == self(f) + self(h) for f, h in itertools.combinations(samples, 2))
        lp = all(self.matches_lp(f) for f in samples)
        return {"positive": pos, "left_invariant": inv, "homogeneous": hom, "additive": add, "equals_lp_limit": lp}


def invariant_integral(group: FiniteGroup, g_ref: GroupFunction | None = None) -> InvariantIntegral:
    if g_ref is None:
        g_ref = constant(group)
    if g_ref.is_zero():
        raise ValidationError("the reference function must be nonzero")
    return InvariantIntegral(group, g_ref)


# ---------------------------------------------------------------------------
# symmetric sets and the overlap function


@dataclass(frozen=True, eq=False)
class SymmetricSet:
    group: FiniteGroup
    members: frozenset[int]


def symmetric_set(G: FiniteGroup, members) -> SymmetricSet:
    members = frozenset(int(m) for m in members)
    if G.identity not in members:
        raise ValidationError("a symmetric set must contain the identity")
    bad = [m for m in members if G.inv(m) not in members]
    if bad:
        raise ValidationError(f"not closed under inverses: {G.elements[bad[0]]}", witness=bad[0])
    return SymmetricSet(G, members)


def all_symmetric_sets(G: FiniteGroup):
    """Every subset containing the identity and closed under inversion."""
    orbits = sorted({tuple(sorted({x, G.inv(x)})) for x in range(G.order) if x != G.identity})
    for r in range(len(orbits) + 1):
        for chosen in itertools.combinations(orbits, r):
            yield SymmetricSet(G, frozenset([G.identity, *itertools.chain.from_iterable(chosen)]))


def left_coset(G: FiniteGroup, x: int, S) -> frozenset[int]:
    return frozenset(G.mul(x, m) for m in S)


def overlap_function(M: SymmetricSet) -> GroupFunction:
    """``u(x) = |M ∩ xM|``."""
    G = M.group
    return GroupFunction(G, tuple(Fraction(len(M.members & left_coset(G, x, M.members))) for x in range(G.order)))


def product_set(M: SymmetricSet) -> frozenset[int]:
    G = M.group
    return frozenset(G.mul(x, y) for x in M.members for y in M.members)


@dataclass(frozen=True)
class ProductSetReport:
    product_set: frozenset[int]
    support: frozenset[int]
    support_in_product: bool
    overlap_at_identity: int
    size: int
    identity_in_product: bool

    @property
    def ok(self) -> bool:
        return (
            self.support_in_product
            and self.identity_in_product
            and self.overlap_at_identity == self.size > 0
        )


def product_set_check(M: SymmetricSet) -> ProductSetReport:
    """``supp(u) ⊆ MM``, ``u(e) = |M| > 0`` and ``e ∈ MM``."""
    G = M.group
    u = overlap_function(M)
    MM = product_set(M)
    supp = u.support
    return ProductSetReport(MM, supp, supp <= MM, int(u(G.identity)), len(M.members), G.identity in MM)
