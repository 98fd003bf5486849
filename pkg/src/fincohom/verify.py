"""Seeded self-checks over small families, shared by the CLI and the demos."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .cochains import coboundary, cohomology, h0_matches_fixed_points, random_cochain
from .extensions import build_extension, classify_extensions, cocycle_from_section
from .groups import build_module, cyclic, dihedral, product, symmetric, trivial_module
from .haar import (
    all_symmetric_sets,
    indicator,
    invariant_integral,
    iphi_properties,
    near_additivity_gap,
    product_set_check,
    random_function,
)
from .induced import dimension_shift_check
from .lie import abelian_lie, adjoint_module, betti_numbers, ce_differential, heisenberg, matmul, sl2, trivial_lie_module
from .sequences import long_exact_sequence, make_ses


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


def _parity(label: str) -> int:
    p = [int(c) for c in label]
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j]) % 2


def sample_modules():
    """A fixed family of small modules with trivial and nontrivial actions."""
    Z2, Z3, Z4 = cyclic(2), cyclic(3), cyclic(4)
    V4 = product(Z2, Z2)
    S3 = symmetric(3)
    # odd permutations negate
    sign = np.array([[[_parity(S3.elements[s]) and 2 or 1]] for s in range(S3.order)])
    return [
        trivial_module(Z2, 2),
        trivial_module(Z3, 3),
        trivial_module(Z4, 2),
        trivial_module(V4, 2),
        trivial_module(S3, 2),
        build_module((4,), Z2, {1: [[-1]]}, name="Z/4 by negation"),
        build_module((3,), Z2, {1: [[2]]}, name="Z/3 by negation"),
        build_module((3, 3), Z2, {1: [[0, 1], [1, 0]]}, name="swap on Z/3 x Z/3"),
        build_module((3,), S3, sign, name="sign on Z/3"),
        trivial_module(dihedral(4), 2),
    ]


def check_d_squared(rng, count=60) -> Check:
    mods = sample_modules()
    for i in range(count):
        M = mods[i % len(mods)]
        n = int(rng.integers(0, 3))
        f = random_cochain(M, n, rng)
        if not coboundary(coboundary(f)).is_zero():
            return Check("d o d = 0", False, f"{M!r}, degree {n}")
    return Check("d o d = 0", True, f"{count} random cochains")


def check_h0() -> Check:
    bad = [repr(M) for M in sample_modules() if not h0_matches_fixed_points(M)]
    return Check("H^0 = fixed points", not bad, ", ".join(bad))


def check_cyclic_h2(limit=5) -> Check:
    for n in range(2, limit + 1):
        for m in range(2, limit + 1):
            H = cohomology(trivial_module(cyclic(n), m), 2)
            if H.order != gcd(n, m):
                return Check("H^2(Z/n, Z/m) = Z/gcd", False, f"n={n}, m={m}: {H.factors}")
    return Check("H^2(Z/n, Z/m) = Z/gcd", True, f"2 <= n, m <= {limit}")


def check_extensions() -> Check:
    M = trivial_module(cyclic(2), 2)
    entries = classify_extensions(M)
    labels = sorted(e.label for e in entries)
    ok = labels == ["Z/2xZ/2", "Z/4"]
    for e in entries:
        back = cocycle_from_section(build_extension(e.cls.representative()))
        ok &= e.cls.group.class_of(back) == e.cls
    return Check("extensions of Z/2 by Z/2", bool(ok), ", ".join(labels))


def check_les() -> Check:
    G = cyclic(2)
    S = make_ses(trivial_module(G, 2), trivial_module(G, 4), trivial_module(G, 2), [[2]], [[1]])
    rep = long_exact_sequence(S, 2)
    return Check("long exact sequence", rep.exact and rep.complex_ok, f"{len(rep.verdicts)} nodes")


def check_dimension_shift() -> Check:
    results = []
    for n in (2, 3):
        for m in (2, 3):
            results.append(dimension_shift_check(trivial_module(cyclic(n), m)).bijective)
    return Check("dimension shift H^2(A) = H^1(U)", all(results), f"{len(results)} modules")


def check_haar(rng, count=20) -> Check:
    groups = [cyclic(4), cyclic(6), symmetric(3), product(cyclic(2), cyclic(2))]
    for i in range(count):
        G = groups[i % len(groups)]
        f, phi, f2 = (random_function(G, rng) for _ in range(3))
        rep = iphi_properties(f, phi, f2=f2)
        if not rep.ok:
            return Check("approximate integral properties", False, f"instance {i}")
        delta = indicator(G, [G.identity])
        if near_additivity_gap(f, f2, delta) != 0:
            return Check("approximate integral properties", False, f"nonzero gap at delta_e, instance {i}")
        cert = invariant_integral(G).certify([f, f2, phi])
        if not all(cert.values()):
            return Check("approximate integral properties", False, f"invariant integral, instance {i}: {cert}")
    return Check("approximate integral properties", True, f"{count} instances")


def check_product_sets(limit=6) -> Check:
    total = 0
    for n in range(1, limit + 1):
        for M in all_symmetric_sets(cyclic(n)):
            total += 1
            if not product_set_check(M).ok:
                return Check("overlap support in MM", False, f"Z/{n}, M={sorted(M.members)}")
    return Check("overlap support in MM", True, f"{total} symmetric sets")


def check_lie() -> Check:
    ok = True
    for L in (abelian_lie(2), sl2(), heisenberg()):
        for V in (trivial_lie_module(L), adjoint_module(L)):
            for n in range(L.dim):
                P = matmul(ce_differential(L, V, n + 1), ce_differential(L, V, n))
                ok &= all(x == 0 for row in P for x in row)
    ok &= betti_numbers(abelian_lie(2)) == [1, 2, 1]
    ok &= betti_numbers(sl2())[1:3] == [0, 0]
    ok &= betti_numbers(heisenberg()) == [1, 2, 2, 1]
    return Check("Chevalley-Eilenberg cohomology", bool(ok))


def run_all(seed: int = 0) -> list[Check]:
    rng = np.random.default_rng(seed)
    return [
        check_d_squared(rng),
        check_h0(),
        check_cyclic_h2(),
        check_extensions(),
        check_les(),
        check_dimension_shift(),
        check_haar(rng),
        check_product_sets(),
        check_lie(),
    ]

