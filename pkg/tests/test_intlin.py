import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fincohom.intlin import (
    hnf,
    in_lattice,
    invariant_factors,
    kernel_and_solver,
    lattice_index,
    preimage,
    quotient,
    smith_normal_form,
    xgcd,
)


def span_mod(gens, e):
    """Every vector of the subgroup of (Z/e)^n spanned by ``gens``, by closure."""
    n = len(gens[0])
    seen = {tuple([0] * n)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = tuple((a + b) % e for a, b in zip(v, g))
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return seen


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_xgcd_bezout(a, b):
    g, x, y = xgcd(a, b)
    assert a * x + b * y == g
    assert g == np.gcd(a, b)


@settings(max_examples=60, deadline=None)
@given(
    st.integers(2, 3),
    st.sampled_from([2, 4, 6]),
    st.lists(st.lists(st.integers(0, 11), min_size=3, max_size=3), min_size=1, max_size=3),
)
def test_hnf_membership_matches_enumeration(n, e, rows):
    gens = [r[:n] for r in rows] + [[e if i == j else 0 for i in range(n)] for j in range(n)]
    H = hnf(np.array(gens), n, e)
    members = span_mod([[x % e for x in g] for g in gens], e)
    for v in itertools.product(range(e), repeat=n):
        assert in_lattice(H, v) == (v in members)
    assert lattice_index(H) == e**n // len(members)


def test_hnf_refuses_huge_exponent():
    with pytest.raises(OverflowError):
        hnf(np.eye(2, dtype=np.int64), 2, 2**31)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3), min_size=1, max_size=4))
def test_smith_normal_form(rows):
    M = np.array(rows, dtype=object)
    D, U, V = smith_normal_form(M)
    assert (np.array(U, dtype=object).dot(M).dot(np.array(V, dtype=object)) == np.array(D, dtype=object)).all()
    diag = [D[i][i] for i in range(min(len(rows), 3))]
    nz = [d for d in diag if d]
    assert all(d > 0 for d in nz)
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    for i in range(len(rows)):
        for j in range(3):
            if i != j:
                assert D[i][j] == 0
    assert round(abs(np.linalg.det(np.array(U, dtype=float)))) == 1
    assert round(abs(np.linalg.det(np.array(V, dtype=float)))) == 1


@pytest.mark.parametrize(
    "moduli, expected",
    [((2, 3), (6,)), ((2, 2), (2, 2)), ((4, 6), (2, 12)), ((1, 5), (5,)), ((), ())],
)
def test_invariant_factors(moduli, expected):
    assert invariant_factors(moduli) == expected


def test_kernel_and_preimage_small():
    # x -> 2x from Z/4 to Z/4: kernel {0, 2}, image {0, 2}
    K, A = kernel_and_solver(np.array([[2]]), (4,), (4,))
    assert in_lattice(K, (2,)) and not in_lattice(K, (1,))
    assert preimage(A, 1, [2]) is not None
    assert preimage(A, 1, [1]) is None


def test_quotient_coordinates_roundtrip():
    sup = hnf(np.eye(2, dtype=np.int64), 2, 4)
    sub = hnf(np.array([[2, 0], [0, 4]]), 2, 4)
    Q = quotient(sup, sub)
    assert Q.factors == (2, 4)
    assert Q.order == 8
    for c in Q.elements():
        assert Q.coordinates(Q.vector(c)) == tuple(c)
