"""Exact integer linear algebra for finite abelian groups.

Every abelian group handled by the package is a quotient of two lattices
``Z^N >= sup >= sub >= e*Z^N`` where ``e`` is an exponent of the group.
Lattices are represented by their row-style Hermite normal form (upper
triangular, positive pivots, entries right of a pivot reduced into
``[0, pivot)``), which is canonical, so two lattices are equal exactly when
their HNF matrices are equal.

Because ``e*Z^N`` lies inside every lattice built here, reducing a generator
coordinate-wise modulo ``e`` subtracts a lattice vector and keeps all
intermediate entries below ``e**2``; int64 arithmetic is therefore exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd, prod

import numpy as np


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``g = gcd(a, b) = a*x + b*y`` and ``g >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def lcm(*values: int) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


def _insert(H: np.ndarray, v: np.ndarray, e: int) -> None:
    n = H.shape[1]
    v = v % e
    for i in range(n):
        vi = int(v[i])
        if vi == 0:
            continue
        p = int(H[i, i])
        if vi % p == 0:
            v = (v - (vi // p) * H[i]) % e
            continue
        g, a, b = xgcd(p, vi)
        row = (a * H[i] + b * v) % e
        v = ((vi // g) * H[i] - (p // g) * v) % e
        row[i] = g
        H[i] = row
        v[i] = 0


def hnf(gens, n: int, e: int) -> np.ndarray:
    """HNF of the lattice spanned by ``gens`` (rows) together with ``e*Z^n``.

    The result is an ``n x n`` upper-triangular int64 matrix with pivots
    dividing ``e`` and entries right of each pivot reduced modulo that pivot.
    """
    if e < 1:
        raise ValueError("exponent must be positive")
    if e >= 2**30:
        raise OverflowError("exponent too large for exact int64 reduction")
    H = np.eye(n, dtype=np.int64) * e
    gens = np.asarray(gens, dtype=np.int64).reshape(-1, n) if n else np.zeros((0, 0), np.int64)
    for v in gens:
        if v.any():
            _insert(H, v.copy(), e)
    # row reductions modulo e may drop e*unit vectors from the row span;
    # re-insert (e/p_i)*row_i until the span is closed, then every reduction
    # performed was by a lattice vector
    changed = True
    while changed:
        changed = False
        for i in range(n):
            w = (H[i] * (e // int(H[i, i]))) % e
            if w.any():
                before = np.diag(H).copy()
                _insert(H, w, e)
                if not np.array_equal(before, np.diag(H)):
                    changed = True
    _reduce_above(H, e)
    return H


def _reduce_above(H: np.ndarray, e: int) -> None:
    n = H.shape[0]
    for j in range(n):
        p = int(H[j, j])
        for i in range(j):
            q = int(H[i, j]) // p
            if q:
                H[i] -= q * H[j]
                H[i, j + 1:] %= e


def lattice_index(H: np.ndarray) -> int:
    """Index ``[Z^n : L]`` for a full-rank HNF ``H``."""
    return prod(int(x) for x in np.diag(H))


def reduce_vector(H: np.ndarray, v) -> np.ndarray:
    """Canonical representative of ``v + L`` (entries reduced modulo pivots)."""
    v = np.array(v, dtype=object).copy()
    for i in range(H.shape[0]):
        p = int(H[i, i])
        q = int(v[i]) // p
        if q:
            v = v - q * H[i].astype(object)
    return v.astype(np.int64)


def in_lattice(H: np.ndarray, v) -> bool:
    return not reduce_vector(H, v).any()


def kernel_and_solver(images, source_moduli, target_moduli):
    """Lattice machinery for a map ``Z^a/src -> Z^b/tgt`` given by ``images``.

    ``images[j]`` is the image of the j-th unit vector (length ``b``).
    Returns ``(K, A)`` where ``K`` is the HNF of the lifted kernel
    ``{x : sum x_j images[j] in tgt}`` inside ``Z^a`` and ``A`` is the HNF of
    the augmented lattice used by :func:`preimage`.
    """
    a = len(source_moduli)
    b = len(target_moduli)
    e = lcm(*source_moduli, *target_moduli)
    images = np.asarray(images, dtype=np.int64).reshape(a, b) if a else np.zeros((0, b), np.int64)
    gens = []
    for j in range(a):
        row = np.zeros(b + a, dtype=np.int64)
        row[:b] = images[j]
        row[b + j] = 1
        gens.append(row)
    for i, m in enumerate(target_moduli):
        row = np.zeros(b + a, dtype=np.int64)
        row[i] = m
        gens.append(row)
    for j, m in enumerate(source_moduli):
        row = np.zeros(b + a, dtype=np.int64)
        row[b + j] = m
        gens.append(row)
    A = hnf(gens, a + b, e)
    K = A[b:, b:].copy()
    return K, A


def preimage(A: np.ndarray, b: int, z):
    """Solve ``sum x_j images[j] = z`` modulo the target lattice.

    ``A`` is the augmented HNF from :func:`kernel_and_solver` and ``b`` the
    target rank.  Returns ``x`` (reduced, as int64) or ``None`` if ``z`` is
    not in the image.
    """
    n = A.shape[0]
    v = np.zeros(n, dtype=object)
    v[:b] = np.asarray(z, dtype=object)
    for i in range(b):
        p = int(A[i, i])
        vi = int(v[i])
        if vi % p:
            return None
        q = vi // p
        if q:
            v = v - q * A[i].astype(object)
    return np.array([-int(x) for x in v[b:]], dtype=object)


def solve_upper(K: np.ndarray, v) -> list[int]:
    """Integer coordinates ``c`` with ``c @ K == v`` for upper-triangular ``K``.

    Raises ``ValueError`` if ``v`` is not in the row lattice of ``K``.
    """
    n = K.shape[0]
    Ko = K.astype(object)
    r = np.array(v, dtype=object).copy()
    c = [0] * n
    for i in range(n):
        p = int(Ko[i, i])
        ri = int(r[i])
        if ri % p:
            raise ValueError("vector not in lattice")
        q = ri // p
        c[i] = q
        if q:
            r = r - q * Ko[i]
    return c


def smith_normal_form(M):
    """Smith normal form ``U @ M @ V = D`` over the integers.

    Works on Python ints (no overflow, no modular reduction).  Returns
    ``(D, U, V)`` as nested lists; ``D`` is diagonal with each entry dividing
    the next and nonnegative.
    """
    A = [list(map(int, row)) for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(X, i, j):
        X[i], X[j] = X[j], X[i]

    def swap_cols(X, i, j):
        for row in X:
            row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(m, n):
        # pivot: smallest nonzero |entry| in the remaining block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (best is None or abs(A[i][j]) < best[0]):
                    best = (abs(A[i][j]), i, j)
        if best is None:
            break
        _, i, j = best
        swap_rows(A, t, i)
        swap_rows(U, t, i)
        swap_cols(A, t, j)
        swap_cols(V, t, j)
        while True:
            done = True
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    A[i] = [x - q * y for x, y in zip(A[i], A[t])]
                    U[i] = [x - q * y for x, y in zip(U[i], U[t])]
                    if A[i][t]:
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    for row in A:
                        row[j] -= q * row[t]
                    for row in V:
                        row[j] -= q * row[t]
                    if A[t][j]:
                        done = False
            if done:
                # divisibility: pull in any entry the pivot fails to divide
                bad = None
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if A[i][j] % A[t][t]:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                A[t] = [x + y for x, y in zip(A[t], A[bad])]
                U[t] = [x + y for x, y in zip(U[t], U[bad])]
                continue
            # move the new smallest entry of row/column t into the pivot
            best = (abs(A[t][t]), t, t)
            for i in range(t + 1, m):
                if A[i][t] and abs(A[i][t]) < best[0]:
                    best = (abs(A[i][t]), i, t)
            for j in range(t + 1, n):
                if A[t][j] and abs(A[t][j]) < best[0]:
                    best = (abs(A[t][j]), t, j)
            _, i, j = best
            if i != t:
                swap_rows(A, t, i)
                swap_rows(U, t, i)
            if j != t:
                swap_cols(A, t, j)
                swap_cols(V, t, j)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return A, U, V


def _inverse_unimodular(V):
    n = len(V)
    aug = [list(map(int, V[i])) + [int(i == j) for j in range(n)] for i in range(n)]
    # fraction-free Gauss-Jordan is exact since det = +-1
    from fractions import Fraction

    F = [[Fraction(x) for x in row] for row in aug]
    for c in range(n):
        piv = next(r for r in range(c, n) if F[r][c] != 0)
        F[c], F[piv] = F[piv], F[c]
        pv = F[c][c]
        F[c] = [x / pv for x in F[c]]
        for r in range(n):
            if r != c and F[r][c] != 0:
                f = F[r][c]
                F[r] = [x - f * y for x, y in zip(F[r], F[c])]
    out = [[int(x) for x in row[n:]] for row in F]
    return out


@dataclass(frozen=True)
class Quotient:
    """The finite abelian group ``sup / sub`` for lattices ``sup >= sub`` in ``Z^N``.

    ``factors`` are the invariant factors (each >= 2); ``generators`` are
    integer vectors in ``Z^N`` of matching orders.  :meth:`coordinates`
    returns the residues of a vector of ``sup`` against ``factors``.
    """

    sup: np.ndarray
    sub: np.ndarray
    factors: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]
    _V: tuple = field(repr=False, compare=False, default=())
    _keep: tuple = field(repr=False, compare=False, default=())

    @property
    def order(self) -> int:
        return prod(self.factors)

    def coordinates(self, v) -> tuple[int, ...]:
        c = solve_upper(self.sup, v)
        y = [sum(ci * self._V[i][j] for i, ci in enumerate(c)) for j in range(len(c))]
        return tuple(int(y[j]) % d for j, d in zip(self._keep, self.factors))

    def vector(self, coords) -> np.ndarray:
        """Canonical vector for the element with the given coordinates."""
        N = self.sup.shape[1]
        v = np.zeros(N, dtype=object)
        for c, g in zip(coords, self.generators):
            v = v + int(c) * np.array(g, dtype=object)
        return reduce_vector(self.sub, v)

    def elements(self):
        for coords in itertools.product(*(range(d) for d in self.factors)):
            yield coords

    def contains(self, v) -> bool:
        try:
            solve_upper(self.sup, v)
        except ValueError:
            return False
        return True


def quotient(sup: np.ndarray, sub: np.ndarray) -> Quotient:
    """Build :class:`Quotient` from two full-rank HNFs with ``sub <= sup``."""
    N = sup.shape[0]
    R = [solve_upper(sup, sub[i]) for i in range(N)]
    D, U, V = smith_normal_form(R)
    Vinv = _inverse_unimodular(V) if N else []
    keep = [i for i in range(N) if D[i][i] != 1]
    factors = tuple(int(D[i][i]) for i in keep)
    supo = sup.astype(object)
    gens = []
    for i in keep:
        w = np.zeros(N, dtype=object)
        for j in range(N):
            if Vinv[i][j]:
                w = w + Vinv[i][j] * supo[j]
        gens.append(tuple(int(x) for x in reduce_vector(sub, w)))
    return Quotient(sup, sub, factors, tuple(gens), tuple(map(tuple, V)), tuple(keep))


def invariant_factors(moduli) -> tuple[int, ...]:
    """Invariant factors (>= 2, each dividing the next) of ``prod Z/m_i``."""
    moduli = [int(m) for m in moduli]
    if not moduli:
        return ()
    D, _, _ = smith_normal_form([[m if i == j else 0 for j in range(len(moduli))] for i, m in enumerate(moduli)])
    return tuple(D[i][i] for i in range(len(moduli)) if D[i][i] != 1)
