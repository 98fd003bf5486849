"""Dense-tableau simplex over exact rationals with Bland's rule.

Solves ``max c.y  s.t.  A y <= b, y >= 0`` with ``b >= 0``, so the slack
basis is feasible and no phase one is needed.  The optimal dual ``x`` (for
``min b.x  s.t.  A^T x >= c, x >= 0``) is read from the reduced costs of the
slack columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class Unbounded(ArithmeticError):
    pass


@dataclass(frozen=True)
class LPSolution:
    value: Fraction
    primal: tuple[Fraction, ...]  # y
    dual: tuple[Fraction, ...]  # x
    pivots: int


def maximize(c, A, b) -> LPSolution:
    m = len(A)
    n = len(c)
    if any(Fraction(x) < 0 for x in b):
        raise ValueError("right-hand side must be nonnegative")
    # tableau rows: [A | I | b]; objective row holds reduced costs c_j - z_j
    T = [[Fraction(x) for x in A[i]] + [Fraction(int(i == j)) for j in range(m)] + [Fraction(b[i])] for i in range(m)]
    obj = [Fraction(x) for x in c] + [Fraction(0)] * m + [Fraction(0)]
    basis = [n + i for i in range(m)]
    pivots = 0
    while True:
        enter = next((j for j in range(n + m) if obj[j] > 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            if T[i][enter] > 0:
                ratio = T[i][-1] / T[i][enter]
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            raise Unbounded("objective is unbounded")
        r = best[1]
        pv = T[r][enter]
        T[r] = [x / pv for x in T[r]]
        for i in range(m):
            if i != r and T[i][enter] != 0:
                f = T[i][enter]
                T[i] = [x - f * y for x, y in zip(T[i], T[r])]
        f = obj[enter]
        obj = [x - f * y for x, y in zip(obj, T[r])]
        basis[r] = enter
        pivots += 1
    y = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            y[j] = T[i][-1]
    x = tuple(-obj[n + i] for i in range(m))
    value = -obj[-1]
    return LPSolution(value, tuple(y), x, pivots)
