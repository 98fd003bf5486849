"""Chevalley-Eilenberg cohomology of finite-dimensional Lie algebras over Q.

An n-cochain is an alternating map ``L^n -> V``, stored by its values on the
basis tuples ``i_1 < ... < i_n`` (lexicographic), each value a vector of V.
The differential is

    (d w)(x_0..x_n) = sum_i (-1)^i  x_i . w(x_0..^x_i..x_n)
                    + sum_{i<j} (-1)^(i+j) w([x_i, x_j], x_0..^x_i..^x_j..x_n)

All arithmetic is in exact rationals.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .groups import ValidationError


def _frac(x) -> Fraction:
    return Fraction(x)


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    dim: int
    constants: tuple  # constants[i][j][k] = coefficient of e_k in [e_i, e_j]
    name: str = ""

    def bracket(self, x, y) -> tuple[Fraction, ...]:
        n = self.dim
        out = [Fraction(0)] * n
        for i in range(n):
            if not x[i]:
                continue
            for j in range(n):
                if not y[j]:
                    continue
                for k in range(n):
                    c = self.constants[i][j][k]
                    if c:
                        out[k] += x[i] * y[j] * c
        return tuple(out)

    def basis(self, i) -> tuple[Fraction, ...]:
        return tuple(Fraction(int(k == i)) for k in range(self.dim))


def _violations(dim, c):
    for i in range(dim):
        for j in range(dim):
            for k in range(dim):
                if c[i][j][k] != -c[j][i][k]:
                    return f"antisymmetry fails: [e{i},e{j}] != -[e{j},e{i}] in coordinate {k}", (i, j)
    for a, b, d in itertools.combinations_with_replacement(range(dim), 3):
        for x, y, z in {(a, b, d), (b, d, a), (d, a, b)}:
            # [x,[y,z]] + [y,[z,x]] + [z,[x,y]]
            total = [Fraction(0)] * dim
            for (p, q, r) in ((x, y, z), (y, z, x), (z, x, y)):
                for m in range(dim):
                    cm = c[q][r][m]
                    if cm:
                        for k in range(dim):
                            total[k] += cm * c[p][m][k]
            if any(total):
                return f"Jacobi identity fails at (e{x}, e{y}, e{z})", (x, y, z)
    return None


def build_lie_algebra(constants, dim: int | None = None, name="") -> LieAlgebra:
    """Validated Lie algebra.

    ``constants`` is either a full ``dim x dim x dim`` nested sequence or a
    dict ``{(i, j): {k: value}}``; in the dict form an unspecified ``(j, i)``
    is filled in by antisymmetry.
    """
    if isinstance(constants, dict):
        if dim is None:
            idx = [i for key in constants for i in key] + [k for v in constants.values() for k in v]
            dim = max(idx) + 1 if idx else 0
        c = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
        given = set()
        for (i, j), vals in constants.items():
            for k, v in vals.items():
                c[i][j][k] = _frac(v)
            given.add((i, j))
        for (i, j) in given:
            if (j, i) not in given:
                for k in range(dim):
                    c[j][i][k] = -c[i][j][k]
    else:
        c = [[[_frac(v) for v in row] for row in plane] for plane in constants]
        dim = len(c)
    bad = _violations(dim, c)
    if bad:
        raise ValidationError(bad[0], witness=bad[1])
    return LieAlgebra(dim, tuple(tuple(tuple(row) for row in plane) for plane in c), name)


def abelian_lie(dim: int) -> LieAlgebra:
    return build_lie_algebra({}, dim, name=f"abelian({dim})")


def sl2() -> LieAlgebra:
    """Basis ``h, e, f`` with ``[h,e] = 2e``, ``[h,f] = -2f``, ``[e,f] = h``."""
    return build_lie_algebra({(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}}, 3, name="sl2")


def heisenberg() -> LieAlgebra:
    """Basis ``x, y, z`` with ``[x, y] = z`` the only nonzero bracket."""
    return build_lie_algebra({(0, 1): {2: 1}}, 3, name="heisenberg")


@dataclass(frozen=True, eq=False)
class LieModule:
    algebra: LieAlgebra
    dim: int
    rep: tuple  # rep[i] = matrix of e_i acting on V


def _matmul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]) if B else 0)] for i in range(len(A))]


def build_lie_module(L: LieAlgebra, rep) -> LieModule:
    rep = [[[_frac(x) for x in row] for row in M] for M in rep]
    if len(rep) != L.dim:
        raise ValidationError(f"need one matrix per basis element ({L.dim}), got {len(rep)}")
    m = len(rep[0]) if rep else 0
    for i, j in itertools.combinations(range(L.dim), 2):
        lhs = [[sum(L.constants[i][j][k] * rep[k][a][b] for k in range(L.dim)) for b in range(m)] for a in range(m)]
        AB = _matmul(rep[i], rep[j])
        BA = _matmul(rep[j], rep[i])
        if any(lhs[a][b] != AB[a][b] - BA[a][b] for a in range(m) for b in range(m)):
            raise ValidationError(f"rep([e{i},e{j}]) != [rep(e{i}), rep(e{j})]", witness=(i, j))
    return LieModule(L, m, tuple(tuple(tuple(row) for row in M) for M in rep))


def trivial_lie_module(L: LieAlgebra, dim: int = 1) -> LieModule:
    zero = [[0] * dim for _ in range(dim)]
    return build_lie_module(L, [zero] * L.dim)


def adjoint_module(L: LieAlgebra) -> LieModule:
    # ad(e_i)[k][j] = coefficient of e_k in [e_i, e_j]
    rep = [[[L.constants[i][j][k] for j in range(L.dim)] for k in range(L.dim)] for i in range(L.dim)]
    return build_lie_module(L, rep)


def cochain_basis(L: LieAlgebra, n: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations(range(L.dim), n))


def ce_differential(L: LieAlgebra, V: LieModule, n: int) -> list[list[Fraction]]:
    """Matrix of ``d : C^n -> C^(n+1)``; rows/columns ordered (tuple, V-coordinate)."""
    m = V.dim
    src = cochain_basis(L, n)
    tgt = cochain_basis(L, n + 1)
    col = {I: i for i, I in enumerate(src)}
    D = [[Fraction(0)] * (len(src) * m) for _ in range(len(tgt) * m)]
    for r, J in enumerate(tgt):
        for i in range(n + 1):
            I = J[:i] + J[i + 1:]
            sgn = -1 if i % 2 else 1
            rho = V.rep[J[i]]
            for b in range(m):
                for a in range(m):
                    if rho[b][a]:
                        D[r * m + b][col[I] * m + a] += sgn * rho[b][a]
        for i, j in itertools.combinations(range(n + 1), 2):
            rest = tuple(x for t, x in enumerate(J) if t not in (i, j))
            sgn = -1 if (i + j) % 2 else 1
            for k in range(L.dim):
                c = L.constants[J[i]][J[j]][k]
                if not c or k in rest:
                    continue
                pos = sum(1 for x in rest if x < k)
                I = rest[:pos] + (k,) + rest[pos:]
                s = sgn * (-1 if pos % 2 else 1) * c
                for b in range(m):
                    D[r * m + b][col[I] * m + b] += s
    return D


def _rref(rows, ncols):
    R = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(R)) if R[i][c] != 0), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        pv = R[r][c]
        R[r] = [x / pv for x in R[r]]
        for i in range(len(R)):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == len(R):
            break
    return R[:r], pivots


def rank(M) -> int:
    if not M or not M[0]:
        return 0
    return len(_rref(M, len(M[0]))[1])


def kernel_basis(M, ncols) -> list[list[Fraction]]:
    if not M:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    R, piv = _rref(M, ncols)
    free = [c for c in range(ncols) if c not in piv]
    out = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(R, piv):
            v[p] = -row[f]
        out.append(v)
    return out


def matmul(A, B):
    return _matmul(A, B)


@dataclass(frozen=True)
class LieCohomology:
    degree: int
    dim: int
    representatives: tuple  # cocycle vectors in C^n coordinates
    cochain_dim: int


def ce_cohomology(L: LieAlgebra, V: LieModule, n: int) -> LieCohomology:
    """``H^n(L, V)``: dimension and representative cocycles."""
    if n < 0 or n > L.dim:
        raise ValidationError(f"degree {n} out of range 0..{L.dim}")
    N = comb(L.dim, n) * V.dim
    dn = ce_differential(L, V, n)
    Z = kernel_basis(dn, N)
    if n > 0:
        dprev = ce_differential(L, V, n - 1)
        B = [[dprev[i][j] for i in range(N)] for j in range(len(dprev[0]) if dprev else 0)]
    else:
        B = []
    span = [b for b in B if any(b)]
    r = rank(span) if span else 0
    reps = []
    for z in Z:
        if rank(span + [z]) > r:
            span.append(z)
            r += 1
            reps.append(tuple(z))
    return LieCohomology(n, len(reps), tuple(reps), N)


def betti_numbers(L: LieAlgebra, V: LieModule | None = None) -> list[int]:
    V = V or trivial_lie_module(L)
    return [ce_cohomology(L, V, n).dim for n in range(L.dim + 1)]


def euler_characteristic_holds(L: LieAlgebra, V: LieModule) -> bool:
    lhs = sum((-1) ** n * ce_cohomology(L, V, n).dim for n in range(L.dim + 1))
    rhs = sum((-1) ** n * comb(L.dim, n) * V.dim for n in range(L.dim + 1))
    return lhs == rhs


def invariants_dim(V: LieModule) -> int:
    rows = [list(row) for M in V.rep for row in M]
    return V.dim - (rank(rows) if rows else 0)
