"""Independent brute-force oracles used by the test suite.

Nothing here calls the library's linear algebra: cohomology is found by
listing every function G^n -> A, and abelian groups are identified from
how many elements have order dividing each d.
"""

import itertools
from math import gcd, prod

import numpy as np


def carrier_elements(moduli):
    return list(itertools.product(*(range(m) for m in moduli)))


def bar_coboundary(table, actions, moduli, F, n):
    """Coboundary of a batch of degree-n cochains.

    ``F`` has shape (batch, g**n, k) with tuples flattened lexicographically;
    ``actions[s]`` is the integer matrix of s.  Returns shape (batch, g**(n+1), k).
    """
    g = len(table)
    mods = np.asarray(moduli, dtype=np.int64)
    batch, _, k = F.shape
    out = np.zeros((batch, g ** (n + 1), k), dtype=np.int64)

    def flat(t):
        i = 0
        for x in t:
            i = i * g + x
        return i

    for j, s in enumerate(itertools.product(range(g), repeat=n + 1)):
        acc = F[:, flat(s[1:]), :] @ np.asarray(actions[s[0]], dtype=np.int64).T
        for i in range(1, n + 1):
            merged = s[: i - 1] + (int(table[s[i - 1]][s[i]]),) + s[i + 1:]
            acc = acc + (-1) ** i * F[:, flat(merged), :]
        acc = acc + (-1) ** (n + 1) * F[:, flat(s[:n]), :]
        out[:, j, :] = acc % mods
    return out


def all_cochains(moduli, g, n):
    elems = np.array(carrier_elements(moduli), dtype=np.int64).reshape(-1, len(moduli))
    T = g**n
    idx = np.array(list(itertools.product(range(len(elems)), repeat=T)), dtype=np.int64).reshape(-1, T)
    return elems[idx]


def invariant_factor_lists(order):
    """Every chain f_1 | f_2 | ... with f_i >= 2 and product ``order``."""
    out = []

    def rec(rest, prev, acc):
        if rest == 1:
            out.append(tuple(acc))
            return
        for f in range(2, rest + 1):
            if rest % f == 0 and (prev is None or f % prev == 0):
                rec(rest // f, f, acc + [f])

    rec(order, None, [])
    # divisibility chains are built bottom-up, so each list is already sorted
    return out


def dividing_counts(factors, order):
    return {d: prod(gcd(d, f) for f in factors) for d in range(1, order + 1) if order % d == 0}


def identify_abelian(order, counts):
    """Invariant factors of the abelian group of ``order`` with the given counts."""
    matches = [fs for fs in invariant_factor_lists(order) if dividing_counts(fs, order) == counts]
    assert len(matches) == 1, (order, counts, matches)
    return matches[0]


def brute_cohomology(table, actions, moduli, n):
    """Invariant factors of H^n by enumerating every cochain."""
    g = len(table)
    mods = np.asarray(moduli, dtype=np.int64)
    Cn = all_cochains(moduli, g, n)
    dCn = bar_coboundary(table, actions, moduli, Cn, n)
    Z = Cn[~dCn.reshape(len(Cn), -1).any(axis=1)]
    if n == 0:
        B = {np.zeros(len(moduli) * 1, dtype=np.int64).tobytes()}
    else:
        Cm = all_cochains(moduli, g, n - 1)
        B = {row.tobytes() for row in bar_coboundary(table, actions, moduli, Cm, n - 1).reshape(len(Cm), -1)}
    order = len(Z) // len(B)
    counts = {d: 0 for d in range(1, order + 1) if order % d == 0}
    for z in Z.reshape(len(Z), -1):
        k = 1
        mods_flat = np.tile(mods, len(z) // len(mods))
        while ((k * z) % mods_flat).tobytes() not in B:
            k += 1
        for d in counts:
            if d % k == 0:
                counts[d] += 1
    counts = {d: c // len(B) for d, c in counts.items()}
    return identify_abelian(order, counts) if order > 1 else ()


def brute_fixed_points(actions, moduli):
    mods = np.asarray(moduli, dtype=np.int64)
    out = set()
    for a in carrier_elements(moduli):
        v = np.asarray(a, dtype=np.int64)
        if all(((np.asarray(M) @ v - v) % mods == 0).all() for M in actions):
            out.add(tuple(int(x) for x in a))
    return out


def all_actions(table, moduli):
    """Every homomorphism G -> Aut(A), as per-element matrix lists."""
    k = len(moduli)
    mods = np.asarray(moduli, dtype=np.int64)
    g = len(table)
    ident = next(e for e in range(g) if list(table[e]) == list(range(g)))
    elems = np.array(carrier_elements(moduli), dtype=np.int64).T.reshape(k, -1)
    auts = []
    for entries in itertools.product(*(range(int(mods[i])) for i in range(k) for _ in range(k))):
        M = np.array(entries, dtype=np.int64).reshape(k, k)
        if any((int(mods[j]) * int(M[i, j])) % int(mods[i]) for i in range(k) for j in range(k)):
            continue
        images = {tuple(c) for c in ((M @ elems) % mods[:, None]).T}
        if len(images) == elems.shape[1]:
            auts.append(M)
    out = []
    I = np.eye(k, dtype=np.int64)
    others = [s for s in range(g) if s != ident]
    for choice in itertools.product(range(len(auts)), repeat=len(others)):
        mats = {ident: I}
        mats.update({s: auts[c] for s, c in zip(others, choice)})
        if all(
            not (((mats[s] @ mats[t]) - mats[int(table[s][t])]) % mods[:, None]).any()
            for s in range(g)
            for t in range(g)
        ):
            out.append([mats[s] for s in range(g)])
    return out


def lp_value(f, g, table):
    """(f; g) as a floating LP solved by scipy, for cross-checking."""
    from scipy.optimize import linprog

    n = len(table)
    A = np.array([[float(g[table[u][x]]) for u in range(n)] for x in range(n)])
    res = linprog(np.ones(n), A_ub=-A, b_ub=-np.array([float(v) for v in f]), bounds=[(0, None)] * n, method="highs")
    assert res.status == 0
    return res.fun


def _perm_sign(p):
    sign = 1
    p = list(p)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


def lie_betti(constants, rep, n):
    """dim H^n(L, V) from full tensors: cochains are arrays over every ordered n-tuple."""
    d = len(constants)
    m = len(rep[0]) if rep else 1
    c = np.array(constants, dtype=float).reshape(d, d, d)
    R = np.array(rep, dtype=float).reshape(d, m, m)

    def alt_basis(k):
        out = []
        for I in itertools.combinations(range(d), k):
            for a in range(m):
                T = np.zeros((d,) * k + (m,))
                for p in itertools.permutations(range(k)):
                    T[tuple(I[i] for i in p) + (a,)] = _perm_sign(p)
                out.append(T)
        return out

    def apply_d(T, k):
        out = np.zeros((d,) * (k + 1) + (m,))
        for xs in itertools.product(range(d), repeat=k + 1):
            v = np.zeros(m)
            for i in range(k + 1):
                rest = xs[:i] + xs[i + 1:]
                v += (-1) ** i * R[xs[i]] @ T[rest]
            for i in range(k + 1):
                for j in range(i + 1, k + 1):
                    rest = tuple(x for t, x in enumerate(xs) if t not in (i, j))
                    # T is linear in its first slot: sum over the bracket's coordinates
                    for kk in range(d):
                        if c[xs[i], xs[j], kk]:
                            v += (-1) ** (i + j) * c[xs[i], xs[j], kk] * T[(kk,) + rest]
            out[xs] = v
        return out

    def rank_of_d(k):
        if k < 0:
            return 0
        imgs = [apply_d(T, k).ravel() for T in alt_basis(k)]
        return int(np.linalg.matrix_rank(np.array(imgs))) if imgs else 0

    dim_n = len(alt_basis(n))
    return dim_n - rank_of_d(n) - rank_of_d(n - 1)
