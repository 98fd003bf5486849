"""Brute-force isomorphism search and a catalog of small groups for labelling.

The catalog for a given order is generated, not tabulated: abelian groups
from invariant factors, metacyclic groups
``<a, b | a^m, b^n = a^t, b a b^-1 = a^r>``, direct products of smaller
catalog groups, split extensions ``A x| Z/k`` of abelian groups, and a few
sporadic permutation/matrix groups.  Duplicates are removed by isomorphism
search, keeping the first (preferred) name.  It is complete for every order
up to 31 and holds 40 of the 51 groups of order 32; unmatched groups get a
descriptive fallback label.
"""

from __future__ import annotations

import itertools
from collections import deque
from functools import lru_cache
from math import gcd

import numpy as np

from .groups import FiniteGroup, abelian, from_permutations, product, validate_group

CATALOG_MAX_ORDER = 32


def _extend(G1: FiniteGroup, G2: FiniteGroup, gens, images):
    """Extend ``gens -> images`` to a homomorphism on <gens>, or ``None``."""
    theta = {G1.identity: G2.identity}
    queue = deque([G1.identity])
    while queue:
        x = queue.popleft()
        tx = theta[x]
        for g, h in zip(gens, images):
            y = G1.mul(x, g)
            ty = G2.mul(tx, h)
            if y in theta:
                if theta[y] != ty:
                    return None
            else:
                theta[y] = ty
                queue.append(y)
    return theta


def find_isomorphism(G1: FiniteGroup, G2: FiniteGroup):
    """An isomorphism ``G1 -> G2`` as an index tuple, or ``None``.

    Backtracks over images of a greedy generating set of ``G1``, pruning
    by element orders and by consistency on the partial subgroup.
    """
    if G1.order != G2.order or G1.order_statistics != G2.order_statistics or G1.is_abelian != G2.is_abelian:
        return None
    gens = list(G1.generators)
    by_order = {}
    for y in range(G2.order):
        by_order.setdefault(G2.element_order(y), []).append(y)
    cands = [by_order.get(G1.element_order(g), []) for g in gens]

    def search(k, images):
        theta = _extend(G1, G2, gens[:k], images)
        if theta is None or len(set(theta.values())) != len(theta):
            return None
        if k == len(gens):
            if len(theta) == G1.order:
                return tuple(theta[i] for i in range(G1.order))
            return None
        for h in cands[k]:
            out = search(k + 1, images + [h])
            if out is not None:
                return out
        return None

    return search(0, [])


def is_isomorphic(G1: FiniteGroup, G2: FiniteGroup) -> bool:
    return find_isomorphism(G1, G2) is not None


def metacyclic(m: int, n: int, r: int, t: int) -> FiniteGroup:
    """``<a, b | a^m = 1, b^n = a^t, b a b^-1 = a^r>``; elements ``a^i b^j``."""
    N = m * n
    rp = [pow(r, j, m) for j in range(n)]
    table = np.zeros((N, N), dtype=np.int64)
    for i in range(m):
        for j in range(n):
            for k in range(m):
                for l in range(n):
                    wrap = j + l >= n
                    ai = (i + rp[j] * k + (t if wrap else 0)) % m
                    table[i * n + j, k * n + l] = ai * n + (j + l) % n
    labels = tuple(f"a{i}b{j}" for i in range(m) for j in range(n))
    return FiniteGroup(labels, table, 0, f"M({m},{n},{r},{t})")


def _partitions(k, largest=None):
    if largest is None:
        largest = k
    if k == 0:
        yield []
        return
    for p in range(min(k, largest), 0, -1):
        for rest in _partitions(k - p, p):
            yield [p] + rest


def _factorize(n):
    out = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def abelian_invariant_lists(n: int):
    """All invariant-factor lists of abelian groups of order ``n``."""
    choices = [[(p, part) for part in _partitions(k)] for p, k in _factorize(n).items()]
    out = []

    def rec(i, acc):
        if i == len(choices):
            width = max((len(part) for _, part in acc), default=0)
            facs = [1] * width
            for p, part in acc:
                for j, e in enumerate(sorted(part)):
                    facs[width - len(part) + j] *= p**e
            out.append([f for f in facs if f > 1])
            return
        for c in choices[i]:
            rec(i + 1, acc + [c])

    rec(0, [])
    return out


def abelian_label(factors) -> str:
    return "x".join(f"Z/{f}" for f in factors) if factors else "1"


def _metacyclic_name(m, n, r, t):
    if n == 1 or m == 1 or r % m == 1 and t % m == 0:
        return None  # abelian or direct product, named elsewhere
    if n == 2 and r % m == m - 1 and t % m == 0:
        return f"D{m}" if m > 2 else None
    if n == 2 and r % m == m - 1 and m % 2 == 0 and t % m == m // 2:
        return "Q8" if m == 4 else f"Dic{m // 2}"
    if t % m == 0:
        return f"Z/{m}:Z/{n}({r})"
    return f"Z/{m}.Z/{n}({r},{t})"


def semidirect_cyclic(A_moduli, M, k: int) -> FiniteGroup:
    """``A x| Z/k`` where the generator of ``Z/k`` acts on ``A`` by ``M``."""
    A = abelian(*A_moduli)
    elems = A.elements()
    mods = np.array(A.moduli, dtype=np.int64)
    M = np.asarray(M, dtype=np.int64)
    powers = [np.eye(len(mods), dtype=np.int64)]
    for _ in range(1, k):
        powers.append((M @ powers[-1]) % mods[:, None])
    na = len(elems)
    arr = np.array(elems, dtype=np.int64).reshape(na, -1)
    # acted[j][a] = index of M^j a
    acted = [[A.index(tuple((P @ a) % mods)) for a in arr] for P in powers]
    add = np.array([[A.index(A.add(a, b)) for b in elems] for a in elems], dtype=np.int64).reshape(na, na)
    N = na * k
    table = np.zeros((N, N), dtype=np.int64)
    for x in range(na):
        for i in range(k):
            for y in range(na):
                table[x * k + i, y * k:(y + 1) * k] = add[x, acted[i][y]] * k + (i + np.arange(k)) % k
    labels = tuple(f"{a}.c{i}" for a in elems for i in range(k))
    return FiniteGroup(labels, table, 0, "")


def _automorphisms_of_order_dividing(moduli, k, limit=4096):
    mods = np.array(moduli, dtype=np.int64)
    r = len(moduli)
    ranges = [range(int(mods[i])) for i in range(r) for j in range(r)]
    total = 1
    for rg in ranges:
        total *= len(rg)
    if total > limit:
        return
    A = abelian(*moduli)
    elems = np.array(A.elements(), dtype=np.int64).reshape(A.order, -1).T
    I = np.eye(r, dtype=np.int64)
    for entries in itertools.product(*ranges):
        M = np.array(entries, dtype=np.int64).reshape(r, r)
        if any((int(mods[j]) * int(M[i, j])) % int(mods[i]) for i in range(r) for j in range(r)):
            continue
        P = I.copy()
        for _ in range(k):
            P = (M @ P) % mods[:, None]
        if ((P - I) % mods[:, None]).any():
            continue
        if len({tuple(c) for c in ((M @ elems) % mods[:, None]).T}) != A.order:
            continue
        if not ((M - I) % mods[:, None]).any():
            continue
        yield M


def _split_over_abelian(n):
    out = []
    for k in range(2, n):
        if n % k:
            continue
        for facs in abelian_invariant_lists(n // k):
            if not facs:
                continue
            for M in _automorphisms_of_order_dividing(facs, k):
                G = semidirect_cyclic(facs, M, k)
                out.append((f"({abelian_label(facs)}):Z/{k}", G))
    return out


def _sporadic(n):
    out = []
    if n == 12:
        out.append(("A4", from_permutations([(1, 2, 0, 3), (0, 2, 3, 1)], name="A4")))
    if n == 24:
        out.append(("S4", from_permutations([(1, 0, 2, 3), (1, 2, 3, 0)], name="S4")))
        out.append(("SL(2,3)", _sl23()))
    return out


def _sl23():
    mats = []
    for a in range(3):
        for b in range(3):
            for c in range(3):
                for d in range(3):
                    if (a * d - b * c) % 3 == 1:
                        mats.append((a, b, c, d))
    idx = {M: i for i, M in enumerate(mats)}

    def mul(X, Y):
        a, b, c, d = X
        e, f, g, h = Y
        return ((a * e + b * g) % 3, (a * f + b * h) % 3, (c * e + d * g) % 3, (c * f + d * h) % 3)

    table = np.array([[idx[mul(X, Y)] for Y in mats] for X in mats], dtype=np.int64)
    return FiniteGroup(tuple(str(M) for M in mats), table, idx[(1, 0, 0, 1)], "SL(2,3)")


@lru_cache(maxsize=None)
def catalog(n: int) -> tuple:
    """``((label, group), ...)`` of pairwise non-isomorphic groups of order ``n``."""
    if n < 1 or n > CATALOG_MAX_ORDER:
        return ()
    cands = []
    for facs in abelian_invariant_lists(n):
        A = abelian(*facs).as_group() if facs else abelian(1).as_group()
        cands.append((abelian_label(facs), A))
    named, unnamed = [], []
    for m in range(1, n + 1):
        if n % m:
            continue
        k = n // m
        for r in range(1, m + 1):
            if gcd(r, m) != 1 or pow(r, k, m) != 1 % m:
                continue
            for t in range(m):
                if (t * (r - 1)) % m:
                    continue
                name = _metacyclic_name(m, k, r % m, t)
                if name is None:
                    continue
                G = metacyclic(m, k, r % m, t)
                if validate_group(G.table):
                    continue
                (named if not name.startswith("Z/") else unnamed).append((name, G))
    cands += _sporadic(n) + named
    for d in range(2, n):
        if n % d:
            continue
        for la, A in catalog(d):
            if A.is_abelian:
                continue
            for lb, B in catalog(n // d):
                if B.is_abelian:
                    cands.append((f"{la}x{lb}", product(A, B)))
    cands += unnamed
    cands += _split_over_abelian(n)
    out = []
    for label, G in cands:
        if not any(is_isomorphic(G, H) for _, H in out):
            used = {name for name, _ in out}
            # distinct split extensions can share the generic name
            base, i = label, 2
            while label in used:
                label, i = f"{base}#{i}", i + 1
            out.append((label, G))
    return tuple(out)


def identify(G: FiniteGroup) -> str:
    """Label of the catalog group isomorphic to ``G``."""
    for label, H in catalog(G.order):
        if is_isomorphic(G, H):
            return label
    kind = "abelian" if G.is_abelian else "nonabelian"
    return f"unidentified {kind} group of order {G.order}"
