"""Finite groups, finite abelian coefficient groups, G-modules and maps.

Group elements are indices into an ordered label list and every operation is
table driven.  Finite abelian groups are products of cyclic factors
``Z/m_1 x ... x Z/m_k`` with elements stored as integer tuples.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from math import prod

import numpy as np

from .intlin import Quotient, hnf, invariant_factors, kernel_and_solver, lcm, quotient

DEFAULT_ORDER_CAP = 128


class ValidationError(ValueError):
    """A domain object violates its axioms; ``witness`` names where."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class SizeLimitError(RuntimeError):
    """A computation was refused because it exceeds a configured bound."""


# ---------------------------------------------------------------------------
# finite groups


def validate_group(table, identity=None) -> list[str]:
    """Check the group axioms of a Cayley table exhaustively.

    Returns a list of human-readable violations, each naming a witness.  An
    empty list means ``table`` is a group table.
    """
    report = []
    try:
        T = np.asarray(table, dtype=np.int64)
    except (TypeError, ValueError):
        return ["table is not a rectangular integer matrix"]
    if T.ndim != 2 or T.shape[0] != T.shape[1] or T.shape[0] == 0:
        return [f"table must be a non-empty square matrix, got shape {T.shape}"]
    n = T.shape[0]
    bad = np.argwhere((T < 0) | (T >= n))
    if len(bad):
        i, j = bad[0]
        return [f"closure: entry [{i}][{j}] = {T[i, j]} is not an element index"]
    for i in range(n):
        if len(set(T[i].tolist())) != n:
            j = _first_duplicate(T[i])
            report.append(f"no inverse / not a bijection: row {i} repeats entry {T[i, j]} (column {j})")
            break
    for j in range(n):
        if len(set(T[:, j].tolist())) != n:
            i = _first_duplicate(T[:, j])
            report.append(f"no inverse / not a bijection: column {j} repeats entry {T[i, j]} (row {i})")
            break
    lhs = T[T]  # lhs[i, j, k] = table[table[i][j]][k]
    rhs = T[:, T]  # rhs[i, j, k] = table[i][table[j][k]]
    viol = np.argwhere(lhs != rhs)
    if len(viol):
        i, j, k = viol[0]
        report.append(f"associativity fails at ({i},{j},{k}): ({i}*{j})*{k} = {lhs[i, j, k]} but {i}*({j}*{k}) = {rhs[i, j, k]}")
    ids = [e for e in range(n) if (T[e] == np.arange(n)).all() and (T[:, e] == np.arange(n)).all()]
    if identity is not None and identity not in ids:
        report.append(f"identity: element {identity} is not a two-sided identity")
    elif not ids:
        report.append("identity: no two-sided identity element")
    else:
        e = ids[0] if identity is None else identity
        for i in range(n):
            if not ((T[i] == e) & (T[:, i] == e)).any():
                report.append(f"inverse: element {i} has no two-sided inverse")
                break
    return report


def _first_duplicate(row) -> int:
    seen = set()
    for j, x in enumerate(row.tolist()):
        if x in seen:
            return j
        seen.add(x)
    return -1


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    elements: tuple
    table: np.ndarray
    identity: int
    name: str = ""

    def __post_init__(self):
        self.table.setflags(write=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"FiniteGroup({self.name or 'order ' + str(self.order)})"

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    @cached_property
    def inverses(self) -> np.ndarray:
        inv = np.argmax(self.table == self.identity, axis=1)
        inv.setflags(write=False)
        return inv

    def inv(self, i: int) -> int:
        return int(self.inverses[i])

    @cached_property
    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    def element_order(self, i: int) -> int:
        k, x = 1, i
        while x != self.identity:
            x = self.mul(x, i)
            k += 1
        return k

    @cached_property
    def order_statistics(self) -> tuple[int, ...]:
        return tuple(sorted(self.element_order(i) for i in range(self.order)))

    def index(self, label) -> int:
        return self.elements.index(label)

    def power(self, i: int, k: int) -> int:
        x = self.identity
        for _ in range(k):
            x = self.mul(x, i)
        return x

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """A small generating set, chosen greedily by decreasing element order."""
        gens = []
        span = {self.identity}
        cands = sorted(range(self.order), key=lambda i: (-self.element_order(i), i))
        for c in cands:
            if c in span:
                continue
            gens.append(c)
            span = set(self.closure(gens))
            if len(span) == self.order:
                break
        return tuple(gens)

    def closure(self, gens) -> list[int]:
        seen = [self.identity]
        seen_set = {self.identity}
        queue = deque([self.identity])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = self.mul(x, g)
                if y not in seen_set:
                    seen_set.add(y)
                    seen.append(y)
                    queue.append(y)
        return seen


def _from_table(elements, table, name="", cap=DEFAULT_ORDER_CAP) -> FiniteGroup:
    T = np.asarray(table, dtype=np.int64)
    if T.ndim == 2 and T.shape[0] > cap:
        raise SizeLimitError(f"group order {T.shape[0]} exceeds validation cap {cap}")
    report = validate_group(T)
    if report:
        raise ValidationError(report[0], witness=report)
    n = T.shape[0]
    identity = next(e for e in range(n) if (T[e] == np.arange(n)).all())
    return FiniteGroup(tuple(elements), T.copy(), identity, name)


def from_table(table, elements=None, name="", cap=DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Validated group from an explicit Cayley table of indices."""
    n = len(table)
    if elements is None:
        elements = tuple(str(i) for i in range(n))
    if len(set(elements)) != len(elements):
        raise ValidationError("element labels must be distinct")
    return _from_table(elements, table, name, cap)


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValidationError(f"cyclic order must be >= 1, got {n}")
    i = np.arange(n)
    return FiniteGroup(tuple(str(k) for k in range(n)), (i[:, None] + i[None, :]) % n, 0, f"Z/{n}")


def product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    """Direct product; element (i, j) has index ``i * |b| + j``."""
    n, m = a.order, b.order
    I, J = np.divmod(np.arange(n * m), m)
    table = a.table[I[:, None], I[None, :]] * m + b.table[J[:, None], J[None, :]]
    labels = tuple(f"({x},{y})" for x in a.elements for y in b.elements)
    return FiniteGroup(labels, table, a.identity * m + b.identity, f"{a.name or '?'}x{b.name or '?'}")


def from_permutations(gens, name="", cap=DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Group generated by permutations (tuples of images), closed by BFS.

    Composition is ``(p*q)(x) = p(q(x))``.
    """
    gens = [tuple(g) for g in gens]
    deg = len(gens[0]) if gens else 0
    ident = tuple(range(deg))
    elems = [ident]
    seen = {ident: 0}
    queue = deque([ident])
    while queue:
        p = queue.popleft()
        for g in gens:
            q = tuple(p[g[x]] for x in range(deg))
            if q not in seen:
                if len(elems) >= cap:
                    raise SizeLimitError(f"permutation group exceeds order cap {cap}")
                seen[q] = len(elems)
                elems.append(q)
                queue.append(q)
    elems.sort()
    index = {p: i for i, p in enumerate(elems)}
    table = np.array([[index[tuple(p[q[x]] for x in range(deg))] for q in elems] for p in elems], dtype=np.int64)
    labels = tuple("".join(map(str, p)) if deg <= 10 else str(p) for p in elems)
    return FiniteGroup(labels, table, index[ident], name)


def symmetric(n: int) -> FiniteGroup:
    if n == 1:
        return from_permutations([(0,)], name="S1")
    gens = [tuple([1, 0] + list(range(2, n))), tuple(list(range(1, n)) + [0])]
    return from_permutations(gens, name=f"S{n}")


def alternating(n: int) -> FiniteGroup:
    """Even permutations, generated by the 3-cycles (0 1 k)."""
    gens = []
    for k in range(2, n):
        p = list(range(n))
        p[0], p[1], p[k] = 1, k, 0
        gens.append(tuple(p))
    return from_permutations(gens or [tuple(range(n))], name=f"A{n}")


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the regular n-gon, order 2n."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return from_permutations([rot, ref], name=f"D{n}")


def dicyclic(n: int) -> FiniteGroup:
    """Dicyclic group of order 4n (quaternion group for n = 2).

    Elements are pairs ``(k, s)`` standing for ``a^k x^s`` with
    ``a^(2n) = 1``, ``x^2 = a^n`` and ``x a x^-1 = a^-1``.
    """
    m = 2 * n
    elems = [(k, s) for s in (0, 1) for k in range(m)]
    idx = {p: i for i, p in enumerate(elems)}

    def mul(p, q):
        k1, s1 = p
        k2, s2 = q
        k2 = -k2 if s1 else k2
        k = k1 + k2
        if s1 and s2:
            k += n
        return ((k % m), (s1 + s2) % 2)

    table = [[idx[mul(p, q)] for q in elems] for p in elems]
    labels = tuple(f"a{k}" + ("x" if s else "") for k, s in elems)
    return FiniteGroup(labels, np.array(table, dtype=np.int64), 0, "Q8" if n == 2 else f"Dic{n}")


def trivial_group() -> FiniteGroup:
    return cyclic(1)


def build_group(spec, cap=DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Group from a spec.

    Accepts an int (cyclic order), ``("cyclic", n)``, ``("symmetric", n)``,
    ``("dihedral", n)``, ``("alternating", n)``, ``("product", spec, spec, ...)``,
    a dict ``{"elements": [...], "table": [[...]]}``, a bare table, or an
    existing ``FiniteGroup``.
    """
    if isinstance(spec, FiniteGroup):
        return spec
    if isinstance(spec, (int, np.integer)):
        return cyclic(int(spec))
    if isinstance(spec, dict):
        return from_table(spec["table"], tuple(spec["elements"]) if "elements" in spec else None, cap=cap)
    if isinstance(spec, tuple) and spec and isinstance(spec[0], str):
        kind, *args = spec
        if kind == "product":
            if len(args) < 2:
                raise ValidationError("product needs at least two factors")
            G = build_group(args[0], cap)
            for a in args[1:]:
                G = product(G, build_group(a, cap))
            if G.order > cap:
                raise SizeLimitError(f"group order {G.order} exceeds cap {cap}")
            return G
        makers = {"cyclic": cyclic, "symmetric": symmetric, "dihedral": dihedral, "alternating": alternating, "dicyclic": dicyclic}
        if kind not in makers:
            raise ValidationError(f"unknown group kind {kind!r}")
        return makers[kind](*args)
    return from_table(spec, cap=cap)


@dataclass(frozen=True, eq=False)
class GroupHom:
    source: FiniteGroup
    target: FiniteGroup
    mapping: tuple[int, ...]

    def __call__(self, i: int) -> int:
        return self.mapping[i]

    def violations(self) -> list[str]:
        out = []
        m = np.asarray(self.mapping)
        if len(m) != self.source.order:
            return [f"mapping has {len(m)} entries, source has {self.source.order} elements"]
        if ((m < 0) | (m >= self.target.order)).any():
            return ["mapping entries must be target element indices"]
        lhs = m[self.source.table]
        rhs = self.target.table[m[:, None], m[None, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            x, y = bad[0]
            out.append(f"mapping({x}*{y}) != mapping({x})*mapping({y})")
        if m[self.source.identity] != self.target.identity:
            out.append("identity not sent to identity")
        return out

    def compose(self, other: "GroupHom") -> "GroupHom":
        """``self o other``: first apply ``other``."""
        return GroupHom(other.source, self.target, tuple(self.mapping[i] for i in other.mapping))


def group_hom(source, target, mapping) -> GroupHom:
    h = GroupHom(source, target, tuple(int(x) for x in mapping))
    v = h.violations()
    if v:
        raise ValidationError(v[0], witness=v)
    return h


def identity_hom(G: FiniteGroup) -> GroupHom:
    return GroupHom(G, G, tuple(range(G.order)))


# ---------------------------------------------------------------------------
# finite abelian groups


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """``Z/m_1 x ... x Z/m_k``; factors with modulus 1 are allowed."""

    moduli: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "moduli", tuple(int(m) for m in self.moduli))
        if any(m < 1 for m in self.moduli):
            raise ValidationError(f"moduli must be >= 1, got {self.moduli}")

    @property
    def rank(self) -> int:
        return len(self.moduli)

    @property
    def order(self) -> int:
        return prod(self.moduli)

    @property
    def exponent(self) -> int:
        return lcm(*self.moduli)

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.rank

    def reduce(self, a) -> tuple[int, ...]:
        return tuple(int(x) % m for x, m in zip(a, self.moduli))

    def add(self, a, b) -> tuple[int, ...]:
        return tuple((x + y) % m for x, y, m in zip(a, b, self.moduli))

    def neg(self, a) -> tuple[int, ...]:
        return tuple((-x) % m for x, m in zip(a, self.moduli))

    def sub(self, a, b) -> tuple[int, ...]:
        return tuple((x - y) % m for x, y, m in zip(a, b, self.moduli))

    def elements(self) -> list[tuple[int, ...]]:
        return list(itertools.product(*(range(m) for m in self.moduli)))

    def index(self, a) -> int:
        i = 0
        for x, m in zip(a, self.moduli):
            i = i * m + int(x) % m
        return i

    def element(self, i: int) -> tuple[int, ...]:
        out = []
        for m in reversed(self.moduli):
            i, r = divmod(i, m)
            out.append(r)
        return tuple(reversed(out))

    def normalized(self) -> "FiniteAbelianGroup":
        return FiniteAbelianGroup(invariant_factors(self.moduli))

    def as_group(self) -> FiniteGroup:
        elems = self.elements()
        n = len(elems)
        table = np.array([[self.index(self.add(a, b)) for b in elems] for a in elems], dtype=np.int64).reshape(n, n)
        name = "x".join(f"Z/{m}" for m in self.moduli) or "0"
        return FiniteGroup(tuple(str(a) for a in elems), table, 0, name)

    def __str__(self):
        return " x ".join(f"Z/{m}" for m in self.moduli) or "0"


def abelian(*moduli) -> FiniteAbelianGroup:
    return FiniteAbelianGroup(tuple(moduli))


def _matrix_is_hom(M: np.ndarray, src: FiniteAbelianGroup, tgt: FiniteAbelianGroup):
    """A matrix defines ``src -> tgt`` iff ``m_j * M[i][j] = 0 mod n_i``."""
    for i, n in enumerate(tgt.moduli):
        for j, m in enumerate(src.moduli):
            if (m * int(M[i, j])) % n:
                return (i, j)
    return None


def apply_matrix(M: np.ndarray, a, tgt: FiniteAbelianGroup) -> tuple[int, ...]:
    return tgt.reduce(M.astype(object) @ np.array(a, dtype=object)) if len(a) else tgt.zero()


@dataclass(frozen=True, eq=False)
class AbelianHom:
    """Homomorphism ``source -> target`` of finite abelian groups by a matrix."""

    source: FiniteAbelianGroup
    target: FiniteAbelianGroup
    matrix: np.ndarray

    def __call__(self, a) -> tuple[int, ...]:
        return apply_matrix(self.matrix, a, self.target)

    def compose(self, other: "AbelianHom") -> "AbelianHom":
        return AbelianHom(other.source, self.target, self.matrix @ other.matrix)

    def is_injective(self) -> bool:
        imgs = {self(a) for a in self.source.elements()}
        return len(imgs) == self.source.order

    def is_surjective(self) -> bool:
        imgs = {self(a) for a in self.source.elements()}
        return len(imgs) == self.target.order


def abelian_hom(source, target, matrix) -> AbelianHom:
    M = np.asarray(matrix, dtype=np.int64).reshape(target.rank, source.rank)
    bad = _matrix_is_hom(M, source, target)
    if bad is not None:
        raise ValidationError(f"matrix entry [{bad[0]}][{bad[1]}] does not respect the moduli", witness=bad)
    return AbelianHom(source, target, M)


# ---------------------------------------------------------------------------
# G-modules


@dataclass(frozen=True, eq=False)
class GModule:
    """A finite abelian group with a left action of a finite group.

    ``matrices[s]`` is the integer matrix of ``a -> s.a`` on coordinate
    tuples, reduced modulo the carrier moduli.
    """

    carrier: FiniteAbelianGroup
    group: FiniteGroup
    matrices: np.ndarray  # shape (|G|, k, k)
    name: str = ""

    def __post_init__(self):
        self.matrices.setflags(write=False)

    def act(self, s: int, a) -> tuple[int, ...]:
        return apply_matrix(self.matrices[s], a, self.carrier)

    @cached_property
    def is_trivial(self) -> bool:
        k = self.carrier.rank
        I = np.eye(k, dtype=np.int64)
        mods = np.array(self.carrier.moduli, dtype=np.int64)[:, None]
        return all((((M - I) % mods) == 0).all() for M in self.matrices)

    def __repr__(self):
        return f"GModule({self.name or str(self.carrier)} over {self.group!r})"


def _action_violations(carrier, G, mats, cap=DEFAULT_ORDER_CAP):
    k = carrier.rank
    mods = np.array(carrier.moduli, dtype=np.int64)[:, None]
    I = np.eye(k, dtype=np.int64)
    for s in range(G.order):
        bad = _matrix_is_hom(mats[s], carrier, carrier)
        if bad is not None:
            return f"action of {G.elements[s]} is not a well-defined endomorphism (entry {bad})", (s,)
    if ((mats[G.identity] - I) % mods).any():
        return "identity does not act as the identity map", (G.identity,)
    if G.order > cap:
        raise SizeLimitError(f"group order {G.order} exceeds validation cap {cap}")
    for s in range(G.order):
        for t in range(G.order):
            st = G.mul(s, t)
            if (((mats[s] @ mats[t]) - mats[st]) % mods).any():
                return f"action is not a homomorphism: ({G.elements[s]}*{G.elements[t]}) acts differently from {G.elements[s]} after {G.elements[t]}", (s, t)
    # s and s^-1 compose to the identity, so every action map is invertible
    return None


def build_module(carrier, group: FiniteGroup, action="trivial", name="", cap=DEFAULT_ORDER_CAP) -> GModule:
    """Build a validated G-module.

    ``action`` is ``"trivial"``, a dict ``{element index: matrix}`` covering
    either every element or a generating set (closed by breadth-first
    products with consistency checks), or an array of shape ``(|G|, k, k)``.
    """
    if not isinstance(carrier, FiniteAbelianGroup):
        carrier = FiniteAbelianGroup(tuple(carrier))
    k = carrier.rank
    n = group.order
    if isinstance(action, str):
        if action != "trivial":
            raise ValidationError(f"unknown action kind {action!r}")
        mats = np.broadcast_to(np.eye(k, dtype=np.int64), (n, k, k)).copy()
    elif isinstance(action, dict):
        mats = _close_action(carrier, group, {int(s): np.asarray(M, dtype=np.int64).reshape(k, k) for s, M in action.items()})
    else:
        mats = np.asarray(action, dtype=np.int64).reshape(n, k, k).copy()
    mods = np.array(carrier.moduli, dtype=np.int64)[:, None] if k else np.ones((0, 1), np.int64)
    mats = mats % mods if k else mats
    problem = _action_violations(carrier, group, mats, cap)
    if problem:
        raise ValidationError(problem[0], witness=problem[1])
    return GModule(carrier, group, mats, name)


def _close_action(carrier, G, given):
    k = carrier.rank
    mods = np.array(carrier.moduli, dtype=np.int64)[:, None] if k else np.ones((0, 1), np.int64)
    mats = {G.identity: np.eye(k, dtype=np.int64)}
    for s, M in given.items():
        if s in mats and ((mats[s] - M) % mods).any():
            raise ValidationError(f"conflicting matrices for element {G.elements[s]}", witness=(s,))
        mats[s] = M % mods
    gens = list(given)
    queue = deque(mats.keys())
    while queue:
        x = queue.popleft()
        for g in gens:
            y = G.mul(x, g)
            My = (mats[x] @ mats[g]) % mods
            if y in mats:
                if ((mats[y] - My) % mods).any():
                    raise ValidationError(f"generator matrices are inconsistent at element {G.elements[y]}", witness=(x, g))
            else:
                mats[y] = My
                queue.append(y)
    if len(mats) != G.order:
        missing = next(s for s in range(G.order) if s not in mats)
        raise ValidationError(f"given elements do not generate the group (missing {G.elements[missing]})", witness=(missing,))
    return np.stack([mats[s] for s in range(G.order)])


def trivial_module(group: FiniteGroup, *moduli) -> GModule:
    return build_module(FiniteAbelianGroup(moduli), group, "trivial", name=f"trivial {FiniteAbelianGroup(moduli)}")


def sign_module(group: FiniteGroup, sign: GroupHom, m: int) -> GModule:
    """``Z/m`` with ``s`` acting by negation when ``sign(s)`` is nontrivial."""
    mats = np.array([[[1 if sign(s) == sign.target.identity else -1]] for s in range(group.order)], dtype=np.int64)
    return build_module(FiniteAbelianGroup((m,)), group, mats, name=f"Z/{m} by negation")


@dataclass(frozen=True, eq=False)
class FixedPoints:
    """Subgroup of invariants with its embedding into the carrier."""

    group: FiniteAbelianGroup
    embedding: AbelianHom
    quotient: Quotient

    def elements(self) -> set[tuple[int, ...]]:
        return {self.embedding(c) for c in self.group.elements()}


def fixed_points(M: GModule) -> FixedPoints:
    """``{a : s.a = a for all s}`` presented by its invariant factors."""
    k = M.carrier.rank
    n = M.group.order
    mods = M.carrier.moduli
    I = np.eye(k, dtype=np.int64)
    # a -> (s.a - a)_s, as images of unit vectors
    images = np.concatenate([(M.matrices[s] - I).T for s in range(n)], axis=1) if k else np.zeros((0, 0))
    K, _ = kernel_and_solver(images, mods, mods * n)
    L = hnf(np.diag(mods), k, M.carrier.exponent) if k else np.zeros((0, 0), np.int64)
    Q = quotient(K, L)
    emb = np.array(Q.generators, dtype=np.int64).T.reshape(k, len(Q.factors))
    sub = FiniteAbelianGroup(Q.factors)
    return FixedPoints(sub, AbelianHom(sub, M.carrier, emb), Q)
