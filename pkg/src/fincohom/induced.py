"""The induced module I(A) of all functions G -> A and dimension shifting.

``I(A)`` carries the action ``(s.f)(t) = s.f(s^-1 t)``; ``A`` sits inside it
as the constant functions and ``U(A) = I(A)/A`` is modelled on functions
vanishing at the identity.  ``I(A)`` has no cohomology in positive degrees,
so the connecting map ``H^1(G, U(A)) -> H^2(G, A)`` is an isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cochains import CohomologyGroup, cohomology
from .groups import FiniteAbelianGroup, GModule, SizeLimitError, build_module
from .intlin import hnf, lcm
from .sequences import ModuleSES, connecting_matrix, kernel_lattice, image_lattice, make_ses

MAX_INDUCED_ORDER = 65536


@dataclass(frozen=True, eq=False)
class InducedModule:
    I: GModule
    embed: np.ndarray  # A -> I, constants
    U: GModule
    quotient: np.ndarray  # I -> U, f -> (f(t) - f(e))_{t != e}
    section: np.ndarray  # U -> I, u -> f with f(e) = 0
    ses: ModuleSES


def induced_module(M: GModule, max_order=MAX_INDUCED_ORDER) -> InducedModule:
    G = M.group
    g, k = G.order, M.carrier.rank
    size = M.carrier.order**g
    if size > max_order:
        raise SizeLimitError(f"|A|^|G| = {M.carrier.order}^{g} = {size} exceeds the cap {max_order}")
    mods = M.carrier.moduli
    # coordinates of I: block t holds f(t)
    mats = np.zeros((g, g * k, g * k), dtype=np.int64)
    for s in range(g):
        sinv = G.inv(s)
        for t in range(g):
            src = G.mul(sinv, t)
            mats[s, t * k:(t + 1) * k, src * k:(src + 1) * k] = M.matrices[s]
    I = build_module(FiniteAbelianGroup(mods * g), G, mats, name=f"I({M.name or M.carrier})")
    embed = np.vstack([np.eye(k, dtype=np.int64)] * g)
    others = [t for t in range(g) if t != G.identity]
    e = G.identity
    Q = np.zeros(((g - 1) * k, g * k), dtype=np.int64)
    S = np.zeros((g * k, (g - 1) * k), dtype=np.int64)
    for r, t in enumerate(others):
        Q[r * k:(r + 1) * k, t * k:(t + 1) * k] = np.eye(k, dtype=np.int64)
        Q[r * k:(r + 1) * k, e * k:(e + 1) * k] -= np.eye(k, dtype=np.int64)
        S[t * k:(t + 1) * k, r * k:(r + 1) * k] = np.eye(k, dtype=np.int64)
    umats = np.stack([Q @ mats[s] @ S for s in range(g)]) if g > 1 else np.zeros((1, 0, 0), dtype=np.int64)
    U = build_module(FiniteAbelianGroup(mods * (g - 1)), G, umats, name=f"U({M.name or M.carrier})")
    ses = make_ses(M, I, U, embed, Q, section=lambda u: tuple(int(x) for x in S @ np.array(u, dtype=np.int64)) if len(u) else (0,) * (g * k))
    return InducedModule(I, embed, U, Q, S, ses)


@dataclass
class DimensionShiftReport:
    H2: CohomologyGroup
    H1U: CohomologyGroup
    matrix: np.ndarray  # connecting map on invariant-factor coordinates
    injective: bool
    surjective: bool
    matched: list  # (generator of H^1(U), image coordinates in H^2(A))

    @property
    def bijective(self) -> bool:
        return self.injective and self.surjective


def dimension_shift_check(M: GModule) -> DimensionShiftReport:
    """Compute ``H^2(G, A)``, ``H^1(G, U(A))`` and the connecting map between them."""
    ind = induced_module(M)
    H2 = cohomology(M, 2)
    H1U = cohomology(ind.U, 1)
    F = connecting_matrix(ind.ses, H1U, H2)
    src, tgt = H1U.factors, H2.factors
    if src:
        ker = kernel_lattice(F, src, tgt)
        injective = bool(np.array_equal(ker, hnf(np.diag(src), len(src), lcm(*src))))
    else:
        injective = True
    if tgt:
        im = image_lattice(F, src, tgt)
        surjective = bool(np.array_equal(im, np.eye(len(tgt), dtype=np.int64)))
    else:
        surjective = True
    matched = [(H1U.representatives[j], tuple(int(x) for x in F[:, j])) for j in range(len(src))]
    return DimensionShiftReport(H2, H1U, F, injective, surjective, matched)
