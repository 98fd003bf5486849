import itertools

import numpy as np
import pytest

import fincohom as fc
from fincohom.induced import induced_module


def as_function(ind, v, G):
    k = len(v) // G.order
    return {t: tuple(v[t * k:(t + 1) * k]) for t in range(G.order)}


@pytest.mark.parametrize(
    "module",
    [
        fc.trivial_module(fc.cyclic(2), 3),
        fc.trivial_module(fc.cyclic(3), 2),
        fc.build_module((4,), fc.cyclic(2), {1: [[-1]]}),
        fc.trivial_module(fc.symmetric(3), 2),
    ],
)
def test_induced_action_is_translation(module):
    G = module.group
    ind = induced_module(module)
    for s in range(G.order):
        for v in itertools.islice(ind.I.carrier.elements(), 40):
            f = as_function(ind, v, G)
            sf = as_function(ind, ind.I.act(s, v), G)
            for t in range(G.order):
                assert sf[t] == module.act(s, f[G.mul(G.inv(s), t)])


@pytest.mark.parametrize("n, m", [(2, 2), (2, 3), (3, 2), (4, 2)])
def test_induced_is_acyclic_and_shifts(n, m):
    M = fc.trivial_module(fc.cyclic(n), m)
    ind = induced_module(M)
    assert fc.cohomology(ind.I, 1).order == 1
    assert fc.cohomology(ind.I, 2).order == 1
    rep = fc.dimension_shift_check(M)
    assert rep.bijective
    assert rep.H2.factors == rep.H1U.factors


def test_shift_with_nontrivial_action():
    M = fc.build_module((4,), fc.cyclic(2), {1: [[-1]]})
    rep = fc.dimension_shift_check(M)
    assert rep.bijective and rep.H2.order == 2


def test_h0_of_induced_is_a():
    M = fc.trivial_module(fc.cyclic(3), 4)
    assert fc.cohomology(induced_module(M).I, 0).order == 4


def test_u_section_vanishes_at_identity():
    M = fc.trivial_module(fc.cyclic(3), 2)
    ind = induced_module(M)
    G = M.group
    for u in ind.U.carrier.elements():
        f = as_function(ind, tuple(int(x) for x in ind.section @ np.array(u)), G)
        assert f[G.identity] == (0,)


def test_size_cap():
    with pytest.raises(fc.SizeLimitError):
        induced_module(fc.trivial_module(fc.cyclic(12), 6))
