"""Property tests over randomly drawn small groups, modules and functions."""

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

import fincohom as fc
from fincohom.haar import random_function
from fincohom.intlin import invariant_factors

GROUPS = [fc.cyclic(2), fc.cyclic(3), fc.cyclic(4), fc.cyclic(6), fc.symmetric(3), fc.product(fc.cyclic(2), fc.cyclic(2)), fc.dicyclic(2)]
seeds = st.integers(0, 2**32 - 1)


def random_module(G, rng):
    moduli = [(2,), (3,), (4,), (2, 2), (6,)][int(rng.integers(0, 5))]
    if rng.random() < 0.5:
        neg = (-np.eye(len(moduli), dtype=np.int64)).tolist()
        try:
            return fc.build_module(moduli, G, {g: neg for g in G.generators})
        except fc.ValidationError:
            pass
    return fc.trivial_module(G, *moduli)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(GROUPS), seeds, st.integers(0, 2))
def test_d_squared(G, seed, n):
    rng = np.random.default_rng(seed)
    M = random_module(G, rng)
    assert fc.coboundary(fc.coboundary(fc.random_cochain(M, n, rng))).is_zero()


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(GROUPS), seeds)
def test_h0_equals_fixed_points(G, seed):
    M = random_module(G, np.random.default_rng(seed))
    assert fc.cohomology(M, 0).factors == fc.fixed_points(M).group.moduli


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(GROUPS[:5]), st.integers(2, 4), st.integers(2, 4), st.integers(1, 2))
def test_cohomology_is_additive(G, p, q, n):
    Hp = fc.cohomology(fc.trivial_module(G, p), n).factors
    Hq = fc.cohomology(fc.trivial_module(G, q), n).factors
    Hpq = fc.cohomology(fc.trivial_module(G, p, q), n).factors
    assert Hpq == invariant_factors(Hp + Hq)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(GROUPS[:5]), seeds)
def test_cocycle_class_roundtrip(G, seed):
    rng = np.random.default_rng(seed)
    M = random_module(G, rng)
    H = fc.cohomology(M, 2)
    coords = tuple(int(rng.integers(0, f)) for f in H.factors)
    f = H.cochain_of(coords) + fc.coboundary(fc.random_cochain(M, 1, rng))
    assert H.class_of(f).coordinates == coords


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(GROUPS[:4]), st.sampled_from([(2, 2), (2, 3), (3, 2), (3, 3)]))
def test_les_exact(G, pq):
    p, q = pq
    S = fc.make_ses(fc.trivial_module(G, p), fc.trivial_module(G, p * q), fc.trivial_module(G, q), [[q]], [[1]])
    rep = fc.long_exact_sequence(S, 1)
    assert rep.exact and rep.complex_ok


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(GROUPS), seeds)
def test_relative_integral_properties(G, seed):
    rng = np.random.default_rng(seed)
    f, phi, f2 = (random_function(G, rng) for _ in range(3))
    rep = fc.iphi_properties(f, phi, f2=f2)
    assert rep.ok and rep.subadditivity


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(GROUPS), st.data())
def test_product_set_property(G, data):
    pairs = sorted({tuple(sorted((x, G.inv(x)))) for x in range(G.order) if x != G.identity})
    chosen = data.draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    members = {G.identity} | {x for pair in chosen for x in pair}
    rep = fc.product_set_check(fc.symmetric_set(G, members))
    assert rep.ok
    assert rep.overlap_at_identity == len(members)
