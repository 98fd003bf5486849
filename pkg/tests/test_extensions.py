import collections
import itertools

import numpy as np
import pytest

import fincohom as fc
from fincohom.extensions import extension_violations


def neg(moduli_n, G=None):
    G = G or fc.cyclic(2)
    return fc.build_module((moduli_n,), G, {g: [[-1]] for g in G.generators})


def twisted_product(F, x, y):
    """Direct evaluation of (a1, s1)(a2, s2) on carrier tuples, for comparison."""
    M = F.module
    A, G = M.carrier, M.group
    (a1, s1), (a2, s2) = x, y
    return A.add(A.add(a1, M.act(s1, a2)), F(s1, s2)), G.mul(s1, s2)


def as_pairs(ext):
    A, g = ext.module.carrier, ext.G.order
    return [(A.element(x // g), x % g) for x in range(ext.E.order)]


@pytest.mark.parametrize("module", [fc.trivial_module(fc.cyclic(3), 3), neg(4), neg(3)])
def test_table_matches_twisted_product(module):
    rng = np.random.default_rng(1)
    H = fc.cohomology(module, 2)
    for cls in H.classes():
        # a non-normalized representative exercises the identity shift
        F = cls.representative() + fc.coboundary(fc.random_cochain(module, 1, rng))
        ext = fc.build_extension(F)
        pairs = as_pairs(ext)
        index = {p: i for i, p in enumerate(pairs)}
        for x, y in itertools.product(range(ext.E.order), repeat=2):
            assert ext.E.mul(x, y) == index[twisted_product(F, pairs[x], pairs[y])]
        e = module.group.identity
        assert pairs[ext.E.identity] == (module.carrier.neg(F(e, e)), e)
        for x in range(ext.E.order):
            assert ext.E.mul(x, ext.E.inv(x)) == ext.E.identity
        assert extension_violations(ext) == []


def test_split_and_cyclic_extensions_of_z_p():
    for p in (2, 3, 5):
        entries = fc.classify_extensions(fc.trivial_module(fc.cyclic(p), p))
        labels = {e.cls.is_zero(): e.label for e in entries}
        assert labels[True] == f"Z/{p}xZ/{p}"
        assert set(labels.values()) - {labels[True]} == {f"Z/{p * p}"}
        assert len(entries) == p


def test_negation_extensions():
    assert sorted(e.label for e in fc.classify_extensions(neg(4))) == ["D4", "Q8"]
    assert [e.label for e in fc.classify_extensions(neg(3))] == ["D3"]


def test_klein_four_over_z2():
    V = fc.product(fc.cyclic(2), fc.cyclic(2))
    counts = collections.Counter(e.label for e in fc.classify_extensions(fc.trivial_module(V, 2)))
    assert counts == {"Z/2xZ/2xZ/2": 1, "D4": 3, "Z/2xZ/4": 3, "Q8": 1}


def test_non_cocycle_is_rejected_with_triple():
    M = fc.trivial_module(fc.cyclic(2), 2)
    F = fc.cochain(M, 2, {(0, 1): (1,)})
    with pytest.raises(fc.ValidationError) as err:
        fc.build_extension(F)
    assert len(err.value.witness) == 3


def test_wrong_degree_rejected():
    M = fc.trivial_module(fc.cyclic(2), 2)
    with pytest.raises(fc.ValidationError):
        fc.build_extension(fc.zero_cochain(M, 1))


def z4_over_z2():
    M = fc.trivial_module(fc.cyclic(2), 2)
    return M, fc.make_extension(M, fc.cyclic(4), [0, 2], [0, 1, 0, 1])


def test_explicit_extension_and_section_choice():
    M, ext = z4_over_z2()
    H = fc.cohomology(M, 2)
    c1 = H.class_of(fc.cocycle_from_section(ext))
    c2 = H.class_of(fc.cocycle_from_section(ext.with_section([2, 3])))
    assert c1 == c2 and not c1.is_zero()
    assert fc.cocycle_from_section(ext)(1, 1) == (1,)


def test_invalid_explicit_data():
    M = fc.trivial_module(fc.cyclic(2), 2)
    with pytest.raises(fc.ValidationError):
        fc.make_extension(M, fc.cyclic(4), [0, 2], [0, 1, 1, 0])
    with pytest.raises(fc.ValidationError):
        fc.make_extension(M, fc.cyclic(4), [0, 1], [0, 1, 0, 1])
    _, ext = z4_over_z2()
    with pytest.raises(fc.ValidationError):
        ext.with_section([0, 2])


def test_equivalence_witness_is_a_compatible_isomorphism():
    M, ext = z4_over_z2()
    built = fc.build_extension(fc.cohomology(M, 2).class_of(fc.cocycle_from_section(ext)).representative())
    ok, theta = fc.equivalent(ext, built)
    assert ok
    E1, E2 = ext.E, built.E
    assert sorted(theta) == list(range(4))
    for x, y in itertools.product(range(4), repeat=2):
        assert theta[E1.mul(x, y)] == E2.mul(theta[x], theta[y])
    assert all(theta[ext.inclusion[i]] == built.inclusion[i] for i in range(2))
    assert all(built.projection[theta[x]] == ext.projection[x] for x in range(4))


def test_isomorphic_but_inequivalent():
    # over Z/3, classes 1 and 2 both give Z/9 yet are not equivalent
    M = fc.trivial_module(fc.cyclic(3), 3)
    H = fc.cohomology(M, 2)
    a, b = [fc.build_extension(c.representative()) for c in H.classes() if not c.is_zero()]
    assert fc.is_isomorphic(a.E, b.E)
    assert fc.equivalent(a, b) == (False, None)


def test_round_trip_for_every_class():
    for M in [neg(4), fc.trivial_module(fc.symmetric(3), 2), fc.trivial_module(fc.cyclic(4), 2)]:
        H = fc.cohomology(M, 2)
        for cls in H.classes():
            assert H.class_of(fc.cocycle_from_section(fc.build_extension(cls.representative()))) == cls
