import collections
import itertools

import pytest

import fincohom as fc
from fincohom.catalog import catalog, find_isomorphism, identify

# number of groups of each order 1..16
KNOWN_COUNTS = [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14]


def order_profile(G):
    return tuple(sorted(collections.Counter(G.element_order(x) for x in range(G.order)).items())), G.is_abelian


@pytest.mark.parametrize("n", range(1, 17))
def test_catalog_counts(n):
    entries = catalog(n)
    assert len(entries) == KNOWN_COUNTS[n - 1]
    assert all(G.order == n for _, G in entries)
    assert len({name for name, _ in entries}) == len(entries)


@pytest.mark.parametrize("n", [8, 12, 16])
def test_catalog_entries_pairwise_distinct(n):
    entries = [G for _, G in catalog(n)]
    for a, b in itertools.combinations(entries, 2):
        if order_profile(a) == order_profile(b):
            assert find_isomorphism(a, b) is None


def test_find_isomorphism_is_an_isomorphism():
    # D4 as permutations of the square against the dihedral builder
    G1 = fc.dihedral(4)
    G2 = fc.from_permutations([[1, 2, 3, 0], [0, 3, 2, 1]])
    theta = find_isomorphism(G1, G2)
    assert theta is not None and sorted(theta) == list(range(8))
    for x, y in itertools.product(range(8), repeat=2):
        assert theta[G1.mul(x, y)] == G2.mul(theta[x], theta[y])


def test_non_isomorphic_same_order():
    assert find_isomorphism(fc.dihedral(4), fc.dicyclic(2)) is None
    assert not fc.is_isomorphic(fc.cyclic(4), fc.product(fc.cyclic(2), fc.cyclic(2)))


@pytest.mark.parametrize(
    "G, label",
    [
        (fc.cyclic(6), "Z/6"),
        (fc.symmetric(3), "D3"),
        (fc.dicyclic(2), "Q8"),
        (fc.product(fc.cyclic(2), fc.cyclic(6)), "Z/2xZ/6"),
        (fc.trivial_group(), "1"),
    ],
)
def test_identify(G, label):
    assert identify(G) == label


def test_identify_a4_and_s4_orders():
    assert identify(fc.alternating(4)) in {name for name, _ in catalog(12)}
    assert identify(fc.symmetric(4)) in {name for name, _ in catalog(24)}
