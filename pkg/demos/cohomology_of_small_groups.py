"""Cohomology of a few small groups, computed from the bar complex."""
import numpy as np
import fincohom as fc

# Z/2 acting on Z/4 by negation: every degree gives Z/2
G = fc.cyclic(2)
A = fc.build_module((4,), G, {1: [[-1]]})
for n in range(4):
    print("H^%d(Z/2, Z/4 twisted) =" % n, fc.describe(fc.cohomology(A, n).factors))

# trivial coefficients over a few groups
for G in (fc.cyclic(6), fc.symmetric(3), fc.product(fc.cyclic(2), fc.cyclic(2)), fc.dicyclic(2)):
    M = fc.trivial_module(G, 2)
    print(f"{G.name:>10}:", [fc.describe(fc.cohomology(M, n).factors) for n in range(3)])

# classify a hand written 1-cochain: t -> 1 on the negation module
f = fc.cochain(A, 1, {0: (0,), 1: (1,)})
c = fc.classify_cochain(f)
print("\nf(t) = 1 is a cocycle:", c.is_cocycle, "| coboundary:", c.is_coboundary, "| class:", c.cls.coordinates)

# adding a random coboundary does not move the class
rng = np.random.default_rng(0)
g = f + fc.coboundary(fc.random_cochain(A, 0, rng))
print("after adding a coboundary the class is", fc.classify_cochain(g).cls.coordinates)

# the crossed homomorphisms themselves
for z in fc.crossed_homomorphisms(A):
    print("  crossed hom:", [z(s) for s in range(2)])
