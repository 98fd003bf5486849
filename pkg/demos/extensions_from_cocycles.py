"""Build group extensions from 2-cocycles and sort them by isomorphism type."""
import collections
import fincohom as fc

# Z/p by Z/p: one split extension and p - 1 copies of Z/p^2
for p in (2, 3):
    M = fc.trivial_module(fc.cyclic(p), p)
    print(f"extensions of Z/{p} by Z/{p}:", [e.label for e in fc.classify_extensions(M)])

# negation on Z/4 gives the dihedral and quaternion groups of order 8
M = fc.build_module((4,), fc.cyclic(2), {1: [[-1]]})
for e in fc.classify_extensions(M):
    print("  class", e.cls.coordinates, "->", e.label)

# Klein four by Z/2: eight classes, four isomorphism types
V = fc.product(fc.cyclic(2), fc.cyclic(2))
entries = fc.classify_extensions(fc.trivial_module(V, 2))
print("\nV4 by Z/2:", dict(collections.Counter(e.label for e in entries)))

# going back: Z/4 as an extension of Z/2 by Z/2, read off its cocycle
A = fc.trivial_module(fc.cyclic(2), 2)
ext = fc.make_extension(A, fc.cyclic(4), inclusion=[0, 2], projection=[0, 1, 0, 1])
F = fc.cocycle_from_section(ext)
H = fc.cohomology(A, 2)
print("Z/4 has class", H.class_of(F).coordinates)
ok, theta = fc.equivalent(ext, fc.build_extension(H.class_of(F).representative()))
print("equivalent to the built extension:", ok, "via", theta)
