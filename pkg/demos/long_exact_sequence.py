"""The long exact sequence of 0 -> Z/2 -> Z/4 -> Z/2 -> 0 with trivial action."""
import fincohom as fc
from fincohom.induced import induced_module

G = fc.cyclic(2)
S = fc.make_ses(fc.trivial_module(G, 2), fc.trivial_module(G, 4), fc.trivial_module(G, 2), [[2]], [[1]])
rep = fc.long_exact_sequence(S, cap=2)
print(rep.table())
print("exact everywhere:", rep.exact)
for name, m in sorted(rep.maps.items()):
    print(f"  {name:<7}", m.tolist())

# a different section gives the same connecting map on classes
S2 = S.with_section({(0,): (2,), (1,): (3,)})
z = fc.cohomology(S.A2, 1).representatives[0]
H2 = fc.cohomology(S.A1, 2)
print("\ndelta(z) with two sections:", fc.connecting(S, z, H2).coordinates, fc.connecting(S2, z, H2).coordinates)

# dimension shifting through the induced module
M = fc.trivial_module(fc.cyclic(3), 3)
ind = induced_module(M)
print("\nH^1, H^2 of the induced module:", fc.cohomology(ind.I, 1).order, fc.cohomology(ind.I, 2).order)
shift = fc.dimension_shift_check(M)
print("H^1(G, U) -> H^2(G, A) is a bijection:", shift.bijective, shift.matrix.tolist())
