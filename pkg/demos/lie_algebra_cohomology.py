"""Chevalley-Eilenberg cohomology of small Lie algebras."""
import fincohom as fc
from fincohom.lie import betti_numbers, build_lie_algebra

for L in (fc.abelian_lie(2), fc.sl2(), fc.heisenberg()):
    print(f"{L.name:>12}  trivial {betti_numbers(L)}  adjoint {betti_numbers(L, fc.adjoint_module(L))}")

# the non-abelian two dimensional algebra [x, y] = y
aff = build_lie_algebra({(0, 1): {1: 1}}, 2, name="aff(1)")
print(f"{aff.name:>12}  trivial {betti_numbers(aff)}")

# a table that breaks the Jacobi identity is refused
try:
    build_lie_algebra({(0, 1): {2: 1}, (1, 2): {0: 1}, (0, 2): {0: 1}}, 3)
except fc.ValidationError as exc:
    print("\nrejected:", exc)
