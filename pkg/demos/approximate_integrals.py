"""Approximate integrals on a finite group as exact covering programs."""
import numpy as np
import fincohom as fc
from fincohom.haar import random_function

G = fc.cyclic(6)
f = fc.indicator(G, [0, 1])
phi = fc.indicator(G, [0, 1, 5])
rep = fc.approx_integral(f, phi)
print("(f; phi) =", rep.value, "coefficients", [str(c) for c in rep.coefficients], "certified", rep.certified)
print("I_phi(f) =", fc.relative_integral(f, phi))

# as phi shrinks to the identity the additivity gap closes
f2 = fc.indicator(G, [2])
for S in ([0, 1, 2, 4, 5], [0, 1, 5], [0]):
    print(f"  supp phi = {S}: gap = {fc.near_additivity_gap(f, f2, fc.indicator(G, S))}")

# the limit functional is the normalised sum, and it is left invariant
rng = np.random.default_rng(1)
S3 = fc.symmetric(3)
I = fc.invariant_integral(S3)
samples = [random_function(S3, rng) for _ in range(4)]
print("\ncertificate on S3:", I.certify(samples))

# overlap counts of a symmetric set live inside its product set
M = fc.symmetric_set(G, [0, 1, 5])
check = fc.product_set_check(M)
print("MM =", sorted(check.product_set), "supp u =", sorted(check.support), "ok:", check.ok)
