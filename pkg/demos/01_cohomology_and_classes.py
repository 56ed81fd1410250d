"""
Cohomology rings of projective bundles over CP^2
=================================================

Each N_r is the projectivization of a rank-2 complex bundle with total Chern
class 1 + kx + lx^2, and r = k^2 - 4l.  Its cohomology is Z[s, t] modulo
s^3 and t^2 - kts + ls^2.
"""

from cp2bundles import bundles
from cp2bundles.gring import make_pn_ring

# the Milnor hypersurface M_1 corresponds to (k, l) = (1, 1)
ring = make_pn_ring(1, 1)
s, t = ring.gens()
print(ring, "ranks:", [ring.rank(d) for d in (0, 2, 4, 6)])

# relations in normal form
print("t^2 =", t * t)
print("t^3 =", t ** 3)
print("<s^2 t> =", ring.evaluate(s * s * t))

# characteristic classes for a few parameters
for k, l in [(1, 1), (0, 0), (1, -3), (3, 9)]:
    p = bundles.BundleParams(k, l)
    print(f"(k,l)=({k},{l})  r={p.r:4d}  c1 = {bundles.chern_c1(p)}  p1 = {bundles.pontrjagin_p1(p)}"
          f"  spin={bundles.is_spin(p.r)}")

# r is a complete invariant; every realizable r has a representative with k in {0, 1}
print("canonical for r=13:", bundles.params_for_r(13))
