"""
The indeterminacy lattice and the Torelli group
===============================================

For r = 8n + 5 the Kreck-Stolz invariant embeds the Torelli group into Z^3/L.
L is spanned by characteristic numbers of (alpha^2, alpha^2 + alpha*beta,
beta^2) on a basis of signature-zero bordism.
"""

from cp2bundles.intlat import quotient_group
from cp2bundles.kreck_stolz import alpha_beta, char_table, lattice_L, lattice_L_closed_form, milnor_torelli, torelli_group

l = -27
alpha, beta = alpha_beta(l)
print("alpha =", alpha)
print("beta  =", beta)

# the raw 9x3 table, then its Hermite normal form
print(char_table(l))
print("HNF:", lattice_L(l).tolist(), " closed form:", lattice_L_closed_form(l).tolist())
print("Z^3/L =", quotient_group(3, lattice_L(l)))

# Torelli groups for a few n
for n in (-1, 0, 1, 13):
    res = torelli_group(n)
    print(f"n={n:3d}  r={res.r:4d}  I(N_r) = {res}")

# generalized Milnor hypersurfaces; the group prints in invariant-factor form
for k in (1, 3, 5, 7):
    n = (-3 * k * k - 5) // 8
    print(f"M_{k}: {torelli_group(n)}  (invariant factors: {milnor_torelli(k)})")
