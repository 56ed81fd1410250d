"""
Action of diffeomorphisms on H^2
================================

A diffeomorphism acts on (s, t) by a unimodular matrix.  Only matrices that
induce ring automorphisms preserving orientation and p1 can occur.
"""

from cp2bundles.bundles import BundleParams
from cp2bundles.mcg_action import brute_force_automorphisms, image_of_R, matrix_order, sorted_matrices

# generic case: the image is Z_2, generated by the conjugation X_k
p = BundleParams(1, -3)
for m in sorted_matrices(image_of_R(p)):
    print(m.tolist(), "order", matrix_order(m))

# r = -3: the swap H becomes admissible and the image grows to S_3
image = image_of_R(BundleParams(1, 1))
print("r=-3 image has", len(image), "elements, orders", sorted(matrix_order(m) for m in image))

# exhaustive search over a small box agrees with the classifier
brute = brute_force_automorphisms(BundleParams(1, 1), 3)
print("brute force agrees:", brute == image)

# another presentation of r = -3 gives a conjugate copy
q = BundleParams(5, 7)
print("(5,7):", [m.tolist() for m in sorted_matrices(image_of_R(q))])
