"""
Mixing isogenies by brute force
===============================

Model decomposable threefolds up to isogeny as multisets of simple labels and
check that a mixing isogeny can only start at a point of the E_1 x E_2^2 form.
"""

from kodaira_monodromy.isogeny import FormalSimple, PolarizedProduct, in_z_locus, mixing_exists, verify_inclusion_Y_in_Z

E = FormalSimple("E", 2)
F = FormalSimple("F", 2)
S = FormalSimple("S", 4)

p = PolarizedProduct.of([E], [E, F])
q = PolarizedProduct.of([E, E], [F])
print(p, "->", q, mixing_exists(p, q), in_z_locus(p))

# a simple surface shares nothing with an elliptic factor
r = PolarizedProduct.of([E], [S])
print(r, "->", r, mixing_exists(r, r))

for size in range(1, 5):
    res = verify_inclusion_Y_in_Z(size)
    print(size, res.pairs_checked, res.mixing_pairs, len(res.counterexamples))
