"""Burnside ring of S3 through the constant plus construction.

Prints the table of marks, a product of transitive G-sets and its marks,
then recovers the element from its marks with the Möbius inverse.
"""

from bisetplus import ConstantFunctor, group_from_spec, mark, mobius_inverse, plus_mult, plus_ring, table_of_marks
from bisetplus.serialize import render_plus

G = group_from_spec("S3")
F = ConstantFunctor()

basis, reps, rows = table_of_marks(G)
print("table of marks (rows G/K, columns L):")
for K, row in zip(reps, rows):
    print(f"  |K|={K.order}:", [v.get(1, 0) for v in row])

ring = plus_ring(G, F)
gens = [ring.generator(K, a) for K, a in ring.canonical_basis()]
x = gens[1]  # G/C2
sq = plus_mult(x, x)
print("\n[C2] * [C2] =", render_plus(sq))
m = mark(sq)
print("marks:", {H.order: v for H, v in m.components.items()})
back = mobius_inverse(m)
print("Möbius inverse gives |G| times the element:", back == G.order * sq)
