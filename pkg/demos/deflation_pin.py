"""Where the mark stops being natural: deflation C4 -> C4/C2.

Deflation is not right-free, so the orbit-sum action on ghost components
no longer matches the action on the plus ring.  Restriction still commutes.
"""

from bisetplus import ConstantFunctor, group_from_spec, mark, plus_act, plus_ring
from bisetplus.bisets import defl, res
from bisetplus.ghost import ghost_act
from bisetplus.lattice import enumerate_subgroups

G = group_from_spec("C4")
N = next(H for H in enumerate_subgroups(G).subgroups if H.order == 2)
F = ConstantFunctor()
ring = plus_ring(G, F)
x = ring.generator(*ring.canonical_basis()[0])  # the regular G-set [1]



def show(y):
    return {H.order: v for H, v in y.components.items()}


for label, U in (("res to C2", res(G, N)), ("def to C4/C2", defl(G, N))):
    lhs = mark(plus_act(U, x))
    rhs = ghost_act(U, mark(x), right_free=False)
    print(f"{label:>12}: mark after act {show(lhs)}")
    print(f"{'':>12}  act after mark {show(rhs)}")
    print(f"{'':>12}  commute: {lhs == rhs}")
