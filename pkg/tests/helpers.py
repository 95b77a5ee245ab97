"""Small lookups shared by the test modules."""

from bisetplus.lattice import enumerate_subgroups


def sub(G, order, k=0):
    """The ``k``-th subgroup of ``G`` of the given order, in lattice order."""
    return [H for H in enumerate_subgroups(G).subgroups if H.order == order][k]
