"""Species of the fibered plus ring with Z/2 labels, for a few small groups.

The number of species equals the rank, and the evaluation matrix is nonsingular.
"""

from bisetplus import FiberedFunctor, check_species_theorem, group_from_spec

F = FiberedFunctor(2)
for name in ("C2", "C4", "V4", "S3", "D4"):
    r = check_species_theorem(group_from_spec(name), F)
    print(f"{name:>3}: rank {r['rank']:>2}, species {r['species']:>2}, "
          f"matrix rank {r['matrix_rank']:>2}, ok {r['pass']}")
