"""Bisets, biset functors and their plus constructions over finite permutation groups."""

from .bisets import (BisetElement, ConcreteBiset, compose_all, decompose_standard, defl, elementary,
                     ind, inf, iso, mackey_compose, realize, res, standard_basis, tensor_oracle)
from .category import CategorySpec, check_axioms, s_plus_member, s_upper_member
from .cyclotomic import Cyclotomic, root_of_unity
from .functors import (BasedFunctor, ConstantFunctor, FiberedFunctor, FunctorElement,
                       check_functor_laws, functor_from_selector)
from .ghost import GhostElement, ghost_act, ghost_mult, ghost_unit
from .groups import GroupError, GroupHom, PermGroup, group_from_spec, quotient_group
from .lattice import SubgroupLattice, enumerate_subgroups
from .mark import mark, mobius_inverse, table_of_marks, verify_mark_identities
from .plus import PlusElement, plus_act, plus_mult, plus_pi, plus_ring
from .products import ProductSubgroup
from .species import check_species_theorem, enumerate_species, evaluate_species
from .verify import SuiteReport, adjunction_check, run_suite

__all__ = [
    "BisetElement", "ConcreteBiset", "compose_all", "decompose_standard", "defl", "elementary",
    "ind", "inf", "iso", "mackey_compose", "realize", "res", "standard_basis", "tensor_oracle",
    "CategorySpec", "check_axioms", "s_plus_member", "s_upper_member", "Cyclotomic",
    "root_of_unity", "BasedFunctor", "ConstantFunctor", "FiberedFunctor", "FunctorElement",
    "check_functor_laws", "functor_from_selector", "GhostElement", "ghost_act", "ghost_mult",
    "ghost_unit", "GroupError", "GroupHom", "PermGroup", "group_from_spec", "quotient_group",
    "SubgroupLattice", "enumerate_subgroups", "mark", "mobius_inverse", "table_of_marks",
    "verify_mark_identities", "PlusElement", "plus_act", "plus_mult", "plus_pi", "plus_ring",
    "ProductSubgroup", "check_species_theorem", "enumerate_species", "evaluate_species",
    "SuiteReport", "adjunction_check", "run_suite",
]
