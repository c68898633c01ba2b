"""Finite simplicial sets: Kan conditions, homotopy groups, truncations, 2-group nerves."""
from .core import FinSimplicialSet, NotKanError, SimplicialIdentityError, product
from .examples import (FiniteGroup, boundary, cyclic_group, eilenberg_maclane, horn, k_g1, point,
                       product_group, standard_simplex, subcomplex, symmetric_group3)
from .homotopy import HomotopyGroup, pi_n, relative_homotopy_classes, truncate_simpset
from .collapse import closure, find_collapse, verify_collapse
from .twogroup import (CoherentTwoGroup, NonUniqueFillerError, PentagonViolationError,
                       cocycle_2group, crossed_module_2group, nerve_2group, nerve_round_trip_maps,
                       trivial_2group, two_group_equivalence, two_group_from_kan)

__all__ = ['FinSimplicialSet', 'NotKanError', 'SimplicialIdentityError', 'product', 'FiniteGroup',
           'boundary', 'cyclic_group', 'eilenberg_maclane', 'horn', 'k_g1', 'point',
           'product_group', 'standard_simplex', 'subcomplex', 'symmetric_group3', 'HomotopyGroup',
           'pi_n', 'relative_homotopy_classes', 'truncate_simpset', 'closure', 'find_collapse',
           'verify_collapse', 'CoherentTwoGroup', 'NonUniqueFillerError', 'PentagonViolationError',
           'cocycle_2group', 'crossed_module_2group', 'nerve_2group', 'nerve_round_trip_maps',
           'trivial_2group', 'two_group_equivalence', 'two_group_from_kan']
