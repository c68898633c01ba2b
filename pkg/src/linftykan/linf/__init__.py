"""L-infinity algebras, Chevalley-Eilenberg differentials, truncations."""
from .algebra import (InvariantViolationError, LInftyAlgebra, basis_vector, jacobiator,
                      koszul_sort, vec_add, vec_scale)
from .ce import CEAlgebra, ce_differential, ce_square_zero, mc_system
from .examples import (DependenceError, abelian, build_end_example, contractible, end_isomorphism,
                       heisenberg, jacobi_counterexample, lie_algebra, string_lie2, su2)
from .structure import (Truncation, adapted_basis, homology, homology_dims, is_nilpotent,
                        lower_central_series, tower_map, truncate_linf)

__all__ = ['InvariantViolationError', 'LInftyAlgebra', 'basis_vector', 'jacobiator', 'koszul_sort',
           'vec_add', 'vec_scale', 'CEAlgebra', 'ce_differential', 'ce_square_zero', 'mc_system',
           'DependenceError', 'abelian', 'build_end_example', 'contractible', 'end_isomorphism',
           'heisenberg', 'jacobi_counterexample', 'lie_algebra', 'string_lie2', 'su2', 'Truncation',
           'adapted_basis', 'homology', 'homology_dims', 'is_nilpotent', 'lower_central_series',
           'tower_map', 'truncate_linf']
