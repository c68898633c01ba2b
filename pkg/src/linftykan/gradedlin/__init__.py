"""Exact graded linear algebra over Q and multiquadratic fields."""
from .abelian import (FGAbGroup, GradedVectorSpace, integer_kernel_basis, integer_kernel_rank, smith_normal_form,
                      subgroup_is_discrete)
from .linalg import (CompositionNonzeroError, column_space, complement_basis, identity,
                     is_zero, left_nullspace, matmul, nullspace, rank, rref, solve,
                     transpose, two_term_homology, zeros)
from .scalar import (Scalar, UnsupportedScalarError, as_scalar, coordinates, format_scalar,
                     is_rational, parse_scalar, simplify, to_float)

__all__ = ['FGAbGroup', 'GradedVectorSpace', 'integer_kernel_basis', 'integer_kernel_rank',
           'smith_normal_form', 'subgroup_is_discrete', 'CompositionNonzeroError', 'column_space',
           'complement_basis', 'identity', 'is_zero', 'left_nullspace', 'matmul', 'nullspace',
           'rank', 'rref', 'solve', 'transpose', 'two_term_homology', 'zeros', 'Scalar',
           'UnsupportedScalarError', 'as_scalar', 'coordinates', 'format_scalar', 'is_rational',
           'parse_scalar', 'simplify', 'to_float']
