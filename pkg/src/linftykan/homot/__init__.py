"""Homotopy groups via the long exact sequence, and the integrability criterion."""
from .les import (G_TOKEN, BoundaryData, DiffeoGroupPres, InconsistentLES, exactness_audit,
                  les_assemble, lie_algebra_of, tvf_integrability)

__all__ = ['G_TOKEN', 'BoundaryData', 'DiffeoGroupPres', 'InconsistentLES', 'exactness_audit',
           'les_assemble', 'lie_algebra_of', 'tvf_integrability']
