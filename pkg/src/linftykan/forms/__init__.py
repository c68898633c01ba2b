"""Polynomial de Rham forms on simplices."""
from .horn import (DifferentialMismatchError, IncompatibleHornError, check_horn_family,
                   homotopy_operator, horn_extend_form, horn_subsets, projection_homotopy,
                   restrict_to_horn)
from .maps import (AffineSimplexMap, codegeneracy, coface, facet_projection, horn_projection,
                   vertex_map)
from .polyform import DimensionMismatchError, FormDegreeError, PolyForm, const, dt, t

__all__ = ['DifferentialMismatchError', 'IncompatibleHornError', 'check_horn_family',
           'homotopy_operator', 'horn_extend_form', 'horn_subsets', 'projection_homotopy',
           'restrict_to_horn', 'AffineSimplexMap', 'codegeneracy', 'coface', 'facet_projection',
           'horn_projection', 'vertex_map', 'DimensionMismatchError', 'FormDegreeError', 'PolyForm',
           'const', 'dt', 't']
