"""Numeric periods of maps into SU(2) and the circle-bundle cocycle model."""
from .quaternion import NonUnitQuaternionError, bracket, imag, pairing0, qconj, qexp, qmul, qnorm
from .periods import (CALIBRATION, NonFiniteSampleError, SU2Map, builtin_map, calibrate,
                      cartan_period, concat_map, constant_map, degree1, degree1_reversed,
                      integrate_3form, load_table, mc_pair_residual, pullback_density,
                      radial_primitive, sample_table, simplex_cones, table_map)
from .bundle import (BoundaryNotFixedError, BundleTwoSimplex, EdgeIncompatibilityError,
                     bundled_tetra_datum, class_equal, cocycle_check, load_tetra, prism_period,
                     tetra_faces_from_filling, tetra_to_json)

__all__ = ['NonUnitQuaternionError', 'bracket', 'imag', 'pairing0', 'qconj', 'qexp', 'qmul',
           'qnorm', 'CALIBRATION', 'NonFiniteSampleError', 'SU2Map', 'builtin_map', 'calibrate',
           'cartan_period', 'concat_map', 'constant_map', 'degree1', 'degree1_reversed',
           'integrate_3form', 'load_table', 'mc_pair_residual', 'pullback_density',
           'radial_primitive', 'sample_table', 'simplex_cones', 'table_map',
           'BoundaryNotFixedError', 'BundleTwoSimplex', 'EdgeIncompatibilityError',
           'bundled_tetra_datum', 'class_equal', 'cocycle_check', 'load_tetra', 'prism_period',
           'tetra_faces_from_filling', 'tetra_to_json']
