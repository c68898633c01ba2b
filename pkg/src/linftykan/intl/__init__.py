"""The simplicial object of Maurer-Cartan elements: faces, gauges, horn fillers."""
from .gauge import (LieOps, NilpotentGauge, NotNilpotentError, bch, integrate_nilpotent_gauge,
                    mc_form_of_gauge)
from .mc import (DegreeMismatchError, MCElement, degeneracy, evaluate_ce, face, validate_mc,
                 zero_element)
from .fill import IncompatibleHornError, compose_edges, edge_endpoint, fill_horn, horn_of
from .abelian import NonzeroBoundaryError, classify_pair, homotopy_witness, period_class, relative_null
from .sampling import random_form, random_horn, random_mc

__all__ = ['LieOps', 'NilpotentGauge', 'NotNilpotentError', 'bch', 'integrate_nilpotent_gauge',
           'mc_form_of_gauge', 'DegreeMismatchError', 'MCElement', 'degeneracy', 'evaluate_ce',
           'face', 'validate_mc', 'zero_element', 'IncompatibleHornError', 'compose_edges',
           'edge_endpoint', 'fill_horn', 'horn_of', 'NonzeroBoundaryError', 'classify_pair',
           'homotopy_witness', 'period_class', 'relative_null', 'random_form', 'random_horn',
           'random_mc']
