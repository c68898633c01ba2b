"""Extension of forms from a horn to the whole simplex.

For {j} < I <= [m] let p_I collapse the vertices of I onto j.  Without a
prescribed differential the extension is the inclusion-exclusion sum
sum_I (-1)^|I| p_I^* alpha.  With a closed form beta satisfying d alpha = beta
on the horn, each term is corrected by the homotopy operator of the straight
line homotopy H_I(x, s) = s x + (1 - s) p_I(x), which gives d(extension) = beta.
"""
from __future__ import annotations

import itertools

from .maps import coface, facet_projection, horn_projection
from .polyform import PolyForm

__all__ = ["horn_extend_form", "restrict_to_horn", "check_horn_family", "homotopy_operator",
           "projection_homotopy", "IncompatibleHornError", "DifferentialMismatchError",
           "horn_subsets"]


class IncompatibleHornError(ValueError):
    """Facet forms disagree on a common codimension-2 face."""


class DifferentialMismatchError(ValueError):
    """d(alpha) differs from beta on some horn facet."""


def horn_subsets(m: int, j: int):
    """All I with {j} strictly inside I, as sorted tuples."""
    others = [v for v in range(m + 1) if v != j]
    for r in range(1, m + 1):
        for rest in itertools.combinations(others, r):
            yield tuple(sorted((j,) + rest))


def restrict_to_horn(form: PolyForm, j: int) -> dict:
    """{k: d_k form} for every facet k != j."""
    m = form.m
    return {k: form.pullback(coface(m, k)) for k in range(m + 1) if k != j}


def check_horn_family(family: dict, m: int, j: int, beta: PolyForm | None = None):
    """Raise if the facet forms disagree on overlaps or d alpha != beta there."""
    keys = sorted(family)
    if keys != [k for k in range(m + 1) if k != j]:
        raise IncompatibleHornError(f"horn family needs facets {[k for k in range(m + 1) if k != j]}")
    for k in keys:
        if family[k].m != m - 1 or family[k].nparams:
            raise IncompatibleHornError(f"facet {k} form must live on Delta^{m - 1}")
    if m >= 2:
        for k, l in itertools.combinations(keys, 2):
            a = family[l].pullback(coface(m - 1, k))
            b = family[k].pullback(coface(m - 1, l - 1))
            if a != b:
                raise IncompatibleHornError(f"facets {k} and {l} disagree on their common face")
    if beta is not None:
        for k in keys:
            if family[k].d() != beta.pullback(coface(m, k)):
                raise DifferentialMismatchError(f"d(alpha) != beta on facet {k}")


def homotopy_operator(beta: PolyForm, images) -> PolyForm:
    """K beta = int_0^1 i_{d/ds} H^* beta ds for H given by coordinate images.

    ``images`` are 0-forms on Delta^m x [0, 1] (one parameter, s last).
    For closed beta, d K beta = H_1^* beta - H_0^* beta.
    """
    m = beta.m
    pulled = beta.pullback_images(images, m, 1)
    field = [PolyForm.zero(m, 1)] * m + [PolyForm.constant(m, 1, 1)]
    return pulled.contract(field).s_integral()


def projection_homotopy(beta: PolyForm, j: int, I) -> PolyForm:
    """Homotopy operator for the straight line from p_I to the identity."""
    m = beta.m
    p = horn_projection(m, j, I).images(nparams=1)
    s = PolyForm.var(m, m + 1, 1)
    one_minus_s = PolyForm.constant(m, 1, 1) - s
    images = [s.wedge(PolyForm.var(m, i + 1, 1)) + one_minus_s.wedge(p[i]) for i in range(m)]
    return homotopy_operator(beta, images)


def _extend(family: dict, m: int, j: int, beta: PolyForm | None, degree_hint: int | None):
    out = PolyForm.zero(m)
    for I in horn_subsets(m, j):
        k, P = facet_projection(m, j, I)
        term = family[k].pullback(P)
        if beta is not None and not beta.is_zero():
            term = term + projection_homotopy(beta, j, I)
        out = out + (term if len(I) % 2 == 0 else -term)
    return out


def horn_extend_form(family: dict, m: int, j: int, beta: PolyForm | None = None,
                     pin=None, check: bool = True) -> PolyForm:
    """Extend a facet-compatible family on the horn Lambda^{m,j} to Delta^m.

    ``family`` maps each facet index k != j to a form on Delta^{m-1}.  If
    ``beta`` (a closed form on Delta^m) is given, the result satisfies
    d(result) = beta.  ``pin = (family0, extension0)`` makes the operation a
    section through that pair: the input ``family0`` returns ``extension0``.
    """
    if m < 1:
        raise ValueError("horns need m >= 1")
    if not 0 <= j <= m:
        raise IndexError(f"horn index {j} out of range")
    if check:
        check_horn_family(family, m, j, beta)
        if beta is not None and not beta.d().is_zero():
            raise DifferentialMismatchError("beta must be closed")
    if pin is None:
        return _extend(family, m, j, beta, None)
    family0, ext0 = pin
    diff = {k: family[k] - family0[k] for k in family}
    beta_diff = None
    if beta is not None:
        beta_diff = beta - ext0.d()
    return ext0 + _extend(diff, m, j, beta_diff, None)
