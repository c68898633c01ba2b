"""Homotopy classification of n-simplices with trivial boundary, for abelian L.

For L abelian and concentrated in degree n-1, an n-simplex is a tuple of
n-forms on Delta^n.  Two simplices with vanishing faces are homotopic rel
boundary exactly when their periods agree: Stokes obstructs otherwise, and
when the periods agree ``relative_null`` builds the homotopy explicitly.
"""
from __future__ import annotations

from ..forms import PolyForm, coface
from ..forms.horn import homotopy_operator
from ..linf import LInftyAlgebra
from .mc import MCElement, degeneracy, face

__all__ = ["NonzeroBoundaryError", "period_class", "relative_null", "homotopy_witness",
           "classify_pair"]


class NonzeroBoundaryError(ValueError):
    """period_class needs an MC element whose faces all vanish."""


def _check_abelian(L: LInftyAlgebra, n: int):
    if L.brackets:
        raise ValueError("period classification needs an abelian algebra")
    extra = [d for d in L.space.degrees() if d != n - 1 and L.dim(d)]
    if extra:
        raise ValueError(f"algebra must be concentrated in degree {n - 1}, also has {extra}")


def period_class(L: LInftyAlgebra, x: MCElement) -> list:
    """Vector of simplex periods (one entry per basis vector of L_{n-1})."""
    n = x.m
    _check_abelian(L, n)
    if n >= 1:
        for i in range(n + 1):
            if not face(x, i).is_zero():
                raise NonzeroBoundaryError(f"face {i} of the simplex is nonzero")
    return [x.form((n - 1, i)).simplex_period() for i in range(L.dim(n - 1))]


def _cone_primitive(z: PolyForm) -> PolyForm:
    """K z for the cone from vertex 0: d(Kz) = z for top-degree z, n >= 1."""
    n = z.m
    s = PolyForm.var(n, n + 1, 1)
    images = [s.wedge(PolyForm.var(n, i + 1, 1)) for i in range(n)]
    return homotopy_operator(z, images)


def _q_images(n: int, k: int):
    """Coordinates of q_k: Delta^{n+1} -> Delta^n, vertex 0 -> e_{k-1}, v >= 1 -> e_{v-1}."""
    from ..forms import vertex_map
    verts = [k - 1] + [v - 1 for v in range(1, n + 2)]
    return vertex_map(n + 1, n, verts)


def relative_null(z: PolyForm) -> PolyForm:
    """An exact n-form y on Delta^{n+1} with d_0 y = z and every other face 0.

    ``z`` must be a top-degree form on Delta^n (n >= 1) whose facets vanish
    and whose period is zero.
    """
    n = z.m
    if n < 1:
        raise ValueError("relative_null needs n >= 1")
    if z.simplex_period() != 0:
        raise ValueError("form has nonzero period")
    theta = _cone_primitive(z)
    r = theta.pullback(coface(n, 0))
    if n - 1 >= 1:
        theta = theta - relative_null(r)  # closed, fixes face 0
    elif not r.is_zero():
        raise ArithmeticError("cone primitive has a nonzero endpoint value")
    Theta = PolyForm.zero(n + 1)
    for k in range(1, n + 2):
        Theta = Theta + PolyForm.var(n + 1, k).wedge(theta.pullback(_q_images(n, k)))
    return Theta.d()


def homotopy_witness(L: LInftyAlgebra, x: MCElement, x2: MCElement):
    """An (n+1)-simplex Y with d_0 Y = x, d_1 Y = x2 and all other faces 0.

    Returns None when the periods differ (no such Y exists by Stokes).
    """
    px, px2 = period_class(L, x), period_class(L, x2)
    if px != px2:
        return None
    n = x.m
    forms = {}
    base = degeneracy(x2, 0)
    for i in range(L.dim(n - 1)):
        g = (n - 1, i)
        z = x.form(g) - x2.form(g)
        f = base.form(g)
        if not z.is_zero():
            f = f + relative_null(z)
        forms[g] = f
    return MCElement(L, n + 1, forms)


def classify_pair(L: LInftyAlgebra, x: MCElement, x2: MCElement) -> dict:
    """{"homotopic": bool, "witness": MCElement | None, "obstruction": list of scalars}."""
    px, px2 = period_class(L, x), period_class(L, x2)
    obstruction = [a - b for a, b in zip(px, px2)]
    witness = homotopy_witness(L, x, x2) if not any(obstruction) else None
    return {"homotopic": witness is not None, "witness": witness, "obstruction": obstruction}
