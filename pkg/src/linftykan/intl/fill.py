"""Exact horn fillers for nilpotent L-infinity algebras.

The filler is assembled generator by generator in a basis adapted to the
lower central series, where delta(xi) only involves earlier generators:

* when L_0 is a Lie algebra (no unary bracket into degree 0), the degree-0
  component is filled through a gauge: integrate u on every horn facet from
  vertex j, extend u by inclusion-exclusion over the projections p_I, and
  differentiate back to alpha = -f^{-1} df;
* every remaining generator xi gets the form extension with prescribed
  differential beta = phi(delta xi), which is closed because the earlier
  generators already satisfy the MC equations.
"""
from __future__ import annotations

from ..forms import PolyForm, coface, horn_extend_form
from ..forms.horn import IncompatibleHornError, check_horn_family
from ..linf import LInftyAlgebra, adapted_basis, ce_differential, is_nilpotent
from .gauge import (LieOps, NotNilpotentError, _check_lie_nilpotent, integrate_nilpotent_gauge,
                    mc_form_of_gauge)
from .mc import MCElement, evaluate_ce, face, validate_mc

__all__ = ["fill_horn", "horn_of", "IncompatibleHornError", "compose_edges", "edge_endpoint"]


def horn_of(x: MCElement, j: int) -> dict:
    """Restriction of an m-simplex to the horn Lambda[m, j]: {k: d_k x}."""
    return {k: face(x, k) for k in range(x.m + 1) if k != j}


def _convert(forms: dict, L: LInftyAlgebra, maps: dict, m: int, target: LInftyAlgebra):
    """Change generator coordinates: phi'(xi'_r) = sum_i maps[d][r][i] phi(xi_i)."""
    out = {}
    for d in L.space.degrees():
        M = maps[d]
        for r in range(len(M)):
            acc = PolyForm.zero(m)
            for i, c in enumerate(M[r]):
                f = forms.get((d, i))
                if c != 0 and f is not None:
                    acc = acc + f.scale(c)
            if not acc.is_zero():
                out[(d, r)] = acc
    return out


def _layers_order(layers: dict, skip_degree0: bool):
    keys = [g for g in layers if not (skip_degree0 and g[0] == 0)]
    return sorted(keys, key=lambda g: (layers[g], g[0], g[1]))


def fill_horn(L: LInftyAlgebra, horn: dict, m: int, j: int, pin: MCElement | None = None,
              check: bool = True, use_gauge: bool = True) -> MCElement:
    """Fill the horn {k: (m-1)-simplex, k != j} to an m-simplex of MC elements.

    With ``pin`` (an m-simplex), the construction is a section through
    (horn_of(pin, j), pin): feeding the pin's own horn returns the pin.
    """
    ok, _ = is_nilpotent(L)
    if not ok:
        raise NotNilpotentError("fill_horn needs a nilpotent algebra")
    expected = [k for k in range(m + 1) if k != j]
    if sorted(horn) != expected:
        raise IncompatibleHornError(f"horn needs facets {expected}, got {sorted(horn)}")
    ce_old = ce_differential(L)
    if check:
        for k, xk in horn.items():
            if xk.m != m - 1:
                raise IncompatibleHornError(f"facet {k} is a {xk.m}-simplex, expected {m - 1}")
            good, rep = validate_mc(L, xk, ce=ce_old)
            if not good:
                raise IncompatibleHornError(f"facet {k} is not an MC element: {rep['generator']}")
        for g in L.basis():
            check_horn_family({k: horn[k].form(g) for k in horn}, m, j)
    if pin is not None and pin.m != m:
        raise ValueError("pin must be an m-simplex")

    Lp, to_new, to_old, layers = adapted_basis(L)
    ce = ce_differential(Lp)
    facets = {k: _convert(horn[k].forms, L, to_new, m - 1, Lp) for k in horn}
    pin_forms = _convert(pin.forms, L, to_new, m, Lp) if pin is not None else None
    pin_facets = None
    if pin is not None:
        pin_facets = {k: {g: f.pullback(coface(m, k)) for g, f in pin_forms.items()}
                      for k in horn}

    phi: dict = {}
    unary_into_0 = any(len(key) == 1 and key[0][0] == 1 for key in Lp.brackets)
    gauge_stage = use_gauge and Lp.dim(0) > 0 and not unary_into_0 and _lie_degree0(Lp)
    if gauge_stage:
        phi.update(_fill_degree0(Lp, facets, m, j, pin, pin_forms))
    for g in _layers_order(layers, gauge_stage):
        beta = evaluate_ce(ce, ce.table.get(ce.position[g], {}), phi, m)
        fam = {k: facets[k].get(g, PolyForm.zero(m - 1)) for k in horn}
        p = None
        if pin is not None:
            p = ({k: pin_facets[k].get(g, PolyForm.zero(m - 1)) for k in horn},
                 pin_forms.get(g, PolyForm.zero(m)))
        ext = horn_extend_form(fam, m, j, beta, pin=p, check=False)
        if not ext.is_zero():
            phi[g] = ext
    forms = _convert(phi, Lp, to_old, m, L)
    x = MCElement(L, m, forms)
    if check:
        good, rep = validate_mc(L, x, ce=ce_old)
        if not good:
            raise ArithmeticError(f"filler failed the MC equation at {rep['generator']}")
    return x


def _lie_degree0(L) -> bool:
    try:
        _check_lie_nilpotent(LieOps(L))
    except NotNilpotentError:
        return False
    return True


def _fill_degree0(Lp, facets, m, j, pin, pin_forms):
    """Gauge stage: extend log-coordinate gauges from the horn, then differentiate."""
    d0 = Lp.dim(0)
    gauges = {}
    for k, forms in facets.items():
        xk = MCElement(Lp, m - 1, forms)
        base = j if j < k else j - 1
        gauges[k] = integrate_nilpotent_gauge(Lp, xk, base=base, check=False).u
    pin_u = None
    if pin is not None:
        xp = MCElement(Lp, m, pin_forms)
        pin_u = integrate_nilpotent_gauge(Lp, xp, base=j, check=False).u
    ubar = []
    for c in range(d0):
        fam = {k: gauges[k][c] for k in facets}
        p = None
        if pin_u is not None:
            p = ({k: pin_u[c].pullback(coface(m, k)) for k in facets}, pin_u[c])
        ubar.append(horn_extend_form(fam, m, j, None, pin=p, check=False))
    alpha = mc_form_of_gauge(LieOps(Lp), ubar)
    return {(0, c): a for c, a in enumerate(alpha) if not a.is_zero()}


def compose_edges(L: LInftyAlgebra, a: MCElement, b: MCElement) -> MCElement:
    """Composite 1-simplex: fill Lambda[2,1] with d_2 = a, d_0 = b and read d_1."""
    if a.m != 1 or b.m != 1:
        raise ValueError("compose_edges takes two 1-simplices")
    return face(fill_horn(L, {0: b, 2: a}, 2, 1), 1)


def edge_endpoint(L: LInftyAlgebra, e: MCElement):
    """Log-coordinate holonomy u(1) of a 1-simplex, transported from vertex 0."""
    return integrate_nilpotent_gauge(L, e, base=0).at_vertex(1)
