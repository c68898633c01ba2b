"""Gauge maps into the nilpotent group integrating L_0, in logarithmic coordinates.

A gauge is a polynomial u : Delta^m -> L_0 with f = exp(u) satisfying
-f^{-1} df = alpha, where alpha is the degree-0 part of an MC element.  Since
exp(-u) d exp(u) = sum_k (-1)^k/(k+1)! ad_u^k du, u is found by integrating
U' = sum_n b_n ad_U^n(-A) along straight segments from the base vertex, with
b_n the Taylor coefficients of z / (1 - e^{-z}).
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial

from ..forms import PolyForm
from ..linf import LInftyAlgebra, is_nilpotent

__all__ = ["LieOps", "NilpotentGauge", "integrate_nilpotent_gauge", "NotNilpotentError",
           "bch", "mc_form_of_gauge", "gauge_coefficients"]


class NotNilpotentError(ValueError):
    """Exact integration needs a nilpotent algebra; use the numeric string module otherwise."""


def gauge_coefficients(n: int) -> list:
    """First n Taylor coefficients of z / (1 - e^{-z})."""
    g = [Fraction((-1) ** k, factorial(k + 1)) for k in range(n)]  # (1 - e^{-z}) / z
    b = [Fraction(0)] * n
    for k in range(n):
        acc = Fraction(int(k == 0))
        for i in range(1, k + 1):
            acc -= g[i] * b[k - i]
        b[k] = acc / g[0]
    return b


class LieOps:
    """Bracket of L_0-valued forms using the binary bracket of L in degree 0."""

    def __init__(self, L: LInftyAlgebra):
        self.dim = L.dim(0)
        self.struct = []
        for key, out in L.brackets.items():
            if len(key) == 2 and key[0][0] == 0 and key[1][0] == 0:
                a, b = key[0][1], key[1][1]
                for c, f in out.items():
                    self.struct.append((a, b, c, f))
        self.algebra0 = LInftyAlgebra({0: self.dim},
                                      {((0, a), (0, b)): {c: f} for a, b, c, f in self.struct})

    def zero(self, m, nparams=0):
        return [PolyForm.zero(m, nparams) for _ in range(self.dim)]

    def bracket(self, U, V):
        """[U, V] for U a 0-form vector and V a vector of forms of any degree."""
        if not U:
            return []
        m, nparams = U[0].m, U[0].nparams
        out = [PolyForm.zero(m, nparams) for _ in range(self.dim)]
        for a, b, c, f in self.struct:
            term = U[a].wedge(V[b]) - U[b].wedge(V[a])
            if not term.is_zero():
                out[c] = out[c] + term.scale(f)
        return out

    def series(self, U, V, coeffs):
        """sum_n coeffs[n] ad_U^n V, stopping once ad_U^n V vanishes."""
        out = [v.scale(coeffs[0]) for v in V]
        cur = V
        for n in range(1, len(coeffs)):
            cur = self.bracket(U, cur)
            if all(c.is_zero() for c in cur):
                break
            if coeffs[n] != 0:
                out = [o + c.scale(coeffs[n]) for o, c in zip(out, cur)]
        return out


def _antiderivative(f: PolyForm, var: int) -> PolyForm:
    """Integral from 0 to the variable ``var`` (a 0-form in, a 0-form out)."""
    terms = {}
    for (e, I), c in f.terms.items():
        e2 = list(e)
        e2[var] += 1
        terms[(tuple(e2), I)] = c * Fraction(1, e[var] + 1)
    return PolyForm(f.m, terms, f.nparams)


def _vertex_coords(m: int, v: int):
    return [Fraction(int(i + 1 == v)) for i in range(m)]


class NilpotentGauge:
    """u : Delta^m -> L_0 (log coordinates) with u(base vertex) = 0."""

    def __init__(self, ops: LieOps, u, base: int, iterations: int = 0):
        self.ops = ops
        self.u = list(u)
        self.base = base
        self.iterations = iterations

    @property
    def m(self):
        return self.u[0].m if self.u else 0

    def mc_form(self):
        return mc_form_of_gauge(self.ops, self.u)

    def at_vertex(self, v: int):
        """Exact value of u at a vertex of Delta^m."""
        pt = _vertex_coords(self.m, v)
        return [sum(f.evaluate(pt).values(), Fraction(0)) if f.terms else Fraction(0)
                for f in self.u]

    def __repr__(self):
        return f"NilpotentGauge(base={self.base}, u={[str(c) for c in self.u]})"


def mc_form_of_gauge(ops: LieOps, u):
    """alpha = -f^{-1} df for f = exp(u)."""
    du = [c.d() for c in u]
    nmax = ops.dim + 2
    coeffs = [Fraction((-1) ** (k + 1), factorial(k + 1)) for k in range(nmax)]
    return ops.series(u, du, coeffs)


def _check_lie_nilpotent(ops: LieOps):
    from ..linf import jacobiator
    L0 = ops.algebra0
    basis = [{(0, i): Fraction(1)} for i in range(ops.dim)]
    for x in basis:
        for y in basis:
            for z in basis:
                if jacobiator(L0, x, y, z):
                    raise NotNilpotentError("degree-0 bracket is not a Lie bracket")
    ok, c = is_nilpotent(L0)
    if not ok:
        raise NotNilpotentError(
            "L_0 is not nilpotent; exact gauge integration is unavailable "
            "(see linftykan.stringmod for the numeric SU(2) path)")
    return c


def integrate_nilpotent_gauge(L: LInftyAlgebra, x, base: int = 0, check: bool = True):
    """Parallel transport of the degree-0 part of ``x`` from vertex ``base``.

    Picard iteration on straight segments b + tau (p - b); terminates after
    at most (nilpotency class + 1) rounds.  With ``check`` the identity
    -f^{-1} df = alpha is verified exactly.
    """
    ops = LieOps(L)
    c = _check_lie_nilpotent(ops)
    m = x.m
    alpha = [x.form((0, i)) for i in range(ops.dim)]
    if m == 0 or ops.dim == 0:
        return NilpotentGauge(ops, [PolyForm.zero(m) for _ in range(ops.dim)], base)
    b = _vertex_coords(m, base)
    tau = PolyForm.var(m, m + 1, 1)
    images = [PolyForm.constant(m, bi, 1) + tau.wedge(PolyForm.var(m, i + 1, 1) -
                                                      PolyForm.constant(m, bi, 1))
              for i, bi in enumerate(b)]
    field = [PolyForm.zero(m, 1)] * m + [PolyForm.constant(m, 1, 1)]
    A = [a.pullback_images(images, m, 1).contract(field).scale(-1) for a in alpha]
    coeffs = gauge_coefficients(c + 2)
    U = [PolyForm.zero(m, 1) for _ in range(ops.dim)]
    rounds = 0
    for rounds in range(1, c + 3):
        rhs = ops.series(U, A, coeffs)
        new = [_antiderivative(r, m) for r in rhs]
        if new == U:
            break
        U = new
    u = [comp.substitute_param(m, 1) for comp in U]
    gauge = NilpotentGauge(ops, u, base, rounds)
    if check:
        back = gauge.mc_form()
        if any(p != q for p, q in zip(back, alpha)):
            raise ArithmeticError("transport postcondition -f^{-1}df = alpha failed")
    return gauge


def bch(L: LInftyAlgebra, X, Y):
    """log(exp X exp Y) for vectors in a nilpotent L_0, by integrating Z' = sum b_n ad_Z^n Y."""
    ops = LieOps(L)
    c = _check_lie_nilpotent(ops)
    consts = lambda v: [PolyForm.constant(0, Fraction(a), 1) for a in v]
    Xf, Yf = consts(X), consts(Y)
    coeffs = gauge_coefficients(c + 2)
    Z = Xf
    for _ in range(c + 3):
        rhs = ops.series(Z, Yf, coeffs)
        new = [x + _antiderivative(r, 0) for x, r in zip(Xf, rhs)]
        if new == Z:
            break
        Z = new
    return [sum(z.substitute_param(0, 1).terms.values(), Fraction(0)) for z in Z]
