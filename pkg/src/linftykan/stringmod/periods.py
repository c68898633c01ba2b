"""Maps of simplices into SU(2) and quadrature periods of the pulled-back Cartan 3-form.

With theta = f^{-1} df, the pullback of eta = (c/6) <[theta, theta], theta>
to coordinates (u0, u1, u2) is c <[B0, B1], B2> du0 du1 du2 with
B_i = f^{-1} d_i f.  The constant c is fixed by requiring the integral of eta
over SU(2) = S^3 (oriented as the boundary of the unit ball in H) to be 1.

Integrals over a simplex are split into cones from the barycenter, each
parametrized by the unit cube; the degree-1 models below are smooth on every
cone, so tensor Gauss rules converge spectrally.
"""
from __future__ import annotations

import json
import math
from functools import lru_cache

import numpy as np

from .quaternion import NonUnitQuaternionError, bracket, imag, pairing0, qconj, qexp, qmul

__all__ = ["SU2Map", "NonFiniteSampleError", "cartan_period", "calibrate", "CALIBRATION",
           "constant_map", "degree1", "degree1_reversed", "concat_map", "builtin_map",
           "pullback_density", "integrate_3form", "simplex_cones", "prism_cells",
           "radial_primitive", "mc_pair_residual", "table_map", "sample_table", "load_table",
           "simplex_step", "DIFF_STEP"]

DIFF_STEP = 1e-4

# Calibration: the base pairing X.Y on imaginary quaternions gives
# <[A1, A2], A3> = 2 (A1 x A2) . A3, whose integral over the unit S^3 is
# 2 * vol(S^3) = 4 pi^2, so c = 1 / (4 pi^2).  calibrate() re-derives this
# by quadrature; tests compare the two.
CALIBRATION = 1.0 / (4.0 * math.pi ** 2)


class NonFiniteSampleError(ValueError):
    pass


class SU2Map:
    """A map from (a parameter domain of dimension m) to unit quaternions.

    ``fn`` takes an array (..., m) of coordinates and returns (..., 4).
    """

    def __init__(self, fn, m: int = 3, name: str = "", boundary_identity: bool = False):
        self.fn = fn
        self.m = m
        self.name = name
        self.boundary_identity = boundary_identity

    def __call__(self, T, check: bool = True):
        T = np.asarray(T, float)
        Q = np.asarray(self.fn(T), float)
        if check:
            if not np.all(np.isfinite(Q)):
                raise NonFiniteSampleError(f"{self.name}: non-finite sample")
            dev = np.max(np.abs(np.linalg.norm(Q, axis=-1) - 1.0)) if Q.size else 0.0
            if dev > 1e-12:
                raise NonUnitQuaternionError(f"{self.name}: |f| deviates from 1 by {dev:.2e}")
        return Q

    def left_translate(self, g) -> "SU2Map":
        g = np.asarray(g, float)
        return SU2Map(lambda T: qmul(np.broadcast_to(g, T.shape[:-1] + (4,)), self.fn(T)),
                      self.m, f"g.{self.name}", self.boundary_identity)

    def precompose(self, phi, m: int, name: str = "") -> "SU2Map":
        return SU2Map(lambda T: self.fn(phi(T)), m, name or self.name)

    def boundary_deviation(self, n: int = 7) -> float:
        """Max distance from 1 over sample points on the boundary of Delta^3."""
        pts = []
        grid = [(a, b) for a in range(n + 1) for b in range(n + 1 - a)]
        for face in range(4):
            for a, b in grid:
                c = n - a - b
                bary = [a / n, b / n, c / n]
                full = bary[:face] + [0.0] + bary[face:]
                pts.append(full[1:])
        Q = self(np.array(pts))
        return float(np.max(np.linalg.norm(Q - np.array([1.0, 0, 0, 0]), axis=-1)))


# --- quadrature ----------------------------------------------------------------

@lru_cache(maxsize=32)
def _gauss01(order: int):
    x, w = np.polynomial.legendre.leggauss(order)
    return (x + 1) / 2, w / 2


def _cube_rule(order: int, dim: int = 3):
    x, w = _gauss01(order)
    grids = np.meshgrid(*([x] * dim), indexing="ij")
    weights = np.ones_like(grids[0])
    wg = np.meshgrid(*([w] * dim), indexing="ij")
    for g in wg:
        weights = weights * g
    return np.stack([g.ravel() for g in grids], axis=-1), weights.ravel()


def simplex_cones(m: int):
    """Cones from the barycenter of Delta^m, as maps from [0,1]^m.

    Each facet is split into m triangles around its centroid, with the Duffy
    collapse at the centroid: the solid angle seen from the barycenter peaks
    there, and the collapse factor smooths the peak out.

    Returns a list of (phi, sign) with phi(U) -> coordinates (t_1..t_m) and
    sign the orientation of phi relative to dt_1 ... dt_m.
    """
    verts = np.vstack([np.zeros(m), np.eye(m)])
    bary = verts.mean(axis=0)
    cones = []
    for face in range(m + 1):
        facet = verts[[v for v in range(m + 1) if v != face]]
        centre = facet.mean(axis=0)
        pieces = [facet] if m == 1 else [np.vstack([centre, np.delete(facet, k, axis=0)])
                                         for k in range(m)]
        for P in pieces:
            def phi(U, P=P):
                s = U[..., :1]
                rest = np.ones(U.shape[:-1] + (1,))
                # Duffy: y = P0 + v1 (P1 - P0) + v1 v2 (P2 - P1) + ...
                y = P[0] * rest
                prod = rest.copy()
                for k in range(1, m):
                    prod = prod * U[..., k:k + 1]
                    y = y + prod * (P[k] - P[k - 1])
                return bary + s * (y - bary)
            cones.append(phi)
    out = []
    probe = np.full((1, m), 0.37)
    probe[0, 1:] = np.linspace(0.3, 0.6, m - 1) if m > 1 else probe[0, 1:]
    for phi in cones:
        J = _numeric_jacobian(phi, probe)[0]
        out.append((phi, float(np.sign(np.linalg.det(J)))))
    return out


def prism_cells():
    """Delta^2 x [0,1] with coordinates (t1, t2, s): cones of Delta^2 times the interval."""
    cells = []
    for phi, sign in simplex_cones(2):
        def psi(U, phi=phi):
            return np.concatenate([phi(U[..., :2]), U[..., 2:3]], axis=-1)
        cells.append((psi, sign))
    return cells


def _numeric_jacobian(phi, U, h=1e-6):
    cols = []
    for i in range(U.shape[-1]):
        e = np.zeros(U.shape[-1])
        e[i] = h
        cols.append((phi(U + e) - phi(U - e)) / (2 * h))
    return np.stack(cols, axis=-1)


def _mc_components(F, U, h=DIFF_STEP):
    """B_i = imag(f^{-1} d_i f) at U by fourth-order central differences.

    ``h`` may be an array of per-point steps with shape U.shape[:-1] + (1,).
    """
    f = F(U)
    fi = qconj(f)
    Bs = []
    h = np.asarray(h, float)
    for i in range(U.shape[-1]):
        e = np.zeros(U.shape[-1])
        e[i] = 1.0
        e = h * e
        df = (-F(U + 2 * e) + 8 * F(U + e) - 8 * F(U - e) + F(U - 2 * e)) / (12 * h)
        Bs.append(imag(qmul(fi, df)))
    return Bs


def simplex_step(T):
    """Difference steps that keep each stencil inside one barycentric cone of Delta^3.

    The radial models are only piecewise smooth across the planes where the
    two smallest barycentric coordinates agree, and vary fast near the barycenter.
    """
    T = np.asarray(T, float)
    bary = np.concatenate([1.0 - T.sum(axis=-1, keepdims=True), T], axis=-1)
    srt = np.sort(bary, axis=-1)
    gap = srt[..., 1] - srt[..., 0]
    r = np.linalg.norm(T - _BARY3, axis=-1)  # the models also curve on the scale of r
    return np.clip(np.minimum(gap / 8.0, r / 100.0), 1e-7, DIFF_STEP)[..., None]


def pullback_density(F, U, c: float = CALIBRATION, h=DIFF_STEP):
    """Coefficient of du0 du1 du2 in the pullback of eta along F at points U (..., 3)."""
    B0, B1, B2 = _mc_components(F, U, h)
    return c * pairing0(bracket(B0, B1), B2)


def integrate_3form(F, cells, order: int = 12, c: float = CALIBRATION, step=None) -> float:
    """Sum over cells of sign * integral of F∘phi^* eta over the unit cube.

    ``step(T)`` gives per-point difference steps from the image points; the
    cube-coordinate step is halved since the cone maps stretch by at most 2.
    """
    U, W = _cube_rule(order)
    total = 0.0
    for phi, sign in cells:
        G = lambda X, phi=phi: F(phi(X))
        h = DIFF_STEP if step is None else 0.5 * step(phi(U))
        total += sign * float(np.dot(W, pullback_density(G, U, c, h)))
    return total


def cartan_period(f: SU2Map, order: int = 12, c: float = CALIBRATION) -> float:
    """Integral over Delta^3 of f^* eta."""
    if f.m != 3:
        raise ValueError("cartan_period needs a map on Delta^3")
    return integrate_3form(f, simplex_cones(3), order, c, simplex_step)


def calibrate(order: int = 24) -> dict:
    """Integrate the base 3-form over S^3 and return the normalizing constant."""
    lo = np.array([0.0, 0.0, 0.0])
    hi = np.array([math.pi, math.pi, 2 * math.pi])

    def sphere(U):
        X = lo + U * (hi - lo)
        psi, th, ph = X[..., 0], X[..., 1], X[..., 2]
        return np.stack([np.cos(psi), np.sin(psi) * np.cos(th),
                         np.sin(psi) * np.sin(th) * np.cos(ph),
                         np.sin(psi) * np.sin(th) * np.sin(ph)], axis=-1)

    # orientation of the chart against the outward normal
    p = np.array([[0.4, 0.45, 0.3]])
    q = sphere(p)[0]
    J = _numeric_jacobian(sphere, p)[0]
    sign = float(np.sign(np.linalg.det(np.column_stack([q, J]))))
    raw = integrate_3form(sphere, [(lambda U: U, sign)], order, c=1.0)
    return {"raw_integral": raw, "constant": 1.0 / raw, "stored": CALIBRATION,
            "calibrated_total": raw * CALIBRATION, "order": order}


# --- built-in maps ----------------------------------------------------------------

_BARY3 = np.full(3, 0.25)


def constant_map(g=(1.0, 0.0, 0.0, 0.0), m: int = 3) -> SU2Map:
    g = np.asarray(g, float)
    return SU2Map(lambda T: np.broadcast_to(g, T.shape[:-1] + (4,)).copy(), m, "constant",
                  bool(np.allclose(g, [1, 0, 0, 0])))


def _radial(T, k: int):
    T = np.asarray(T, float)
    bary = np.concatenate([1.0 - T.sum(axis=-1, keepdims=True), T], axis=-1)
    rho = 1.0 - 4.0 * bary.min(axis=-1)
    v = T - _BARY3
    r = np.linalg.norm(v, axis=-1, keepdims=True)
    n = v / np.where(r > 0, r, 1.0)
    q = qexp(math.pi * k * rho[..., None] * n)
    return q if k % 2 == 0 else -q


def concat_map(k: int) -> SU2Map:
    """k concentric copies of the degree-1 model (radial parameter sped up k times)."""
    return SU2Map(lambda T: _radial(T, _DEGREE_SIGN * k), 3, f"concat-{k}", True)


def degree1() -> SU2Map:
    return SU2Map(lambda T: _radial(T, _DEGREE_SIGN), 3, "degree1", True)


def degree1_reversed() -> SU2Map:
    return SU2Map(lambda T: _radial(T[..., [1, 0, 2]], _DEGREE_SIGN), 3, "degree1-reversed", True)


# exp(pi rho n) has degree +1 for the boundary-of-ball orientation of S^3
_DEGREE_SIGN = 1


def builtin_map(name: str) -> SU2Map:
    if name == "constant":
        return constant_map()
    if name == "degree1":
        return degree1()
    if name == "degree1-reversed":
        return degree1_reversed()
    if name.startswith("concat-"):
        return concat_map(int(name.split("-", 1)[1]))
    raise KeyError(f"unknown built-in map {name!r}")


# --- sampled maps ---------------------------------------------------------------------

def sample_table(f: SU2Map, n: int) -> dict:
    """Values of f on the grid t = (a, b, c) / n, a + b + c <= n."""
    pts = [(a, b, c) for a in range(n + 1) for b in range(n + 1 - a) for c in range(n + 1 - a - b)]
    Q = f(np.array(pts, float) / n)
    return {"schema": 1, "kind": "su2_table", "m": 3, "n": n,
            "values": [[a, b, c] + [float(x) for x in q] for (a, b, c), q in zip(pts, Q)]}


def table_map(doc: dict, name: str = "table") -> SU2Map:
    """Piecewise-linear interpolation on the Freudenthal subdivision, renormalized.

    In cumulative coordinates u = (t1, t1 + t2, t1 + t2 + t3) the simplex is
    0 <= u1 <= u2 <= u3 <= 1 and the grid cells are Kuhn simplices.
    """
    n = int(doc["n"])
    vals = {}
    for row in doc["values"]:
        a, b, c = (int(x) for x in row[:3])
        vals[(a, a + b, a + b + c)] = np.asarray(row[3:7], float)
    table = np.zeros((n + 1, n + 1, n + 1, 4))
    mask = np.zeros((n + 1, n + 1, n + 1), bool)
    for key, v in vals.items():
        table[key] = v
        mask[key] = True

    def fn(T):
        T = np.asarray(T, float)
        shape = T.shape[:-1]
        U = np.cumsum(T.reshape(-1, 3), axis=-1) * n
        U = np.clip(U, 0, n)
        base = np.minimum(np.floor(U).astype(int), n - 1)
        frac = U - base
        order = np.argsort(-frac, axis=-1, kind="stable")
        out = np.zeros((U.shape[0], 4))
        cur = base.copy()
        fs = np.take_along_axis(frac, order, axis=-1)
        weights = [1.0 - fs[:, 0], fs[:, 0] - fs[:, 1], fs[:, 1] - fs[:, 2], fs[:, 2]]
        idx = cur.copy()
        out += weights[0][:, None] * table[idx[:, 0], idx[:, 1], idx[:, 2]]
        for k in range(3):
            idx[np.arange(len(idx)), order[:, k]] += 1
            out += weights[k + 1][:, None] * table[idx[:, 0], idx[:, 1], idx[:, 2]]
        out /= np.linalg.norm(out, axis=-1, keepdims=True)
        return out.reshape(shape + (4,))
    if not mask[tuple(np.array([(i, j, k) for i in range(n + 1) for j in range(i, n + 1)
                                for k in range(j, n + 1)]).T)].all():
        raise ValueError("table is missing grid values")
    return SU2Map(fn, 3, name)


def load_table(path) -> SU2Map:
    with open(path) as fh:
        return table_map(json.load(fh), name=str(path))


# --- primitives and residuals ---------------------------------------------------------

def radial_primitive(f: SU2Map, order: int = 16, c: float = CALIBRATION):
    """beta = K(f^* eta) for the cone from the barycenter, as a function T -> (b12, b13, b23).

    For a top-degree form g dt123, K gives int_0^1 l^2 g(b + l (t - b)) dl times
    the contraction of dt123 with t - b.
    """
    x, w = _gauss01(order)

    def beta(T):
        T = np.atleast_2d(np.asarray(T, float))
        v = T - _BARY3
        P = _BARY3 + x[None, :, None] * v[:, None, :]
        X = P.reshape(-1, 3)
        g = pullback_density(f, X, c, simplex_step(X)).reshape(P.shape[:2])
        s = (g * (x ** 2)[None, :]) @ w
        # i_v (dt1 dt2 dt3) = v1 dt2dt3 - v2 dt1dt3 + v3 dt1dt2
        return np.stack([s * v[:, 2], -s * v[:, 1], s * v[:, 0]], axis=-1)
    return beta


def mc_pair_residual(f: SU2Map, beta, order: int = 6, c: float = CALIBRATION, h: float | None = None):
    """Max over cone quadrature nodes of |d beta - f^* eta| (coefficients of dt123).

    ``beta`` maps points (K, 3) to the components (b12, b13, b23).  Without
    ``h`` the difference step is chosen per point to stay inside one cone.
    """
    U, _ = _cube_rule(order)
    worst = 0.0
    for phi, _sign in simplex_cones(3):
        T = phi(U)
        eta = pullback_density(f, T, c, simplex_step(T))
        step = simplex_step(T) / 2 if h is None else np.full((len(T), 1), h)
        d = np.zeros(len(T))
        for i, (comp, sgn) in enumerate([(2, 1.0), (1, -1.0), (0, 1.0)]):
            e = np.zeros(3)
            e[i] = 1.0
            e = step * e
            b = lambda k: beta(T + k * e)[:, comp]
            d += sgn * (-b(2) + 8 * b(1) - 8 * b(-1) + b(-2)) / (12 * step[:, 0])
        worst = max(worst, float(np.max(np.abs(d - eta))))
    return worst
