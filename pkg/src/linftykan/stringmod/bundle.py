"""Circle-bundle cocycle model over 2-simplices of maps into SU(2).

A 2-simplex carries edge maps (up to left translation) and a fiber
coordinate b in R/Z.  A 3-simplex with filling f is valid when the
alternating sum of the b's of its faces equals the period of f mod 1.
"""
from __future__ import annotations

import json

import numpy as np

from .periods import SU2Map, builtin_map, cartan_period, integrate_3form, prism_cells
from .quaternion import qconj, qmul

__all__ = ["BundleTwoSimplex", "EdgeIncompatibilityError", "BoundaryNotFixedError",
           "cocycle_check", "class_equal", "prism_period", "bundled_tetra_datum",
           "edge_of", "tetra_faces_from_filling", "load_tetra", "tetra_to_json"]

_ONE = np.array([1.0, 0.0, 0.0, 0.0])
_SAMPLES = np.linspace(0.0, 1.0, 9)


class EdgeIncompatibilityError(ValueError):
    pass


class BoundaryNotFixedError(ValueError):
    pass


def _relative(values):
    """g_0^{-1} g_s along a sampled path: the class of the path modulo left translation."""
    return qmul(qconj(np.broadcast_to(values[0], values.shape)), values)


class BundleTwoSimplex:
    """Edge maps e0 (1 -> 2), e1 (0 -> 2), e2 (0 -> 1) on [0, 1] and b in [0, 1).

    Edge maps are callables from an array of parameters (k,) to quaternions (k, 4).
    """

    def __init__(self, edges, b: float, tol: float = 1e-9):
        if len(edges) != 3:
            raise ValueError("a 2-simplex has three edges")
        self.edges = list(edges)
        self.b_raw = float(b)
        self.b = self.b_raw % 1.0
        self._check_vertices(tol)

    def _check_vertices(self, tol):
        e0, e1, e2 = (np.asarray(e(np.array([0.0, 1.0])), float) for e in self.edges)
        # compare vertex values after moving every edge to start at the identity
        # along e2, then e0: the endpoint must agree with the endpoint of e1
        loop = qmul(qmul(qconj(e2[0]), e2[1]), qmul(qconj(e0[0]), e0[1]))
        direct = qmul(qconj(e1[0]), e1[1])
        if np.linalg.norm(loop - direct) > tol:
            raise EdgeIncompatibilityError("edges do not close up at the vertices")

    def sampled_edges(self):
        return [np.asarray(e(_SAMPLES), float) for e in self.edges]

    def same_edges(self, other: "BundleTwoSimplex", tol: float = 1e-9) -> bool:
        return all(np.max(np.abs(_relative(a) - _relative(b))) <= tol
                   for a, b in zip(self.sampled_edges(), other.sampled_edges()))

    def shifted(self, db: float) -> "BundleTwoSimplex":
        return BundleTwoSimplex(self.edges, self.b_raw + db)

    def __repr__(self):
        return f"BundleTwoSimplex(b={self.b:.6g})"


def edge_of(f: SU2Map, a: int, c: int):
    """Restriction of a map on Delta^3 to the edge from vertex a to vertex c."""
    verts = np.vstack([np.zeros(3), np.eye(3)])

    def e(s):
        s = np.asarray(s, float)[:, None]
        return f((1 - s) * verts[a] + s * verts[c])
    return e


def _face_vertices(i: int):
    return [v for v in range(4) if v != i]


def tetra_faces_from_filling(f: SU2Map, bs) -> list:
    faces = []
    for i, b in enumerate(bs):
        p, q, r = _face_vertices(i)
        faces.append(BundleTwoSimplex([edge_of(f, q, r), edge_of(f, p, r), edge_of(f, p, q)], b))
    return faces


def _check_faces_against(f: SU2Map, faces, tol: float):
    for i, face in enumerate(faces):
        p, q, r = _face_vertices(i)
        expect = [edge_of(f, q, r), edge_of(f, p, r), edge_of(f, p, q)]
        for k, (got, want) in enumerate(zip(face.sampled_edges(), expect)):
            if np.max(np.abs(_relative(got) - _relative(np.asarray(want(_SAMPLES))))) > tol:
                raise EdgeIncompatibilityError(f"face {i}, edge {k} does not match the filling map")


def _dist_to_z(x: float) -> float:
    return abs(x - round(x))


def cocycle_check(faces, filling: SU2Map, order: int = 12, tol: float = 1e-8) -> dict:
    """Defect of b_0 - b_1 + b_2 - b_3 against the period of the filling, mod 1."""
    if len(faces) != 4:
        raise ValueError("a tetrahedron has four faces")
    _check_faces_against(filling, faces, tol)
    period = cartan_period(filling, order)
    alt = sum((-1) ** i * face.b_raw for i, face in enumerate(faces))
    return {"alternating_sum": alt, "period": period, "defect": _dist_to_z(alt - period),
            "order": order}


def prism_period(F: SU2Map, order: int = 12) -> float:
    """Integral of F^* eta over Delta^2 x [0, 1] in coordinates (t1, t2, s)."""
    return integrate_3form(F, prism_cells(), order)


def class_equal(x: BundleTwoSimplex, y: BundleTwoSimplex, homotopy: SU2Map | None = None,
                order: int = 12, tol: float = 1e-2) -> bool:
    """Whether (f0, b_x) and (f1, b_y) agree in the circle bundle.

    ``homotopy`` maps (t1, t2, s) to SU(2) and must be constant in s on the
    boundary of Delta^2; None means the constant homotopy.
    """
    if not x.same_edges(y):
        raise EdgeIncompatibilityError("the two 2-simplices have different edge data")
    if homotopy is None:
        period = 0.0
    else:
        _check_boundary_fixed(homotopy)
        period = prism_period(homotopy, order)
    return _dist_to_z(period - (y.b_raw - x.b_raw)) < tol


def _check_boundary_fixed(F: SU2Map, tol: float = 1e-9):
    s = np.linspace(0.0, 1.0, 7)
    u = np.linspace(0.0, 1.0, 7)
    edges = [np.stack([u, 1 - u], -1), np.stack([np.zeros_like(u), u], -1), np.stack([u, np.zeros_like(u)], -1)]
    for e in edges:
        base = F(np.concatenate([e, np.zeros((len(u), 1))], -1))
        for sv in s[1:]:
            val = F(np.concatenate([e, np.full((len(u), 1), sv)], -1))
            if np.max(np.abs(val - base)) > tol:
                raise BoundaryNotFixedError("homotopy moves the boundary of the 2-simplex")


def bundled_tetra_datum(b=(1.0, 0.0, 0.0, 0.0)):
    """Degree-1 filling with identity edges and the given fiber coordinates."""
    f = builtin_map("degree1")
    return tetra_faces_from_filling(f, b), f


def _constant_edge(s):
    return np.tile(_ONE, (len(np.atleast_1d(s)), 1))


def tetra_to_json(filling: str, bs) -> dict:
    return {"schema": 1, "kind": "bundle_tetra", "filling": filling, "b": [float(v) for v in bs]}


def load_tetra(doc_or_path):
    """Read a tetrahedron datum: a named built-in filling and four b values."""
    doc = doc_or_path
    if not isinstance(doc, dict):
        with open(doc_or_path) as fh:
            doc = json.load(fh)
    if doc.get("kind") != "bundle_tetra":
        raise ValueError("not a bundle_tetra document")
    f = builtin_map(doc["filling"])
    if "edges" in doc and doc["edges"] == "identity":
        faces = [BundleTwoSimplex([_constant_edge] * 3, b) for b in doc["b"]]
    else:
        faces = tetra_faces_from_filling(f, doc["b"])
    return faces, f
