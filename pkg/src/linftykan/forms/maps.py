"""Affine maps between standard simplices, given by images of vertices."""
from __future__ import annotations

from fractions import Fraction

from ..gradedlin import simplify
from .polyform import PolyForm

__all__ = ["AffineSimplexMap", "coface", "codegeneracy", "vertex_map", "horn_projection",
           "facet_projection"]


class AffineSimplexMap:
    """Affine map Delta^source_dim -> Delta^target_dim.

    ``points[v]`` holds the barycentric coordinates (target_dim + 1 entries,
    summing to 1) of the image of vertex v.
    """

    def __init__(self, source_dim: int, target_dim: int, points):
        pts = [[simplify(Fraction(x) if isinstance(x, int) else x) for x in p] for p in points]
        if len(pts) != source_dim + 1:
            raise ValueError(f"need {source_dim + 1} vertex images, got {len(pts)}")
        for p in pts:
            if len(p) != target_dim + 1:
                raise ValueError("vertex image has wrong number of barycentric coordinates")
            if simplify(sum(p, Fraction(0))) != 1:
                raise ValueError(f"barycentric coordinates {p} do not sum to 1")
        self.source_dim = source_dim
        self.target_dim = target_dim
        self.points = pts

    def images(self, nparams: int = 0):
        """Target coordinates t_1..t_m as affine 0-forms on the source."""
        m = self.source_dim
        out = []
        P0 = self.points[0]
        for i in range(1, self.target_dim + 1):
            f = PolyForm.constant(m, P0[i], nparams)
            for w in range(1, m + 1):
                c = simplify(self.points[w][i] - P0[i])
                if c != 0:
                    f = f + PolyForm.var(m, w, nparams).scale(c)
            out.append(f)
        return out

    def compose(self, inner: "AffineSimplexMap") -> "AffineSimplexMap":
        """self after inner."""
        if inner.target_dim != self.source_dim:
            raise ValueError("maps do not compose")
        pts = []
        for p in inner.points:
            q = [Fraction(0)] * (self.target_dim + 1)
            for w, coef in enumerate(p):
                if coef != 0:
                    q = [simplify(a + coef * b) for a, b in zip(q, self.points[w])]
            pts.append(q)
        return AffineSimplexMap(inner.source_dim, self.target_dim, pts)

    def apply(self, bary):
        out = [Fraction(0)] * (self.target_dim + 1)
        for w, coef in enumerate(bary):
            out = [a + coef * b for a, b in zip(out, self.points[w])]
        return out

    def __eq__(self, other):
        return (isinstance(other, AffineSimplexMap) and self.points == other.points
                and self.source_dim == other.source_dim)

    def __repr__(self):
        return f"AffineSimplexMap({self.source_dim}->{self.target_dim}, {self.points})"


def vertex_map(source_dim: int, target_dim: int, verts) -> AffineSimplexMap:
    pts = [[Fraction(int(i == v)) for i in range(target_dim + 1)] for v in verts]
    return AffineSimplexMap(source_dim, target_dim, pts)


def coface(m: int, i: int) -> AffineSimplexMap:
    """delta^i : Delta^{m-1} -> Delta^m skipping vertex i."""
    if not 0 <= i <= m:
        raise IndexError(f"face index {i} out of range for Delta^{m}")
    return vertex_map(m - 1, m, [v if v < i else v + 1 for v in range(m)])


def codegeneracy(m: int, i: int) -> AffineSimplexMap:
    """sigma^i : Delta^{m+1} -> Delta^m repeating vertex i."""
    if not 0 <= i <= m:
        raise IndexError(f"degeneracy index {i} out of range for Delta^{m}")
    return vertex_map(m + 1, m, [v if v <= i else v - 1 for v in range(m + 2)])


def horn_projection(m: int, j: int, I) -> AffineSimplexMap:
    """p_I : Delta^m -> Delta^m sending the vertices in I to vertex j."""
    I = set(I)
    return vertex_map(m, m, [j if v in I else v for v in range(m + 1)])


def facet_projection(m: int, j: int, I):
    """(k, map Delta^m -> Delta^{m-1}) with p_I factoring through facet k."""
    I = set(I)
    others = sorted(I - {j})
    if j not in I or not others:
        raise ValueError("I must contain j and another vertex")
    k = others[0]
    verts = []
    for v in range(m + 1):
        w = j if v in I else v
        verts.append(w if w < k else w - 1)
    return k, vertex_map(m, m - 1, verts)
