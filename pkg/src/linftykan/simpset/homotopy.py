"""Homotopy groups of finite reduced Kan sets and their Moore / Duskin truncations."""
from __future__ import annotations

import itertools

from .core import FinSimplicialSet, NotKanError
from .examples import FiniteGroup

__all__ = ["pi_n", "HomotopyGroup", "truncate_simpset", "relative_homotopy_classes"]


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)

    def classes(self):
        out = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return [sorted(v) for _, v in sorted(out.items())]


class HomotopyGroup(FiniteGroup):
    """pi_n as a finite group whose elements are classes of spherical n-simplices."""

    def __init__(self, n, classes, table, identity):
        super().__init__(table, names=[str(c[0]) for c in classes], identity=identity)
        self.degree = n
        self.classes = classes

    def __repr__(self):
        return f"pi_{self.degree}(order={self.n})"


def _spherical(X: FinSimplicialSet, n: int):
    star = X.base(n - 1)
    return [x for x in range(X.size(n)) if all(f == star for f in X.faces[n][x])]


def pi_n(X: FinSimplicialSet, n: int, check_well_defined: bool = True) -> HomotopyGroup:
    """Spherical n-simplices modulo y with d_0 y = x, d_1 y = x', d_i y = * (i > 1).

    The product [x][x'] is [d_1 w] for w with d_0 w = x, d_2 w = x' and the
    other faces at the base point (a filler of Lambda[n+1, 1]).
    """
    if n < 1:
        raise ValueError("pi_n needs n >= 1")
    if not X.reduced:
        raise ValueError("pi_n needs a reduced simplicial set")
    X = X.extended(n + 1)
    ok, bad = X.is_kan(n + 1)
    if not ok:
        raise NotKanError(f"not Kan: unfillable horn {bad}")
    cycles = _spherical(X, n)
    star_n = X.base(n)
    uf = _UnionFind(cycles)
    cyc = set(cycles)
    for y, fs in enumerate(X.faces[n + 1]):
        if all(fs[i] == star_n for i in range(2, n + 2)) and fs[0] in cyc and fs[1] in cyc:
            uf.union(fs[0], fs[1])
    classes = uf.classes()
    cls_of = {x: k for k, c in enumerate(classes) for x in c}
    table = [[None] * len(classes) for _ in classes]
    for w, fs in enumerate(X.faces[n + 1]):
        if any(fs[i] != star_n for i in range(3, n + 2)):
            continue
        if fs[0] not in cyc or fs[2] not in cyc:
            continue
        a, b = cls_of[fs[0]], cls_of[fs[2]]
        c = cls_of.get(fs[1])
        if c is None:
            raise ArithmeticError("product filler has a non-spherical face")
        if table[a][b] is None:
            table[a][b] = c
        elif table[a][b] != c:
            if check_well_defined:
                raise ArithmeticError("pi_n product depends on the chosen filler")
    if any(v is None for row in table for v in row):
        raise NotKanError("missing product fillers")
    return HomotopyGroup(n, [[X.keys[n][x] for x in c] for c in classes], table, cls_of[star_n])


def relative_homotopy_classes(X: FinSimplicialSet, n: int):
    """Classes of X_n under homotopy rel boundary: z in X_{n+1} with d_n z = x,
    d_{n+1} z = x' and d_i z = s_{n-1} d_i x for i < n."""
    uf = _UnionFind(range(X.size(n)))
    if n == 0:
        for y, fs in enumerate(X.faces[1]):
            uf.union(fs[0], fs[1])
        return uf
    for z, fs in enumerate(X.faces[n + 1]):
        x, x2 = fs[n], fs[n + 1]
        fx = X.faces[n][x]
        if X.faces[n][x2] != fx:
            continue
        if all(fs[i] == X.degens[n - 1][fx[i]][n - 1] for i in range(n)):
            uf.union(x, x2)
    return uf


def _quotient(X: FinSimplicialSet, signature, name: str) -> FinSimplicialSet:
    """Quotient by per-dimension signatures compatible with faces and degeneracies."""
    keys, rep = [], []
    for m in range(X.N + 1):
        seen = {}
        for x in range(X.size(m)):
            s = signature(m, x)
            if s not in seen:
                seen[s] = len(seen)
        keys.append(list(seen))
        rep.append(seen)
    first = [{} for _ in range(X.N + 1)]
    for m in range(X.N + 1):
        for x in range(X.size(m)):
            first[m].setdefault(rep[m][signature(m, x)], x)
    faces = [[]]
    for m in range(1, X.N + 1):
        row = []
        for k in range(len(keys[m])):
            x = first[m][k]
            row.append(tuple(rep[m - 1][signature(m - 1, f)] for f in X.faces[m][x]))
        faces.append(row)
    degens = []
    for m in range(X.N):
        row = []
        for k in range(len(keys[m])):
            x = first[m][k]
            row.append(tuple(rep[m + 1][signature(m + 1, s)] for s in X.degens[m][x]))
        degens.append(row)
    Q = FinSimplicialSet(keys, faces, degens, name=name)
    # faces of every member must agree with the representative's
    for m in range(1, X.N + 1):
        for x in range(X.size(m)):
            k = rep[m][signature(m, x)]
            if tuple(rep[m - 1][signature(m - 1, f)] for f in X.faces[m][x]) != faces[m][k]:
                raise ArithmeticError("truncation relation is not simplicial")
    return Q


def truncate_simpset(X: FinSimplicialSet, n: int, mode: str = "le") -> FinSimplicialSet:
    """Postnikov truncation: "le" (Duskin, homotopy rel skeleton) or "lt" (Moore, skeleton image)."""
    mode = {"<=": "le", "≤": "le", "<": "lt"}.get(mode, mode)
    if mode not in ("le", "lt"):
        raise ValueError("mode must be 'le' or 'lt'")
    ok, bad = X.is_kan()
    if not ok:
        raise NotKanError(f"truncation needs a Kan set; unfillable horn {bad}")
    if mode == "lt":
        k = n - 1

        def signature(m, x):
            if m <= k:
                return ("s", x)
            return tuple(X.vertex_face(m, x, S) for S in itertools.combinations(range(m + 1), k + 1))
        return _quotient(X, signature, f"tau<{n}({X.name})")
    if n >= X.N:
        return X
    uf = relative_homotopy_classes(X, n)

    def signature(m, x):
        if m < n:
            return ("s", x)
        return tuple(uf.find(X.vertex_face(m, x, S))
                     for S in itertools.combinations(range(m + 1), n + 1))
    return _quotient(X, signature, f"tau<={n}({X.name})")
