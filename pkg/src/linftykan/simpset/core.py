"""Finite simplicial sets truncated at a top dimension N, stored as face/degeneracy tables."""
from __future__ import annotations

from typing import Callable, Hashable, Iterable

__all__ = ["FinSimplicialSet", "NotKanError", "SimplicialIdentityError", "product"]


class NotKanError(ValueError):
    """An operation needs horn fillers that do not exist."""


class SimplicialIdentityError(ValueError):
    pass


class FinSimplicialSet:
    """X_0 .. X_N as lists of hashable keys with integer face/degeneracy tables.

    ``faces[m][x]`` is the tuple (d_0 x, ..., d_m x) of indices into X_{m-1};
    ``degens[m][x]`` is (s_0 x, ..., s_m x) as indices into X_{m+1} (m < N).
    ``coskeletal`` records a dimension c such that the object is c-coskeletal,
    so higher simplices are determined by horns; ``builder`` can rebuild the
    set at a larger N.
    """

    def __init__(self, keys, faces, degens, name: str = "", coskeletal: int | None = None,
                 builder: Callable | None = None):
        self.keys = [list(k) for k in keys]
        self.N = len(self.keys) - 1
        self.faces = faces
        self.degens = degens
        self.name = name
        self.coskeletal = coskeletal
        self.builder = builder
        self.index = [{k: i for i, k in enumerate(ks)} for ks in self.keys]
        self._horn_index = {}

    # construction --------------------------------------------------------
    @classmethod
    def build(cls, N: int, simplices: Callable[[int], Iterable[Hashable]],
              face: Callable[[Hashable, int], Hashable], degen: Callable[[Hashable, int], Hashable],
              name: str = "", coskeletal: int | None = None, rebuild: bool = True):
        keys = [list(simplices(m)) for m in range(N + 1)]
        index = [{k: i for i, k in enumerate(ks)} for ks in keys]
        faces = [[]]
        for m in range(1, N + 1):
            faces.append([tuple(index[m - 1][face(k, i)] for i in range(m + 1)) for k in keys[m]])
        degens = []
        for m in range(N):
            degens.append([tuple(index[m + 1][degen(k, i)] for i in range(m + 1)) for k in keys[m]])
        if rebuild:
            def builder(n2, _s=simplices, _f=face, _d=degen):
                return cls.build(n2, _s, _f, _d, name=name, coskeletal=coskeletal)
        else:
            builder = None
        return cls(keys, faces, degens, name=name, coskeletal=coskeletal, builder=builder)

    def extended(self, N: int) -> "FinSimplicialSet":
        if N <= self.N:
            return self
        if self.builder is None:
            raise ValueError(f"{self.name or 'simplicial set'} is only known up to dimension {self.N}")
        return self.builder(N)

    # basic data ----------------------------------------------------------
    def size(self, m: int) -> int:
        return len(self.keys[m])

    def sizes(self):
        return [len(k) for k in self.keys]

    def face(self, m: int, x: int, i: int) -> int:
        return self.faces[m][x][i]

    def degen(self, m: int, x: int, i: int) -> int:
        return self.degens[m][x][i]

    @property
    def reduced(self) -> bool:
        return self.size(0) == 1

    def base(self, m: int, v: int = 0) -> int:
        """The totally degenerate m-simplex on vertex v."""
        x = v
        for k in range(m):
            x = self.degens[k][x][0]
        return x

    def vertex_face(self, m: int, x: int, verts) -> int:
        """Iterated face on the sorted vertex subset ``verts`` of [m]."""
        drop = [v for v in range(m + 1) if v not in set(verts)]
        cur, dim = x, m
        for v in sorted(drop, reverse=True):
            cur = self.faces[dim][cur][v]
            dim -= 1
        return cur

    def check_identities(self):
        """Verify all simplicial identities on the stored tables."""
        F, S = self.faces, self.degens
        for m in range(2, self.N + 1):
            for x in range(self.size(m)):
                for i in range(m + 1):
                    for j in range(i + 1, m + 1):
                        if F[m - 1][F[m][x][j]][i] != F[m - 1][F[m][x][i]][j - 1]:
                            raise SimplicialIdentityError(f"d_{i} d_{j} != d_{j - 1} d_{i} on X_{m}")
        for m in range(self.N):
            for x in range(self.size(m)):
                for i in range(m + 1):
                    y = S[m][x][i]
                    for j in range(m + 2):
                        z = F[m + 1][y][j]
                        if j in (i, i + 1):
                            ok = z == x
                        elif j < i:
                            ok = m >= 1 and z == S[m - 1][F[m][x][j]][i - 1]
                        else:
                            ok = m >= 1 and z == S[m - 1][F[m][x][j - 1]][i]
                        if not ok:
                            raise SimplicialIdentityError(f"d_{j} s_{i} identity fails on X_{m}")
                    if m + 1 < self.N:
                        for j in range(i, m + 1):
                            if S[m + 1][y][j + 1] != S[m + 1][S[m][x][j]][i]:
                                raise SimplicialIdentityError(f"s_i s_j identity fails on X_{m}")
        return True

    # horns ---------------------------------------------------------------
    def _fill_index(self, m: int, j: int) -> dict:
        key = ("fill", m, j)
        if key not in self._horn_index:
            idx = {}
            for x, fs in enumerate(self.faces[m]):
                idx.setdefault(tuple(f for i, f in enumerate(fs) if i != j), []).append(x)
            self._horn_index[key] = idx
        return self._horn_index[key]

    def horns(self, m: int, j: int):
        """Yield every compatible family {k: x_k in X_{m-1}}, k != j, as a tuple in k order."""
        ks = [k for k in range(m + 1) if k != j]
        F = self.faces[m - 1] if m >= 2 else None
        cand = []
        for pos, k in enumerate(ks):
            earlier = [i for i in ks[:pos]]
            if m >= 2 and earlier:
                idx = {}
                for x in range(self.size(m - 1)):
                    idx.setdefault(tuple(F[x][i] for i in earlier), []).append(x)
            else:
                idx = {(): list(range(self.size(m - 1)))}
            cand.append((k, earlier, idx))

        def rec(pos, chosen):
            if pos == len(ks):
                yield tuple(chosen)
                return
            k, earlier, idx = cand[pos]
            # x_k must satisfy d_i x_k = d_{k-1} x_i for i < k
            need = tuple(F[chosen[ks.index(i)]][k - 1] for i in earlier) if m >= 2 else ()
            for x in idx.get(need, ()):
                chosen.append(x)
                yield from rec(pos + 1, chosen)
                chosen.pop()
        yield from rec(0, [])

    def fillers(self, m: int, j: int, horn) -> list:
        return self._fill_index(m, j).get(tuple(horn), [])

    def is_kan(self, up_to: int | None = None):
        """(True, None) or (False, (m, j, horn faces as keys)) for the first unfillable horn."""
        up_to = self.N if up_to is None else up_to
        X = self.extended(up_to)
        for m in range(1, up_to + 1):
            for j in range(m + 1):
                for h in X.horns(m, j):
                    if not X.fillers(m, j, h):
                        ks = [k for k in range(m + 1) if k != j]
                        return False, (m, j, {k: X.keys[m - 1][x] for k, x in zip(ks, h)})
        return True, None

    def unique_fillers_above(self, n: int, up_to: int | None = None) -> bool:
        up_to = self.N if up_to is None else up_to
        X = self.extended(up_to)
        for m in range(n + 1, up_to + 1):
            for j in range(m + 1):
                for h in X.horns(m, j):
                    if len(X.fillers(m, j, h)) != 1:
                        return False
        return True

    # serialization -------------------------------------------------------
    def to_json(self) -> dict:
        return {"schema": 1, "kind": "simpset", "name": self.name, "N": self.N,
                "coskeletal": self.coskeletal,
                "labels": [[_label(k) for k in ks] for ks in self.keys],
                "faces": [[list(f) for f in fs] for fs in self.faces[1:]],
                "degeneracies": [[list(s) for s in ss] for ss in self.degens]}

    @classmethod
    def from_json(cls, doc: dict) -> "FinSimplicialSet":
        keys = doc["labels"]
        faces = [[]] + [[tuple(f) for f in fs] for fs in doc["faces"]]
        degens = [[tuple(s) for s in ss] for ss in doc["degeneracies"]]
        X = cls(keys, faces, degens, name=doc.get("name", ""), coskeletal=doc.get("coskeletal"))
        X.check_identities()
        return X

    def __repr__(self):
        return f"FinSimplicialSet({self.name!r}, sizes={self.sizes()})"


def _label(k) -> str:
    return k if isinstance(k, str) else repr(k)


def product(X: FinSimplicialSet, Y: FinSimplicialSet) -> FinSimplicialSet:
    """Levelwise product X x Y up to min(N_X, N_Y)."""
    N = min(X.N, Y.N)
    keys, faces, degens = [], [[]], []
    for m in range(N + 1):
        keys.append([(a, b) for a in X.keys[m] for b in Y.keys[m]])
    ny = [Y.size(m) for m in range(N + 1)]
    for m in range(1, N + 1):
        faces.append([tuple(X.faces[m][a][i] * ny[m - 1] + Y.faces[m][b][i] for i in range(m + 1))
                      for a in range(X.size(m)) for b in range(ny[m])])
    for m in range(N):
        degens.append([tuple(X.degens[m][a][i] * ny[m + 1] + Y.degens[m][b][i]
                             for i in range(m + 1))
                       for a in range(X.size(m)) for b in range(ny[m])])
    cs = None if X.coskeletal is None or Y.coskeletal is None else max(X.coskeletal, Y.coskeletal)
    return FinSimplicialSet(keys, faces, degens, name=f"{X.name} x {Y.name}", coskeletal=cs)
