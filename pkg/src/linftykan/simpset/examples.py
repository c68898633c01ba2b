"""Standard finite simplicial sets: simplices and their subcomplexes, K(G, 1), K(Z/p, n)."""
from __future__ import annotations

import itertools

from .core import FinSimplicialSet

__all__ = ["FiniteGroup", "cyclic_group", "point", "standard_simplex", "subcomplex", "horn",
           "boundary", "k_g1", "eilenberg_maclane",
           "product_group", "symmetric_group3"]


class FiniteGroup:
    """Group on elements 0..n-1 given by a multiplication table; 0 is the identity."""

    def __init__(self, table, names=None, identity: int = 0):
        self.table = [list(r) for r in table]
        self.n = len(table)
        self.e = identity
        self.names = list(names) if names is not None else [str(i) for i in range(self.n)]
        self.inv = [next(b for b in range(self.n) if self.table[a][b] == self.e)
                    for a in range(self.n)]

    def mul(self, a, b):
        return self.table[a][b]

    @property
    def order(self):
        return self.n

    def is_abelian(self):
        return all(self.table[a][b] == self.table[b][a] for a in range(self.n) for b in range(self.n))

    def check(self):
        n, T = self.n, self.table
        for a in range(n):
            if T[self.e][a] != a or T[a][self.e] != a:
                raise ValueError("identity law fails")
            for b in range(n):
                for c in range(n):
                    if T[T[a][b]][c] != T[a][T[b][c]]:
                        raise ValueError("multiplication is not associative")
        return True

    def element_order(self, a):
        k, x = 1, a
        while x != self.e:
            x = self.table[x][a]
            k += 1
        return k

    def abelian_invariants(self):
        """FGAbGroup isomorphic to this (abelian) group, from its presentation by the table."""
        from ..gradedlin import FGAbGroup
        if not self.is_abelian():
            raise ValueError("group is not abelian")
        rels = [[0] * self.n for _ in range(1)]
        rels[0][self.e] = 1
        for a in range(self.n):
            for b in range(self.n):
                r = [0] * self.n
                r[a] += 1
                r[b] += 1
                r[self.table[a][b]] -= 1
                rels.append(r)
        return FGAbGroup.from_relations(self.n, rels)

    def __repr__(self):
        return f"FiniteGroup(order={self.n})"


def cyclic_group(n: int) -> FiniteGroup:
    return FiniteGroup([[(a + b) % n for b in range(n)] for a in range(n)])


def product_group(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    pairs = [(a, b) for a in range(G.n) for b in range(H.n)]
    idx = {p: i for i, p in enumerate(pairs)}
    table = [[idx[(G.mul(a, c), H.mul(b, d))] for (c, d) in pairs] for (a, b) in pairs]
    return FiniteGroup(table, names=[f"({G.names[a]},{H.names[b]})" for a, b in pairs],
                       identity=idx[(G.e, H.e)])


def symmetric_group3() -> FiniteGroup:
    perms = list(itertools.permutations(range(3)))
    idx = {p: i for i, p in enumerate(perms)}
    table = [[idx[tuple(p[q[i]] for i in range(3))] for q in perms] for p in perms]
    return FiniteGroup(table, names=["".join(map(str, p)) for p in perms])


# --- simplices and subcomplexes ------------------------------------------------

def _delete(seq, i):
    return seq[:i] + seq[i + 1:]


def _repeat(seq, i):
    return seq[:i + 1] + seq[i:]


def subcomplex(n: int, generators, N: int | None = None, name: str = "") -> FinSimplicialSet:
    """Subcomplex of Delta[n] generated by the vertex sets ``generators``.

    m-simplices are nondecreasing vertex sequences whose support lies in a
    generator.
    """
    gens = [frozenset(g) for g in generators]
    N = n if N is None else N

    def simplices(m):
        for seq in itertools.combinations_with_replacement(range(n + 1), m + 1):
            if any(set(seq) <= g for g in gens):
                yield seq
    return FinSimplicialSet.build(N, simplices, _delete, _repeat, name=name or f"sub(Delta[{n}])")


def standard_simplex(n: int, N: int | None = None) -> FinSimplicialSet:
    return subcomplex(n, [range(n + 1)], N, name=f"Delta[{n}]")


def point(N: int = 3) -> FinSimplicialSet:
    return subcomplex(0, [[0]], N, name="point")


def horn(n: int, j: int, N: int | None = None) -> FinSimplicialSet:
    gens = [[v for v in range(n + 1) if v != k] for k in range(n + 1) if k != j]
    return subcomplex(n, gens, N, name=f"Lambda[{n},{j}]")


def boundary(n: int, N: int | None = None) -> FinSimplicialSet:
    gens = [[v for v in range(n + 1) if v != k] for k in range(n + 1)]
    return subcomplex(n, gens, N, name=f"boundary(Delta[{n}])")


# --- classifying objects ---------------------------------------------------------

def k_g1(G: FiniteGroup, N: int = 3, name: str = "") -> FinSimplicialSet:
    """Nerve of G: m-simplices are tuples (g_1, ..., g_m)."""
    def simplices(m):
        return itertools.product(range(G.n), repeat=m)

    def face(x, i):
        m = len(x)
        if i == 0:
            return x[1:]
        if i == m:
            return x[:-1]
        return x[:i - 1] + (G.mul(x[i - 1], x[i]),) + x[i + 1:]

    def degen(x, i):
        return x[:i] + (G.e,) + x[i:]
    return FinSimplicialSet.build(N, simplices, face, degen, name=name or f"K(G{G.n},1)",
                                  coskeletal=2)


def eilenberg_maclane(p: int, n: int, N: int | None = None) -> FinSimplicialSet:
    """K(Z/p, n): normalized n-cocycles on Delta[m] with values in Z/p.

    An m-simplex is (m, values) with one value per increasing (n+1)-subset
    of [m] (lexicographic order), subject to a vanishing coboundary.
    """
    N = n + 2 if N is None else N

    def subsets(m):
        return list(itertools.combinations(range(m + 1), n + 1))

    def simplices(m):
        S = subsets(m)
        pos = {s: i for i, s in enumerate(S)}
        faces = list(itertools.combinations(range(m + 1), n + 2))
        for vals in itertools.product(range(p), repeat=len(S)):
            if all(sum((-1) ** i * vals[pos[_delete(T, i)]] for i in range(n + 2)) % p == 0
                   for T in faces):
                yield (m, vals)

    def face(x, i):
        m, vals = x
        pos = {s: k for k, s in enumerate(subsets(m))}
        return (m - 1, tuple(vals[pos[tuple(v if v < i else v + 1 for v in s)]]
                             for s in subsets(m - 1)))

    def degen(x, i):
        m, vals = x
        pos = {s: k for k, s in enumerate(subsets(m))}
        out = []
        for s in subsets(m + 1):
            img = tuple(v if v <= i else v - 1 for v in s)
            out.append(vals[pos[img]] if len(set(img)) == n + 1 else 0)
        return (m + 1, tuple(out))
    return FinSimplicialSet.build(N, simplices, face, degen, name=f"K(Z/{p},{n})",
                                  coskeletal=n + 1)
