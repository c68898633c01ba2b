"""Homotopy groups of the integrating object from the long exact sequence

    ... -> pi_{n+1}(G) --d_n--> H_{n-1}(L) -> pi_n -> pi_n(G) --d_{n-1}--> H_{n-2}(L) -> ...

Each pi_n (n >= 2) is presented as an unsplit extension
0 -> R^d / C -> pi_n -> K -> 0 with C = im d_n and K = ker d_{n-1}.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from ..gradedlin import (FGAbGroup, Scalar, as_scalar, format_scalar, integer_kernel_basis,
                         parse_scalar, subgroup_is_discrete)

__all__ = ["BoundaryData", "DiffeoGroupPres", "InconsistentLES", "les_assemble", "lie_algebra_of",
           "tvf_integrability", "exactness_audit", "G_TOKEN"]

G_TOKEN = "G"


class InconsistentLES(ValueError):
    """Supplied boundary maps cannot sit in an exact sequence."""


@dataclass
class BoundaryData:
    """Homology dims of L, homotopy groups of G and the maps d_n: pi_{n+1}(G) -> H_{n-1}(L).

    ``partial[n]`` is a matrix with dim H_{n-1} rows and one column per
    generator of pi_{n+1}(G) (free generators first, then torsion).
    Missing groups are zero and missing maps are zero.
    """

    H: dict
    pi_G: dict = field(default_factory=dict)
    partial: dict = field(default_factory=dict)

    def __post_init__(self):
        self.H = {int(k): int(v) for k, v in self.H.items()}
        pi = {}
        for k, v in self.pi_G.items():
            k = int(k)
            if k == 1:
                pi[1] = G_TOKEN
                continue
            pi[k] = v if isinstance(v, FGAbGroup) else FGAbGroup.from_json(v)
        self.pi_G = pi
        self.partial = {int(k): [[as_scalar(parse_scalar(x) if isinstance(x, str) else x)
                                  for x in row] for row in M]
                        for k, M in self.partial.items()}
        self.validate()

    def h(self, k: int) -> int:
        return self.H.get(k, 0) if k >= 0 else 0

    def group(self, k: int) -> FGAbGroup:
        g = self.pi_G.get(k)
        return g if isinstance(g, FGAbGroup) else FGAbGroup(0, ())

    def matrix(self, n: int):
        """d_n as a (dim H_{n-1}) x (ngens pi_{n+1}(G)) matrix, zero when absent."""
        rows, cols = self.h(n - 1), self.group(n + 1).ngens
        M = self.partial.get(n)
        if M is None:
            return [[Scalar() for _ in range(cols)] for _ in range(rows)]
        return M

    def columns(self, n: int, free_only: bool = True):
        M = self.matrix(n)
        g = self.group(n + 1)
        ncols = g.rank if free_only else g.ngens
        return [[M[r][c] for r in range(len(M))] for c in range(ncols)]

    def validate(self):
        for k, v in self.H.items():
            if v < 0:
                raise InconsistentLES(f"negative homology dimension in degree {k}")
        for n, M in self.partial.items():
            if n < 1:
                raise InconsistentLES(f"boundary map index {n} must be >= 1")
            rows, g = self.h(n - 1), self.group(n + 1)
            if len(M) != rows or any(len(r) != g.ngens for r in M):
                raise InconsistentLES(
                    f"d_{n} must be {rows} x {g.ngens} (H_{n - 1} by generators of pi_{n + 1}(G))")
            for c in range(g.rank, g.ngens):
                if any(M[r][c] != 0 for r in range(rows)):
                    raise InconsistentLES(f"d_{n} is nonzero on torsion of pi_{n + 1}(G)")

    def truncate(self, n: int) -> "BoundaryData":
        """Data for the truncation of L at degree n: homology above n is dropped."""
        H = {k: v for k, v in self.H.items() if k <= n}
        partial = {k: M for k, M in self.partial.items() if k - 1 <= n}
        return BoundaryData(H, dict(self.pi_G), partial)

    def to_json(self) -> dict:
        pi = {str(k): (v if v == G_TOKEN else v.to_json()) for k, v in sorted(self.pi_G.items())}
        return {"schema": 1, "kind": "boundary", "H": {str(k): v for k, v in sorted(self.H.items())},
                "pi_G": pi,
                "partial": {str(n): [[format_scalar(x) for x in r] for r in M]
                            for n, M in sorted(self.partial.items())}}

    @classmethod
    def from_json(cls, doc: dict) -> "BoundaryData":
        return cls(doc.get("H", {}), doc.get("pi_G", {}), doc.get("partial", {}))

    @classmethod
    def from_algebra(cls, L, pi_G=None, partial=None) -> "BoundaryData":
        """Homology from L; pi_G and maps from arguments or from the algebra's embedded data."""
        from ..linf import homology_dims
        meta = (getattr(L, "meta", None) or {}).get("boundary", {})
        H = homology_dims(L)
        return cls(H, pi_G if pi_G is not None else meta.get("pi_G", {}),
                   partial if partial is not None else meta.get("partial", {}))


@dataclass
class DiffeoGroupPres:
    """0 -> R^d / span_Z(C) -> pi -> K -> 0 in degree n (or the token G for n = 1)."""

    n: int
    d: int = 0
    C: list = field(default_factory=list)
    K: FGAbGroup = field(default_factory=lambda: FGAbGroup(0, ()))
    token: str | None = None

    def is_trivial(self) -> bool:
        if self.token:
            return False
        return self.d == 0 and self.K.is_trivial()

    def vector_part_discrete(self) -> bool:
        return subgroup_is_discrete(self.C) if self.C else True

    def lattice_rank(self) -> int:
        """Z-rank of the subgroup generated by C."""
        return len(self.C) - len(integer_kernel_basis(self.C)) if self.C else 0

    def describe(self) -> str:
        if self.token:
            return self.token
        parts = []
        if self.d:
            zr = self.lattice_rank()
            if zr == 0:
                parts.append(f"R^{self.d}" if self.d > 1 else "R")
            elif self.vector_part_discrete():
                parts.append("R/Z" if self.d == 1 else f"R^{self.d}/Z^{zr}")
            else:
                parts.append(f"R^{self.d}/Z^{zr} (non-discrete)")
        if not self.K.is_trivial():
            parts.append(str(self.K))
        if not parts:
            return "0"
        if len(parts) == 2:
            return f"ext({parts[1]} by {parts[0]})"
        return parts[0]

    def __eq__(self, other):
        """Equal data (d, Z-span of C, invariants of K); no splitting is compared."""
        if not isinstance(other, DiffeoGroupPres):
            return NotImplemented
        if self.token or other.token:
            return self.token == other.token and self.n == other.n
        if (self.n, self.d, self.K) != (other.n, other.d, other.K):
            return False
        return _same_lattice(self.C, other.C)

    def to_json(self) -> dict:
        if self.token:
            return {"n": self.n, "token": self.token, "description": self.token}
        return {"n": self.n, "d": self.d, "C": [[format_scalar(x) for x in c] for c in self.C],
                "K": self.K.to_json(), "description": self.describe()}


def _same_lattice(A, B) -> bool:
    """Z-spans of A and B agree: every vector of each is a Z-combination of the other."""
    def contained(X, Y):
        for x in X:
            # x in span_Z(Y) iff integer kernel of Y + [x] has an element with last coord +-1
            basis = integer_kernel_basis(list(Y) + [x])
            g = 0
            for b in basis:
                g = gcd(g, abs(b[-1]))
            if g != 1:
                return False
        return True
    if not A and not B:
        return True
    return contained(A, B) and contained(B, A)


def _kernel_group(B: BoundaryData, n: int) -> FGAbGroup:
    """ker(d_{n-1}: pi_n(G) -> H_{n-2}(L)); torsion always lies in it."""
    g = B.group(n)
    if n - 1 < 1 or B.h(n - 2) == 0 or g.rank == 0:
        return g
    cols = B.columns(n - 1)
    return FGAbGroup(len(integer_kernel_basis(cols)), g.torsion)


def les_assemble(H, B: BoundaryData, up_to: int) -> list:
    """[pi_1, pi_2, ..., pi_up_to] as DiffeoGroupPres (pi_1 is the token G)."""
    if isinstance(H, dict) and H:
        Hn = {int(k): int(v) for k, v in H.items()}
        for k in set(Hn) | set(B.H):
            if Hn.get(k, 0) != B.H.get(k, 0):
                raise InconsistentLES(f"homology dims disagree in degree {k}")
    out = [DiffeoGroupPres(1, token=G_TOKEN)]
    for n in range(2, up_to + 1):
        d = B.h(n - 1)
        C = [c for c in B.columns(n) if any(x != 0 for x in c)] if d else []
        out.append(DiffeoGroupPres(n, d, C, _kernel_group(B, n)))
    exactness_audit(B, out)
    return out


def exactness_audit(B: BoundaryData, pres: list) -> list:
    """Check im = ker at every computable node; returns the list of checked nodes.

    * at pi_n(G): the image of pi_n is K, and d_{n-1} vanishes on K exactly
      while K has the Z-rank of the kernel.
    * at H_{n-1}: the kernel of H_{n-1} -> pi_n is exactly the span of C = im d_n.
    """
    checked = []
    for p in pres:
        if p.token:
            continue
        n = p.n
        g = B.group(n)
        if n - 1 >= 1 and B.h(n - 2) and g.rank:
            cols = B.columns(n - 1)
            kb = integer_kernel_basis(cols)
            for v in kb:
                img = [sum((as_scalar(v[c]) * cols[c][r] for c in range(len(cols))), Scalar())
                       for r in range(B.h(n - 2))]
                if any(x != 0 for x in img):
                    raise InconsistentLES(f"kernel of d_{n - 1} computed incorrectly")
            if p.K.rank != len(kb):
                raise InconsistentLES(f"pi_{n} does not surject onto ker d_{n - 1}")
        elif p.K != g:
            raise InconsistentLES(f"pi_{n} should surject onto pi_{n}(G)")
        checked.append(("pi_G", n))
        expected = [c for c in B.columns(n) if any(x != 0 for x in c)] if p.d else []
        if not _same_lattice(expected, p.C) or p.d != B.h(n - 1):
            raise InconsistentLES(f"vector part of pi_{n} is not H_{n - 1} / im d_{n}")
        checked.append(("H", n - 1))
    return checked


def lie_algebra_of(pres: DiffeoGroupPres) -> int:
    """Dimension of the Lie algebra of the universal cover: the vector part d."""
    return 0 if pres.token else pres.d


def tvf_integrability(B: BoundaryData, n: int, allowed=None) -> bool:
    """Whether im(d_n) is discrete in H_{n-1}(L), i.e. the n-truncation is a manifold.

    ``allowed`` restricts the square roots the boundary map may use.
    """
    cols = [c for c in B.columns(n) if any(x != 0 for x in c)]
    return subgroup_is_discrete(cols, allowed=allowed) if cols else True
