"""Integer Smith normal form, finitely generated abelian groups, discreteness."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .linalg import nullspace, rank, transpose
from .scalar import Scalar, UnsupportedScalarError, as_scalar, coordinates

__all__ = ["smith_normal_form", "FGAbGroup", "subgroup_is_discrete", "integer_kernel_rank",
           "integer_kernel_basis", "GradedVectorSpace"]


def smith_normal_form(M):
    """Return (U, D, V) with U @ M @ V == D, U and V unimodular.

    D is diagonal with nonnegative invariant factors d1 | d2 | ...
    """
    m = len(M)
    n = len(M[0]) if m else 0
    D = [[int(x) for x in row] for row in M]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):  # row_dst += k * row_src
        D[dst] = [a + k * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + k * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, k):
        for row in D:
            row[dst] += k * row[src]
        for row in V:
            row[dst] += k * row[src]

    t = 0
    while t < min(m, n):
        nz = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, m):
                if D[i][t]:
                    q = D[i][t] // D[t][t]
                    add_row(t, i, -q)
                    if D[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, n):
                if D[t][j]:
                    q = D[t][j] // D[t][t]
                    add_col(t, j, -q)
                    if D[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            # enforce divisibility of the remaining block
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if D[i][j] % D[t][t]), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return U, D, V


@dataclass(frozen=True)
class FGAbGroup:
    """Z^rank + Z/d1 + ... + Z/dk with d1 | d2 | ... | dk, each d >= 2."""

    rank: int = 0
    torsion: tuple = field(default_factory=tuple)

    def __post_init__(self):
        tors = tuple(int(d) for d in self.torsion)
        if any(d < 2 for d in tors):
            raise ValueError("torsion invariants must be >= 2")
        if any(tors[i + 1] % tors[i] for i in range(len(tors) - 1)):
            raise ValueError("torsion invariants must divide in order")
        object.__setattr__(self, "torsion", tors)

    @classmethod
    def from_relations(cls, ngens: int, relations) -> "FGAbGroup":
        """Z^ngens modulo the row span of ``relations``."""
        rel = [list(r) for r in relations]
        if not rel:
            return cls(ngens, ())
        _, D, _ = smith_normal_form(rel)
        diag = [D[i][i] for i in range(min(len(D), ngens))]
        nonzero = [d for d in diag if d]
        tors = tuple(d for d in nonzero if d > 1)
        return cls(ngens - len(nonzero), tors)

    @property
    def ngens(self) -> int:
        return self.rank + len(self.torsion)

    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def order(self):
        if self.rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def __str__(self):
        parts = ["Z"] * self.rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"

    def to_json(self):
        return {"rank": self.rank, "torsion": list(self.torsion)}

    @classmethod
    def from_json(cls, d):
        return cls(int(d.get("rank", 0)), tuple(d.get("torsion", ())))


def _field_basis(entries) -> tuple[int, ...]:
    basis = {1}
    for x in entries:
        basis.update(as_scalar(x).support())
    return tuple(sorted(basis))


def _rational_expansion(vectors, basis):
    """Each real vector over the field -> rational vector over (coordinate, sqrt-basis)."""
    out = []
    for v in vectors:
        row = []
        for x in v:
            row.extend(coordinates(x, basis))
        out.append(row)
    return out


def integer_kernel_rank(columns, basis=None) -> int:
    """Rank of {c in Z^k : sum c_i columns[i] = 0} for real vectors over the field."""
    if not columns:
        return 0
    entries = [x for v in columns for x in v]
    basis = basis or _field_basis(entries)
    rat = _rational_expansion(columns, basis)
    return len(columns) - rank(rat)


def integer_kernel_basis(columns, basis=None) -> list:
    """A Z-basis of {c in Z^k : sum c_i columns[i] = 0}, as integer lists of length k."""
    k = len(columns)
    if not k:
        return []
    entries = [x for v in columns for x in v]
    basis = basis or _field_basis(entries)
    rows = transpose(_rational_expansion(columns, basis)) if columns[0] else []
    A = []
    for row in rows:
        den = 1
        for x in row:
            den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
        A.append([int(Fraction(x) * den) for x in row])
    if not A or all(x == 0 for r in A for x in r):
        return [[int(i == j) for i in range(k)] for j in range(k)]
    U, D, V = smith_normal_form(A)
    r = sum(1 for i in range(min(len(D), k)) if D[i][i] != 0)
    return [[V[i][c] for i in range(k)] for c in range(r, k)]


def subgroup_is_discrete(generators, quotient_subspace=(), allowed=None) -> bool:
    """Whether the subgroup generated by ``generators`` in R^d / W is discrete.

    ``quotient_subspace`` is a basis of W (vectors over the scalar field).
    A finitely generated subgroup is discrete iff its Z-rank equals the
    dimension of its R-span; both are computed exactly.  ``allowed`` is an
    optional tuple of squarefree radicands the caller has configured.
    """
    gens = [[as_scalar(x) for x in g] for g in generators]
    W = [[as_scalar(x) for x in w] for w in quotient_subspace]
    entries = [x for v in gens + W for x in v]
    basis = _field_basis(entries)
    if allowed is not None:
        extra = set(basis) - {1} - set(allowed)
        if extra:
            raise UnsupportedScalarError(f"sqrt{sorted(extra)} not in configured field {allowed}")
    if not gens:
        return True
    d = len(gens[0])
    if W:
        # linear functionals vanishing on W give coordinates on R^d / W
        P = nullspace(W, d)
        gens = [[sum((p[i] * g[i] for i in range(d)), Scalar()) for p in P] for g in gens]
        if not P:
            return True
    gens = [[as_scalar(x) for x in g] for g in gens]
    real_dim = rank(gens)
    rat = _rational_expansion(gens, basis)
    z_rank = rank(rat)
    return z_rank == real_dim


@dataclass(frozen=True)
class GradedVectorSpace:
    """Finite-dimensional, nonnegatively graded vector space with basis labels."""

    dims: dict
    labels: dict = field(default_factory=dict)

    def __post_init__(self):
        dims = {int(k): int(v) for k, v in self.dims.items() if int(v) > 0}
        if any(k < 0 for k in dims):
            raise ValueError("degrees must be nonnegative")
        labels = {}
        for k, n in dims.items():
            given = list(self.labels.get(k, self.labels.get(str(k), [])))
            labels[k] = tuple(given) if given else tuple(f"e{k}_{i}" for i in range(n))
            if len(labels[k]) != n:
                raise ValueError(f"degree {k}: {n} labels expected")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "labels", labels)

    def dim(self, k: int) -> int:
        return self.dims.get(k, 0)

    def degrees(self) -> list[int]:
        return sorted(self.dims)

    def basis(self):
        """All basis indices (degree, index), ordered by degree then index."""
        return [(k, i) for k in self.degrees() for i in range(self.dims[k])]

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def label(self, k: int, i: int) -> str:
        return self.labels[k][i]
