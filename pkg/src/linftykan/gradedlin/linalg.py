"""Dense exact linear algebra over Q or a multiquadratic extension.

Matrices are lists of rows.  Entries may be ``int``, ``Fraction`` or
:class:`~linftykan.gradedlin.scalar.Scalar`; all routines are exact.
"""
from __future__ import annotations

from fractions import Fraction

from .scalar import simplify

__all__ = ["Matrix", "zeros", "identity", "matmul", "transpose", "rref", "rank", "nullspace",
           "column_space", "solve", "is_zero", "CompositionNonzeroError", "two_term_homology",
           "complement_basis", "left_nullspace"]


class CompositionNonzeroError(ValueError):
    """d_out composed with d_in is not zero."""


Matrix = list


def _f(x):
    if isinstance(x, int):
        return Fraction(x)
    return simplify(x)


def zeros(r: int, c: int) -> Matrix:
    return [[Fraction(0)] * c for _ in range(r)]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def shape(A: Matrix, ncols: int | None = None) -> tuple[int, int]:
    if not A:
        return 0, (ncols or 0)
    return len(A), len(A[0])


def transpose(A: Matrix, ncols: int = 0) -> Matrix:
    if not A:
        return [[] for _ in range(ncols)]
    return [list(col) for col in zip(*A)]


def matmul(A: Matrix, B: Matrix, inner: int | None = None) -> Matrix:
    if not A:
        return []
    if not B:
        return [[] for _ in A]
    Bt = transpose(B)
    out = []
    for row in A:
        out.append([_f(sum((a * b for a, b in zip(row, col) if a != 0 and b != 0), Fraction(0)))
                    for col in Bt])
    return out


def is_zero(A: Matrix) -> bool:
    return all(x == 0 for row in A for x in row)


def rref(A: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns (leftmost pivots)."""
    M = [[_f(x) for x in row] for row in A]
    if not M:
        return M, []
    rows, cols = len(M), len(M[0])
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [_f(x * inv) for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [_f(a - f * b) for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    return M, pivots


def rank(A: Matrix) -> int:
    return len(rref(A)[1])


def nullspace(A: Matrix, ncols: int | None = None) -> list[list]:
    """Basis of {x : A x = 0}, one free variable per basis vector."""
    if not A:
        n = ncols or 0
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    R, piv = rref(A)
    n = len(A[0])
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, p in enumerate(piv):
            v[p] = _f(-R[i][f])
        basis.append(v)
    return basis


def left_nullspace(A: Matrix, nrows: int | None = None) -> list[list]:
    return nullspace(transpose(A), nrows if not A else len(A))


def column_space(A: Matrix) -> list[list]:
    """Basis of the column space, taken from the pivot columns of A."""
    if not A:
        return []
    _, piv = rref(A)
    return [[_f(A[i][c]) for i in range(len(A))] for c in piv]


def complement_basis(vectors: list[list], dim: int) -> list[int]:
    """Indices of standard basis vectors completing ``vectors`` to a basis."""
    M = [list(v) for v in vectors] + [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
    _, piv = rref(transpose(M) if M else [])
    k = len(vectors)
    return [p - k for p in piv if p >= k]


def solve(A: Matrix, b: list) -> list | None:
    """One solution of A x = b (free variables zero), or None."""
    rows = len(A)
    if rows == 0:
        return []
    n = len(A[0])
    aug = [list(A[i]) + [b[i]] for i in range(rows)]
    R, piv = rref(aug)
    if n in piv:
        return None
    x = [Fraction(0)] * n
    for i, p in enumerate(piv):
        x[p] = R[i][n]
    return x


def two_term_homology(d_in: Matrix, d_out: Matrix, dim: int | None = None):
    """Homology ker(d_out)/im(d_in) of  A --d_in--> V --d_out--> B.

    Matrices act on column vectors.  ``dim`` is dim V, needed when both
    matrices are empty.  Returns (dimension, representative basis).
    """
    if dim is None:
        dim = len(d_in) if d_in else (len(d_out[0]) if d_out and d_out[0] else 0)
    if d_in and d_out and d_in[0]:
        if not is_zero(matmul(d_out, d_in)):
            raise CompositionNonzeroError("d_out . d_in != 0")
    ker = nullspace(d_out, dim) if d_out else [[Fraction(int(i == j)) for i in range(dim)]
                                               for j in range(dim)]
    img = column_space(d_in) if d_in and d_in[0] else []
    reps = []
    current = [list(v) for v in img]
    r0 = len(current)
    for v in ker:
        trial = current + [v]
        if rank(trial) > len(current):
            current = trial
            reps.append(v)
    assert len(current) - r0 == len(reps)
    return len(reps), reps
