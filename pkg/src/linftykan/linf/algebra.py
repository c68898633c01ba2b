"""Finite-dimensional L-infinity algebras with sparse bracket storage.

A basis element is addressed by ``(degree, index)``.  The k-ary bracket has
degree k-2 and is stored only on sorted input tuples; swapping two adjacent
inputs x, y multiplies by ``-(-1)**(|x||y|)``, so repeated inputs are only
allowed in odd degrees.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

from ..gradedlin import GradedVectorSpace, as_scalar, format_scalar, simplify

__all__ = ["LInftyAlgebra", "InvariantViolationError", "koszul_sort", "vec_add", "vec_scale",
           "basis_vector", "jacobiator"]


class InvariantViolationError(ValueError):
    """A bracket table violates degree or antisymmetry invariants."""

    def __init__(self, msg, inputs=None):
        super().__init__(msg)
        self.inputs = inputs


def _coef(x):
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        return simplify(as_scalar(x))
    return simplify(x)


def koszul_sort(inputs):
    """Sort basis labels (deg, idx); return (sign, sorted tuple) or (0, None).

    The sign is that of graded antisymmetry.  A repeated even-degree label
    forces zero.
    """
    items = list(inputs)
    sign = 1
    n = len(items)
    for i in range(n):  # insertion sort, tracking transpositions
        j = i
        while j > 0 and items[j - 1] > items[j]:
            a, b = items[j - 1], items[j]
            if not (a[0] * b[0]) % 2:
                sign = -sign
            items[j - 1], items[j] = b, a
            j -= 1
    for a, b in zip(items, items[1:]):
        if a == b and a[0] % 2 == 0:
            return 0, None
    return sign, tuple(items)


def vec_add(u: dict, v: dict, k=1) -> dict:
    out = dict(u)
    for key, c in v.items():
        out[key] = out.get(key, 0) + k * c
        if out[key] == 0:
            del out[key]
    return out


def vec_scale(u: dict, k) -> dict:
    if k == 0:
        return {}
    return {key: c * k for key, c in u.items()}


def basis_vector(deg: int, idx: int) -> dict:
    return {(deg, idx): Fraction(1)}


class LInftyAlgebra:
    """Graded vector space L_0 + ... + L_{n-1} with k-ary brackets.

    ``brackets`` maps a sorted tuple of (deg, idx) inputs to the output
    coefficients ``{idx: coefficient}`` in degree sum(deg) + k - 2.
    """

    def __init__(self, dims, brackets=None, labels=None, scalars="Q", name=None, meta=None):
        self.space = GradedVectorSpace(dict(dims), dict(labels or {}))
        self.scalars = scalars
        self.name = name
        self.meta = dict(meta or {})
        table = {}
        for key, out in (brackets or {}).items():
            key = tuple((int(d), int(i)) for d, i in key)
            sign, skey = koszul_sort(key)
            if sign == 0:
                raise InvariantViolationError(f"repeated even-degree input {key}", key)
            for d, i in key:
                if not 0 <= i < self.space.dim(d):
                    raise InvariantViolationError(f"input {(d, i)} outside L", key)
            k = len(skey)
            if k == 0:
                raise InvariantViolationError("0-ary brackets are not supported", key)
            odeg = sum(d for d, _ in skey) + k - 2
            clean = {}
            for i, c in out.items():
                c = _coef(c)
                if c == 0:
                    continue
                if not 0 <= int(i) < self.space.dim(odeg):
                    raise InvariantViolationError(
                        f"bracket {key} lands in degree {odeg}, index {i} out of range", key)
                clean[int(i)] = c
            prev = table.setdefault(skey, {})
            for i, c in clean.items():
                prev[i] = simplify(prev.get(i, 0) + sign * c)
                if prev[i] == 0:
                    del prev[i]
        table = {k: v for k, v in table.items() if v}
        self._table = table

    # basic data
    @property
    def dims(self) -> dict:
        return dict(self.space.dims)

    def dim(self, k: int) -> int:
        return self.space.dim(k)

    @property
    def top_degree(self) -> int:
        degs = self.space.degrees()
        return degs[-1] if degs else -1

    def basis(self):
        return self.space.basis()

    @property
    def brackets(self) -> dict:
        return {k: dict(v) for k, v in self._table.items()}

    def arities(self):
        return sorted({len(k) for k in self._table})

    def output_degree(self, key) -> int:
        return sum(d for d, _ in key) + len(key) - 2

    # evaluation
    def bracket_basis(self, inputs) -> dict:
        """Bracket of basis elements in any order, as a vector {(deg, idx): c}."""
        sign, key = koszul_sort(inputs)
        if sign == 0 or key not in self._table:
            return {}
        od = self.output_degree(key)
        return {(od, i): sign * c for i, c in self._table[key].items()}

    def bracket(self, *vectors) -> dict:
        """Multilinear bracket of arbitrary vectors {(deg, idx): coefficient}."""
        out: dict = {}
        for combo in itertools.product(*(list(v.items()) for v in vectors)):
            coef = 1
            for _, c in combo:
                coef = coef * c
            if coef == 0:
                continue
            out = vec_add(out, self.bracket_basis([b for b, _ in combo]), coef)
        return {k: simplify(c) for k, c in out.items()}

    def differential_matrix(self, n: int):
        """Matrix of the unary bracket L_n -> L_{n-1} (rows indexed by L_{n-1})."""
        rows, cols = self.dim(n - 1), self.dim(n)
        M = [[Fraction(0)] * cols for _ in range(rows)]
        for i in range(cols):
            for i2, c in self._table.get(((n, i),), {}).items():
                M[i2][i] = c
        return M

    def is_lie_algebra(self) -> bool:
        return self.top_degree <= 0

    def __eq__(self, other):
        if not isinstance(other, LInftyAlgebra):
            return NotImplemented
        return self.dims == other.dims and self._table == other._table

    def __repr__(self):
        nm = f" {self.name!r}" if self.name else ""
        return f"<LInftyAlgebra{nm} dims={self.dims} arities={self.arities()}>"

    # structure transport
    def change_basis(self, maps: dict) -> "LInftyAlgebra":
        """Transport brackets along invertible per-degree matrices.

        ``maps[k]`` is square with columns giving images of old basis vectors in
        new coordinates.  Returns the algebra in the new basis.
        """
        from ..gradedlin import linalg
        inv = {}
        for k in self.space.degrees():
            M = maps.get(k) or linalg.identity(self.dim(k))
            aug = [list(row) + [Fraction(int(i == j)) for j in range(len(M))]
                   for i, row in enumerate(M)]
            R, piv = linalg.rref(aug)
            if piv[:len(M)] != list(range(len(M))):
                raise ValueError(f"change of basis in degree {k} is singular")
            inv[k] = [row[len(M):] for row in R]
        table = {}
        for key in _all_sorted_keys(self):
            vecs = [{(d, r): inv[d][r][i] for r in range(self.dim(d)) if inv[d][r][i] != 0}
                    for d, i in key]
            val = self.bracket(*vecs)
            if not val:
                continue
            od = self.output_degree(key)
            M = maps.get(od) or linalg.identity(self.dim(od))
            out = {}
            for (dd, r), c in val.items():
                for row in range(self.dim(od)):
                    if M[row][r] != 0:
                        out[row] = out.get(row, 0) + M[row][r] * c
            out = {i: simplify(c) for i, c in out.items() if c != 0}
            if out:
                table[key] = out
        return LInftyAlgebra(self.dims, table, scalars=self.scalars, name=self.name)

    def is_morphism(self, other: "LInftyAlgebra", maps: dict) -> bool:
        """Whether per-degree linear maps intertwine all brackets (strict morphism)."""
        def image(v):
            out = {}
            for (d, i), c in v.items():
                M = maps[d]
                for r in range(other.dim(d)):
                    if M[r][i] != 0:
                        out = vec_add(out, {(d, r): M[r][i] * c})
            return out
        keys = set(_all_sorted_keys(self))
        for key in keys:
            lhs = image(self.bracket_basis(key))
            rhs = other.bracket(*[image({b: Fraction(1)}) for b in key])
            if any(simplify(lhs.get(k, 0) - rhs.get(k, 0)) != 0 for k in set(lhs) | set(rhs)):
                return False
        return True

    # serialization
    def check_field(self, field: str):
        """Raise UnsupportedScalarError if a bracket coefficient lies outside ``field``."""
        _check_field(self.brackets, field)

    def to_json(self) -> dict:
        br = []
        for key in sorted(self._table):
            br.append({"arity": len(key), "inputs": [list(b) for b in key],
                       "output": {str(i): format_scalar(c)
                                  for i, c in sorted(self._table[key].items())}})
        doc = {"schema": 1, "kind": "linf", "dims": {str(k): v for k, v in sorted(self.dims.items())},
               "brackets": br, "scalars": self.scalars}
        if self.name:
            doc["name"] = self.name
        labels = {str(k): list(v) for k, v in self.space.labels.items()}
        default = {str(k): [f"e{k}_{i}" for i in range(n)] for k, n in self.dims.items()}
        if labels != default:
            doc["labels"] = labels
        doc.update(self.meta)
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "LInftyAlgebra":
        if "dims" not in doc:
            raise ValueError("L-infinity document needs 'dims'")
        dims = {int(k): int(v) for k, v in doc["dims"].items()}
        table = {}
        for entry in doc.get("brackets", []):
            key = tuple(tuple(x) for x in entry["inputs"])
            if "arity" in entry and int(entry["arity"]) != len(key):
                raise InvariantViolationError(f"arity {entry['arity']} != {len(key)} inputs", key)
            sign, skey = koszul_sort(key)
            if sign == 0:
                raise InvariantViolationError(f"repeated even-degree input {key}", key)
            out = {int(i): as_scalar(c) * sign for i, c in entry["output"].items()}
            prev = table.get(skey, {})
            for i, c in out.items():
                prev[i] = prev.get(i, 0) + c
            table[skey] = prev
        field = doc.get("scalars", "Q")
        _check_field(table, field)
        meta = {k: doc[k] for k in ("boundary",) if k in doc}
        labels = {int(k): v for k, v in doc.get("labels", {}).items()}
        return cls(dims, table, labels=labels, scalars=field, name=doc.get("name"), meta=meta)


def _check_field(table, field):
    from ..gradedlin import UnsupportedScalarError
    allowed = {1}
    if field not in ("Q", None):
        import re
        allowed |= {int(n) for n in re.findall(r"sqrt(\d+)", field)}
    for key, out in table.items():
        for c in out.values():
            extra = set(as_scalar(c).support()) - allowed
            if extra:
                raise UnsupportedScalarError(
                    f"bracket {key} uses sqrt{sorted(extra)} outside field {field}")


def _all_sorted_keys(L: LInftyAlgebra):
    """Every sorted input tuple whose bracket could be nonzero (degree-bounded)."""
    basis = L.basis()
    top = L.top_degree
    for k in range(1, top + 3):
        for combo in itertools.combinations_with_replacement(basis, k):
            sign, key = koszul_sort(combo)
            if sign == 0:
                continue
            od = sum(d for d, _ in key) + k - 2
            if 0 <= od <= top and L.dim(od):
                yield key


def jacobiator(L: LInftyAlgebra, x: dict, y: dict, z: dict) -> dict:
    """[[x,y],z] + [[y,z],x] + [[z,x],y] for the binary bracket."""
    out = {}
    for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
        out = vec_add(out, L.bracket(L.bracket(a, b), c))
    return out
