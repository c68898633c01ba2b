"""Polynomial differential forms on the standard simplex.

Coordinates are t_1..t_m (t_0 = 1 - sum t_i is eliminated), optionally
followed by parameter variables such as a homotopy coordinate s.  A form is
a sparse map ``(exponents, dt_indices) -> coefficient`` where ``dt_indices``
is a strictly increasing tuple of 0-based variable positions.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial

from ..gradedlin import as_scalar, format_scalar, simplify

__all__ = ["PolyForm", "DimensionMismatchError", "FormDegreeError", "t", "dt", "const"]


class DimensionMismatchError(ValueError):
    pass


class FormDegreeError(ValueError):
    pass


def _merge_dt(a: tuple, b: tuple):
    """Sign and sorted union of two dt index tuples (0 if they overlap)."""
    if set(a) & set(b):
        return 0, None
    items = list(a) + list(b)
    inversions = sum(1 for x in a for y in b if x > y)
    return (-1 if inversions % 2 else 1), tuple(sorted(items))


class PolyForm:
    """Polynomial differential form on Delta^m (plus ``nparams`` extra variables)."""

    __slots__ = ("m", "nparams", "terms")

    def __init__(self, m: int, terms=None, nparams: int = 0):
        self.m = int(m)
        self.nparams = int(nparams)
        clean = {}
        n = self.m + self.nparams
        for (e, I), c in (terms or {}).items():
            e, I = tuple(e), tuple(I)
            if len(e) != n:
                raise DimensionMismatchError(f"exponent {e} has wrong length for {n} variables")
            if c == 0:
                continue
            if list(I) != sorted(set(I)):
                raise ValueError(f"dt indices {I} must be strictly increasing")
            clean[(e, I)] = clean.get((e, I), 0) + c
        self.terms = {k: simplify(v) for k, v in clean.items() if v != 0}

    @classmethod
    def _raw(cls, m, nparams, terms):
        obj = cls.__new__(cls)
        obj.m, obj.nparams = m, nparams
        obj.terms = terms
        return obj

    @property
    def nvars(self) -> int:
        return self.m + self.nparams

    # constructors
    @classmethod
    def zero(cls, m: int, nparams: int = 0) -> "PolyForm":
        return cls._raw(m, nparams, {})

    @classmethod
    def constant(cls, m: int, c, nparams: int = 0) -> "PolyForm":
        n = m + nparams
        return cls(m, {((0,) * n, ()): c}, nparams)

    @classmethod
    def var(cls, m: int, i: int, nparams: int = 0) -> "PolyForm":
        """Coordinate function t_i (i = 0 gives 1 - t_1 - ... - t_m)."""
        n = m + nparams
        if i == 0:
            terms = {((0,) * n, ()): Fraction(1)}
            for k in range(m):
                terms[(tuple(int(q == k) for q in range(n)), ())] = Fraction(-1)
            return cls(m, terms, nparams)
        if not 1 <= i <= n:
            raise IndexError(f"no variable t_{i}")
        return cls(m, {(tuple(int(q == i - 1) for q in range(n)), ()): Fraction(1)}, nparams)

    @classmethod
    def dvar(cls, m: int, i: int, nparams: int = 0) -> "PolyForm":
        return cls.var(m, i, nparams).d()

    # inspection
    def compatible(self, other: "PolyForm"):
        if (self.m, self.nparams) != (other.m, other.nparams):
            raise DimensionMismatchError(
                f"forms live on different spaces: {(self.m, self.nparams)} vs {(other.m, other.nparams)}")

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set:
        return {len(I) for (_, I) in self.terms}

    def degree(self) -> int:
        """Form degree of a homogeneous form (0 for the zero form)."""
        ds = self.degrees()
        if len(ds) > 1:
            raise FormDegreeError(f"inhomogeneous form with degrees {sorted(ds)}")
        return ds.pop() if ds else 0

    def component(self, k: int) -> "PolyForm":
        return PolyForm._raw(self.m, self.nparams,
                             {key: c for key, c in self.terms.items() if len(key[1]) == k})

    def poly_degree(self) -> int:
        return max((sum(e) for (e, _) in self.terms), default=0)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and other == 0:
            return self.is_zero()
        if not isinstance(other, PolyForm):
            return NotImplemented
        return (self.m, self.nparams) == (other.m, other.nparams) and self.terms == other.terms

    __hash__ = None

    # arithmetic
    def __add__(self, other):
        if isinstance(other, (int, Fraction)) and other == 0:
            return self
        self.compatible(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + c
            if v == 0:
                out.pop(k, None)
            else:
                out[k] = simplify(v)
        return PolyForm._raw(self.m, self.nparams, out)

    __radd__ = __add__

    def __neg__(self):
        return PolyForm._raw(self.m, self.nparams, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "PolyForm":
        c = simplify(c) if not isinstance(c, int) else Fraction(c)
        if c == 0:
            return PolyForm.zero(self.m, self.nparams)
        return PolyForm._raw(self.m, self.nparams,
                             {k: simplify(v * c) for k, v in self.terms.items()})

    def wedge(self, other: "PolyForm") -> "PolyForm":
        self.compatible(other)
        out: dict = {}
        for (ea, Ia), ca in self.terms.items():
            for (eb, Ib), cb in other.terms.items():
                s, I = _merge_dt(Ia, Ib)
                if not s:
                    continue
                key = (tuple(x + y for x, y in zip(ea, eb)), I)
                out[key] = out.get(key, 0) + s * ca * cb
        return PolyForm._raw(self.m, self.nparams,
                             {k: simplify(v) for k, v in out.items() if v != 0})

    def __mul__(self, other):
        if isinstance(other, PolyForm):
            return self.wedge(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        out = PolyForm.constant(self.m, 1, self.nparams)
        for _ in range(k):
            out = out.wedge(self)
        return out

    def d(self) -> "PolyForm":
        out: dict = {}
        for (e, I), c in self.terms.items():
            for v, a in enumerate(e):
                if a == 0 or v in I:
                    continue
                e2 = list(e)
                e2[v] -= 1
                pos = sum(1 for x in I if x < v)
                sign = -1 if pos % 2 else 1
                key = (tuple(e2), tuple(sorted(I + (v,))))
                out[key] = out.get(key, 0) + sign * a * c
        return PolyForm._raw(self.m, self.nparams,
                             {k: simplify(v) for k, v in out.items() if v != 0})

    def contract(self, field) -> "PolyForm":
        """Interior product with a vector field given as 0-form components per variable."""
        if len(field) != self.nvars:
            raise DimensionMismatchError("vector field needs one component per variable")
        out = PolyForm.zero(self.m, self.nparams)
        for (e, I), c in self.terms.items():
            for r, v in enumerate(I):
                comp = field[v]
                if isinstance(comp, PolyForm):
                    if comp.is_zero():
                        continue
                elif comp == 0:
                    continue
                rest = I[:r] + I[r + 1:]
                base = PolyForm._raw(self.m, self.nparams, {(e, rest): c * (-1 if r % 2 else 1)})
                if isinstance(comp, PolyForm):
                    out = out + comp.wedge(base)
                else:
                    out = out + base.scale(comp)
        return out

    # parameter handling
    def add_params(self, k: int = 1) -> "PolyForm":
        """View as a form on Delta^m x R^k (new variables appended)."""
        return PolyForm._raw(self.m, self.nparams + k,
                             {(e + (0,) * k, I): c for (e, I), c in self.terms.items()})

    def s_integral(self, var: int | None = None) -> "PolyForm":
        """Integrate the coefficients over var in [0, 1] and drop that variable.

        ``var`` is a 0-based variable position (default: the last parameter).
        Terms containing d(var) are not allowed.
        """
        if self.nparams == 0:
            raise DimensionMismatchError("no parameter variable to integrate over")
        var = self.nvars - 1 if var is None else var
        if var < self.m:
            raise DimensionMismatchError("can only integrate out parameter variables")
        out: dict = {}
        for (e, I), c in self.terms.items():
            if var in I:
                raise FormDegreeError("family has a component along the parameter differential")
            a = e[var]
            e2 = e[:var] + e[var + 1:]
            I2 = tuple(x if x < var else x - 1 for x in I)
            key = (e2, I2)
            out[key] = out.get(key, 0) + c * Fraction(1, a + 1)
        return PolyForm._raw(self.m, self.nparams - 1,
                             {k: simplify(v) for k, v in out.items() if v != 0})

    def substitute_param(self, var: int, value) -> "PolyForm":
        """Set a parameter variable to a constant (its differential to 0)."""
        out: dict = {}
        for (e, I), c in self.terms.items():
            if var in I:
                continue
            e2 = e[:var] + e[var + 1:]
            I2 = tuple(x if x < var else x - 1 for x in I)
            val = c * (value ** e[var]) if e[var] else c
            out[(e2, I2)] = out.get((e2, I2), 0) + val
        return PolyForm._raw(self.m, self.nparams - 1,
                             {k: simplify(v) for k, v in out.items() if v != 0})

    # pullback
    def pullback_images(self, images, m_src: int, nparams_src: int = 0) -> "PolyForm":
        """Pull back along the polynomial map whose variable images are ``images``.

        ``images[v]`` is a 0-form on the source for each variable of self.
        """
        if len(images) != self.nvars:
            raise DimensionMismatchError(
                f"map provides {len(images)} coordinates, form needs {self.nvars}")
        for im in images:
            if (im.m, im.nparams) != (m_src, nparams_src):
                raise DimensionMismatchError("coordinate images live on the wrong source")
        one = PolyForm.constant(m_src, 1, nparams_src)
        dimg = [im.d() for im in images]
        powers: dict = {}

        def power(v, a):
            if a == 0:
                return one
            key = (v, a)
            if key not in powers:
                powers[key] = power(v, a - 1).wedge(images[v])
            return powers[key]

        out = PolyForm.zero(m_src, nparams_src)
        for (e, I), c in self.terms.items():
            term = one.scale(c)
            for v, a in enumerate(e):
                if a:
                    term = term.wedge(power(v, a))
            for v in I:
                term = term.wedge(dimg[v])
                if term.is_zero():
                    break
            out = out + term
        return out

    def pullback(self, phi) -> "PolyForm":
        """Pull back along an :class:`AffineSimplexMap` (or anything with ``images``)."""
        if phi.target_dim != self.m or self.nparams:
            raise DimensionMismatchError(
                f"map lands in Delta^{phi.target_dim}, form lives on Delta^{self.m}")
        return self.pullback_images(phi.images(), phi.source_dim)

    # evaluation
    def evaluate(self, point, vector_fields=None):
        """Coefficient values at a point: {dt_indices: value} (floats or exact)."""
        out: dict = {}
        for (e, I), c in self.terms.items():
            val = c
            for x, a in zip(point, e):
                if a:
                    val = val * x ** a
            out[I] = out.get(I, 0) + val
        return out

    # integration over the simplex
    def simplex_period(self):
        """Exact integral over {t_i >= 0, sum t_i <= 1}, oriented by dt_1 ^ ... ^ dt_m."""
        if self.nparams:
            raise DimensionMismatchError("integrate out parameters first")
        top = tuple(range(self.m))
        if any(I != top for (_, I) in self.terms):
            raise FormDegreeError(f"simplex_period needs a top-degree ({self.m}) form")
        total = Fraction(0)
        for (e, _), c in self.terms.items():
            num = 1
            for a in e:
                num *= factorial(a)
            total = total + c * Fraction(num, factorial(sum(e) + self.m))
        return simplify(total)

    # display / serialization
    def __repr__(self):
        return f"PolyForm(m={self.m}, {self})"

    def __str__(self):
        if not self.terms:
            return "0"
        names = [f"t{i + 1}" for i in range(self.m)] + \
                (["s"] if self.nparams == 1 else [f"p{i + 1}" for i in range(self.nparams)])
        parts = []
        for (e, I), c in sorted(self.terms.items(), key=lambda kv: (len(kv[0][1]), kv[0][1], kv[0][0])):
            mono = "*".join(f"{names[v]}^{a}" if a > 1 else names[v] for v, a in enumerate(e) if a)
            diff = "^".join(f"d{names[v]}" for v in I)
            body = "*".join(x for x in (mono, diff) if x)
            parts.append(f"({format_scalar(c)})" + (f"*{body}" if body else ""))
        return " + ".join(parts)

    def to_json(self) -> dict:
        terms = [{"t": list(e), "dt": [v + 1 for v in I], "c": format_scalar(c)}
                 for (e, I), c in sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))]
        doc = {"m": self.m, "terms": terms}
        if self.nparams:
            doc["nparams"] = self.nparams
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "PolyForm":
        m = int(doc["m"])
        nparams = int(doc.get("nparams", 0))
        terms: dict = {}
        for t_ in doc.get("terms", []):
            e = tuple(int(a) for a in t_["t"])
            raw = [int(v) for v in t_.get("dt", [])]
            if any(v < 1 or v > m + nparams for v in raw):
                raise DimensionMismatchError(f"dt index out of range in {t_}")
            order = sorted(range(len(raw)), key=lambda i: raw[i])
            if len(set(raw)) != len(raw):
                continue
            inv = sum(1 for i in range(len(raw)) for j in range(i + 1, len(raw)) if raw[i] > raw[j])
            sign = -1 if inv % 2 else 1
            I = tuple(raw[i] - 1 for i in order)
            c = simplify(as_scalar(t_["c"])) * sign
            terms[(e, I)] = terms.get((e, I), 0) + c
        return cls(m, terms, nparams)


def t(m: int, i: int, nparams: int = 0) -> PolyForm:
    return PolyForm.var(m, i, nparams)


def dt(m: int, i: int, nparams: int = 0) -> PolyForm:
    return PolyForm.dvar(m, i, nparams)


def const(m: int, c, nparams: int = 0) -> PolyForm:
    return PolyForm.constant(m, c, nparams)
