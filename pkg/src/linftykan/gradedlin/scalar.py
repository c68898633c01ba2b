"""Exact scalars in a multiquadratic field Q(sqrt2, sqrt3, sqrt5, ...).

A :class:`Scalar` is a finite Q-linear combination of square roots of
squarefree positive integers.  Square roots of distinct squarefree integers
are linearly independent over Q, so the representation is canonical; the
tag ``sqrtN`` names the basis element ``sqrt(N)``.

String grammar (whitespace-insensitive)::

    scalar := term (('+' | '-') term)*
    term   := ['-'] rational ['*' 'sqrt' N] | ['-'] 'sqrt' N
    rational := INT ['/' INT]

so ``"3/4"``, ``"1/2*sqrt2 + 5"`` and ``"-sqrt3"`` all parse.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from numbers import Rational

import mpmath

__all__ = ["Scalar", "as_scalar", "parse_scalar", "format_scalar", "UnsupportedScalarError",
           "to_float", "is_rational", "coordinates", "simplify"]


class UnsupportedScalarError(ValueError):
    """Raised when a value lies outside the configured scalar field."""


def _squarefree_part(n: int) -> tuple[int, int]:
    """Return (k, r) with n = k**2 * r and r squarefree."""
    k, r = 1, n
    p = 2
    while p * p <= r:
        while r % (p * p) == 0:
            r //= p * p
            k *= p
        p += 1
    return k, r


def _primes(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


class Scalar:
    """Element of Q(sqrt n1, sqrt n2, ...), stored as {squarefree n: coefficient}."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for n, v in coeffs.items():
                if n < 1:
                    raise UnsupportedScalarError(f"sqrt of non-positive integer {n}")
                v = Fraction(v)
                if v == 0:
                    continue
                k, r = _squarefree_part(n)
                c[r] = c.get(r, Fraction(0)) + v * k
                if c[r] == 0:
                    del c[r]
        self._c = c
        self._hash = None

    # construction helpers
    @classmethod
    def sqrt(cls, n: int) -> "Scalar":
        return cls({n: 1})

    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    def rational_part(self) -> Fraction:
        return self._c.get(1, Fraction(0))

    def is_rational(self) -> bool:
        return all(n == 1 for n in self._c)

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._c))

    # arithmetic
    def __add__(self, other):
        other = as_scalar(other)
        c = dict(self._c)
        for n, v in other._c.items():
            c[n] = c.get(n, 0) + v
        return _make(c)

    __radd__ = __add__

    def __neg__(self):
        return _make({n: -v for n, v in self._c.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        return self + (-as_scalar(other))

    def __rsub__(self, other):
        return as_scalar(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return _ZERO
            return _make({n: v * other for n, v in self._c.items()})
        other = as_scalar(other)
        c: dict = {}
        for a, x in self._c.items():
            for b, y in other._c.items():
                g = gcd(a, b)
                n = (a // g) * (b // g)
                c[n] = c.get(n, 0) + x * y * g
        return _make(c)

    __rmul__ = __mul__

    def _conjugate(self, p: int) -> "Scalar":
        return _make({n: (-v if n % p == 0 else v) for n, v in self._c.items()})

    def inverse(self) -> "Scalar":
        if not self._c:
            raise ZeroDivisionError("Scalar division by zero")
        if self.is_rational():
            return _make({1: 1 / self._c[1]})
        primes = sorted({p for n in self._c for p in _primes(n)})
        p = primes[-1]
        conj = self._conjugate(p)
        return conj * (self * conj).inverse()

    def __truediv__(self, other):
        return self * as_scalar(other).inverse()

    def __rtruediv__(self, other):
        return as_scalar(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = _ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # comparison
    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self._c
            return self._c == {1: Fraction(other)}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.rational_part())
            else:
                self._hash = hash(tuple(sorted(self._c.items())))
        return self._hash

    def __bool__(self):
        return bool(self._c)

    def sign(self) -> int:
        """Exact sign, found by evaluating at increasing precision."""
        if not self._c:
            return 0
        if self.is_rational():
            v = self._c[1]
            return (v > 0) - (v < 0)
        scale = sum(abs(v) for v in self._c.values())
        dps = 30
        while True:
            with mpmath.workdps(dps):
                val = mpmath.mpf(0)
                for n, v in self._c.items():
                    val += mpmath.mpf(v.numerator) / v.denominator * mpmath.sqrt(n)
                err = mpmath.mpf(10) ** (-(dps - 5)) * (1 + float(scale))
                if abs(val) > err:
                    return 1 if val > 0 else -1
            dps *= 2
            if dps > 10000:  # a nonzero element cannot get here
                raise ArithmeticError("sign evaluation did not converge")

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __float__(self):
        return float(sum(float(v) * (n ** 0.5) for n, v in self._c.items()))

    def __repr__(self):
        return f"Scalar({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


def _make(c: dict) -> Scalar:
    s = Scalar.__new__(Scalar)
    s._c = {n: Fraction(v) for n, v in c.items() if v != 0}
    s._hash = None
    return s


_ZERO = _make({})
_ONE = _make({1: 1})


def as_scalar(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction, Rational)):
        return _make({1: Fraction(x)})
    if isinstance(x, str):
        return parse_scalar(x)
    raise UnsupportedScalarError(f"cannot interpret {x!r} as an exact scalar")


def is_rational(x) -> bool:
    if isinstance(x, Scalar):
        return x.is_rational()
    return isinstance(x, (int, Fraction))


def coordinates(x, basis: tuple[int, ...]) -> list[Fraction]:
    """Rational coordinates of ``x`` on the given squarefree basis."""
    s = as_scalar(x)
    extra = set(s.support()) - set(basis)
    if extra:
        raise UnsupportedScalarError(f"sqrt{sorted(extra)} outside the configured basis")
    return [s.coeffs.get(n, Fraction(0)) for n in basis]


def to_float(x) -> float:
    return float(x)


def simplify(x):
    """Collapse rational Scalars to Fraction; leave irrational ones alone."""
    if isinstance(x, Scalar) and x.is_rational():
        return x.rational_part()
    return x


_TERM = re.compile(r"^(?:(\d+)(?:/(\d+))?)?(?:\*?sqrt(\d+))?$")


def parse_scalar(text) -> Scalar:
    if isinstance(text, (int, Fraction, Scalar)):
        return as_scalar(text)
    s = re.sub(r"\s+", "", str(text))
    if not s:
        raise ValueError("empty scalar string")
    if s[0] not in "+-":
        s = "+" + s
    parts = re.findall(r"[+-][^+-]+", s)
    if "".join(parts) != s:
        raise ValueError(f"malformed scalar {text!r}")
    c: dict = {}
    for part in parts:
        sign = -1 if part[0] == "-" else 1
        m = _TERM.match(part[1:])
        if not m or (m.group(1) is None and m.group(3) is None):
            raise ValueError(f"malformed scalar term {part!r} in {text!r}")
        num, den, root = m.groups()
        coef = Fraction(int(num) if num else 1, int(den) if den else 1)
        n = int(root) if root else 1
        if n < 1:
            raise UnsupportedScalarError("sqrt0 is not a field generator")
        k, r = _squarefree_part(n)
        c[r] = c.get(r, 0) + sign * coef * k
    return _make(c)


def format_scalar(x) -> str:
    s = as_scalar(x)
    if not s._c:
        return "0"
    pieces = []
    for n in sorted(s._c):
        v = s._c[n]
        mag = abs(v)
        if n == 1:
            body = str(mag)
        elif mag == 1:
            body = f"sqrt{n}"
        else:
            body = f"{mag}*sqrt{n}"
        pieces.append(("-" if v < 0 else "+", body))
    out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out

