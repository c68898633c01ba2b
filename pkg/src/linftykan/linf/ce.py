"""Chevalley-Eilenberg algebra Sym(L[1]^dual) and its differential."""
from __future__ import annotations

from fractions import Fraction
from math import factorial

from ..gradedlin import format_scalar, simplify
from .algebra import LInftyAlgebra

__all__ = ["CEAlgebra", "ce_differential", "ce_square_zero", "mc_system", "ARITY_SIGNS"]

# Global sign of delta per bracket arity; calibrated so that the Maurer-Cartan
# equations read d(alpha) = 1/2 [alpha, alpha] and d(beta) = 1/6 [alpha, alpha, alpha] + ...
ARITY_SIGNS = {1: 1, 2: 1, 3: 1}


def _arity_sign(k: int) -> int:
    return ARITY_SIGNS.get(k, 1)


class CEAlgebra:
    """Free graded-commutative algebra on generators xi_(deg, idx) of degree deg + 1.

    Polynomials are dicts from monomials (nondecreasing tuples of generator
    positions) to coefficients.
    """

    def __init__(self, algebra: LInftyAlgebra, table: dict):
        self.algebra = algebra
        self.generators = algebra.basis()
        self.position = {g: p for p, g in enumerate(self.generators)}
        self.degrees = [d + 1 for d, _ in self.generators]
        self.table = table  # generator position -> polynomial

    def gen(self, label) -> dict:
        return {(self.position[tuple(label)],): Fraction(1)}

    def gen_label(self, p: int) -> str:
        d, i = self.generators[p]
        return f"xi[{d},{i}]"

    # monomial arithmetic
    def mono_mul(self, a: tuple, b: tuple):
        """Return (sign, monomial) for a*b, or (0, None)."""
        items = list(a) + list(b)
        sign = 1
        for i in range(len(a), len(items)):
            j = i
            while j > 0 and items[j - 1] > items[j]:
                if self.degrees[items[j - 1]] * self.degrees[items[j]] % 2:
                    sign = -sign
                items[j - 1], items[j] = items[j], items[j - 1]
                j -= 1
        for x, y in zip(items, items[1:]):
            if x == y and self.degrees[x] % 2:
                return 0, None
        return sign, tuple(items)

    def mul(self, p: dict, q: dict) -> dict:
        out: dict = {}
        for ma, ca in p.items():
            for mb, cb in q.items():
                s, m = self.mono_mul(ma, mb)
                if s:
                    out[m] = out.get(m, 0) + s * ca * cb
        return {m: simplify(c) for m, c in out.items() if c != 0}

    def add(self, p: dict, q: dict, k=1) -> dict:
        out = dict(p)
        for m, c in q.items():
            out[m] = out.get(m, 0) + k * c
        return {m: simplify(c) for m, c in out.items() if c != 0}

    def mono_degree(self, m: tuple) -> int:
        return sum(self.degrees[g] for g in m)

    def delta(self, p: dict) -> dict:
        """Extend the generator table as a degree-1 derivation."""
        out: dict = {}
        for mono, c in p.items():
            prefix_deg = 0
            for i, g in enumerate(mono):
                sign = -1 if prefix_deg % 2 else 1
                term = self.mul(self.mul({mono[:i]: c * sign}, self.table.get(g, {})),
                                {mono[i + 1:]: Fraction(1)})
                out = self.add(out, term)
                prefix_deg += self.degrees[g]
        return out

    def delta_gen(self, label) -> dict:
        return dict(self.table.get(self.position[tuple(label)], {}))

    def format_poly(self, p: dict) -> str:
        if not p:
            return "0"
        parts = []
        for m in sorted(p):
            mono = "*".join(self.gen_label(g) for g in m) or "1"
            parts.append(f"({format_scalar(p[m])})*{mono}")
        return " + ".join(parts)


def ce_differential(L: LInftyAlgebra) -> CEAlgebra:
    """Dual of the brackets: delta(xi_e) collects every bracket landing on e."""
    ce = CEAlgebra(L, {})
    table: dict = {}
    for key, out in L.brackets.items():
        k = len(key)
        dec = sum((k - 1 - i) * d for i, (d, _) in enumerate(key)) % 2
        mult = 1
        for g in set(key):
            mult *= factorial(key.count(g))
        sign = _arity_sign(k) * (-1 if dec else 1)
        od = L.output_degree(key)
        mono = tuple(ce.position[b] for b in key)
        for i, c in out.items():
            p = ce.position[(od, i)]
            poly = table.setdefault(p, {})
            poly[mono] = poly.get(mono, 0) + sign * Fraction(1, mult) * c
    ce.table = {p: {m: simplify(c) for m, c in poly.items() if c != 0}
                for p, poly in table.items()}
    return ce


def ce_square_zero(L: LInftyAlgebra):
    """Return (ok, violations) where violations are (generator, monomial, coefficient)."""
    ce = ce_differential(L)
    violations = []
    for p, g in enumerate(ce.generators):
        dd = ce.delta(ce.table.get(p, {}))
        for mono, c in sorted(dd.items()):
            violations.append((g, tuple(ce.generators[x] for x in mono), c))
    return not violations, violations


def mc_system(L: LInftyAlgebra) -> list:
    """The MC equations d(alpha_g) = phi(delta xi_g), one (generator, polynomial, text) per generator.

    The polynomial is in the symbols alpha_h; products are wedge products.
    """
    ce = ce_differential(L)
    out = []
    for p, g in enumerate(ce.generators):
        poly = ce.table.get(p, {})
        if not poly:
            rhs = "0"
        else:
            parts = []
            for mono in sorted(poly):
                name = " ^ ".join(f"alpha[{ce.generators[q][0]},{ce.generators[q][1]}]" for q in mono)
                parts.append(f"({format_scalar(poly[mono])}) {name}")
            rhs = " + ".join(parts)
        out.append((g, poly, f"d alpha[{g[0]},{g[1]}] = {rhs}"))
    return out
