"""Maurer-Cartan elements: simplices of the integrating simplicial object."""
from __future__ import annotations

from ..forms import PolyForm, codegeneracy, coface
from ..linf import LInftyAlgebra, ce_differential

__all__ = ["MCElement", "validate_mc", "evaluate_ce", "face", "degeneracy", "DegreeMismatchError",
           "MCValidationError", "zero_element"]


class DegreeMismatchError(ValueError):
    """A generator of CE degree n was assigned a form of another degree."""


class MCValidationError(ValueError):
    pass


def gen_id(g) -> str:
    return f"{g[0]}:{g[1]}"


def parse_gen_id(s: str):
    d, i = s.split(":")
    return int(d), int(i)


class MCElement:
    """An m-simplex: a PolyForm of degree deg + 1 for every basis label (deg, idx) of L."""

    def __init__(self, algebra: LInftyAlgebra, m: int, forms: dict | None = None):
        self.algebra = algebra
        self.m = int(m)
        clean = {}
        for g, f in (forms or {}).items():
            g = tuple(g)
            if g not in algebra.basis():
                raise KeyError(f"{g} is not a basis label of the algebra")
            if f.m != self.m or f.nparams:
                raise DegreeMismatchError(f"form for {g} lives on Delta^{f.m}, expected Delta^{m}")
            if not f.is_zero():
                degs = f.degrees()
                if degs != {g[0] + 1}:
                    raise DegreeMismatchError(
                        f"generator {g} has CE degree {g[0] + 1} but form degrees {sorted(degs)}")
                clean[g] = f
        self.forms = clean

    def form(self, g) -> PolyForm:
        return self.forms.get(tuple(g), PolyForm.zero(self.m))

    def is_zero(self) -> bool:
        return not self.forms

    def __eq__(self, other):
        if not isinstance(other, MCElement):
            return NotImplemented
        return self.m == other.m and self.forms == other.forms

    __hash__ = None

    def __add__(self, other):
        keys = set(self.forms) | set(other.forms)
        return MCElement(self.algebra, self.m, {g: self.form(g) + other.form(g) for g in keys})

    def __sub__(self, other):
        keys = set(self.forms) | set(other.forms)
        return MCElement(self.algebra, self.m, {g: self.form(g) - other.form(g) for g in keys})

    def scale(self, c):
        return MCElement(self.algebra, self.m, {g: f.scale(c) for g, f in self.forms.items()})

    def map_forms(self, fn, m=None):
        return MCElement(self.algebra, self.m if m is None else m,
                         {g: fn(f) for g, f in self.forms.items()})

    def __repr__(self):
        inner = ", ".join(f"{gen_id(g)}: {f}" for g, f in sorted(self.forms.items()))
        return f"MCElement(m={self.m}, {{{inner}}})"

    def to_json(self) -> dict:
        return {"schema": 1, "kind": "mc", "algebra": self.algebra.name, "m": self.m,
                "forms": {gen_id(g): f.to_json() for g, f in sorted(self.forms.items())}}

    @classmethod
    def from_json(cls, doc: dict, algebra: LInftyAlgebra) -> "MCElement":
        m = int(doc["m"])
        forms = {parse_gen_id(k): PolyForm.from_json(v) for k, v in doc.get("forms", {}).items()}
        return cls(algebra, m, forms)


def zero_element(L: LInftyAlgebra, m: int) -> MCElement:
    return MCElement(L, m, {})


def evaluate_ce(ce, poly: dict, assign: dict, m: int) -> PolyForm:
    """Image of a CE polynomial under generator -> form (a DGA map)."""
    out = PolyForm.zero(m)
    one = PolyForm.constant(m, 1)
    for mono, c in poly.items():
        term = one.scale(c)
        for p in mono:
            f = assign.get(ce.generators[p])
            if f is None or f.is_zero():
                term = None
                break
            term = term.wedge(f)
            if term.is_zero():
                break
        if term is not None:
            out = out + term
    return out


def validate_mc(L: LInftyAlgebra, candidate, m: int | None = None, ce=None):
    """Check d phi(xi) = phi(delta xi) for every generator.

    Returns (ok, report); the report names the first failing generator and
    the residual form.  ``candidate`` may be an MCElement or a dict.
    """
    if isinstance(candidate, MCElement):
        x = candidate
    else:
        if m is None:
            m = next(iter(candidate.values())).m if candidate else 0
        x = MCElement(L, m, candidate)
    ce = ce or ce_differential(L)
    for p, g in enumerate(ce.generators):
        lhs = x.form(g).d()
        rhs = evaluate_ce(ce, ce.table.get(p, {}), x.forms, x.m)
        res = lhs - rhs
        if not res.is_zero():
            return False, {"generator": g, "residual": res}
    return True, None


def face(x: MCElement, i: int) -> MCElement:
    if not 0 <= i <= x.m or x.m == 0:
        raise IndexError(f"face index {i} invalid for a {x.m}-simplex")
    phi = coface(x.m, i)
    return MCElement(x.algebra, x.m - 1, {g: f.pullback(phi) for g, f in x.forms.items()})


def degeneracy(x: MCElement, i: int) -> MCElement:
    if not 0 <= i <= x.m:
        raise IndexError(f"degeneracy index {i} invalid for a {x.m}-simplex")
    phi = codegeneracy(x.m, i)
    return MCElement(x.algebra, x.m + 1, {g: f.pullback(phi) for g, f in x.forms.items()})
