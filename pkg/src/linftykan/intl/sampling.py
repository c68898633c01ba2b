"""Random Maurer-Cartan simplices for nilpotent algebras (test and demo input)."""
from __future__ import annotations

import itertools
import random
from fractions import Fraction

from ..forms import PolyForm
from ..linf import LInftyAlgebra, adapted_basis, ce_differential
from .abelian import _cone_primitive
from .fill import _convert
from .mc import MCElement, evaluate_ce, validate_mc

__all__ = ["random_form", "random_mc", "random_horn"]


def random_form(m: int, k: int, rng: random.Random, max_deg: int = 2, coeff: int = 3) -> PolyForm:
    """A k-form on Delta^m with integer coefficients and polynomial degree <= max_deg."""
    terms = {}
    for I in itertools.combinations(range(m), k):
        for _ in range(rng.randint(1, 2)):
            e = [0] * m
            for _ in range(rng.randint(0, max_deg)):
                e[rng.randrange(m)] += 1
            c = Fraction(rng.randint(-coeff, coeff))
            if c:
                terms[(tuple(e), I)] = terms.get((tuple(e), I), 0) + c
    return PolyForm(m, {key: c for key, c in terms.items() if c})


def random_mc(L: LInftyAlgebra, m: int, rng: random.Random, max_deg: int = 2) -> MCElement:
    """Solve the MC equation generator by generator in an adapted basis.

    alpha_g = K(phi(delta xi_g)) + d(random), with K the cone primitive from
    vertex 0; phi(delta xi_g) is closed once the earlier generators are set.
    """
    Lp, to_new, to_old, layers = adapted_basis(L)
    ce = ce_differential(Lp)
    pos = {g: p for p, g in enumerate(ce.generators)}
    phi = {}
    for g in sorted(layers, key=lambda g: (layers[g], g[0], g[1])):
        k = g[0] + 1
        if k > m:
            continue
        rhs = evaluate_ce(ce, ce.table.get(pos[g], {}), phi, m)
        form = _cone_primitive(rhs) if not rhs.is_zero() else PolyForm.zero(m)
        if k >= 1:
            form = form + random_form(m, k - 1, rng, max_deg).d()
        if not form.is_zero():
            phi[g] = form
    x = MCElement(L, m, _convert(phi, Lp, to_old, m, L))
    ok, rep = validate_mc(L, x)
    if not ok:
        raise ArithmeticError(f"random MC construction failed at {rep['generator']}")
    return x


def random_horn(L: LInftyAlgebra, m: int, j: int, rng: random.Random, max_deg: int = 2):
    """(horn, source simplex): the horn Lambda[m, j] of a random m-simplex."""
    from .fill import horn_of
    x = random_mc(L, m, rng, max_deg)
    return horn_of(x, j), x
