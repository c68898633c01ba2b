"""Constructors for standard L-infinity algebras."""
from __future__ import annotations

import itertools
from fractions import Fraction

from ..gradedlin import as_scalar, format_scalar, simplify
from .algebra import LInftyAlgebra

__all__ = ["abelian", "contractible", "lie_algebra", "su2", "heisenberg", "string_lie2",
           "jacobi_counterexample", "build_end_example", "DependenceError", "end_isomorphism",
           "STRUCTURE_SU2"]

# [e_a, e_b] = eps_abc e_c
STRUCTURE_SU2 = {(0, 1): {2: 1}, (1, 2): {0: 1}, (2, 0): {1: 1}}


class DependenceError(ValueError):
    """The two scalars are linearly dependent over Q."""


def abelian(dims, name=None) -> LInftyAlgebra:
    """All brackets zero."""
    return LInftyAlgebra(dims, {}, name=name or "abelian")


def contractible(dim: int = 1, degree: int = 0, name=None) -> LInftyAlgebra:
    """L_{degree+1} --id--> L_degree, no other brackets."""
    table = {((degree + 1, i),): {i: 1} for i in range(dim)}
    return LInftyAlgebra({degree: dim, degree + 1: dim}, table, name=name or "contractible")


def lie_algebra(dim: int, structure: dict, name=None) -> LInftyAlgebra:
    """Lie algebra in degree 0 from {(a, b): {c: f^c_ab}}."""
    table = {((0, a), (0, b)): out for (a, b), out in structure.items()}
    return LInftyAlgebra({0: dim}, table, name=name)


def su2() -> LInftyAlgebra:
    return lie_algebra(3, STRUCTURE_SU2, name="su2")


def heisenberg() -> LInftyAlgebra:
    """h3 with basis x, y, z and [x, y] = z."""
    return LInftyAlgebra({0: 3}, {((0, 0), (0, 1)): {2: 1}}, labels={0: ["x", "y", "z"]},
                         name="h3")


def _pairing_cocycle(structure, dim, pairing):
    """(a, b, c) -> <[e_a, e_b], e_c> for a < b < c."""
    L = lie_algebra(dim, structure)
    out = {}
    for a, b, c in itertools.combinations(range(dim), 3):
        br = L.bracket({(0, a): 1}, {(0, b): 1})
        val = sum((co * pairing[i][c] for (_, i), co in br.items()), Fraction(0))
        val = simplify(val)
        if val != 0:
            out[(a, b, c)] = val
    return out


def check_invariant_pairing(structure, dim, pairing) -> bool:
    """Symmetric and ad-invariant: <[x,y],z> + <y,[x,z]> = 0."""
    L = lie_algebra(dim, structure)
    for a in range(dim):
        for b in range(dim):
            if pairing[a][b] != pairing[b][a]:
                return False
    for x, y, z in itertools.product(range(dim), repeat=3):
        lhs = sum((c * pairing[i][z] for (_, i), c in L.bracket({(0, x): 1}, {(0, y): 1}).items()),
                  Fraction(0))
        rhs = sum((c * pairing[y][i] for (_, i), c in L.bracket({(0, x): 1}, {(0, z): 1}).items()),
                  Fraction(0))
        if simplify(lhs + rhs) != 0:
            return False
    return True


def string_lie2(structure=None, dim: int = 3, scale=1, name="str-su2") -> LInftyAlgebra:
    """g + R with the binary bracket of g and l3(x, y, z) = <[x, y], z>.

    The pairing is ``scale`` times the identity matrix in the given basis;
    it must be ad-invariant.
    """
    structure = structure or STRUCTURE_SU2
    scale = simplify(as_scalar(scale))
    pairing = [[scale if i == j else Fraction(0) for j in range(dim)] for i in range(dim)]
    if not check_invariant_pairing(structure, dim, pairing):
        raise ValueError("pairing is not ad-invariant")
    table = {((0, a), (0, b)): out for (a, b), out in structure.items()}
    for (a, b, c), v in _pairing_cocycle(structure, dim, pairing).items():
        table[((0, a), (0, b), (0, c))] = {0: v}
    # the degree-1 coordinate is measured so that a generator of pi_3(G) maps to ``scale``
    boundary = {"H": {"0": dim, "1": 1}, "pi_G": {"1": "G", "2": {"rank": 0, "torsion": []},
                                                "3": {"rank": 1, "torsion": []}},
                "partial": {"2": [[format_scalar(scale)]]}}
    labels = {0: ["e1", "e2", "e3"]} if dim == 3 else None
    return LInftyAlgebra({0: dim, 1: 1}, table, name=name, labels=labels,
                         scalars=_field_name(scale), meta={"boundary": boundary})


def jacobi_counterexample() -> LInftyAlgebra:
    """[e1,e2]=e3, [e2,e3]=e1, [e1,e3]=e1: antisymmetric but not Lie."""
    table = {((0, 0), (0, 1)): {2: 1}, ((0, 1), (0, 2)): {0: 1}, ((0, 0), (0, 2)): {0: 1}}
    return LInftyAlgebra({0: 3}, table, labels={0: ["e1", "e2", "e3"]}, name="jacobi-counterexample")


def _field_name(*xs) -> str:
    roots = sorted({n for x in xs for n in as_scalar(x).support() if n != 1})
    return "Q" if not roots else "Q(" + ", ".join(f"sqrt{n}" for n in roots) + ")"


def build_end_example(p, q, name=None) -> LInftyAlgebra:
    """Quotient of str + str by the line (p, q) in degree 1.

    L_0 = su2 + su2, L_1 = R^2 / (p, q)R with coordinate (a, b) -> q a - p b.
    The embedded boundary data records pi_3(G x G) = Z^2 -> H_1.
    """
    p, q = as_scalar(p), as_scalar(q)
    if p == 0 and q == 0:
        raise DependenceError("(p, q) = (0, 0)")
    if p == 0 or q == 0 or (p / q).is_rational():
        raise DependenceError(f"p = {p} and q = {q} are linearly dependent over Q")
    table = {}
    for (a, b), out in STRUCTURE_SU2.items():
        table[((0, a), (0, b))] = out
        table[((0, a + 3), (0, b + 3))] = {c + 3: v for c, v in out.items()}
    table[((0, 0), (0, 1), (0, 2))] = {0: simplify(q)}
    table[((0, 3), (0, 4), (0, 5))] = {0: simplify(-p)}
    boundary = {"H": {"0": 6, "1": 1}, "pi_G": {"1": "G", "2": {"rank": 0, "torsion": []},
                                              "3": {"rank": 2, "torsion": []}},
                "partial": {"2": [[format_scalar(q), format_scalar(-p)]]}}
    return LInftyAlgebra({0: 6, 1: 1}, table, scalars=_field_name(p, q),
                         name=name or f"end({p},{q})", meta={"boundary": boundary})


def end_isomorphism():
    """Per-degree matrices sending end(q, p) to end(p, q): swap the summands, negate L_1."""
    M0 = [[Fraction(int(j == (i + 3) % 6)) for j in range(6)] for i in range(6)]
    return {0: M0, 1: [[Fraction(-1)]]}
