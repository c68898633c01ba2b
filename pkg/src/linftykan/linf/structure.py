"""Homology, Postnikov truncations and nilpotency of L-infinity algebras."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from ..gradedlin import linalg, simplify
from .algebra import LInftyAlgebra, koszul_sort

__all__ = ["homology", "homology_dims", "truncate_linf", "Truncation", "tower_map",
           "is_nilpotent", "lower_central_series", "adapted_basis"]


def homology(L: LInftyAlgebra) -> dict:
    """{k: (dim H_k, representatives)} for k = 0 .. top degree."""
    out = {}
    for k in range(0, L.top_degree + 1):
        d_in = L.differential_matrix(k + 1) if L.dim(k + 1) else []
        d_out = L.differential_matrix(k) if k > 0 and L.dim(k - 1) else []
        if d_in and not d_in[0]:
            d_in = []
        out[k] = linalg.two_term_homology(d_in, d_out, L.dim(k))
    return out


def homology_dims(L: LInftyAlgebra) -> dict:
    return {k: v[0] for k, v in homology(L).items()}


@dataclass
class Truncation:
    """Quotient Q of ``source`` with per-degree projections and sections (P S = 1)."""

    algebra: LInftyAlgebra
    source: LInftyAlgebra
    proj: dict
    sect: dict
    n: int
    mode: str

    def project(self, v: dict) -> dict:
        out = {}
        for (d, i), c in v.items():
            P = self.proj.get(d)
            if P is None:
                continue
            for r in range(len(P)):
                if P[r][i] != 0:
                    out[(d, r)] = out.get((d, r), 0) + P[r][i] * c
        return {k: simplify(c) for k, c in out.items() if c != 0}

    def lift(self, v: dict) -> dict:
        out = {}
        for (d, i), c in v.items():
            S = self.sect[d]
            for r in range(len(S)):
                if S[r][i] != 0:
                    out[(d, r)] = out.get((d, r), 0) + S[r][i] * c
        return {k: simplify(c) for k, c in out.items() if c != 0}


def _identity(n):
    return linalg.identity(n)


def _quotient(L: LInftyAlgebra, proj: dict, sect: dict, n: int, mode: str) -> Truncation:
    dims = {k: len(P) for k, P in proj.items() if len(P)}
    shell = Truncation(None, L, proj, sect, n, mode)
    table = {}
    probe = LInftyAlgebra(dims, {})
    basis = probe.basis()
    top = probe.top_degree
    for k in range(1, top + 3):
        for combo in itertools.combinations_with_replacement(basis, k):
            sign, key = koszul_sort(combo)
            if sign == 0:
                continue
            od = sum(d for d, _ in key) + k - 2
            if od not in dims:
                continue
            val = L.bracket(*[shell.lift({b: Fraction(1)}) for b in key])
            val = shell.project(val)
            if val:
                table[key] = {i: c for (_, i), c in val.items()}
    labels = {}
    for k in dims:
        if proj[k] == _identity(L.dim(k)):
            labels[k] = list(L.space.labels[k])
    Q = LInftyAlgebra(dims, table, labels=labels, scalars=L.scalars,
                      name=f"tau{'<=' if mode == 'le' else '<'}{n}({L.name or 'L'})")
    shell.algebra = Q
    return shell


def _mode(mode: str) -> str:
    if mode in ("<=", "≤", "le"):
        return "le"
    if mode in ("<", "lt"):
        return "lt"
    raise ValueError(f"unknown truncation mode {mode!r}")


def truncate_linf(L: LInftyAlgebra, n: int, mode: str = "le", with_maps: bool = False):
    """tau_{<=n} L (degree n replaced by coker d_{n+1}) or tau_{<n} L (by im d_n).

    Brackets are inherited: lift along a section, bracket in L, project.
    With ``with_maps`` the :class:`Truncation` record (projection L -> tau,
    section, source) is returned instead of just the algebra.
    """
    if n < 0:
        raise ValueError("truncation degree must be >= 0")
    mode = _mode(mode)
    proj, sect = {}, {}
    for k in range(0, n):
        if L.dim(k):
            proj[k] = _identity(L.dim(k))
            sect[k] = _identity(L.dim(k))
    dn = L.dim(n)
    if mode == "le" and dn:
        D = L.differential_matrix(n + 1) if L.dim(n + 1) else []
        B = linalg.column_space(D) if D and D[0] else []
        C = linalg.complement_basis(B, dn)
        cols = [list(b) for b in B] + [[Fraction(int(i == c)) for i in range(dn)] for c in C]
        # rows of the inverse of [B | E_C] give coordinates; keep the E_C part
        M = linalg.transpose(cols)
        aug = [list(M[i]) + [Fraction(int(i == j)) for j in range(dn)] for i in range(dn)]
        R, _ = linalg.rref(aug)
        inv = [row[dn:] for row in R]
        proj[n] = inv[len(B):]
        sect[n] = [[Fraction(int(i == c)) for c in C] for i in range(dn)]
    elif mode == "lt" and dn and n >= 1:
        D = L.differential_matrix(n)
        _, piv = linalg.rref(D)
        W = [[D[i][p] for p in piv] for i in range(L.dim(n - 1))]
        P = []
        for i in range(dn):
            col = [D[r][i] for r in range(L.dim(n - 1))]
            P.append(linalg.solve(W, col))
        proj[n] = linalg.transpose(P) if P and P[0] else []
        sect[n] = [[Fraction(int(i == p)) for p in piv] for i in range(dn)]
        if not piv:
            proj.pop(n)
            sect.pop(n)
    proj = {k: v for k, v in proj.items() if v}
    sect = {k: v for k, v in sect.items() if k in proj}
    T = _quotient(L, proj, sect, n, mode)
    return T if with_maps else T.algebra


def tower_map(T1: Truncation, T2: Truncation) -> dict:
    """Induced map T1 -> T2 of quotients of the same algebra, per degree (P2 . S1)."""
    out = {}
    for k, S in T1.sect.items():
        P = T2.proj.get(k)
        if P is None:
            out[k] = [[] for _ in range(0)]
            continue
        out[k] = linalg.matmul(P, S)
    return out


def _span_basis(vectors, basis_labels):
    """Row-reduced basis of the span of vectors given as dicts."""
    if not vectors:
        return []
    rows = [[v.get(b, 0) for b in basis_labels] for v in vectors]
    R, piv = linalg.rref(rows)
    return [{b: c for b, c in zip(basis_labels, R[i]) if c != 0} for i in range(len(piv))]


def lower_central_series(L: LInftyAlgebra, max_steps: int = 64):
    """[L^1, L^2, ...] as lists of basis dicts, ending at 0 or at stabilization."""
    labels = L.basis()
    current = [{b: Fraction(1)} for b in labels]
    series = [current]
    top = L.top_degree
    for _ in range(max_steps):
        if not current:
            break
        gens = []
        for k in range(1, top + 3):
            for v in current:
                for rest in itertools.combinations_with_replacement(labels, k - 1):
                    val = L.bracket(v, *[{b: Fraction(1)} for b in rest])
                    if val:
                        gens.append(val)
        nxt = _span_basis(gens, labels)
        if len(nxt) == len(current):
            series.append(nxt)
            break
        series.append(nxt)
        current = nxt
    return series


def is_nilpotent(L: LInftyAlgebra):
    """(True, class) if the lower central series (all arities, unary included) reaches 0."""
    series = lower_central_series(L)
    for c, term in enumerate(series):
        if not term:
            return True, c
    return False, None


def adapted_basis(L: LInftyAlgebra):
    """Basis compatible with the lower central series of a nilpotent L.

    Returns (L', to_new, to_old, layers) where L' is L in the new basis,
    ``to_new[k]``/``to_old[k]`` convert coordinates in degree k and
    ``layers[(k, i)]`` is the largest s with the basis vector in L^s.  The
    CE differential of a generator only involves generators of lower layers.
    """
    ok, c = is_nilpotent(L)
    if not ok:
        raise ValueError("algebra is not nilpotent")
    series = lower_central_series(L)
    new_cols = {k: [] for k in L.space.degrees()}
    layers = {}
    for s in range(c, 0, -1):
        for v in series[s - 1]:
            d = next(iter(v))[0]
            cand = new_cols[d] + [[v.get((d, i), 0) for i in range(L.dim(d))]]
            if linalg.rank(cand) > len(new_cols[d]):
                layers[(d, len(new_cols[d]))] = s
                new_cols[d] = cand
    # order generators by increasing layer inside each degree
    to_old, to_new, final_layers = {}, {}, {}
    for d, cols in new_cols.items():
        order = sorted(range(len(cols)), key=lambda i: (layers[(d, i)], i))
        cols = [cols[i] for i in order]
        for new_i, old_i in enumerate(order):
            final_layers[(d, new_i)] = layers[(d, old_i)]
        Mold = linalg.transpose(cols)  # columns = new basis in old coordinates
        n = len(cols)
        aug = [list(Mold[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        R, _ = linalg.rref(aug)
        to_old[d] = Mold
        to_new[d] = [row[n:] for row in R]
    return L.change_basis(to_new), to_new, to_old, final_layers
