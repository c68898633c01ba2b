"""Independent reference implementations used only by the test-suite."""
from __future__ import annotations

import itertools
from fractions import Fraction


def _chi(labels):
    """Antisymmetric Koszul sign of sorting ``labels`` (pairs (deg, pos))."""
    items = list(labels)
    sign = 1
    for i in range(len(items)):
        for j in range(len(items) - 1 - i):
            a, b = items[j], items[j + 1]
            if a[1] > b[1]:
                items[j], items[j + 1] = b, a
                sign *= -1 if (a[0] * b[0]) % 2 == 0 else 1
    return sign


def lada_markl_defects(L, max_n=None):
    """Evaluate sum_{i+j=n+1} sum_unshuffles chi(s) (-1)^{i(j-1)} l_j(l_i(..), ..).

    Brackets are evaluated through ``L.bracket`` on vectors, with graded
    antisymmetry applied to arbitrary input orders.  Returns the list of
    (inputs, nonzero defect vector).
    """
    basis = L.basis()
    top = L.top_degree
    max_n = max_n or top + 3
    bad = []
    for n in range(1, max_n + 1):
        for xs in itertools.combinations_with_replacement(basis, n):
            if any(xs.count(b) > 1 and b[0] % 2 == 0 for b in set(xs)):
                continue
            total = {}
            for i in range(1, n + 1):
                j = n + 1 - i
                for first in itertools.combinations(range(n), i):
                    rest = [p for p in range(n) if p not in first]
                    order = list(first) + rest
                    # chi of the permutation taking xs to the reordered list
                    chi = _chi([(xs[p][0], p) for p in order])
                    inner = L.bracket(*[{xs[p]: Fraction(1)} for p in first])
                    if not inner:
                        continue
                    outer = L.bracket(inner, *[{xs[p]: Fraction(1)} for p in rest])
                    s = chi * (-1) ** (i * (j - 1))
                    for key, c in outer.items():
                        total[key] = total.get(key, 0) + s * c
            total = {k: c for k, c in total.items() if c != 0}
            if total:
                bad.append((xs, total))
    return bad


def determinantal_divisors(M):
    """Invariant factors from gcds of k x k minors (independent of any row reduction)."""
    from math import gcd
    rows, cols = len(M), len(M[0]) if M else 0

    def det(A):
        n = len(A)
        if n == 0:
            return 1
        return sum((-1) ** c * A[0][c] * det([r[:c] + r[c + 1:] for r in A[1:]]) for c in range(n))
    divisors = [1]
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for rs in itertools.combinations(range(rows), k):
            for cs in itertools.combinations(range(cols), k):
                g = gcd(g, abs(det([[M[r][c] for c in cs] for r in rs])))
        if g == 0:
            break
        divisors.append(g)
    return [divisors[i] // divisors[i - 1] for i in range(1, len(divisors))]


def min_combination_norm(gens, C):
    """Smallest nonzero norm of sum c_i g_i over integer |c_i| <= C (float brute force)."""
    import numpy as np
    G = np.array([[float(x) for x in g] for g in gens])
    cs = np.array(list(itertools.product(range(-C, C + 1), repeat=len(G))))
    n = np.linalg.norm(cs @ G, axis=1)
    n = n[n > 1e-9]
    return float(n.min()) if n.size else float("inf")


def brute_force_discrete(gens, C=50):
    """Discrete iff enlarging the coefficient box from C/4 to C finds no shorter vector."""
    return not (min_combination_norm(gens, C) < min_combination_norm(gens, C // 4) - 1e-9)
