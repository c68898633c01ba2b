import itertools
import random
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from linftykan.forms import (DifferentialMismatchError, DimensionMismatchError, FormDegreeError,
                             IncompatibleHornError, PolyForm, codegeneracy, coface, horn_extend_form,
                             restrict_to_horn, vertex_map)


def t(m, i):
    return PolyForm.var(m, i)


def dt(m, i):
    return PolyForm.dvar(m, i)


def rnd(rng, m, k, deg=2):
    terms = {}
    for I in itertools.combinations(range(m), k):
        for _ in range(2):
            e = [0] * m
            for _ in range(rng.randint(0, deg)):
                e[rng.randrange(m)] += 1
            terms[(tuple(e), I)] = terms.get((tuple(e), I), 0) + Fraction(rng.randint(-3, 3), rng.randint(1, 2))
    return PolyForm(m, {k_: c for k_, c in terms.items() if c})


def dirichlet_period(form):
    """Oracle: int over Delta^m of t^a dt_1..dt_m is prod(a_i!) / (m + |a|)!."""
    m = form.m
    total = Fraction(0)
    for (e, I), c in form.terms.items():
        assert I == tuple(range(m))
        num = 1
        for a in e:
            num *= factorial(a)
        total += c * Fraction(num, factorial(m + sum(e)))
    return total


def test_basic_identities():
    assert t(2, 1).d() == dt(2, 1)
    assert dt(2, 1).wedge(dt(2, 2)).pullback(vertex_map(1, 2, [0, 2])).is_zero()
    assert t(2, 1).wedge(dt(2, 2)).wedge(dt(2, 1)) == -(t(2, 1).wedge(dt(2, 1).wedge(dt(2, 2))))
    with pytest.raises(DimensionMismatchError):
        t(2, 1) + t(3, 1)


def pair(form, p, vecs):
    """Value of a constant-point form on tangent vectors: sum over I of c_I det(v[I])."""
    total = 0
    for I, c in form.evaluate(p).items():
        M = [[Fraction(v[i]) for i in I] for v in vecs]
        if len(I) == 1:
            det = M[0][0]
        else:
            det = M[0][0] * M[1][1] - M[0][1] * M[1][0]
        total += c * det
    return total


def test_wedge_sign_against_numeric_evaluation():
    rng = random.Random(1)
    for _ in range(20):
        a, b = rnd(rng, 3, 1), rnd(rng, 3, 1)
        p = [Fraction(1, 5), Fraction(1, 3), Fraction(1, 4)]
        v1, v2 = [1, 0, 2], [0, 3, -1]
        lhs = pair(a.wedge(b), p, [v1, v2])
        rhs = pair(a, p, [v1]) * pair(b, p, [v2]) - pair(a, p, [v2]) * pair(b, p, [v1])
        assert lhs == rhs


def test_periods():
    assert dt(2, 1).wedge(dt(2, 2)).simplex_period() == Fraction(1, 2)
    assert PolyForm.zero(3).simplex_period() == 0
    assert t(1, 1).wedge(dt(1, 1)).simplex_period() == Fraction(1, 2)
    with pytest.raises(FormDegreeError):
        dt(2, 1).simplex_period()
    rng = random.Random(2)
    for m in (1, 2, 3):
        w = rnd(rng, m, m, deg=4)
        assert w.simplex_period() == dirichlet_period(w)


def test_contract_and_s_integral():
    m = 2
    field = [PolyForm.constant(m, 3), PolyForm.constant(m, 0)]
    assert dt(m, 1).contract(field) == PolyForm.constant(m, 3)
    assert t(m, 1).contract(field).is_zero()
    # v_I(x) = x - p_I(x) for I = {0, 1} on Delta^2: p_I sends vertices 0, 1 to 0
    # so v = (t1, 0) and i_v(dt1 dt2) = t1 dt2
    v = [t(m, 1), PolyForm.zero(m)]
    assert dt(m, 1).wedge(dt(m, 2)).contract(v) == t(m, 1).wedge(dt(m, 2))
    s = PolyForm.var(m, m + 1, 1)
    fam = s.wedge(PolyForm.dvar(m, 1, 1))
    assert fam.s_integral() == dt(m, 1).scale(Fraction(1, 2))
    assert PolyForm.dvar(m, 1, 1).s_integral() == dt(m, 1)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(0, 3), st.integers(0, 3), st.integers(0, 10**6))
def test_leibniz(m, p, q, seed):
    rng = random.Random(seed)
    p, q = min(p, m), min(q, m)
    a, b = rnd(rng, m, p), rnd(rng, m, q)
    assert a.wedge(b).d() == a.d().wedge(b) + a.wedge(b.d()).scale((-1) ** p)
    assert a.d().d().is_zero()


def test_functoriality_and_simplicial_identities():
    rng = random.Random(3)
    w = rnd(rng, 3, 1)
    for i in range(3):
        for j in range(i + 1, 3 + 1):
            # d_i d_j = d_{j-1} d_i on forms: pull back along delta^j delta^i = delta^i delta^{j-1}
            lhs = w.pullback(coface(3, j)).pullback(coface(2, i))
            rhs = w.pullback(coface(3, i)).pullback(coface(2, j - 1))
            assert lhs == rhs
            assert coface(3, j).compose(coface(2, i)) == coface(3, i).compose(coface(2, j - 1))
    u = rnd(rng, 2, 1)
    for i in range(3):
        assert u.pullback(codegeneracy(2, i)).pullback(coface(3, i)) == u
        assert u.pullback(codegeneracy(2, i)).pullback(coface(3, i + 1)) == u
    phi, psi = vertex_map(2, 3, [0, 2, 3]), vertex_map(3, 3, [1, 0, 3, 2])
    assert w.pullback(psi).pullback(phi) == w.pullback(psi.compose(phi))


def test_stokes():
    rng = random.Random(4)
    for m in (1, 2, 3):
        for _ in range(5):
            w = rnd(rng, m, m - 1, deg=3)
            faces = sum(((-1) ** i) * w.pullback(coface(m, i)).simplex_period() for i in range(m + 1)) \
                if m > 1 else w.pullback(coface(1, 0)).evaluate([]).get((), 0) - w.pullback(coface(1, 1)).evaluate([]).get((), 0)
            assert w.d().simplex_period() == faces


def test_horn_extension_examples():
    m, j = 2, 0
    zero = {k: PolyForm.zero(1) for k in (1, 2)}
    assert horn_extend_form(zero, m, j).is_zero()
    fam = {1: dt(1, 1).scale(2), 2: dt(1, 1).scale(5)}
    ext = horn_extend_form(fam, m, j)
    assert restrict_to_horn(ext, j) == fam and ext.d().is_zero()
    beta = dt(2, 1).wedge(dt(2, 2))
    ext = horn_extend_form({k: PolyForm.zero(1) for k in (1, 2)}, m, j, beta)
    assert ext.d() == beta and all(f.is_zero() for f in restrict_to_horn(ext, j).values())


def test_horn_extension_errors():
    with pytest.raises(IncompatibleHornError):
        horn_extend_form({1: PolyForm.constant(1, 1), 2: PolyForm.constant(1, 2)}, 2, 0)
    with pytest.raises(DifferentialMismatchError):
        horn_extend_form({1: PolyForm.constant(1, 1), 2: PolyForm.constant(1, 1)}, 2, 0, dt(2, 1))


def test_horn_extension_random_with_pins():
    rng = random.Random(5)
    for m in (1, 2, 3):
        for j in range(m + 1):
            for k in range(0, m):
                full = rnd(rng, m, k, deg=2)
                beta = full.d()
                fam = restrict_to_horn(full, j)
                ext = horn_extend_form(fam, m, j, beta if k < m else None)
                assert restrict_to_horn(ext, j) == fam
                assert ext.d() == beta
                assert horn_extend_form(fam, m, j, beta, pin=(fam, full)) == full
