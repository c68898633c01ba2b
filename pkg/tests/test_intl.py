import random
from fractions import Fraction

import numpy as np
import pytest

from linftykan.forms import PolyForm
from linftykan.linf import abelian, contractible, heisenberg, su2
from linftykan.intl import (DegreeMismatchError, IncompatibleHornError, MCElement, NotNilpotentError, bch, classify_pair, compose_edges, degeneracy,
                            edge_endpoint, face, fill_horn, horn_of, integrate_nilpotent_gauge,
                            period_class, random_form, random_mc, validate_mc, zero_element)


def dt(m, i):
    return PolyForm.dvar(m, i)


def t(m, i):
    return PolyForm.var(m, i)


H3 = heisenberg()


def h3_matrix(u):
    """exp of u_x E12 + u_y E23 + u_z E13 in the unipotent 3x3 group."""
    x, y, z = (float(c) for c in u)
    return np.array([[1, x, z + x * y / 2], [0, 1, y], [0, 0, 1]])


def h3_coords(A):
    return np.array([A[0, 1], A[1, 2], A[0, 2]])


def numeric_form(form, p):
    coeffs = form.evaluate(p)
    v = np.zeros(form.m)
    for I, c in coeffs.items():
        v[I[0]] += float(c)
    return v


def test_validate_examples():
    assert validate_mc(H3, zero_element(H3, 3))[0]
    A = abelian({1: 1})
    closed = (t(3, 1).wedge(dt(3, 2))).d()
    assert validate_mc(A, {(1, 0): closed})[0]
    R = abelian({0: 1})
    ok, rep = validate_mc(R, {(0, 0): t(2, 2).wedge(dt(2, 1))})
    assert not ok and rep["generator"] == (0, 0) and not rep["residual"].is_zero()
    with pytest.raises(DegreeMismatchError):
        MCElement(R, 2, {(0, 0): t(2, 1)})


def test_face_degeneracy():
    rng = random.Random(0)
    for m in (1, 2, 3):
        x = random_mc(H3, m, rng)
        for i in range(m + 1):
            assert face(degeneracy(x, i), i) == x
            assert face(degeneracy(x, i), i + 1) == x
            assert validate_mc(H3, face(x, i))[0]
        for i in range(m + 1):
            for j in range(i + 1, m + 1):
                if m >= 2:
                    assert face(face(x, j), i) == face(face(x, i), j - 1)
    R = abelian({0: 1})
    x = MCElement(R, 1, {(0, 0): dt(1, 1).scale(4)})
    assert face(x, 0).is_zero() and face(x, 1).is_zero()
    with pytest.raises(IndexError):
        face(x, 2)


def test_abelian_gauge_is_negative_primitive():
    R = abelian({0: 1})
    g = integrate_nilpotent_gauge(R, MCElement(R, 1, {(0, 0): dt(1, 1).scale(3)}))
    assert g.u == [t(1, 1).scale(-3)]
    assert integrate_nilpotent_gauge(H3, zero_element(H3, 2)).u == [PolyForm.zero(2)] * 3


def test_h3_gauge_against_matrix_group():
    rng = random.Random(1)
    for m in (1, 2, 3):
        x = random_mc(H3, m, rng)
        g = integrate_nilpotent_gauge(H3, x)
        assert g.at_vertex(0) == [0, 0, 0]
        # -f^{-1} df = alpha, checked by finite differences at a random interior point
        p = np.array([0.13, 0.21, 0.17][:m])
        F = lambda q: h3_matrix([sum(float(v) for v in c.evaluate(q).values()) for c in g.u])
        h = 1e-6
        for i in range(m):
            e = np.zeros(m)
            e[i] = h
            dF = (F(p + e) - F(p - e)) / (2 * h)
            lhs = -h3_coords(np.linalg.inv(F(p)) @ dF)
            rhs = [numeric_form(x.form((0, c)), p)[i] for c in range(3)]
            assert np.allclose(lhs, rhs, atol=1e-6)


def test_h3_gauge_quadratic_z():
    x = MCElement(H3, 2, {(0, 0): dt(2, 1), (0, 1): dt(2, 2), (0, 2): t(2, 1).wedge(dt(2, 2))})
    assert validate_mc(H3, x)[0]
    g = integrate_nilpotent_gauge(H3, x)
    assert max(sum(e) for (e, _I) in g.u[2].terms) == 2


def test_non_nilpotent_rejected():
    x = zero_element(su2(), 1)
    with pytest.raises(NotNilpotentError):
        integrate_nilpotent_gauge(su2(), x)
    with pytest.raises(NotNilpotentError):
        fill_horn(su2(), {0: zero_element(su2(), 1), 1: zero_element(su2(), 1)}, 2, 2)


def test_fill_zero_and_abelian():
    for m in (1, 2, 3):
        for j in range(m + 1):
            horn = {k: zero_element(H3, m - 1) for k in range(m + 1) if k != j}
            assert fill_horn(H3, horn, m, j).is_zero()
    from linftykan.forms import horn_extend_form
    A = abelian({1: 1})
    rng = random.Random(2)
    x = MCElement(A, 3, {(1, 0): random_form(3, 1, rng).d()})
    horn = horn_of(x, 1)
    fam = {k: f.form((1, 0)) for k, f in horn.items()}
    assert fill_horn(A, horn, 3, 1).form((1, 0)) == horn_extend_form(fam, 3, 1, PolyForm.zero(3))


@pytest.mark.parametrize("L", [H3, abelian({0: 1, 1: 2}), contractible(1, 0)], ids=["h3", "ab", "contr"])
def test_fill_random_horns_restrict_and_pin(L):
    rng = random.Random(3)
    for m in (1, 2, 3):
        for j in range(m + 1):
            x = random_mc(L, m, rng)
            horn = horn_of(x, j)
            y = fill_horn(L, horn, m, j)
            assert validate_mc(L, y)[0]
            assert horn_of(y, j) == horn
            assert fill_horn(L, horn, m, j, pin=x) == x


def test_incompatible_horn():
    R = abelian({0: 1})
    a = MCElement(R, 1, {(0, 0): dt(1, 1)})
    with pytest.raises(IncompatibleHornError):
        fill_horn(R, {0: a}, 2, 1)
    x = MCElement(H3, 2, {(0, 0): dt(2, 1)})
    y = MCElement(H3, 2, {(0, 0): dt(2, 2)})
    with pytest.raises(IncompatibleHornError):
        fill_horn(H3, {0: x, 1: y, 2: x}, 3, 3)


def test_composition_is_bch():
    rng = random.Random(4)
    for _ in range(10):
        a, b = random_mc(H3, 1, rng), random_mc(H3, 1, rng)
        ea, eb = edge_endpoint(H3, a), edge_endpoint(H3, b)
        assert edge_endpoint(H3, compose_edges(H3, a, b)) == bch(H3, ea, eb)
        X, Y = np.array(ea, float), np.array(eb, float)
        oracle = h3_coords(h3_matrix(X) @ h3_matrix(Y))
        # matrix coordinates are exp coordinates up to the z shift x*y/2
        got = np.array(bch(H3, ea, eb), float)
        assert np.allclose(h3_coords(h3_matrix(got)), oracle)


def test_period_classification():
    A = abelian({1: 1})
    assert period_class(A, zero_element(A, 2)) == [0]
    w = t(2, 1).wedge(t(2, 2)).wedge(PolyForm.constant(2, 1) - t(2, 1) - t(2, 2))  # zero on the boundary
    base = w.wedge(dt(2, 1)).d()  # exact with vanishing faces: period 0
    top = w.wedge(dt(2, 1)).wedge(dt(2, 2))
    unit = top.scale(1 / top.simplex_period())
    rng = random.Random(5)
    for _ in range(5):
        c1, c2 = Fraction(rng.randint(-5, 5)), Fraction(rng.randint(-5, 5))
        x1 = MCElement(A, 2, {(1, 0): unit.scale(c1) + base})
        x2 = MCElement(A, 2, {(1, 0): unit.scale(c1)})
        x3 = MCElement(A, 2, {(1, 0): unit.scale(c2)})
        assert period_class(A, x1) == [c1]
        assert period_class(A, x1.scale(3)) == [3 * c1]
        res = classify_pair(A, x1, x2)
        W = res["witness"]
        assert res["homotopic"] and validate_mc(A, W)[0]
        assert face(W, 0) == x1 and face(W, 1) == x2
        assert all(face(W, i).is_zero() for i in (2, 3))
        res = classify_pair(A, x1, x3)
        assert res["homotopic"] == (c1 == c2)
        assert res["obstruction"] == [c1 - c2]
    # top-degree forms restrict to zero on every facet, so the boundary condition is automatic
    x = MCElement(A, 2, {(1, 0): dt(2, 1).wedge(dt(2, 2))})
    assert all(face(x, i).is_zero() for i in range(3))
    assert period_class(A, x) == [Fraction(1, 2)]
    with pytest.raises(ValueError):
        period_class(abelian({0: 1, 1: 1}), x.__class__(abelian({0: 1, 1: 1}), 2, {}))
