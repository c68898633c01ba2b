import json
import math

import numpy as np
import pytest

from linftykan.stringmod import (BoundaryNotFixedError, BundleTwoSimplex, EdgeIncompatibilityError,
                                 NonFiniteSampleError, NonUnitQuaternionError, SU2Map, builtin_map,
                                 bundled_tetra_datum, calibrate, cartan_period, class_equal,
                                 cocycle_check, concat_map, constant_map, degree1, degree1_reversed,
                                 load_table, load_tetra, mc_pair_residual, pullback_density, qexp,
                                 qmul, radial_primitive, sample_table, table_map,
                                 tetra_faces_from_filling, tetra_to_json)

ONE = np.array([1.0, 0.0, 0.0, 0.0])


@pytest.fixture(scope="module")
def f1():
    return degree1()


def volume_density(f, T, h=1e-5):
    """Oracle: det[f, df/dt1, df/dt2, df/dt3] / (2 pi^2), the normalized S^3 volume pulled back."""
    out = []
    for p in T:
        cols = [f(p[None])[0]]
        for i in range(3):
            e = np.zeros(3)
            e[i] = h
            cols.append((f((p + e)[None])[0] - f((p - e)[None])[0]) / (2 * h))
        out.append(np.linalg.det(np.array(cols)) / (2 * math.pi ** 2))
    return np.array(out)


def random_interior(rng, k):
    pts = []
    while len(pts) < k:
        b = rng.dirichlet(np.ones(4))
        if b.min() > 0.02 and np.sort(b)[1] - b.min() > 0.01:
            pts.append(b[1:])
    return np.array(pts)


def test_density_matches_volume_form(f1):
    rng = np.random.default_rng(0)
    T = random_interior(rng, 25)
    got = pullback_density(f1, T)
    want = volume_density(f1, T)
    assert np.allclose(np.abs(got), np.abs(want), rtol=1e-5, atol=1e-7)
    # one global orientation relation between eta and the volume form
    s = np.sign(got * want)
    assert np.all(s == s[0])


def test_periods(f1):
    assert abs(cartan_period(constant_map())) < 1e-12
    assert abs(cartan_period(f1) - 1) < 1e-2
    assert abs(cartan_period(degree1_reversed()) + 1) < 1e-2
    assert f1.boundary_deviation() < 1e-12


def test_convergence_and_integrality(f1):
    for k in (8, 12):
        assert abs(cartan_period(f1, k) - cartan_period(f1, 2 * k)) < 1e-3
    for k in (1, 2, 3):
        assert abs(cartan_period(concat_map(k), 16) - k) < 2e-2
        assert builtin_map(f"concat-{k}").name == f"concat-{k}"


def test_gauge_invariance(f1):
    base = cartan_period(f1)
    for v in ([0.3, -1.1, 0.4], [2.0, 0.1, 0.0]):
        g = qexp(np.array(v))
        assert abs(cartan_period(f1.left_translate(g)) - base) < 1e-10


def test_calibration():
    cal = calibrate(order=16)
    assert abs(cal["calibrated_total"] - 1) < 1e-8
    assert abs(cal["raw_integral"] - 4 * math.pi ** 2) < 1e-6
    assert math.isclose(cal["stored"], 1 / (4 * math.pi ** 2))


def test_residuals(f1):
    zero = lambda T: np.zeros((len(T), 3))
    assert mc_pair_residual(constant_map(), zero) == 0
    assert mc_pair_residual(f1, radial_primitive(f1)) < 1e-3
    big = mc_pair_residual(f1, zero)
    T = random_interior(np.random.default_rng(1), 20)
    assert big > 0.5 * np.max(np.abs(pullback_density(f1, T)))


def test_errors():
    bad = SU2Map(lambda T: np.full(T.shape[:-1] + (4,), 0.9), 3, "short")
    with pytest.raises(NonUnitQuaternionError):
        cartan_period(bad)
    nan = SU2Map(lambda T: np.full(T.shape[:-1] + (4,), np.nan), 3, "nan")
    with pytest.raises(NonFiniteSampleError):
        cartan_period(nan)
    with pytest.raises(KeyError):
        builtin_map("degree7")


def test_cocycle(f1):
    const = constant_map()
    faces = tetra_faces_from_filling(const, [0, 0, 0, 0])
    assert cocycle_check(faces, const)["defect"] < 1e-12
    faces, f = bundled_tetra_datum()
    rep = cocycle_check(faces, f)
    assert rep["defect"] < 1e-2 and abs(rep["period"] - 1) < 1e-2
    shifted = [face.shifted(k) for face, k in zip(faces, (3, -2, 5, 1))]
    assert cocycle_check(shifted, f)["defect"] == pytest.approx(rep["defect"], abs=1e-12)
    half = tetra_faces_from_filling(f, [0.5, 0, 0, 0])
    assert cocycle_check(half, f)["defect"] > 0.4
    with pytest.raises(EdgeIncompatibilityError):
        cocycle_check(tetra_faces_from_filling(_twisted_edges(), [1, 0, 0, 0]), f)


def _twisted_edges():
    """A map on Delta^3 with a nonconstant edge, so its faces differ from those of degree1."""
    return SU2Map(lambda T: qexp(np.stack([T[..., 0], T[..., 1], 0 * T[..., 0]], -1)), 3, "twist")


def test_json_tetra(tmp_path, f1):
    doc = tetra_to_json("degree1", [1, 0, 0, 0])
    p = tmp_path / "t.json"
    p.write_text(json.dumps(doc))
    faces, f = load_tetra(str(p))
    assert cocycle_check(faces, f)["defect"] < 1e-2
    with pytest.raises(ValueError):
        load_tetra({"kind": "mc"})


def _edges_of_constant():
    e = lambda s: np.tile(ONE, (len(np.atleast_1d(s)), 1))
    return [e, e, e]


def test_class_equal():
    x = BundleTwoSimplex(_edges_of_constant(), 0.25)
    assert class_equal(x, x)
    assert not class_equal(x, x.shifted(0.5))
    assert class_equal(x, x.shifted(1.0))
    assert x.shifted(1.0).b == pytest.approx(x.b)
    # a homotopy sweeping out one copy of SU(2) rel boundary has prism period 1
    sweep = _sweep_homotopy()
    assert class_equal(x, x.shifted(1.0), sweep)
    assert not class_equal(x, x.shifted(0.5), sweep)
    moving = SU2Map(lambda P: qexp(np.stack([P[..., 2], 0 * P[..., 2], 0 * P[..., 2]], -1)), 3, "moving")
    with pytest.raises(BoundaryNotFixedError):
        class_equal(x, x, moving)
    e2 = lambda s: qexp(np.stack([np.atleast_1d(s), 0 * np.atleast_1d(s), 0 * np.atleast_1d(s)], -1))
    with pytest.raises(EdgeIncompatibilityError):
        BundleTwoSimplex([e2, _edges_of_constant()[0], _edges_of_constant()[0]], 0.0)


def _sweep_homotopy():
    """Delta^2 x [0,1] -> Delta^3 collapsing the side walls and the bottom, composed with degree1."""
    f = degree1()

    def F(P):
        t1, t2, s = P[..., 0], P[..., 1], P[..., 2]
        # (t1, t2, s) -> s * (t1, t2, 1 - t1 - t2) lands in Delta^3 with boundary walls on its boundary
        T = np.stack([s * t1, s * t2, s * (1 - t1 - t2)], -1)
        return f.fn(T)
    return SU2Map(F, 3, "sweep")


def test_table_map(tmp_path, f1):
    doc = sample_table(f1, 12)
    g = table_map(doc)
    T = random_interior(np.random.default_rng(2), 10)
    assert np.all(np.abs(np.linalg.norm(g(T), axis=-1) - 1) < 1e-12)
    grid = np.array([row[:3] for row in doc["values"]], float) / 12
    assert np.allclose(g(grid), f1(grid), atol=1e-12)
    assert abs(cartan_period(g) - 1) < 5e-2
    p = tmp_path / "tab.json"
    p.write_text(json.dumps(doc))
    assert abs(cartan_period(load_table(p)) - cartan_period(g)) < 1e-12
    bad = dict(doc, values=doc["values"][:-1])
    with pytest.raises(ValueError):
        table_map(bad)


def test_quaternion_helpers():
    q = qexp(np.array([0.0, 0.0, math.pi / 2]))
    assert np.allclose(qmul(q, q), [-1, 0, 0, 0])
