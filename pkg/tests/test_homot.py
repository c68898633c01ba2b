import random

import pytest

from linftykan.gradedlin import FGAbGroup, parse_scalar
from linftykan.homot import (G_TOKEN, BoundaryData, DiffeoGroupPres, InconsistentLES, les_assemble,
                             lie_algebra_of, tvf_integrability)
from linftykan.linf import abelian, build_end_example, heisenberg, homology_dims, string_lie2

Z = {"rank": 1, "torsion": []}


def str_data():
    return BoundaryData({0: 3, 1: 1}, {1: G_TOKEN, 3: Z}, {2: [["1"]]})


def test_string_algebra():
    pres = les_assemble({0: 3, 1: 1}, str_data(), 4)
    assert pres[0].token == G_TOKEN
    assert [p.describe() for p in pres] == ["G", "R/Z", "0", "0"]
    assert pres[1].vector_part_discrete() and lie_algebra_of(pres[1]) == 1
    assert pres[2].is_trivial()
    from_alg = BoundaryData.from_algebra(string_lie2())
    assert les_assemble(homology_dims(string_lie2()), from_alg, 4) == pres


def test_nilpotent_zero_pi_g():
    L = heisenberg()
    B = BoundaryData.from_algebra(L, pi_G={}, partial={})
    H = homology_dims(L)
    for p in les_assemble(H, B, 4)[1:]:
        assert p.d == H.get(p.n - 1, 0) and not p.C and p.K.is_trivial()


def test_abelian_single_degree():
    for n in (1, 2, 3):
        L = abelian({n - 1: 2})
        B = BoundaryData.from_algebra(L, pi_G={}, partial={})
        pres = les_assemble(homology_dims(L), B, 4)
        for p in pres[1:]:
            assert p.d == (2 if p.n == n else 0)
            assert p.is_trivial() == (p.n != n)


def test_lie_algebra_of():
    assert lie_algebra_of(DiffeoGroupPres(2, 0, [], FGAbGroup(1, ()))) == 0
    one = parse_scalar("1")
    lattice = DiffeoGroupPres(2, 2, [[one, parse_scalar("0")], [parse_scalar("0"), one]])
    assert lie_algebra_of(lattice) == 2 and lattice.describe() == "R^2/Z^2"


def test_equality_up_to_basis_change():
    s = lambda x: parse_scalar(str(x))
    a = DiffeoGroupPres(2, 2, [[s(1), s(0)], [s(0), s(1)]])
    b = DiffeoGroupPres(2, 2, [[s(1), s(1)], [s(0), s(1)]])
    c = DiffeoGroupPres(2, 2, [[s(2), s(0)], [s(0), s(1)]])
    assert a == b and a != c


def test_inconsistent_inputs():
    with pytest.raises(InconsistentLES):
        BoundaryData({1: 1}, {3: Z}, {2: [["1", "2"]]})
    with pytest.raises(InconsistentLES):
        BoundaryData({1: 1}, {3: {"rank": 0, "torsion": [2]}}, {2: [["1"]]})
    with pytest.raises(InconsistentLES):
        BoundaryData({1: -1})
    with pytest.raises(InconsistentLES):
        les_assemble({1: 2}, str_data(), 3)


def test_tvf():
    assert tvf_integrability(str_data(), 2)
    end = build_end_example(1, parse_scalar("sqrt2"))
    assert not tvf_integrability(BoundaryData.from_algebra(end), 2)
    assert tvf_integrability(BoundaryData({1: 1}, {3: Z}, {}), 2)
    rational = BoundaryData({1: 1}, {3: {"rank": 2, "torsion": []}}, {2: [["1/2", "1/3"]]})
    assert tvf_integrability(rational, 2)


def test_truncation_functorial():
    B = BoundaryData({0: 1, 1: 1, 2: 2}, {3: Z, 4: {"rank": 1, "torsion": [3]}},
                     {2: [["1"]], 3: [["1", "0"], ["sqrt2", "0"]]})
    full = les_assemble(B.H, B, 5)
    for n in (1, 2, 3):
        T = B.truncate(n)
        part = les_assemble(T.H, T, 5)
        assert part[:n] == full[:n]


def test_tvf_matches_hausdorff_vector_part():
    rng = random.Random(0)
    vals = ["1", "2", "1/3", "sqrt2", "sqrt3", "-1", "0"]
    for _ in range(30):
        k = rng.randint(1, 3)
        B = BoundaryData({1: 1}, {3: {"rank": k, "torsion": []}}, {2: [[rng.choice(vals) for _ in range(k)]]})
        p = les_assemble(B.H, B, 2)[1]
        assert tvf_integrability(B, 2) == p.vector_part_discrete()
