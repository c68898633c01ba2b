import itertools
from math import comb

import pytest

from linftykan.simpset import (FinSimplicialSet, NonUniqueFillerError, NotKanError,
                               PentagonViolationError, closure, cocycle_2group, crossed_module_2group,
                               cyclic_group, eilenberg_maclane, find_collapse, k_g1, nerve_2group,
                               nerve_round_trip_maps, pi_n, point, product, product_group,
                               standard_simplex, symmetric_group3, trivial_2group, truncate_simpset,
                               two_group_equivalence, two_group_from_kan, verify_collapse)


def brute_kan(X, up_to):
    """Oracle: every compatible family of facets is the horn of some simplex."""
    for m in range(1, up_to + 1):
        F = X.faces
        for j in range(m + 1):
            ks = [k for k in range(m + 1) if k != j]
            tops = {tuple(F[m][y][k] for k in ks) for y in range(X.size(m))}
            for fam in itertools.product(range(X.size(m - 1)), repeat=len(ks)):
                sel = dict(zip(ks, fam))
                if m >= 2 and any(F[m - 1][sel[b]][a] != F[m - 1][sel[a]][b - 1]
                                  for a, b in itertools.combinations(ks, 2)):
                    continue
                if fam not in tops:
                    return False
    return True


def euler(generators):
    return sum((-1) ** (len(s) - 1) for s in closure(generators))


def test_kan_examples():
    X = k_g1(cyclic_group(2), N=3)
    assert X.is_kan()[0] and X.unique_fillers_above(1) and not X.unique_fillers_above(0)
    D = standard_simplex(1, N=3)
    ok, bad = D.is_kan()
    assert not ok and bad[:2] == (2, 0)
    assert point(3).is_kan()[0]
    for Y in (X, D, point(3), k_g1(symmetric_group3(), N=2), eilenberg_maclane(2, 2, N=3)):
        assert Y.is_kan(min(Y.N, 3))[0] == brute_kan(Y, min(Y.N, 3))


def test_k_g1_unique_fillers_exactly_above_one():
    for G in (cyclic_group(3), symmetric_group3(), product_group(cyclic_group(2), cyclic_group(2))):
        X = k_g1(G, N=3)
        assert X.unique_fillers_above(1) and not X.unique_fillers_above(0)


def test_homotopy_groups():
    X = k_g1(cyclic_group(2), N=3)
    assert pi_n(X, 1).n == 2 and pi_n(X, 2).n == 1
    S3 = pi_n(k_g1(symmetric_group3(), N=3), 1)
    assert S3.n == 6 and not S3.is_abelian()
    E = eilenberg_maclane(3, 2)
    assert pi_n(E, 1).n == 1 and pi_n(E, 2).n == 3
    assert pi_n(point(3), 1).n == 1 and pi_n(point(3), 2).n == 1
    circle().check_identities()
    assert not brute_kan(circle(), 2)
    with pytest.raises(NotKanError):
        pi_n(circle(), 1)


def circle(N=3):
    """Delta[1] with its two endpoints identified: reduced but not Kan."""
    def norm(seq):
        return "*" if len(set(seq)) == 1 else seq

    def simplices(m):
        return ["*"] + [tuple([0] * k + [1] * (m + 1 - k)) for k in range(1, m + 1)]

    def face(x, i):
        return "*" if x == "*" else norm(x[:i] + x[i + 1:])

    def degen(x, i):
        return x if x == "*" else x[:i + 1] + x[i:]
    return FinSimplicialSet.build(N, simplices, face, degen, name="circle")


def test_truncations():
    X = k_g1(cyclic_group(2), N=3)
    assert truncate_simpset(X, 0).sizes() == [1, 1, 1, 1]
    assert truncate_simpset(X, 1).sizes() == X.sizes()
    P = product(X, eilenberg_maclane(2, 2, N=3))
    for n in (1, 2):
        le = truncate_simpset(P, n, "le")
        assert le.is_kan()[0] and le.unique_fillers_above(n)
        for i in (1, 2):
            assert pi_n(le, i).n == (pi_n(P, i).n if i <= n else 1)
        lt = truncate_simpset(P, n + 1, "lt")
        lower = truncate_simpset(P, n, "le")
        for i in range(1, n + 1):
            assert pi_n(lt, i).n == pi_n(lower, i).n
    with pytest.raises(ValueError):
        truncate_simpset(X, 1, "sideways")
    with pytest.raises(NotKanError):
        truncate_simpset(standard_simplex(1, N=3), 1)


def test_collapse():
    cert = find_collapse([[0, 1], [1, 2]])
    assert len(cert["steps"]) == 2 and verify_collapse([[0, 1], [1, 2]], cert)
    assert find_collapse([[0, 1], [0, 2], [1, 2]]) is None
    assert find_collapse([[0]]) == {"start": 0, "steps": []}
    for gens in ([[0, 1, 2], [1, 2, 3], [0, 1, 3]], [[0, 1, 2], [0, 2, 3]], [[0, 1], [1, 2], [2, 3]]):
        cert = find_collapse(gens)
        assert cert is not None and verify_collapse(gens, cert)
    for gens in ([[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]], [[0, 1], [1, 2], [0, 2], [2, 3]]):
        assert euler(gens) != 1 and find_collapse(gens) is None
    assert not verify_collapse([[0, 1], [1, 2]], {"start": 0, "steps": [((1, 2), 0), ((0, 1), 0)]})


def cocycle_count(m):
    """Z/2-valued 2-cocycles on the vertices of Delta[m]: 2^(C(m+1,2) - m)."""
    return 2 ** comb(m, 2)


def test_nerves():
    assert nerve_2group(trivial_2group(), 3).sizes() == [1, 1, 1, 1]
    T = crossed_module_2group(cyclic_group(1), cyclic_group(2), [0, 0])
    T.validate()
    N = nerve_2group(T, 3)
    assert N.sizes() == [1] + [cocycle_count(m) for m in (1, 2, 3)]
    assert N.is_kan()[0] and N.unique_fillers_above(2)
    for T in (T, cocycle_2group(cyclic_group(2), 2, lambda a, b, c: a * b * c)):
        N = nerve_2group(T, 3)
        for j in range(4):
            for h in N.horns(3, j):
                assert len(N.fillers(3, j, h)) == 1


@pytest.mark.parametrize("T", [
    crossed_module_2group(cyclic_group(1), cyclic_group(2), [0, 0]),
    crossed_module_2group(cyclic_group(2), cyclic_group(2), [0, 1]),
    cocycle_2group(cyclic_group(2), 2, lambda a, b, c: a * b * c),
    cocycle_2group(cyclic_group(3), 1, lambda a, b, c: 0),
    cocycle_2group(product_group(cyclic_group(2), cyclic_group(2)), 1, lambda a, b, c: 0),
], ids=["z2-to-1", "z2-iso", "twisted", "z3", "klein"])
def test_round_trip(T):
    T.validate()
    T2 = two_group_from_kan(nerve_2group(T, 3))
    obj, arr = nerve_round_trip_maps(T, T2)
    assert T2.n_objects == T.n_objects and T2.n_arrows == T.n_arrows
    assert two_group_equivalence(T2, T, obj, arr) is not None


def test_two_group_errors():
    bad = cocycle_2group(cyclic_group(3), 3, lambda a, b, c: a * b * c * c)
    with pytest.raises(PentagonViolationError):
        bad.validate()
    with pytest.raises(NonUniqueFillerError):
        two_group_from_kan(eilenberg_maclane(2, 3))


def test_json_round_trip():
    X = k_g1(cyclic_group(3), N=3)
    Y = FinSimplicialSet.from_json(X.to_json())
    assert Y.sizes() == X.sizes() and Y.faces == X.faces
    T = cocycle_2group(cyclic_group(2), 2, lambda a, b, c: a * b * c)
    from linftykan.simpset import CoherentTwoGroup
    T2 = CoherentTwoGroup.from_json(T.to_json())
    assert T2.assoc == T.assoc and T2.mu1 == T.mu1
