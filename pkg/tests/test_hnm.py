import pytest

from hilbline.exactpoly import GF, PolyRing, parse_poly
from hilbline.groebner import Ideal, ideal_contains
from hilbline.hilbcore import (
    KNOWN_DISCREPANCIES, coefficient_equations, construct_Hnm, elimination_ideal,
    filtration_check, same_ideal, verify_universal, y_recursion,
)
from hilbline.symfun import s_ring


def S(text, n):
    return parse_poly(text, s_ring(n))


def test_y_recursion():
    ys = y_recursion(3, 3)
    assert ys[0] == S("s1", 3)
    assert ys[1] == S("s1^2 - s2", 3)
    assert y_recursion(1, 5) == [S(f"s1^{i}", 1) for i in range(1, 6)]
    for i, y in enumerate(y_recursion(3, 5), start=1):
        assert y.is_weighted_homogeneous() and y.weighted_degree() == i


def test_y_recursion_solves_the_first_equations():
    for n in (1, 2, 3):
        for m in range(5):
            eqs = coefficient_equations(n, m)
            R = eqs[0].ring
            S_ = s_ring(n)
            images = {f"y{i}": y for i, y in enumerate(y_recursion(n, m), start=1)}
            images.update({f"s{i}": S_.gen(f"s{i}") for i in range(1, n + 1)})
            assert all(not e.apply_hom(images, S_) for e in eqs[:m])


@pytest.mark.parametrize("m,gens", [
    (1, ["s1^2 - s2", "s1*s2"]),
    (2, ["s1^3 - 2*s1*s2", "s1^2*s2 - s2^2"]),
    (3, ["s1^4 - 3*s1^2*s2 + s2^2", "s1^3*s2 - 2*s1*s2^2"]),
])
def test_two_point_presentations(m, gens):
    h = construct_Hnm(2, m)
    assert [str(g) for g in h.j_gens] == gens
    assert same_ideal(h.ring.poly_ring, h.j_gens, [S(g, 2) for g in gens])


def test_discrepancy_note():
    assert construct_Hnm(2, 1).note == KNOWN_DISCREPANCIES[(2, 1)]
    assert construct_Hnm(2, 1).dimension == 3
    assert construct_Hnm(2, 2).note is None


@pytest.mark.parametrize("m", range(0, 11))
def test_single_point_family(m):
    h = construct_Hnm(1, m)
    assert [str(g) for g in h.j_gens] == [f"s1^{m + 1}" if m else "s1"]
    assert h.dimension == m + 1


def test_trivial_level():
    for n in (1, 2, 3):
        h = construct_Hnm(n, 0)
        assert h.dimension == 1
        assert same_ideal(h.ring.poly_ring, h.j_gens, s_ring(n).gens())
        assert str(verify_universal(h).quotient) == "1"


def test_generators_are_homogeneous():
    for n in (1, 2, 3):
        for m in range(5):
            h = construct_Hnm(n, m)
            assert len(h.j_gens) == n
            for j, g in enumerate(h.j_gens, start=1):
                assert g.is_weighted_homogeneous() and g.weighted_degree() == m + j


@pytest.mark.parametrize("n", [1, 2, 3])
def test_universal_division(n):
    for m in range(5):
        h = construct_Hnm(n, m)
        cert = verify_universal(h)
        assert not cert.remainder
        assert h.F.expand() * cert.quotient == h.F.poly_ring().monomial((n + m,))


def test_single_point_universal_quotient():
    h = construct_Hnm(1, 3)
    assert str(verify_universal(h).quotient) == "x^3 + s1*x^2 + s1^2*x + s1^3"


@pytest.mark.parametrize("n", [1, 2, 3])
def test_elimination_oracle(n):
    for m in range(4):
        h = construct_Hnm(n, m)
        assert same_ideal(h.ring.poly_ring, elimination_ideal(n, m), h.j_gens)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_filtration(n):
    report = filtration_check(n, 4)
    assert report.ok
    dims = [s.dims for s in report.steps]
    assert all(a <= b for a, b in dims)
    if n == 1:
        assert [d[0] for d in dims] + [dims[-1][1]] == [1, 2, 3, 4, 5]


def test_filtration_example_by_hand():
    R = s_ring(2)
    J1 = Ideal(R, [S("s1^2 - s2", 2), S("s1*s2", 2)])
    g = S("s1^3 - 2*s1*s2", 2)
    assert g == S("s1", 2) * S("s1^2 - s2", 2) - S("s1*s2", 2)
    assert ideal_contains(J1, Ideal(R, construct_Hnm(2, 2).j_gens))


def test_presentation_over_prime_field():
    h = construct_Hnm(2, 3, GF(5))
    assert h.dimension == 10
    verify_universal(h)
