import itertools

import pytest
from hypothesis import given, settings, strategies as st

from hilbline.errors import NotSymmetricError, PreconditionError
from hilbline.exactpoly import PolyRing, parse_poly
from hilbline.rng import Lcg64
from hilbline.symfun import (
    QdClass, SymPoly, delta_dp_sides, delta_expand, dp_factor, dp_product,
    elementary_of_powers, elementary_of_powers_newton, elementary_symmetric,
    from_elementary_basis, qd_truncate, s_ring, small_exponent_box_degree, t_ring,
    to_elementary_basis, truncated_dp,
)
from hilbline.checks import random_symmetric
from hilbline.symfun import _truncate


def T(text, n):
    return parse_poly(text, t_ring(n))


def S(text, n, with_x=False):
    return parse_poly(text, s_ring(n, with_x=with_x))


def test_elementary_symmetric_examples():
    assert elementary_symmetric(2, 1).poly == T("t1 + t2", 2)
    assert elementary_symmetric(2, 2).poly == T("t1*t2", 2)
    assert elementary_symmetric(3, 2).poly == T("t1*t2 + t1*t3 + t2*t3", 3)
    assert elementary_symmetric(3, 0).poly == t_ring(3).one
    assert not elementary_symmetric(2, 3).poly
    with pytest.raises(PreconditionError):
        elementary_symmetric(2, -1)


def test_delta_expand():
    assert delta_expand(1) == T("x - t1", 1)
    assert delta_expand(2) == T("x^2 - t1*x - t2*x + t1*t2", 2)
    assert delta_expand(3).coefficient((0, 1, 1, 1)) == -1
    for n in range(1, 5):
        x = t_ring(n).gen("x")
        expected = sum(((-1) ** i * elementary_symmetric(n, i).poly * x ** (n - i)
                        for i in range(n + 1)), t_ring(n).zero)
        assert delta_expand(n) == expected


def test_dp_factors_telescope():
    assert dp_product(1, 0).poly == T("x + t1", 1)
    R = t_ring(1)
    x, t = R.gens()
    for p in range(4):
        M = 2 ** (p + 1)
        assert (x - t) * dp_factor(1, p, R) == x ** M - t ** M


def test_symmetry_is_checked():
    with pytest.raises(NotSymmetricError):
        SymPoly(T("t1^2 + t2", 2))
    with pytest.raises(NotSymmetricError):
        to_elementary_basis(T("t1", 2))


def test_to_elementary_basis_examples():
    assert to_elementary_basis(T("t1 + t2", 2)) == S("s1", 2, True)
    assert to_elementary_basis(T("t1^2 + t2^2", 2)) == S("s1^2 - 2*s2", 2, True)
    R = t_ring(3, with_x=False)
    m21 = parse_poly("t1^2*t2 + t1^2*t3 + t2^2*t1 + t2^2*t3 + t3^2*t1 + t3^2*t2", R)
    assert to_elementary_basis(m21) == S("s1*s2 - 3*s3", 3)


@pytest.mark.parametrize("p", [0, 1, 2])
def test_power_elementary_degrees(p):
    M = 2 ** (p + 1)
    for n in (2, 3):
        E = elementary_of_powers(n, M)
        for i, e in enumerate(E):
            assert e.is_weighted_homogeneous() and e.weighted_degree() == i * M


def test_two_routes_to_power_elementaries_agree():
    for n in range(1, 4):
        for M in (1, 2, 3, 4, 8):
            assert elementary_of_powers(n, M) == elementary_of_powers_newton(n, M)


def test_symmetric_roundtrip_random():
    rng = Lcg64(11)
    for _ in range(100):
        n = rng.between(1, 4)
        f = random_symmetric(rng, n, terms=3, max_exp=3)
        if f.total_degree() > 6 * n:
            continue
        g = to_elementary_basis(f)
        assert from_elementary_basis(g, n, f.ring) == f
        if f:
            assert g.weighted_degree() == f.total_degree()


@settings(max_examples=50, deadline=None)
@given(st.lists(st.tuples(st.integers(-4, 4), st.tuples(*[st.integers(0, 2)] * 3)),
                max_size=4))
def test_roundtrip_with_x(terms):
    n = 3
    R = t_ring(n)
    s = [elementary_symmetric(n, i, R).poly for i in range(1, n + 1)]
    f = R.zero
    for c, e in terms:
        mono = R.constant(c)
        for si, k in zip(s, e):
            mono = mono * si ** k
        f = f + mono * R.gen("x") ** sum(e)
    assert from_elementary_basis(to_elementary_basis(f), n, R) == f


@pytest.mark.parametrize("n", [1, 2, 3])
def test_delta_dp_product_matches_direct_expansion(n):
    R = t_ring(n)
    x = R.gen("x")
    for p in (0, 1, 2):
        M = 2 ** (p + 1)
        direct = delta_expand(n, R) * dp_product(n, p, R).poly
        tM = {f"t{i}": R.gen(f"t{i}") ** M for i in range(1, n + 1)}
        tM["x"] = x
        rhs = R.zero
        for j in range(n + 1):
            sj = elementary_symmetric(n, j, R).poly.apply_hom(tM, R)
            rhs = rhs + (-1) ** j * sj * x ** (M * (n - j))
        assert direct == rhs


def test_delta_dp_identity_in_s_basis():
    for n in range(1, 5):
        for p in range(4):
            lhs, rhs = delta_dp_sides(n, p)
            assert lhs == rhs


def test_qd_truncate_examples():
    assert not qd_truncate(S("s1*s2", 2), 3)
    assert qd_truncate(S("1 + s1", 2), 1).rep == s_ring(2).one
    with pytest.raises(PreconditionError):
        QdClass(S("s2", 2), 2)


@settings(max_examples=100, deadline=None)
@given(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 2)), st.integers(-3, 3),
                       max_size=4),
       st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 2)), st.integers(-3, 3),
                       max_size=4),
       st.integers(1, 7))
def test_truncation_is_a_ring_map(a, b, d):
    R = s_ring(2)
    f, g = R.from_terms(a), R.from_terms(b)
    assert (qd_truncate(f, d) * qd_truncate(g, d)) == qd_truncate(f * g, d)
    assert (qd_truncate(f, d) + qd_truncate(g, d)) == qd_truncate(f + g, d)


def test_product_class_is_pure_power_of_x():
    for n in (1, 2, 3):
        for p in (0, 1, 2):
            M = 2 ** (p + 1)
            lhs, _ = delta_dp_sides(n, p)
            for d in range(1, M + 1):
                assert qd_truncate(lhs, d).rep == s_ring(n, with_x=True).gen("x") ** (M * n)


@pytest.mark.parametrize("n,p,d", [(1, 1, 3), (2, 1, 4), (2, 2, 6), (3, 1, 5)])
def test_truncated_dp_matches_full_expansion(n, p, d):
    full = to_elementary_basis(dp_product(n, p))
    assert truncated_dp(n, p, d) == _truncate(full, d, skip=("x",))


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("tau", [1, 2, 3])
def test_large_weighted_degree_forces_a_large_exponent(n, tau):
    d = tau * n * (n + 1) // 2
    assert small_exponent_box_degree(n, tau) < d
    # exhaustive: every exponent vector of weighted degree in [d, d + n] has some e_j >= tau
    for es in itertools.product(range(d + n + 1), repeat=n):
        w = sum((j + 1) * e for j, e in enumerate(es))
        if d <= w <= d + n:
            assert max(es) >= tau
