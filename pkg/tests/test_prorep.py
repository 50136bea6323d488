import pytest

from hilbline.errors import NotLocalError, UnsupportedRingError
from hilbline.exactpoly import GF, QQ, PolyRing
from hilbline.groebner import QuotientRing
from hilbline.hilbcore import (
    ProRepTuple, as_local_ring, enumerate_points, prorep_backward, prorep_forward,
    truncated_ring,
)
from hilbline.checks import nilpotent_test_rings, random_nilpotent
from hilbline.rng import Lcg64


def test_zero_tuple_gives_pure_power():
    A = truncated_ring(3)
    t = ProRepTuple(A, [0, 0, 0])
    pt = prorep_forward(t)
    assert str(pt.F.expand()) == "x^3"
    assert prorep_backward(pt) == t


def test_explicit_roundtrip():
    A = truncated_ring(4)
    u = A.gen("u")
    t = ProRepTuple(A, [u, u ** 2, 0, u ** 3])
    assert prorep_backward(prorep_forward(t)) == t


def test_seeded_roundtrips():
    rng = Lcg64(5)
    rings = nilpotent_test_rings(GF(3)) + nilpotent_test_rings()
    for _ in range(500):
        A = rng.choice(rings)
        t = ProRepTuple(A, [random_nilpotent(rng, A) for _ in range(rng.between(1, 4))])
        pt = prorep_forward(t)
        assert prorep_backward(pt) == t
        assert prorep_forward(prorep_backward(pt)) == pt


def test_nonlocal_tuple_rejected():
    A = truncated_ring(2)
    with pytest.raises(NotLocalError):
        ProRepTuple(A, [A.gen("u") + 1])
    with pytest.raises(UnsupportedRingError):
        ProRepTuple(QuotientRing(PolyRing(("u",)), []), [0])


@pytest.mark.parametrize("A,n,count", [
    (GF(2), 3, 1),
    (truncated_ring(2, GF(2)), 1, 2),
    (truncated_ring(2, GF(2)), 2, 4),
    (truncated_ring(3, GF(3)), 2, 81),
])
def test_enumeration_counts(A, n, count):
    pts = enumerate_points(n, A)
    assert len(pts) == count
    L = as_local_ring(A)
    assert len(pts) == sum(1 for _ in L.maximal_ideal_elements()) ** n


def test_enumeration_lists_expected_points():
    A = truncated_ring(2, GF(2))
    got = sorted(str(p.F.expand()) for p in enumerate_points(1, A))
    assert got == ["x", "x + u"]


def test_enumeration_needs_finite_ring():
    with pytest.raises(UnsupportedRingError):
        enumerate_points(1, truncated_ring(2, QQ))
    with pytest.raises(UnsupportedRingError):
        as_local_ring(QQ)
