import pytest

from hilbline.errors import PreconditionError
from hilbline.exactpoly import GF, PolyRing, monic_divmod
from hilbline.hilbcore import minimal_power, witness_exponent_choice, witness_nonrepresentability


@pytest.mark.parametrize("n,N,m", [(1, 5, 2), (2, 4, 1), (1, 1, 0), (3, 8, 2)])
def test_witness_choice_of_m(n, N, m):
    w = witness_nonrepresentability(n, N)
    assert w.m == m
    assert w.ring.dimension == 2 ** (m + 1)
    assert w.exponent == 2 ** (m + 1) + n - 1 > N
    assert w.verify()


def test_witness_certificates_by_hand():
    w = witness_nonrepresentability(1, 5)
    X = PolyRing(("x",), w.ring)
    u = w.ring.gen("u")
    assert w.F.expand() * w.cofactor == X.monomial((8,))
    assert w.remainder == X.constant(u ** 5)
    assert monic_divmod(X.monomial((5,)), w.F)[1] == w.remainder
    assert minimal_power(w.F) == 8


def test_remainder_shape():
    for n in range(1, 5):
        for N in range(n, n + 9):
            w = witness_nonrepresentability(n, N)
            X = PolyRing(("x",), w.ring)
            assert w.remainder == X.monomial((n - 1,), w.ring.gen("u") ** (N - n + 1))
            assert minimal_power(w.F) == w.exponent


def test_witness_over_prime_field():
    assert witness_nonrepresentability(2, 6, GF(2)).verify()


def test_witness_rejects_small_N():
    with pytest.raises(PreconditionError):
        witness_nonrepresentability(3, 2)
    assert witness_exponent_choice(1, 1) == 0
