"""Families of fat points that defeat any fixed truncation exponent."""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import PreconditionError, VerificationError
from ..exactpoly import QQ, MonicPoly, MultiPoly, monic_divmod
from ..groebner import QuotientRing
from .points import truncated_ring, x_power_ring


@dataclass(frozen=True)
class Witness:
    """Over ``A = k[u]/(u^(2^(m+1)))`` the ideal ``(x^n - u x^(n-1))`` contains
    ``x^E`` with ``E = 2^(m+1) + n - 1 > N`` but not ``x^N``.
    """

    n: int
    N: int
    m: int
    ring: QuotientRing
    F: MonicPoly
    cofactor: MultiPoly
    exponent: int
    remainder: MultiPoly

    def verify(self):
        X = x_power_ring(self.F)
        if self.F.expand() * self.cofactor != X.monomial((self.exponent,)):
            raise VerificationError("cofactor does not reproduce the power of x")
        q, r = monic_divmod(X.monomial((self.N,)), self.F)
        if r != self.remainder or not r:
            raise VerificationError("remainder of x^N does not match or vanishes")
        if self.exponent <= self.N:
            raise VerificationError("exponent does not exceed N")
        return True


def witness_exponent_choice(n, N):
    """Smallest ``m >= 0`` with ``2^(m+1) + n - 1 > N``."""
    m = 0
    while 2 ** (m + 1) + n - 1 <= N:
        m += 1
    return m


def witness_nonrepresentability(n, N, field=QQ):
    if n < 1 or N < n:
        raise PreconditionError("need n >= 1 and N >= n")
    m = witness_exponent_choice(n, N)
    q = 2 ** (m + 1)
    A = truncated_ring(q, field)
    eps = A.gen("u")
    F = MonicPoly(A, [eps] + [A.zero] * (n - 1))
    X = x_power_ring(F)
    x = X.gen(F.var)
    # (x - e)(x + e)(x^2 + e^2)...(x^(2^m) + e^(2^m)) = x^(2^(m+1)) - e^(2^(m+1))
    G = X.one
    for k in range(m + 1):
        G = G * (x ** (2 ** k) + X.constant(eps ** (2 ** k)))
    # x^(n-1) * x^k is congruent to e^k x^(n-1)
    R = X.monomial((n - 1,), eps ** (N - n + 1))
    w = Witness(n, N, m, A, F, G, q + n - 1, R)
    w.verify()
    return w
