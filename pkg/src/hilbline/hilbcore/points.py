"""Monic polynomials with nilpotent coefficients: criterion, cofactors, minimal powers."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from ..errors import BudgetExceeded, PreconditionError, UnsupportedRingError, VerificationError
from ..exactpoly import QQ, MonicPoly, MultiPoly, PolyRing, monic_divmod
from ..groebner import QuotientRing, is_nilpotent
from ..symfun import truncated_dp


def truncated_ring(q, field=QQ, var="u"):
    """``field[var]/(var^q)``, the local ring in which ``var`` has nilpotency index ``q``."""
    R = PolyRing((var,), field)
    return QuotientRing(R, [R.gen(var) ** q])


def nilpotency_index(a):
    """``(True, j)`` with minimal ``a^j = 0``, or ``(False, None)``; fields are allowed."""
    if isinstance(getattr(a, "ring", None), QuotientRing):
        return is_nilpotent(a)
    return (True, 1) if not a else (False, None)


def radical_contains_x(F):
    """Whether ``(x) ⊆ rad(F)`` in ``A[x]``, decided by nilpotency of ``u_1..u_n``."""
    return all(nilpotency_index(u)[0] for u in F.coeffs)


def x_power_ring(F):
    return PolyRing((F.var,), F.domain)


def x_power_remainder(F, N):
    """Remainder of ``x^N`` under monic division by ``F``."""
    X = x_power_ring(F)
    return monic_divmod(X.monomial((N,)), F)[1]


def _remainder_scan(F, cap):
    """Yield ``(N, x^N mod F)`` for ``N = 0, 1, ...`` up to ``cap`` using dense updates."""
    A = F.domain
    n = F.degree
    b = F.plain_coefficients()[::-1]  # b[i] = coefficient of x^i, b[n] = 1
    r = [A.zero] * n
    if n:
        r[0] = A.one
    for N in range(cap + 1):
        yield N, r
        top = r[-1]
        r = [A.zero] + r[:-1]
        if top:
            r = [r[i] - top * b[i] for i in range(n)]


def first_power_in_ideal(F, cap):
    """Smallest ``N <= cap`` with ``x^N ∈ (F)`` in ``A[x]``, or ``None``."""
    for N, r in _remainder_scan(F, cap):
        if not any(r):
            return N
    return None


def default_power_cap(F):
    """``dim_k(A) * n``: if ``x`` is nilpotent in ``A[x]/(F)`` it dies by this power."""
    D = getattr(F.domain, "dimension", 1)
    if D is None:
        raise UnsupportedRingError("power search needs a finite-dimensional coefficient ring")
    return D * F.degree


def minimal_power(F, cap=None):
    """Smallest ``N`` with ``(x^N) ⊆ (F)``; scans upward from ``n``."""
    cap = default_power_cap(F) if cap is None else cap
    N = first_power_in_ideal(F, cap)
    if N is None:
        raise BudgetExceeded(f"no power x^N with N <= {cap} lies in (F)")
    return N


@dataclass(frozen=True)
class Cofactor:
    """``F * G = x^exponent`` in ``A[x]``, with the bookkeeping that produced ``G``."""

    G: MultiPoly
    exponent: int
    tau: int
    d: int
    p: int | None


def cofactor_Dp(F):
    """Build ``G`` with ``F * G = x^E`` from the product ``D_p`` of the ``d_p`` factors.

    ``tau`` is the largest nilpotency index among the coefficients,
    ``d = tau(1 + 2 + ... + n)`` and ``p`` is minimal with ``2^(p+1) >= d``.
    Specialising ``s_i -> u_i`` factors through the truncation below weighted
    degree ``d``, so ``D_p`` is only ever expanded to that degree.
    """
    n = F.degree
    indices = []
    for u in F.coeffs:
        ok, j = nilpotency_index(u)
        if not ok:
            raise PreconditionError(f"coefficient {u} is not nilpotent")
        indices.append(j)
    X = x_power_ring(F)
    if not any(F.coeffs):
        return Cofactor(X.one, n, 1, 0, None)
    tau = max(indices)
    d = tau * n * (n + 1) // 2
    p = 0
    while 2 ** (p + 1) < d:
        p += 1
    D = truncated_dp(n, p, d)
    images = {f"s{i}": u for i, u in enumerate(F.coeffs, start=1)}
    images["x"] = X.gen(F.var)
    G = D.apply_hom(images, X)
    E = 2 ** (p + 1) * n
    if F.expand() * G != X.monomial((E,)):
        raise VerificationError("F * G is not a power of x")
    return Cofactor(G, E, tau, d, p)


class HilbPoint:
    """A point of the punctual functor over ``A``: ``(F)`` with ``F`` monic, coefficients nilpotent."""

    def __init__(self, F):
        if not isinstance(F, MonicPoly):
            raise TypeError("HilbPoint needs a MonicPoly")
        if not isinstance(F.domain, QuotientRing) or not F.domain.is_finite_dimensional:
            raise UnsupportedRingError("points are taken over finite-dimensional quotient rings")
        self.F = F
        self.ring = F.domain
        self.indices = []
        for u in F.coeffs:
            ok, j = is_nilpotent(u)
            if not ok:
                raise PreconditionError(f"coefficient {u} is not nilpotent")
            self.indices.append(j)

    @property
    def degree(self):
        return self.F.degree

    @cached_property
    def certificate(self):
        """The cofactor ``G`` with ``F * G = x^E``; built on first access."""
        return cofactor_Dp(self.F)

    def __eq__(self, other):
        return isinstance(other, HilbPoint) and self.F == other.F

    def __hash__(self):
        return hash(self.F)

    def __repr__(self):
        return f"HilbPoint({self.F!r} over {self.ring!r})"
