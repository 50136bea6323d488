"""Points over local artinian rings as tuples in the maximal ideal, and back."""
from __future__ import annotations

from itertools import product

from ..errors import NotLocalError, UnsupportedRingError
from ..exactpoly import MonicPoly, PolyRing, PrimeField
from ..groebner import QuotientRing
from .points import HilbPoint, first_power_in_ideal


def as_local_ring(A):
    """Finite fields become ``k[u]/(u)`` so every base is a :class:`QuotientRing`."""
    if isinstance(A, QuotientRing):
        return A
    if isinstance(A, PrimeField):
        R = PolyRing(("u",), A)
        return QuotientRing(R, [R.gen("u")], name=f"F{A.p}")
    raise UnsupportedRingError(f"{A!r} is neither a quotient ring nor a finite field")


class ProRepTuple:
    """Images ``u_1..u_n`` of the generators under a local map into ``A``."""

    def __init__(self, A, images):
        A = as_local_ring(A)
        if not A.is_finite_dimensional:
            raise UnsupportedRingError(f"{A!r} is not artinian")
        images = tuple(A(u) for u in images)
        for i, u in enumerate(images, start=1):
            if u.residue():
                raise NotLocalError(f"u_{i} = {u} has nonzero residue")
        self.A = A
        self.images = images

    @property
    def n(self):
        return len(self.images)

    def __eq__(self, other):
        return isinstance(other, ProRepTuple) and self.A == other.A and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"ProRepTuple({', '.join(map(str, self.images))} in {self.A!r})"


def prorep_forward(t):
    return HilbPoint(MonicPoly(t.A, t.images))


def prorep_backward(pt):
    return ProRepTuple(pt.ring, pt.F.coeffs)


def enumerate_points(n, A):
    """All monic degree ``n`` polynomials over finite ``A`` generating a point at the origin.

    Candidates are filtered by the division test ``x^(D n) ∈ (F)``, independently
    of the coefficient-wise nilpotency test that :class:`HilbPoint` applies.
    """
    A = as_local_ring(A)
    elems = list(A.elements())
    cap = A.dimension * n
    out = []
    for coeffs in product(elems, repeat=n):
        F = MonicPoly(A, coeffs)
        if first_power_in_ideal(F, cap) is not None:
            out.append(HilbPoint(F))
    return out
