"""The rings H_{n,m} = k[s_1..s_n]/J_m and their universal monic polynomial."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from ..errors import PreconditionError, VerificationError
from ..exactpoly import QQ, MonicPoly, MultiPoly, PolyRing, block_order, monic_divmod
from ..groebner import Ideal, QuotientRing, buchberger, ideal_contains
from ..symfun import s_ring

# Presentations whose computed answer differs from one quoted elsewhere.
KNOWN_DISCREPANCIES = {
    (2, 1): ("the presentation k[x,y]/(x^2, x*y) quoted for this case is not finite-dimensional; "
             "the computed ideal (s1^2 - s2, s1*s2) has colength 3"),
}


def _check_nm(n, m):
    if n < 1 or m < 0:
        raise PreconditionError("need n >= 1 and m >= 0")


def y_recursion(n, m, field=QQ):
    """``[y_1, ..., y_m]`` in ``k[s1..sn]`` solving ``y_i = sum_j (-1)^(j-1) s_j y_(i-j)``."""
    _check_nm(n, m)
    S = s_ring(n, field)
    s = S.gens()
    ys = [S.one]
    for i in range(1, m + 1):
        yi = S.zero
        for j in range(1, min(i, n) + 1):
            term = s[j - 1] * ys[i - j]
            yi = yi + term if j % 2 else yi - term
        ys.append(yi)
    return ys[1:]


def sy_ring(n, m, field=QQ):
    """``k[y_m..y_1, s1..sn]`` with the ``y`` block first, for elimination."""
    names = [f"y{i}" for i in range(m, 0, -1)] + [f"s{i}" for i in range(1, n + 1)]
    return PolyRing(names, field, list(range(m, 0, -1)) + list(range(1, n + 1)))


def coefficient_equations(n, m, field=QQ):
    """``[C_1, ..., C_(m+n)]``: ``F * Y = x^(n+m) + sum_i C_i x^(n+m-i)`` with ``y`` symbolic."""
    _check_nm(n, m)
    R = sy_ring(n, m, field)

    def y(j):
        if j == 0:
            return R.one
        if 1 <= j <= m:
            return R.gen(f"y{j}")
        return R.zero

    def s(l):
        return R.one if l == 0 else R.gen(f"s{l}")

    out = []
    for i in range(1, m + n + 1):
        c = R.zero
        for l in range(0, n + 1):
            term = s(l) * y(i - l)
            c = c - term if l % 2 else c + term
        out.append(c)
    return out


@dataclass
class HnmPresentation:
    n: int
    m: int
    y_subst: list
    j_gens: list
    raw_gens: list
    ring: QuotientRing
    F: MonicPoly
    note: str | None = None
    ideal: Ideal = dc_field(default=None, repr=False)

    @property
    def dimension(self):
        return self.ring.dimension

    def y_classes(self):
        return [self.ring.one] + [self.ring(y) for y in self.y_subst]


def _universal_product_check(n, m, ys, raw, field):
    """``F * Y - x^(n+m) = sum_j raw_j x^(n-j)`` in ``k[x, s]``."""
    P = s_ring(n, field, with_x=True)
    x = P.gen("x")
    F = x ** n
    for i in range(1, n + 1):
        term = P.gen(f"s{i}") * x ** (n - i)
        F = F - term if i % 2 else F + term
    Y = x ** m
    for j, y in enumerate(ys, start=1):
        Y = Y + y.to_ring(P) * x ** (m - j)
    rhs = x ** (n + m)
    for j, g in enumerate(raw, start=1):
        rhs = rhs + g.to_ring(P) * x ** (n - j)
    return F * Y == rhs


def construct_Hnm(n, m, field=QQ, budget=None):
    _check_nm(n, m)
    S = s_ring(n, field)
    ys = y_recursion(n, m, field)
    yfull = [S.one] + ys

    def y(j):
        return yfull[j] if 0 <= j <= m else S.zero

    raw = []
    for j in range(1, n + 1):
        g = S.zero
        for l in range(j, n + 1):
            term = S.gen(f"s{l}") * y(m + j - l)
            g = g - term if l % 2 else g + term
        raw.append(g)
    gens = [g.monic() for g in raw]

    for i, yi in enumerate(ys, start=1):
        if not yi.is_weighted_homogeneous() or yi.weighted_degree() != i:
            raise VerificationError(f"y_{i} is not homogeneous of degree {i}")
    if len(gens) != n:
        raise VerificationError("wrong number of generators")
    for j, g in enumerate(gens, start=1):
        if not g or not g.is_weighted_homogeneous() or g.weighted_degree() != m + j:
            raise VerificationError(f"generator {j} is not homogeneous of degree {m + j}")
    if not _universal_product_check(n, m, ys, raw, field):
        raise VerificationError("F * Y differs from x^(n+m) modulo the generators")

    A = QuotientRing(S, gens, budget=budget, name=f"H_{n},{m}")
    F = MonicPoly(A, [A.gen(f"s{i}") for i in range(1, n + 1)])
    return HnmPresentation(n, m, ys, gens, raw, A, F, KNOWN_DISCREPANCIES.get((n, m)), A.ideal)


@dataclass(frozen=True)
class UniversalCertificate:
    quotient: MultiPoly
    remainder: MultiPoly


def verify_universal(h):
    """Divide ``x^(n+m)`` by ``F_{n,m}`` over ``H_{n,m}``; the remainder must vanish."""
    X = h.F.poly_ring()
    q, r = monic_divmod(X.monomial((h.n + h.m,)), h.F)
    if r:
        raise VerificationError(f"x^{h.n + h.m} leaves remainder {r}")
    Y = X.from_terms({(h.m - j,): c for j, c in enumerate(h.y_classes())})
    if q != Y:
        raise VerificationError("quotient differs from the y-polynomial")
    return UniversalCertificate(q, r)


def elimination_ideal(n, m, field=QQ, budget=None):
    """``J_m`` computed independently: eliminate ``y`` from all coefficient equations."""
    eqs = coefficient_equations(n, m, field)
    G = buchberger(eqs, block_order(m), budget)
    S = s_ring(n, field)
    ys = set(range(m))
    return [g.to_ring(S) for g in G if not any(e[i] for e in g.terms for i in ys)]


def same_ideal(ring, a, b, budget=None):
    I, J = Ideal(ring, a, budget=budget), Ideal(ring, b, budget=budget)
    return ideal_contains(I, J) and ideal_contains(J, I)


@dataclass
class FiltrationStep:
    m: int
    contained: bool
    dims: tuple
    f_map: bool
    kernel_dim: int

    @property
    def ok(self):
        return self.contained and self.dims[0] <= self.dims[1] and self.f_map


@dataclass
class FiltrationReport:
    n: int
    steps: list

    @property
    def ok(self):
        return all(s.ok for s in self.steps)


def filtration_check(n, m_max, field=QQ, budget=None):
    """``J_(m+1) ⊆ J_m``, growing dimensions and ``F_{n,m+1} -> F_{n,m}`` for ``m < m_max``."""
    if m_max < 1:
        raise PreconditionError("need m_max >= 1")
    hs = [construct_Hnm(n, m, field, budget) for m in range(m_max + 1)]
    steps = []
    for m in range(m_max):
        lo, hi = hs[m], hs[m + 1]
        contained = ideal_contains(lo.ideal, hi.ideal)
        dims = (lo.dimension, hi.dimension)
        f_map = all(lo.ring(c.nf) == d for c, d in zip(hi.F.coeffs, lo.F.coeffs))
        # kernel of H_{n,m+1} -> H_{n,m} is spanned by the images of J_m
        images = [hi.ring(g) for g in lo.j_gens]
        kernel_dim = _span_dim(hi.ring, images)
        steps.append(FiltrationStep(m, contained, dims, f_map, kernel_dim))
        if kernel_dim != dims[1] - dims[0]:
            raise VerificationError(f"kernel at m={m} has dimension {kernel_dim}")
    return FiltrationReport(n, steps)


def _span_dim(A, gens):
    """k-dimension of the ideal of ``A`` generated by ``gens``."""
    vecs = []
    basis = [A.monomial_element(e) for e in A.staircase]
    for g in gens:
        for b in basis:
            vecs.append((g * b).nf.terms)
    return _rank(vecs, A.field)


def _rank(rows, field):
    """Rank of sparse rows ``{column: value}`` by Gaussian elimination."""
    pivots = {}
    for row in rows:
        row = dict(row)
        while row:
            col = min(row)
            if col not in pivots:
                inv = field.one / row[col]
                pivots[col] = {k: v * inv for k, v in row.items()}
                break
            p = pivots[col]
            c = row[col]
            for k, v in p.items():
                nv = row.get(k, field.zero) - c * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return len(pivots)
