"""Elementary symmetric functions, the products Delta and D_p, and truncation rings.

Polynomials in the roots live in ``k[x, t1..tn]``; polynomials in the
elementary symmetric functions live in ``k[x, s1..sn]`` (or ``k[s1..sn]``)
with weights ``deg s_i = i`` and ``deg x = 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb

from .errors import NotSymmetricError, PreconditionError
from .exactpoly import QQ, MultiPoly, PolyRing

__all__ = [
    "t_ring", "s_ring", "SymPoly", "QdClass",
    "elementary_symmetric", "delta_expand", "dp_factor", "dp_product",
    "to_elementary_basis", "from_elementary_basis", "elementary_of_powers",
    "elementary_of_powers_newton",
    "delta_times_dp", "delta_dp_sides", "qd_truncate", "truncated_dp", "small_exponent_box_degree",
]


@lru_cache(maxsize=None)
def t_ring(n, domain=QQ, with_x=True):
    names = (["x"] if with_x else []) + [f"t{i}" for i in range(1, n + 1)]
    return PolyRing(names, domain)


@lru_cache(maxsize=None)
def s_ring(n, domain=QQ, with_x=False):
    names = (["x"] if with_x else []) + [f"s{i}" for i in range(1, n + 1)]
    weights = ([1] if with_x else []) + list(range(1, n + 1))
    return PolyRing(names, domain, weights)


def _t_slots(ring):
    return [ring.index[v] for v in ring.variables if v.startswith("t")]


def _swap(poly, i, j):
    out = {}
    for e, c in poly.terms.items():
        e = list(e)
        e[i], e[j] = e[j], e[i]
        out[tuple(e)] = c
    return out


def is_symmetric(poly):
    slots = _t_slots(poly.ring)
    return all(_swap(poly, a, b) == poly.terms for a, b in zip(slots, slots[1:]))


@dataclass(frozen=True)
class SymPoly:
    """A polynomial in ``t1..tn`` (and possibly ``x``) verified to be symmetric in the ``t``'s."""

    poly: MultiPoly

    def __post_init__(self):
        if not is_symmetric(self.poly):
            raise NotSymmetricError("polynomial is not symmetric in t1..tn")

    @property
    def n(self):
        return len(_t_slots(self.poly.ring))

    def __mul__(self, other):
        return SymPoly(self.poly * (other.poly if isinstance(other, SymPoly) else other))

    def __add__(self, other):
        return SymPoly(self.poly + (other.poly if isinstance(other, SymPoly) else other))


def elementary_symmetric(n, i, ring=None):
    """``s_i(t1..tn)``; zero for ``i > n`` and one for ``i = 0``."""
    ring = ring or t_ring(n)
    if i < 0:
        raise PreconditionError("index of an elementary symmetric function must be >= 0")
    slots = [ring.index[f"t{k}"] for k in range(1, n + 1)]
    terms = {}
    for subset in combinations(slots, i) if i <= n else ():
        e = [0] * ring.nvars
        for s in subset:
            e[s] = 1
        terms[tuple(e)] = ring.domain.one
    return SymPoly(MultiPoly(ring, terms))


def delta_expand(n, ring=None):
    """``prod (x - t_i)`` expanded."""
    ring = ring or t_ring(n, with_x=True)
    x = ring.gen("x")
    out = ring.one
    for i in range(1, n + 1):
        out = out * (x - ring.gen(f"t{i}"))
    return out


def dp_factor(i, p, ring):
    """``d_p(t_i, x) = (x + t_i)(x^2 + t_i^2)...(x^(2^p) + t_i^(2^p))``."""
    x, t = ring.gen("x"), ring.gen(f"t{i}")
    out = ring.one
    for k in range(p + 1):
        out = out * (x ** (2 ** k) + t ** (2 ** k))
    return out


def dp_product(n, p, ring=None):
    ring = ring or t_ring(n, with_x=True)
    out = ring.one
    for i in range(1, n + 1):
        out = out * dp_factor(i, p, ring)
    return SymPoly(out)


def delta_times_dp(n, p, ring=None):
    """``Delta(t,x) * D_p(t,x)``, multiplying in one ``d_p`` factor at a time.

    Each step is a full expanded multiplication; the order keeps intermediate
    results small because ``(x - t_i) d_p(t_i, x)`` telescopes.
    """
    ring = ring or t_ring(n, with_x=True)
    out = delta_expand(n, ring)
    for i in range(1, n + 1):
        out = out * dp_factor(i, p, ring)
    return SymPoly(out)


# ---------------------------------------------------------------------------
# conversion to the elementary basis
# ---------------------------------------------------------------------------
#
# Symmetric polynomials of one homogeneous piece are handled in the monomial
# symmetric basis: a dict from partitions (length-n, non-increasing tuples) to
# coefficients.  Products of the s_k are expanded directly in that basis, which
# keeps the classical leading-term algorithm cheap.

def _blocks(v):
    """``(start, size)`` of each run of equal entries."""
    out = []
    start = 0
    for i in range(1, len(v) + 1):
        if i == len(v) or v[i] != v[start]:
            out.append((start, i - start))
            start = i
    return out


@lru_cache(maxsize=None)
def _distributions(sizes, k):
    """All ways to pick ``r_b <= sizes[b]`` with ``sum r_b = k``."""
    if not sizes:
        return [()] if k == 0 else []
    out = []
    for r in range(min(sizes[0], k) + 1):
        out.extend((r,) + rest for rest in _distributions(sizes[1:], k - r))
    return out


def _mul_elementary(mbasis, k, n):
    """``s_k * f`` for ``f`` given in the monomial symmetric basis.

    Within a run of equal parts only the number of bumped entries matters, so
    targets and coefficients are enumerated per run with binomial weights.
    """
    targets = set()
    for lam in mbasis:
        blocks = _blocks(lam)
        for dist in _distributions(tuple(b[1] for b in blocks), k):
            mu = list(lam)
            for (start, _), r in zip(blocks, dist):
                for i in range(start, start + r):
                    mu[i] += 1
            targets.add(tuple(mu))
    out = {}
    for mu in targets:
        blocks = _blocks(mu)
        total = 0
        for dist in _distributions(tuple(b[1] for b in blocks), k):
            pre = list(mu)
            weight = 1
            for (start, size), r in zip(blocks, dist):
                for i in range(start + size - r, start + size):
                    pre[i] -= 1
                weight *= comb(size, r)
            if pre[-1] < 0:
                continue
            c = mbasis.get(tuple(pre))
            if c:
                total += weight * c
        if total:
            out[mu] = total
    return out


@lru_cache(maxsize=None)
def _elementary_monomial_mbasis(n, exps):
    """``s_1^e1 ... s_n^en`` in the monomial symmetric basis (integer coefficients)."""
    if not any(exps):
        return {(0,) * n: 1}
    k = max(i for i, e in enumerate(exps) if e)
    prev = list(exps)
    prev[k] -= 1
    return _mul_elementary(_elementary_monomial_mbasis(n, tuple(prev)), k + 1, n)


def _symmetric_to_s(partition_terms, n, domain):
    """Leading-term algorithm on ``{partition: coeff}``; returns ``{s-exponents: coeff}``."""
    rem = dict(partition_terms)
    out = {}
    while rem:
        lam = max(rem)
        c = rem[lam]
        e = tuple(lam[i] - (lam[i + 1] if i + 1 < n else 0) for i in range(n))
        out[e] = out.get(e, domain.zero) + c
        for mu, v in _elementary_monomial_mbasis(n, e).items():
            nv = rem.get(mu, domain.zero) - c * v
            if nv:
                rem[mu] = nv
            else:
                rem.pop(mu, None)
    return out


def to_elementary_basis(f, target=None):
    """Rewrite a symmetric polynomial in ``s1..sn`` (keeping ``x`` if present).

    ``f`` may be a :class:`SymPoly` or a plain :class:`MultiPoly` (symmetry is
    then verified here).  Substituting ``s_i -> elementary_symmetric(n, i)``
    into the result gives back ``f`` exactly.
    """
    poly = f.poly if isinstance(f, SymPoly) else SymPoly(f).poly
    ring = poly.ring
    slots = _t_slots(ring)
    n = len(slots)
    xi = ring.index.get("x")
    target = target or s_ring(n, ring.domain, with_x=xi is not None)
    by_x = {}
    for e, c in poly.terms.items():
        lam = tuple(e[s] for s in slots)
        if all(a >= b for a, b in zip(lam, lam[1:])):
            k = e[xi] if xi is not None else 0
            by_x.setdefault(k, {})[lam] = c
    out = {}
    txi = target.index.get("x")
    sidx = [target.index[f"s{i}"] for i in range(1, n + 1)]
    for k, part in by_x.items():
        for se, c in _symmetric_to_s(part, n, ring.domain).items():
            e = [0] * target.nvars
            if txi is not None:
                e[txi] = k
            elif k:
                raise PreconditionError("target ring has no x but the input depends on x")
            for i, a in zip(sidx, se):
                e[i] = a
            out[tuple(e)] = c
    return target.from_terms(out)


def from_elementary_basis(g, n, ring=None):
    """Substitute ``s_i -> s_i(t)``: the inverse of :func:`to_elementary_basis`."""
    ring = ring or t_ring(n, g.ring.domain, with_x=True)
    images = {f"s{i}": elementary_symmetric(n, i, ring).poly for i in range(1, n + 1)}
    if "x" in g.ring.index:
        images["x"] = ring.gen("x")
    return g.apply_hom(images, ring)


@lru_cache(maxsize=None)
def _power_sums(n, top):
    """Power sums ``p_1..p_top`` in ``k[s1..sn]`` by Newton's recurrence."""
    R = s_ring(n)
    s = [R.one] + [R.gen(f"s{i}") for i in range(1, n + 1)]
    p = [None]
    for k in range(1, top + 1):
        acc = R.zero
        for i in range(1, min(k - 1, n) + 1):
            term = s[i] * p[k - i]
            acc = acc + term if i % 2 == 1 else acc - term
        if k <= n:
            acc = acc + s[k].scale(k if k % 2 == 1 else -k)
        p.append(acc)
    return tuple(p)


@lru_cache(maxsize=None)
def elementary_of_powers_newton(n, M):
    """``[s_0(t^M), ..., s_n(t^M)]`` in ``k[s1..sn]`` via Newton's identities."""
    R = s_ring(n)
    P = _power_sums(n, n * M)
    E = [R.one]
    for j in range(1, n + 1):
        acc = R.zero
        for i in range(1, j + 1):
            term = E[j - i] * P[i * M]
            acc = acc + term if i % 2 == 1 else acc - term
        E.append(acc.scale(Fraction(1, j)))
    return tuple(E)


def _graeffe(E):
    """From ``s_j(t)`` to ``s_j(t^2)``: ``prod(x - t_i^2)`` is read off ``f(x) f(-x)``."""
    n = len(E) - 1
    # f(x) = sum_j (-1)^j E[j] x^(n-j); collect c_k = coefficient of x^k in f(x) f(-x)
    a = [E[n - k] if (n - k) % 2 == 0 else -E[n - k] for k in range(n + 1)]
    zero = E[0].ring.zero
    out = []
    for j in range(n + 1):
        k = n - j  # coefficient of y^k in g(y) = (-1)^n f(x) f(-x), y = x^2
        acc = zero
        for i in range(max(0, 2 * k - n), min(2 * k, n) + 1):
            term = a[i] * a[2 * k - i]
            acc = acc + term if i % 2 == 0 else acc - term
        if n % 2:
            acc = -acc
        out.append(acc if j % 2 == 0 else -acc)
    return out


@lru_cache(maxsize=None)
def elementary_of_powers(n, M):
    """``[s_0(t^M), ..., s_n(t^M)]`` in ``k[s1..sn]``.

    For ``M`` a power of two this squares the roots repeatedly (Graeffe's
    method); otherwise it falls back to Newton's identities.  Neither route
    expands anything in the ``t`` variables, so both serve as independent
    checks on :func:`to_elementary_basis`.
    """
    if M & (M - 1):
        return elementary_of_powers_newton(n, M)
    R = s_ring(n)
    E = [R.one] + [R.gen(f"s{i}") for i in range(1, n + 1)]
    while M > 1:
        E = _graeffe(E)
        M //= 2
    return tuple(E)


def delta_dp_sides(n, p):
    """Both sides of ``Delta * D_p = sum_j (-1)^j s_j(t^M) x^(M(n-j))``, ``M = 2^(p+1)``.

    The left side is expanded in ``t`` and rewritten by :func:`to_elementary_basis`;
    the right side comes from :func:`elementary_of_powers`.  Both live in ``k[x, s]``.
    """
    R = s_ring(n, with_x=True)
    lhs = to_elementary_basis(delta_times_dp(n, p), R)
    M = 2 ** (p + 1)
    x = R.gen("x")
    rhs = R.zero
    for j, e in enumerate(elementary_of_powers(n, M)):
        term = e.to_ring(R) * x ** (M * (n - j))
        rhs = rhs - term if j % 2 else rhs + term
    return lhs, rhs


# ---------------------------------------------------------------------------
# truncation rings Q_d
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QdClass:
    """Class in ``A[s1..sn] / (weighted degree >= d)``, kept as a truncated representative."""

    rep: MultiPoly
    d: int

    def __post_init__(self):
        if _truncate(self.rep, self.d, skip=("x",)) != self.rep:
            raise PreconditionError("representative has terms of weighted degree >= d")

    def __mul__(self, other):
        return qd_truncate(self.rep * other.rep, self.d)

    def __add__(self, other):
        return qd_truncate(self.rep + other.rep, self.d)

    def __bool__(self):
        return bool(self.rep)


def _truncate(poly, d, skip=()):
    ring = poly.ring
    w = ring.weights or (1,) * ring.nvars
    keep = [i for i in range(ring.nvars) if ring.variables[i] not in skip]
    return MultiPoly(ring, {e: c for e, c in poly.terms.items()
                            if sum(w[i] * e[i] for i in keep) < d})


def qd_truncate(f, d):
    """Drop every term of weighted degree ``>= d`` (``x`` is not graded here)."""
    return QdClass(_truncate(f, d, skip=("x",)), d)


@lru_cache(maxsize=None)
def _factor_in_s(n, k, d):
    """``prod_i (x^(2^k) + t_i^(2^k))`` in ``k[x, s]``, truncated below weighted degree d."""
    R = s_ring(n, with_x=True)
    M = 2 ** k
    x = R.gen("x")
    out = R.zero
    for j in range(n + 1):
        if j * M >= d:
            continue
        coeff = _elementary_power_via_t(n, j, M)
        out = out + coeff * x ** (M * (n - j))
    return out


@lru_cache(maxsize=None)
def _elementary_power_via_t(n, j, M):
    """``s_j(t^M)`` rewritten in ``k[x, s]`` by :func:`to_elementary_basis`."""
    T = t_ring(n, with_x=True)
    tM = {f"t{i}": T.gen(f"t{i}") ** M for i in range(1, n + 1)}
    tM["x"] = T.gen("x")
    sj = elementary_symmetric(n, j, T).poly.apply_hom(tM, T)
    return to_elementary_basis(SymPoly(sj), s_ring(n, with_x=True))


@lru_cache(maxsize=None)
def truncated_dp(n, p, d):
    """``D_p(t,x)`` in ``k[x, s1..sn]`` modulo weighted degree ``>= d`` in the s's.

    Computed factor by factor, ``D_p = prod_k prod_i (x^(2^k) + t_i^(2^k))``,
    truncating after each product, so high powers never get expanded.
    """
    R = s_ring(n, with_x=True)
    out = R.one
    for k in range(p + 1):
        out = _truncate(out * _factor_in_s(n, k, d), d, skip=("x",))
    return out


def small_exponent_box_degree(n, tau):
    """Largest weighted degree of ``s^e`` with every ``e_j < tau``.

    Every monomial of weighted degree ``>= tau*(1+...+n)`` therefore has some
    ``e_j >= tau``; callers compare against that bound.
    """
    return max(sum((j + 1) * e for j, e in enumerate(es))
               for es in _box(n, tau))


def _box(n, tau):
    if n == 0:
        yield ()
        return
    for rest in _box(n - 1, tau):
        for e in range(tau):
            yield rest + (e,)
