"""Buchberger's algorithm, normal forms and finite-dimensional quotient rings.

Everything here assumes coefficients in a field (``QQ`` or ``GF(p)``).
Computations over rings with zero divisors go through monic division in
:mod:`hilbline.exactpoly` instead.
"""
from __future__ import annotations

import itertools
from operator import add, sub

from .errors import BudgetExceeded, RingMismatchError, UnsupportedRingError
from .exactpoly import MultiPoly, PolyRing, degrevlex, format_poly

__all__ = [
    "DEFAULT_BUDGET", "Budget", "buchberger", "reduce_poly", "is_groebner",
    "Ideal", "normal_form", "ideal_contains", "quotient_basis",
    "QuotientRing", "QuotElem", "is_nilpotent",
]

DEFAULT_BUDGET = 10 ** 6


class Budget:
    """Counts reduction steps; raises :class:`BudgetExceeded` past ``limit``."""

    def __init__(self, limit=None):
        self.limit = DEFAULT_BUDGET if limit is None else int(limit)
        self.used = 0

    def spend(self, k=1):
        self.used += k
        if self.used > self.limit:
            raise BudgetExceeded(f"step budget of {self.limit} exhausted")


def _as_budget(budget):
    if isinstance(budget, Budget):
        return budget
    return Budget(budget)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(map(max, a, b))


def reduce_poly(f, basis, order=degrevlex, budget=None):
    """Fully reduce ``f`` by ``basis``; the result has no term divisible by a leading term."""
    budget = _as_budget(budget)
    lead = []
    for g in basis:
        if g.terms:
            lm, lc = g.leading_term(order)
            lead.append((lm, lc, g.terms))
    p = dict(f.terms)
    rem = {}
    while p:
        m = max(p, key=order)
        c = p[m]
        for lm, lc, gt in lead:
            if _divides(lm, m):
                q = tuple(map(sub, m, lm))
                factor = c / lc
                for e, v in gt.items():
                    ee = tuple(map(add, e, q))
                    old = p.get(ee)
                    nv = -factor * v if old is None else old - factor * v
                    if nv:
                        p[ee] = nv
                    else:
                        p.pop(ee, None)
                p.pop(m, None)
                budget.spend()
                break
        else:
            rem[m] = p.pop(m)
    return MultiPoly(f.ring, rem)


def _spoly(f, g, lmf, lmg):
    L = _lcm(lmf, lmg)
    a = f.mul_term(tuple(map(sub, L, lmf)), f.ring.domain.one / f.terms[lmf])
    b = g.mul_term(tuple(map(sub, L, lmg)), g.ring.domain.one / g.terms[lmg])
    return a - b


def _update(G, lms, pairs, f_lm):
    """Gebauer-Moeller pair update when a polynomial with leading monomial ``f_lm`` joins."""
    t = len(lms)
    kept = set()
    for (i, j) in pairs:
        L = _lcm(lms[i], lms[j])
        if (not _divides(f_lm, L) or L == _lcm(lms[i], f_lm) or L == _lcm(lms[j], f_lm)):
            kept.add((i, j))
    by_lcm = {}
    for i in range(t):
        if G[i] is None:
            continue
        by_lcm.setdefault(_lcm(lms[i], f_lm), []).append(i)
    minimal = []
    for L in sorted(by_lcm, key=sum):
        if not any(_divides(M, L) for M in minimal):
            minimal.append(L)
    for L in minimal:
        idx = by_lcm[L]
        # product criterion: coprime leading monomials give a zero S-polynomial
        if any(L == tuple(map(add, lms[i], f_lm)) for i in idx):
            continue
        kept.add((min(idx), t))
    return kept


def buchberger(gens, order=degrevlex, budget=None):
    """Reduced Groebner basis of the ideal generated by ``gens``.

    The result is sorted by increasing leading monomial and every element is
    monic.  ``budget`` bounds the total number of reduction steps.
    """
    budget = _as_budget(budget)
    gens = [g for g in gens if g.terms]
    if not gens:
        return []
    ring = gens[0].ring
    if any(g.ring != ring for g in gens):
        raise RingMismatchError("generators live in different rings")
    if not ring.domain.is_field:
        raise RingMismatchError("Buchberger's algorithm needs coefficients in a field")

    G, lms, pairs = [], [], set()
    for g in gens:
        g = reduce_poly(g, [h for h in G if h is not None], order, budget)
        if not g.terms:
            continue
        g = g.monic(order)
        lm = g.leading_monomial(order)
        pairs = _update(G, lms, pairs, lm)
        G.append(g)
        lms.append(lm)

    while pairs:
        i, j = min(pairs, key=lambda p: (order(_lcm(lms[p[0]], lms[p[1]])), p))
        pairs.discard((i, j))
        budget.spend()
        s = _spoly(G[i], G[j], lms[i], lms[j])
        r = reduce_poly(s, G, order, budget)
        if r.terms:
            r = r.monic(order)
            lm = r.leading_monomial(order)
            pairs = _update(G, lms, pairs, lm)
            G.append(r)
            lms.append(lm)

    # minimalize, then interreduce
    idx = sorted(range(len(G)), key=lambda k: order(lms[k]))
    minimal = []
    for k in idx:
        if not any(_divides(lms[m], lms[k]) for m in minimal):
            minimal.append(k)
    basis = [G[k] for k in minimal]
    reduced = []
    for k, g in enumerate(basis):
        others = basis[:k] + basis[k + 1:]
        lm, lc = g.leading_term(order)
        tail = MultiPoly(ring, {e: c for e, c in g.terms.items() if e != lm})
        tail = reduce_poly(tail, others, order, budget)
        reduced.append((ring.monomial(lm, lc) + tail).monic(order))
    reduced.sort(key=lambda g: order(g.leading_monomial(order)))
    return reduced


def is_groebner(basis, order=degrevlex, budget=None):
    """True iff every S-polynomial of ``basis`` reduces to zero."""
    basis = [g for g in basis if g.terms]
    lms = [g.leading_monomial(order) for g in basis]
    for i, j in itertools.combinations(range(len(basis)), 2):
        s = _spoly(basis[i], basis[j], lms[i], lms[j])
        if reduce_poly(s, basis, order, budget).terms:
            return False
    return True


class Ideal:
    """An ideal of a polynomial ring over a field, with a lazily cached basis."""

    def __init__(self, ring, gens, order=degrevlex, budget=None):
        self.ring = ring
        self.gens = [g for g in (ring(g) for g in gens) if g.terms]
        self.order = order
        self.budget = budget
        self._gb = None

    @property
    def groebner_basis(self):
        if self._gb is None:
            self._gb = buchberger(self.gens, self.order, self.budget)
        return self._gb

    def reduce(self, f):
        return reduce_poly(self.ring(f), self.groebner_basis, self.order, self.budget)

    def __contains__(self, f):
        return not self.reduce(f).terms

    def leading_monomials(self):
        return [g.leading_monomial(self.order) for g in self.groebner_basis]

    def is_unit(self):
        return any(not any(lm) for lm in self.leading_monomials())

    def __repr__(self):
        return f"Ideal({', '.join(format_poly(g) for g in self.gens)})"


def normal_form(f, ideal):
    return ideal.reduce(f)


def ideal_contains(big, small):
    """``small ⊆ big``: every generator of ``small`` reduces to zero modulo ``big``."""
    if big.ring != small.ring:
        raise RingMismatchError("ideals live in different rings")
    return all(g in big for g in small.gens)


def quotient_basis(ideal):
    """Standard monomials of ``ideal`` (sorted), or ``None`` if there are infinitely many."""
    lms = ideal.leading_monomials()
    n = ideal.ring.nvars
    if any(not any(lm) for lm in lms):
        return []
    for i in range(n):
        if not any(lm[i] > 0 and sum(lm) == lm[i] for lm in lms):
            return None
    seen = {(0,) * n}
    frontier = [(0,) * n]
    while frontier:
        nxt = []
        for e in frontier:
            for i in range(n):
                f = e[:i] + (e[i] + 1,) + e[i + 1:]
                if f not in seen and not any(_divides(lm, f) for lm in lms):
                    seen.add(f)
                    nxt.append(f)
        frontier = nxt
    return sorted(seen, key=ideal.order)


# ---------------------------------------------------------------------------
# quotient rings
# ---------------------------------------------------------------------------

class QuotientRing:
    """``k[v_1..v_r]/(g_1..g_s)`` usable as a coefficient domain.

    Elements are stored by their normal form.  Normal forms of monomials are
    cached, so multiplication reduces to table lookups once warm.
    """

    is_field = False

    def __init__(self, ring, relations=(), budget=None, name=None):
        if isinstance(ring, (list, tuple)):
            ring = PolyRing(ring)
        if not ring.domain.is_field:
            raise RingMismatchError("quotient rings are built over a field")
        self.poly_ring = ring
        self.field = ring.domain
        self.characteristic = ring.domain.characteristic
        self.ideal = Ideal(ring, [ring(r) for r in relations], budget=budget)
        self.basis = self.ideal.groebner_basis
        self._key = (ring, tuple(frozenset(g.terms.items()) for g in self.basis))
        self._mono_nf = {}
        self._staircase = False
        self.name = name
        self.zero = QuotElem(self, ring.zero)
        self.one = QuotElem(self, self.reduce(ring.one))

    # -- structure ---------------------------------------------------------
    @property
    def staircase(self):
        if self._staircase is False:
            self._staircase = quotient_basis(self.ideal)
        return self._staircase

    @property
    def dimension(self):
        st = self.staircase
        return None if st is None else len(st)

    @property
    def is_finite_dimensional(self):
        return self.staircase is not None

    def origin_is_point(self):
        """The ideal is proper and vanishes at the origin."""
        return all(not g.constant_coefficient() for g in self.basis)

    @property
    def is_local(self):
        if not self.is_finite_dimensional or not self.origin_is_point():
            return False
        return all(is_nilpotent(g)[0] for g in self.gens())

    # -- element construction ----------------------------------------------
    def _nf_monomial(self, e):
        nf = self._mono_nf.get(e)
        if nf is None:
            r = reduce_poly(MultiPoly(self.poly_ring, {e: self.field.one}), self.basis,
                            self.ideal.order, self.ideal.budget)
            nf = self._mono_nf[e] = r.terms
        return nf

    def _nf_terms(self, terms):
        out = {}
        for e, c in terms.items():
            for ee, v in self._nf_monomial(e).items():
                old = out.get(ee)
                nv = c * v if old is None else old + c * v
                if nv:
                    out[ee] = nv
                else:
                    del out[ee]
        return out

    def reduce(self, f):
        return MultiPoly(self.poly_ring, self._nf_terms(self.poly_ring(f).terms))

    def __call__(self, value):
        if isinstance(value, QuotElem):
            if value.ring == self:
                return value
            raise RingMismatchError("element of a different quotient ring")
        if isinstance(value, (MultiPoly, str)):
            return QuotElem(self, self.reduce(self.poly_ring(value)))
        return QuotElem(self, self.poly_ring.constant(value))

    def gen(self, name):
        return self(self.poly_ring.gen(name))

    def gens(self):
        return [self(g) for g in self.poly_ring.gens()]

    def monomial_element(self, e):
        return QuotElem(self, MultiPoly(self.poly_ring, self._nf_monomial(tuple(e))))

    # -- finite enumeration -------------------------------------------------
    def _require_finite(self):
        if not self.is_finite_dimensional:
            raise UnsupportedRingError(f"{self!r} is not finite-dimensional")
        if not hasattr(self.field, "elements"):
            raise UnsupportedRingError(f"{self!r} is not a finite ring")

    def elements(self):
        self._require_finite()
        st = self.staircase
        for coeffs in itertools.product(self.field.elements(), repeat=len(st)):
            yield QuotElem(self, MultiPoly(self.poly_ring,
                                           {e: c for e, c in zip(st, coeffs) if c}))

    def maximal_ideal_elements(self):
        """Elements with zero residue; requires a local ring with a point at the origin."""
        self._require_finite()
        if not self.is_local:
            raise UnsupportedRingError(f"{self!r} is not local at the origin")
        st = [e for e in self.staircase if any(e)]
        for coeffs in itertools.product(self.field.elements(), repeat=len(st)):
            yield QuotElem(self, MultiPoly(self.poly_ring,
                                           {e: c for e, c in zip(st, coeffs) if c}))

    def cardinality(self):
        self._require_finite()
        return self.field.p ** self.dimension

    # -- printing / identity ------------------------------------------------
    def signed_text(self, c):
        nf = c.nf
        if len(nf.terms) <= 1:
            text = format_poly(nf)
            if text.startswith("-"):
                return True, text[1:], True
            return False, text, True
        return False, f"({format_poly(nf)})", True

    def relations_text(self):
        return ", ".join(format_poly(g) for g in self.basis)

    def __eq__(self, other):
        return isinstance(other, QuotientRing) and self._key == other._key

    def __hash__(self):
        return hash(self._key[0])

    def __repr__(self):
        if self.name:
            return self.name
        k = "Q" if self.characteristic == 0 else f"F{self.characteristic}"
        return f"{k}[{','.join(self.poly_ring.variables)}]/({self.relations_text()})"


class QuotElem:
    """Residue class in a :class:`QuotientRing`, stored as its normal form."""

    __slots__ = ("ring", "nf")

    def __init__(self, ring, nf):
        self.ring = ring
        self.nf = nf

    def _other(self, other):
        if isinstance(other, QuotElem):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatchError("elements of different quotient rings")
            return other.nf
        return self.ring(other).nf

    def __add__(self, other):
        return QuotElem(self.ring, self.nf + self._other(other))

    __radd__ = __add__

    def __sub__(self, other):
        return QuotElem(self.ring, self.nf - self._other(other))

    def __rsub__(self, other):
        return QuotElem(self.ring, self._other(other) - self.nf)

    def __neg__(self):
        return QuotElem(self.ring, -self.nf)

    def __mul__(self, other):
        o = self._other(other)
        a, b = self.nf.terms, o.terms
        if not a or not b:
            return self.ring.zero
        prod = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(map(add, e1, e2))
                v = prod.get(e)
                prod[e] = c1 * c2 if v is None else v + c1 * c2
        return QuotElem(self.ring, MultiPoly(self.ring.poly_ring,
                                             self.ring._nf_terms({e: c for e, c in prod.items() if c})))

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        o = self.ring(other)
        c = o.nf.terms.get((0,) * self.ring.poly_ring.nvars)
        if c is None or len(o.nf.terms) != 1:
            raise ZeroDivisionError("only division by nonzero constants is supported")
        return QuotElem(self.ring, self.nf.scale(self.ring.field.one / c))

    def __bool__(self):
        return bool(self.nf.terms)

    def __eq__(self, other):
        try:
            return self.nf.terms == self._other(other).terms
        except (RingMismatchError, TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.nf.terms.items()))

    def residue(self):
        """Image in the residue field (the constant term of the normal form)."""
        return self.nf.constant_coefficient()

    def is_nilpotent(self):
        return is_nilpotent(self)

    def __repr__(self):
        return f"[{format_poly(self.nf)}]"

    __str__ = __repr__


def is_nilpotent(a):
    """``(True, j)`` with ``j`` minimal such that ``a^j = 0``, else ``(False, None)``.

    Needs a finite-dimensional ring of dimension ``D``; a nilpotent element then
    satisfies ``a^D = 0``, which is checked first by repeated squaring.
    """
    D = a.ring.dimension
    if D is None:
        raise UnsupportedRingError("nilpotency test needs a finite-dimensional quotient")
    if not a:
        return True, 1
    p = a
    reach = 1
    while reach < D:
        p = p * p
        reach *= 2
        if not p:
            break
    if p:
        return False, None
    power = a
    j = 1
    while power:
        power = power * a
        j += 1
    return True, j
