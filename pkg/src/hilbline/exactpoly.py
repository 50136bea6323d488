"""Exact scalars, sparse multivariate polynomials and monic division.

Coefficient domains are small objects that know how to convert values into
their element type and how to print them:

* ``QQ`` -- rationals, elements are :class:`fractions.Fraction`;
* ``GF(p)`` -- prime fields, elements are :class:`ModP`;
* any :class:`hilbline.groebner.QuotientRing`, elements are ``QuotElem``.

Elements of all three support the usual arithmetic operators, so polynomial
code never needs to know which one it is dealing with.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from operator import add, sub

from .errors import (
    MissingImageError,
    PolySyntaxError,
    PreconditionError,
    RingMismatchError,
    UnknownVariableError,
)

__all__ = [
    "QQ", "GF", "ModP", "RationalField", "PrimeField",
    "PolyRing", "MultiPoly", "MonicPoly",
    "degrevlex", "lex", "block_order",
    "apply_hom", "monic_divmod", "parse_poly", "format_poly", "domain_of",
]


# ---------------------------------------------------------------------------
# coefficient domains
# ---------------------------------------------------------------------------

class RationalField:
    name = "Q"
    characteristic = 0
    is_field = True

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    @property
    def field(self):
        return self

    def __call__(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value.strip())
        raise RingMismatchError(f"cannot convert {value!r} to a rational")

    def signed_text(self, c):
        return c < 0, str(abs(c)), True

    def __repr__(self):
        return "QQ"

    def __reduce__(self):
        return "QQ"


QQ = RationalField()


def _is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class ModP:
    """An element of a prime field, stored as its residue in ``[0, p)``."""

    __slots__ = ("v", "field")

    def __init__(self, v, field):
        self.v = v % field.p
        self.field = field

    def _other(self, other):
        if isinstance(other, ModP):
            if other.field.p != self.field.p:
                raise RingMismatchError(f"GF({self.field.p}) vs GF({other.field.p})")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return self.field(other).v
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return ModP(self.v + o, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return ModP(self.v - o, self.field)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return ModP(o - self.v, self.field)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return ModP(self.v * o, self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return ModP(-self.v, self.field)

    def inverse(self):
        if not self.v:
            raise ZeroDivisionError("inverse of 0 in a prime field")
        return ModP(pow(self.v, -1, self.field.p), self.field)

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self * ModP(o, self.field).inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return ModP(pow(self.v, e, self.field.p), self.field)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.field.p == other.field.p and self.v == other.v
        if isinstance(other, int):
            return (other - self.v) % self.field.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.field.p))

    def __repr__(self):
        return f"{self.v} mod {self.field.p}"


class PrimeField:
    is_field = True

    def __init__(self, p):
        if not _is_prime(p) or p > 2 ** 31:
            raise ValueError(f"GF(p) needs a prime p <= 2^31, got {p}")
        self.p = p
        self.characteristic = p
        self.name = f"F{p}"
        self.zero = ModP(0, self)
        self.one = ModP(1, self)

    @property
    def field(self):
        return self

    def __call__(self, value):
        if isinstance(value, ModP):
            if value.field.p != self.p:
                raise RingMismatchError(f"GF({value.field.p}) element in GF({self.p})")
            return value
        if isinstance(value, int):
            return ModP(value, self)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"{value} has no image in GF({self.p})")
            return ModP(value.numerator * pow(value.denominator, -1, self.p), self)
        if isinstance(value, str):
            return self(Fraction(value.strip()))
        raise RingMismatchError(f"cannot convert {value!r} to GF({self.p})")

    def elements(self):
        return [ModP(v, self) for v in range(self.p)]

    def signed_text(self, c):
        return False, str(c.v), True

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


@lru_cache(maxsize=None)
def GF(p):
    return PrimeField(p)


def domain_of(value):
    """Best-effort domain of a bare scalar or ring element."""
    if isinstance(value, MultiPoly):
        return value.ring
    if isinstance(value, ModP):
        return value.field
    if isinstance(value, (int, Fraction)):
        return QQ
    ring = getattr(value, "ring", None)
    if ring is not None:
        return ring
    raise RingMismatchError(f"no known domain for {value!r}")


# ---------------------------------------------------------------------------
# term orders (sort keys: larger key = larger monomial)
# ---------------------------------------------------------------------------

def degrevlex(e):
    return (sum(e),) + tuple(-a for a in reversed(e))


def lex(e):
    return e


def block_order(k):
    """Elimination order: the first ``k`` variables dominate, degrevlex in each block."""
    def key(e):
        return degrevlex(e[:k]) + degrevlex(e[k:])
    key.__name__ = f"block_order_{k}"
    return key


# ---------------------------------------------------------------------------
# polynomial rings
# ---------------------------------------------------------------------------

_NAME_RE = re.compile(r"^([A-Za-z]+)_?(\d*)$")


def _canonical_name(name):
    m = _NAME_RE.match(name)
    if not m:
        return name
    return m.group(1) + m.group(2)


def _var_sort_key(name):
    m = _NAME_RE.match(name)
    if not m:
        return (name, -1)
    return (m.group(1), int(m.group(2)) if m.group(2) else -1)


class PolyRing:
    """``domain[variables]`` with an optional positive weight per variable."""

    def __init__(self, variables, domain=QQ, weights=None):
        self.variables = tuple(_canonical_name(v) for v in variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"repeated variable in {self.variables}")
        self.domain = domain
        if weights is not None:
            weights = tuple(int(w) for w in weights)
            if len(weights) != len(self.variables) or min(weights, default=1) < 1:
                raise ValueError("weights must be positive, one per variable")
        self.weights = weights
        self.index = {v: i for i, v in enumerate(self.variables)}
        self.nvars = len(self.variables)
        self._unit = (0,) * self.nvars

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.variables == other.variables
                and self.domain == other.domain and self.weights == other.weights)

    def __hash__(self):
        return hash((self.variables, self.weights))

    def __repr__(self):
        w = f", weights={self.weights}" if self.weights else ""
        return f"PolyRing({', '.join(self.variables)} over {self.domain!r}{w})"

    @property
    def zero(self):
        return MultiPoly(self, {})

    @property
    def one(self):
        return self.constant(1)

    def constant(self, c):
        c = self.domain(c)
        return MultiPoly(self, {self._unit: c} if c else {})

    def monomial(self, exps, coeff=1):
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise ValueError("exponent vector length does not match the ring")
        c = self.domain(coeff)
        return MultiPoly(self, {exps: c} if c else {})

    def gen(self, name):
        name = _canonical_name(name)
        if name not in self.index:
            raise UnknownVariableError(f"{name!r} is not a variable of {self!r}")
        e = [0] * self.nvars
        e[self.index[name]] = 1
        return MultiPoly(self, {tuple(e): self.domain.one})

    def gens(self):
        return [self.gen(v) for v in self.variables]

    def from_terms(self, terms):
        clean = {}
        for e, c in terms.items():
            c = self.domain(c)
            if c:
                clean[tuple(e)] = c
        return MultiPoly(self, clean)

    def weight(self, exps):
        if self.weights is None:
            return sum(exps)
        return sum(w * e for w, e in zip(self.weights, exps))

    def parse(self, text):
        return parse_poly(text, ring=self)

    def __call__(self, value):
        if isinstance(value, MultiPoly):
            return value if value.ring == self else value.to_ring(self)
        if isinstance(value, str):
            return parse_poly(value, ring=self)
        return self.constant(value)


class MultiPoly:
    """Sparse polynomial: ``terms`` maps exponent tuples to nonzero coefficients.

    Instances are treated as immutable; every operation returns a new object.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    # -- coercion ----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.ring == self.ring:
                return self, other
            if other.ring.domain != self.ring.domain:
                raise RingMismatchError(
                    f"coefficient rings differ: {self.ring.domain!r} vs {other.ring.domain!r}")
            sv, ov = set(self.ring.variables), set(other.ring.variables)
            if ov <= sv and other.ring.weights is None:
                return self, other.to_ring(self.ring)
            if sv <= ov and self.ring.weights is None:
                return self.to_ring(other.ring), other
            raise RingMismatchError(f"cannot align {self.ring!r} and {other.ring!r}")
        try:
            return self, self.ring.constant(other)
        except RingMismatchError:
            raise
        except (TypeError, ValueError) as exc:
            raise RingMismatchError(str(exc)) from exc

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        a, b = self._coerce(other)
        res = dict(a.terms)
        for e, c in b.terms.items():
            v = res.get(e)
            if v is None:
                res[e] = c
            else:
                v = v + c
                if v:
                    res[e] = v
                else:
                    del res[e]
        return MultiPoly(a.ring, res)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        a, b = self._coerce(other)
        return a + (-b)

    def __rsub__(self, other):
        a, b = self._coerce(other)
        return b + (-a)

    def __mul__(self, other):
        a, b = self._coerce(other)
        if not a.terms or not b.terms:
            return MultiPoly(a.ring, {})
        res = {}
        get = res.get
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(map(add, e1, e2))
                v = get(e)
                res[e] = c1 * c2 if v is None else v + c1 * c2
        return MultiPoly(a.ring, {e: c for e, c in res.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers need a non-negative integer exponent")
        if len(self.terms) == 1:
            (e, c), = self.terms.items()
            c = c ** k
            return MultiPoly(self.ring, {tuple(a * k for a in e): c} if c else {})
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c):
        c = self.ring.domain(c)
        if not c:
            return self.ring.zero
        return MultiPoly(self.ring, {e: v * c for e, v in self.terms.items() if v * c})

    def mul_term(self, exps, c):
        return MultiPoly(self.ring, {tuple(map(add, e, exps)): v * c
                                     for e, v in self.terms.items() if v * c})

    # -- comparison --------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.ring == other.ring and self.terms == other.terms
        try:
            return self.terms == self.ring.constant(other).terms
        except (RingMismatchError, TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- inspection --------------------------------------------------------
    def leading_term(self, order=degrevlex):
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        e = max(self.terms, key=order)
        return e, self.terms[e]

    def leading_monomial(self, order=degrevlex):
        return self.leading_term(order)[0]

    def leading_coefficient(self, order=degrevlex):
        return self.leading_term(order)[1]

    def monic(self, order=degrevlex):
        if not self.terms:
            return self
        lc = self.leading_coefficient(order)
        inv = self.ring.domain.one / lc
        return MultiPoly(self.ring, {e: c * inv for e, c in self.terms.items()})

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def degree(self, var):
        i = self.ring.index[_canonical_name(var)]
        return max((e[i] for e in self.terms), default=-1)

    def weighted_degree(self):
        return max((self.ring.weight(e) for e in self.terms), default=-1)

    def is_weighted_homogeneous(self):
        return len({self.ring.weight(e) for e in self.terms}) <= 1

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), self.ring.domain.zero)

    def constant_coefficient(self):
        return self.coefficient(self.ring._unit)

    def used_variables(self):
        used = set()
        for e in self.terms:
            used.update(i for i, a in enumerate(e) if a)
        return [self.ring.variables[i] for i in sorted(used)]

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def dense_coefficients(self):
        """Coefficients low to high of a polynomial in a one-variable ring."""
        if self.ring.nvars != 1:
            raise PreconditionError("dense form needs a univariate ring")
        zero = self.ring.domain.zero
        out = [zero] * (self.total_degree() + 1)
        for (k,), c in self.terms.items():
            out[k] = c
        return out

    def to_ring(self, ring):
        """Embed into ``ring`` by variable name, converting coefficients."""
        pos = []
        for i, v in enumerate(self.ring.variables):
            j = ring.index.get(v)
            if j is None:
                if any(e[i] for e in self.terms):
                    raise RingMismatchError(f"variable {v!r} missing from {ring!r}")
            pos.append(j)
        out = {}
        conv = ring.domain
        for e, c in self.terms.items():
            t = [0] * ring.nvars
            for i, a in enumerate(e):
                if a:
                    t[pos[i]] = a
            c = conv(c)
            if c:
                out[tuple(t)] = c
        return MultiPoly(ring, out)

    def apply_hom(self, images, target=None):
        return apply_hom(self, images, target)

    def __repr__(self):
        return f"MultiPoly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


# ---------------------------------------------------------------------------
# ring homomorphisms
# ---------------------------------------------------------------------------

def apply_hom(f, images, target=None):
    """Image of ``f`` under the homomorphism fixed by ``images`` on variables.

    ``images`` maps variable names to polynomials or ring elements; coefficients
    of ``f`` are sent into ``target`` through its conversion.  When ``target``
    is omitted it is inferred from the images.
    """
    images = {_canonical_name(k): v for k, v in images.items()}
    used = f.used_variables()
    missing = [v for v in used if v not in images]
    if missing:
        raise MissingImageError(f"no image given for {', '.join(missing)}")
    if target is None:
        target = domain_of(next(iter(images.values()))) if images else f.ring
    conv = {v: target(images[v]) for v in used}
    zero = target.zero if isinstance(target, PolyRing) else target.zero
    result = zero
    powers = {}
    cols = [(i, v) for i, v in enumerate(f.ring.variables) if v in conv]
    for e, c in f.terms.items():
        term = target(c)
        for i, v in cols:
            k = e[i]
            if k:
                p = powers.get((v, k))
                if p is None:
                    p = powers[(v, k)] = conv[v] ** k
                term = term * p
        result = result + term
    return result


# ---------------------------------------------------------------------------
# monic univariate polynomials and division
# ---------------------------------------------------------------------------

class MonicPoly:
    """``x^n - u_1 x^(n-1) + ... + (-1)^n u_n`` over ``domain``.

    Only the signed coefficients ``u_1..u_n`` are stored; the plain coefficients
    ``(-1)^i u_i`` are derived on demand.
    """

    __slots__ = ("domain", "coeffs", "var")

    def __init__(self, domain, coeffs, var="x"):
        coeffs = tuple(domain(c) for c in coeffs)
        if not coeffs:
            raise PreconditionError("a monic polynomial needs degree n >= 1")
        self.domain = domain
        self.coeffs = coeffs
        self.var = _canonical_name(var)

    @property
    def degree(self):
        return len(self.coeffs)

    def plain_coefficients(self):
        """``[a_0, ..., a_n]`` with ``F = sum a_i x^(n-i)``, ``a_0 = 1``."""
        return [self.domain.one] + [c if i % 2 == 0 else -c
                                    for i, c in enumerate(self.coeffs, start=1)]

    def poly_ring(self):
        return PolyRing((self.var,), self.domain)

    def expand(self):
        n = self.degree
        ring = self.poly_ring()
        return ring.from_terms({(n - i,): a for i, a in enumerate(self.plain_coefficients())})

    @classmethod
    def from_poly(cls, f):
        if f.ring.nvars != 1:
            raise PreconditionError("expected a polynomial in one variable")
        dense = f.dense_coefficients()
        n = len(dense) - 1
        if n < 1 or dense[n] != f.ring.domain.one:
            raise PreconditionError("polynomial is not monic of degree >= 1")
        u = [dense[n - i] if i % 2 == 0 else -dense[n - i] for i in range(1, n + 1)]
        return cls(f.ring.domain, u, f.ring.variables[0])

    def __eq__(self, other):
        return (isinstance(other, MonicPoly) and self.domain == other.domain
                and self.var == other.var and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def __repr__(self):
        return f"MonicPoly({format_poly(self.expand())!r})"


def monic_divmod(dividend, divisor):
    """Long division by a monic polynomial; valid over any commutative ring."""
    if isinstance(divisor, MultiPoly):
        divisor = MonicPoly.from_poly(divisor)
    ring = dividend.ring
    if ring.nvars != 1 or ring.variables[0] != divisor.var:
        raise RingMismatchError(f"dividend must be a polynomial in {divisor.var} alone")
    if ring.domain != divisor.domain:
        raise RingMismatchError("dividend and divisor have different coefficient rings")
    zero = ring.domain.zero
    a = dividend.dense_coefficients()
    n = divisor.degree
    b = divisor.plain_coefficients()[::-1]  # b[i] = coefficient of x^i
    top = len(a) - 1
    if top < n:
        return ring.zero, dividend
    q = [zero] * (top - n + 1)
    for k in range(top - n, -1, -1):
        c = a[k + n]
        if c:
            q[k] = c
            for i in range(n):
                if b[i]:
                    a[k + i] = a[k + i] - c * b[i]
        a[k + n] = zero
    quotient = MultiPoly(ring, {(i,): c for i, c in enumerate(q) if c})
    remainder = MultiPoly(ring, {(i,): c for i, c in enumerate(a[:n]) if c})
    return quotient, remainder


# ---------------------------------------------------------------------------
# text form
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(?P<num>\d+(?:\s*/\s*\d+)?)|(?P<var>[A-Za-z][A-Za-z0-9_]*)"
                       r"|(?P<op>[-+*^]))")


def _tokenize(text):
    pos = 0
    out = []
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise PolySyntaxError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastgroup)
        out.append((m.lastgroup, m.group(m.lastgroup), start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


def parse_poly(text, ring=None, *, domain=QQ, variables=None):
    """Parse the textual grammar into a :class:`MultiPoly`.

    With ``ring`` given, every variable must belong to it.  Otherwise the ring
    is built from the variables that occur (sorted by name, then index); a
    ``variables`` collection restricts which names are accepted.
    """
    tokens = _tokenize(text)
    terms = []  # list of (coefficient Fraction, {var: exp})
    i = 0

    def peek():
        return tokens[i]

    def parse_factor():
        nonlocal i
        kind, val, pos = tokens[i]
        if kind == "num":
            i += 1
            num, _, den = val.replace(" ", "").partition("/")
            if den and int(den) == 0:
                raise PolySyntaxError("zero denominator", pos)
            return Fraction(int(num), int(den) if den else 1), None
        if kind == "var":
            i += 1
            name = _canonical_name(val)
            exp = 1
            if tokens[i][1] == "^":
                i += 1
                k, v, p = tokens[i]
                if k != "num" or "/" in v:
                    raise PolySyntaxError("expected a non-negative integer exponent", p)
                exp = int(v)
                i += 1
            return None, (name, exp, pos)
        raise PolySyntaxError(f"expected a number or variable, got {val or 'end of input'!r}", pos)

    sign = 1
    if peek()[1] in "+-" and peek()[0] == "op":
        sign = -1 if peek()[1] == "-" else 1
        i += 1
    while True:
        coeff = Fraction(sign)
        mono = {}
        c, v = parse_factor()
        while True:
            if c is not None:
                coeff *= c
            else:
                name, exp, pos = v
                if variables is not None and name not in {_canonical_name(x) for x in variables}:
                    raise UnknownVariableError(f"unknown variable {name!r} at position {pos}")
                if ring is not None and name not in ring.index:
                    raise UnknownVariableError(f"unknown variable {name!r} at position {pos}")
                mono[name] = mono.get(name, 0) + exp
            kind, val, pos = peek()
            if kind == "op" and val == "*":
                i += 1
                c, v = parse_factor()
            elif kind in ("var",) and c is not None:
                # juxtaposition after a coefficient, as in "3x"
                c, v = parse_factor()
            else:
                break
        terms.append((coeff, mono))
        kind, val, pos = peek()
        if kind == "end":
            break
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
            continue
        raise PolySyntaxError(f"unexpected {val!r}", pos)

    if ring is None:
        names = sorted({n for _, m in terms for n in m}, key=_var_sort_key)
        ring = PolyRing(names, domain)
    out = ring.zero
    for coeff, mono in terms:
        e = [0] * ring.nvars
        for name, k in mono.items():
            e[ring.index[name]] += k
        out = out + ring.monomial(e, coeff)
    return out


def format_poly(f, order=degrevlex):
    """Deterministic text form, terms in decreasing ``order``."""
    if not f.terms:
        return "0"
    names = f.ring.variables
    dom = f.ring.domain
    pieces = []
    for e in sorted(f.terms, key=order, reverse=True):
        neg, ctext, _ = dom.signed_text(f.terms[e])
        mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(names, e) if k)
        if not mono:
            body = ctext
        elif ctext == "1":
            body = mono
        else:
            body = f"{ctext}*{mono}"
        pieces.append((neg, body))
    neg, body = pieces[0]
    out = ["-" + body if neg else body]
    for neg, body in pieces[1:]:
        out.append(("- " if neg else "+ ") + body)
    return " ".join(out)
