"""Verification suites run by ``hilb check``.

Each check returns a dict ``{"name", "pass", "detail"}``.  Randomized checks
draw from :class:`hilbline.rng.Lcg64`, so a fixed seed gives identical reports.
"""
from __future__ import annotations

from itertools import product

from .exactpoly import GF, QQ, MonicPoly, PolyRing
from .groebner import Ideal, QuotientRing, buchberger, is_groebner
from .hilbcore import (
    as_local_ring, cofactor_Dp, construct_Hnm, elimination_ideal, enumerate_points,
    filtration_check, first_power_in_ideal, minimal_power, prorep_backward, prorep_forward,
    radical_contains_x, same_ideal, truncated_ring, verify_universal,
    witness_nonrepresentability, x_power_remainder, ProRepTuple,
)
from .rng import Lcg64
from .symfun import (
    delta_dp_sides, elementary_symmetric, from_elementary_basis, t_ring, to_elementary_basis,
)

SUITES = ("sym", "groebner", "hilb", "prorep")


def _result(name, ok, detail=""):
    return {"name": name, "pass": bool(ok), "detail": detail}


# ---------------------------------------------------------------------------
# sym

def check_delta_identity(n_max=4, p_max=3):
    bad = [(n, p) for n in range(1, n_max + 1) for p in range(p_max + 1)
           if (lambda s: s[0] != s[1])(delta_dp_sides(n, p))]
    return _result("delta-dp-identity", not bad,
                   f"n<={n_max}, p<={p_max}" + (f"; failed {bad}" if bad else ""))


def random_symmetric(rng, n, field=QQ, terms=4, max_exp=3):
    """A random symmetric polynomial in ``t1..tn``, built as a polynomial in the ``s_i(t)``."""
    T = t_ring(n, field, with_x=False)
    s = [elementary_symmetric(n, i, T).poly for i in range(1, n + 1)]
    f = T.zero
    for _ in range(terms):
        term = T.constant(rng.between(-5, 5))
        for si in s:
            term = term * si ** rng.below(max_exp)
        f = f + term
    return f


def check_sym_roundtrip(rng, cases=40):
    for k in range(cases):
        n = rng.between(1, 4)
        f = random_symmetric(rng, n)
        g = to_elementary_basis(f)
        if from_elementary_basis(g, n, f.ring) != f:
            return _result("sym-roundtrip", False, f"case {k}: {f}")
    return _result("sym-roundtrip", True, f"{cases} random symmetric polynomials")


# ---------------------------------------------------------------------------
# groebner

def random_poly(rng, ring, terms=3, max_deg=3):
    f = ring.zero
    for _ in range(terms):
        e = tuple(rng.below(max_deg + 1) for _ in range(ring.nvars))
        f = f + ring.monomial(e, rng.between(-4, 4))
    return f


def check_groebner_random(rng, field=QQ, budget=None, cases=30):
    R = PolyRing(("a", "b", "c"), field)
    for k in range(cases):
        gens = [random_poly(rng, R) for _ in range(rng.between(1, 3))]
        G = buchberger(gens, budget=budget)
        if not is_groebner(G):
            return _result("groebner-random", False, f"case {k}: not a Groebner basis")
        I = Ideal(R, gens, budget=budget)
        h = random_poly(rng, R)
        combo = sum((g * random_poly(rng, R, 2, 2) for g in gens), R.zero)
        if combo not in I or any(g not in I for g in gens):
            return _result("groebner-random", False, f"case {k}: membership failed")
        if I.reduce(I.reduce(h)) != I.reduce(h):
            return _result("groebner-random", False, f"case {k}: normal form not idempotent")
    return _result("groebner-random", True, f"{cases} random ideals in 3 variables")


def check_elimination_oracle(field=QQ, budget=None, n_max=3, m_max=3):
    bad = []
    for n in range(1, n_max + 1):
        for m in range(m_max + 1):
            h = construct_Hnm(n, m, field, budget)
            if not same_ideal(h.ring.poly_ring, elimination_ideal(n, m, field, budget), h.j_gens):
                bad.append((n, m))
    return _result("elimination-oracle", not bad,
                   f"n<={n_max}, m<={m_max}" + (f"; failed {bad}" if bad else ""))


# ---------------------------------------------------------------------------
# hilb

def check_minimal_power_table(field=QQ, n_max=4, m_max=4):
    bad = []
    for n in range(1, n_max + 1):
        for m in range(m_max + 1):
            A = truncated_ring(2 ** (m + 1), field)
            F = MonicPoly(A, [A.gen("u")] + [A.zero] * (n - 1))
            N = minimal_power(F)
            if N != 2 ** (m + 1) + n - 1 or not x_power_remainder(F, N - 1):
                bad.append((n, m, N))
    return _result("minimal-power-table", not bad,
                   f"n<={n_max}, m<={m_max}" + (f"; failed {bad}" if bad else ""))


def nilpotent_test_rings(field=QQ):
    R1 = PolyRing(("u",), field)
    R2 = PolyRing(("u", "v"), field)
    u, v = R2.gens()
    return [truncated_ring(q, field) for q in (2, 3, 4)] + [
        QuotientRing(R2, [u ** 2, v ** 2]),
        QuotientRing(R2, [u ** 2, u * v, v ** 2]),
    ]


def random_nilpotent(rng, A, bound=3):
    """Random element of the maximal ideal: a combination of non-constant staircase monomials."""
    out = A.zero
    for e in A.staircase:
        if any(e):
            out = out + A.monomial_element(e) * rng.between(-bound, bound)
    return out


def check_cofactor_random(rng, field=QQ, cases=100):
    rings = nilpotent_test_rings(field)
    for k in range(cases):
        A = rng.choice(rings)
        n = rng.between(1, 3)
        F = MonicPoly(A, [random_nilpotent(rng, A) for _ in range(n)])
        try:
            cofactor_Dp(F)
        except Exception as exc:  # report, do not abort the suite
            return _result("cofactor-random", False, f"case {k}: {F!r}: {exc}")
    return _result("cofactor-random", True, f"{cases} random nilpotent inputs, n<=3")


def exhaustive_rings():
    return [truncated_ring(2, GF(2)), truncated_ring(3, GF(2)), truncated_ring(2, GF(3))]


def check_radical_exhaustive(rings=None, deg_max=3):
    rings = rings or exhaustive_rings()
    total = 0
    for A in rings:
        elems = list(A.elements())
        for n in range(1, deg_max + 1):
            cap = A.dimension * n * 4
            for coeffs in product(elems, repeat=n):
                F = MonicPoly(A, coeffs)
                total += 1
                if radical_contains_x(F) != (first_power_in_ideal(F, cap) is not None):
                    return _result("radical-exhaustive", False, f"disagreement at {F!r}")
    return _result("radical-exhaustive", True, f"{total} monic polynomials")


def check_witnesses(field=QQ, cases=((1, 5), (2, 4), (3, 8))):
    for n, N in cases:
        w = witness_nonrepresentability(n, N, field)
        if not w.verify():
            return _result("witness", False, f"(n, N) = ({n}, {N})")
    return _result("witness", True, f"(n, N) in {list(cases)}")


def check_hnm_family(field=QQ, budget=None, n_max=3, m_max=4):
    bad = []
    for n in range(1, n_max + 1):
        try:
            report = filtration_check(n, m_max, field, budget)
            if not report.ok:
                bad.append(("filtration", n))
            for m in range(m_max + 1):
                verify_universal(construct_Hnm(n, m, field, budget))
        except Exception as exc:
            bad.append((n, str(exc)))
    return _result("hnm-family", not bad,
                   f"n<={n_max}, m<={m_max}" + (f"; failed {bad}" if bad else ""))


# ---------------------------------------------------------------------------
# prorep

def counting_rings(field=None):
    if field is None or field.characteristic == 0:
        return [GF(2), truncated_ring(2, GF(2)), truncated_ring(3, GF(2)),
                truncated_ring(2, GF(3))]
    return [field, truncated_ring(2, field), truncated_ring(3, field)]


def check_counting(field=None, n_max=3, limit=10 ** 4):
    rows = []
    for A in counting_rings(field):
        L = as_local_ring(A)
        mA = sum(1 for _ in L.maximal_ideal_elements())
        for n in range(1, n_max + 1):
            if L.cardinality() ** n > limit:
                continue
            got = len(enumerate_points(n, L))
            rows.append(f"{L!r} n={n}: {got}/{mA ** n}")
            if got != mA ** n:
                return _result("counting", False, rows[-1])
    return _result("counting", True, "; ".join(rows))


def check_roundtrip(rng, field=QQ, cases=500):
    rings = nilpotent_test_rings(field)
    for k in range(cases):
        A = rng.choice(rings)
        n = rng.between(1, 4)
        t = ProRepTuple(A, [random_nilpotent(rng, A) for _ in range(n)])
        pt = prorep_forward(t)
        if prorep_backward(pt) != t or prorep_forward(prorep_backward(pt)) != pt:
            return _result("prorep-roundtrip", False, f"case {k}: {t!r}")
    return _result("prorep-roundtrip", True, f"{cases} random tuples")


# ---------------------------------------------------------------------------

def run_suite(name, seed=0, field=QQ, budget=None):
    """Run one suite (or ``"all"``) and return its list of results in declaration order."""
    if name == "all":
        out = []
        for s in SUITES:
            out.extend(run_suite(s, seed, field, budget))
        return out
    rng = Lcg64(seed)
    # symmetric-function identities hold over the integers, so they run over QQ
    gb_field = field if field is not None else QQ
    if name == "sym":
        return [check_delta_identity(), check_sym_roundtrip(rng)]
    if name == "groebner":
        return [check_groebner_random(rng, gb_field, budget),
                check_elimination_oracle(gb_field, budget)]
    if name == "hilb":
        return [check_minimal_power_table(gb_field), check_cofactor_random(rng, gb_field),
                check_radical_exhaustive(), check_witnesses(gb_field),
                check_hnm_family(gb_field, budget)]
    if name == "prorep":
        return [check_roundtrip(rng, gb_field), check_counting(field)]
    raise ValueError(f"unknown suite {name!r}")
