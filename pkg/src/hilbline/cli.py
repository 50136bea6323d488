"""Command-line interface: ``hilb <command> [options]``.

Exit codes: 0 pass, 1 verification failure, 2 budget exhausted, 64 usage error.
"""
from __future__ import annotations

import argparse
import json
import re
import sys

from .errors import BudgetExceeded, HilbError, PolySyntaxError, PreconditionError, VerificationError
from .exactpoly import GF, QQ, MonicPoly, PolyRing, _var_sort_key, format_poly, parse_poly
from .groebner import Budget, QuotientRing
from .hilbcore import (
    as_local_ring, cofactor_Dp, construct_Hnm, enumerate_points, minimal_power,
    truncated_ring, verify_universal, witness_nonrepresentability, x_power_remainder,
)
from .checks import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_BUDGET, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_field(text):
    """``Q``, ``Fp:<p>`` or the shorthand ``F<p>``."""
    t = text.strip()
    if t in ("Q", "QQ"):
        return QQ
    m = re.fullmatch(r"F(?:p:)?(\d+)", t)
    if not m:
        raise UsageError(f"unknown field {text!r} (use Q or Fp:<p>)")
    try:
        return GF(int(m.group(1)))
    except ValueError as exc:
        raise UsageError(str(exc))


def field_text(field):
    return "Q" if field.characteristic == 0 else f"Fp:{field.characteristic}"


# ---------------------------------------------------------------------------
# certificates as plain polynomials

def flatten(f):
    """A polynomial in ``x`` over ``K[u..]/I`` as a polynomial over ``K`` in ``(x, u..)``.

    Coefficients are replaced by their normal forms, so the text re-parses with
    :func:`parse_poly` and maps back through the quotient.
    """
    A = f.ring.domain
    P = A.poly_ring
    R = PolyRing(tuple(f.ring.variables) + tuple(P.variables), A.field)
    out = {}
    for (k,), c in f.terms.items():
        for e, v in c.nf.terms.items():
            out[(k,) + e] = v
    return R.from_terms(out)


def lift(text, A, var="x"):
    """Inverse of :func:`flatten`: parse ``text`` and map it into ``A[var]``."""
    R = PolyRing((var,) + tuple(A.poly_ring.variables), A.field)
    g = parse_poly(text, R)
    X = PolyRing((var,), A)
    images = {var: X.gen(var)}
    images.update({v: X.constant(A.gen(v)) for v in A.poly_ring.variables})
    return g.apply_hom(images, X)


def _quotient_text(A):
    k = "Q" if A.characteristic == 0 else f"F{A.characteristic}"
    return f"{k}[{','.join(A.poly_ring.variables)}]/({A.relations_text()})"


def _monic_text(F):
    return format_poly(flatten(F.expand()))


# ---------------------------------------------------------------------------
# commands; each returns (params, results, passed)

def cmd_hnm(args, field, budget):
    n, m = args.n, args.m
    if n < 1 or m < 0:
        raise UsageError("need -n >= 1 and -m >= 0")
    h = construct_Hnm(n, m, field, budget)
    cert = verify_universal(h)
    res = {
        "generators": [format_poly(g) for g in h.j_gens],
        "staircase": [format_poly(h.ring.poly_ring.monomial(e)) for e in h.ring.staircase],
        "dimension": h.dimension,
        "F": _monic_text(h.F),
        "Y": format_poly(flatten(cert.quotient)),
        "universal": "verified",
    }
    if h.note:
        res["note"] = h.note
    return {"n": n, "m": m}, [res], True


def _eps_poly(n, m, field):
    A = truncated_ring(2 ** (m + 1), field)
    return MonicPoly(A, [A.gen("u")] + [A.zero] * (n - 1))


def cmd_minexp(args, field, budget):
    n, m = args.n, args.m
    if n < 1 or m < 0:
        raise UsageError("need -n >= 1 and -m >= 0")
    F = _eps_poly(n, m, field)
    N = minimal_power(F)
    formula = 2 ** (m + 1) + n - 1
    res = {
        "ring": _quotient_text(F.domain),
        "F": _monic_text(F),
        "N": N,
        "formula": formula,
        "match": N == formula,
        "remainder_below": format_poly(flatten(x_power_remainder(F, N - 1))),
    }
    return {"n": n, "m": m}, [res], N == formula


def _parse_quotient(relations, coeffs, field, budget):
    rel_texts = [r for r in relations.split(",") if r.strip()]
    coeff_texts = [c for c in coeffs.split(",")]
    names = set()
    for t in rel_texts + coeff_texts:
        names.update(parse_poly(t).ring.variables)
    if "x" in names:
        raise UsageError("the coefficient ring may not use the variable x")
    if not names:
        names = {"u"}
    R = PolyRing(sorted(names, key=_var_sort_key), field)
    A = QuotientRing(R, [parse_poly(t, R) for t in rel_texts], budget=budget)
    return A, [A(parse_poly(t, R)) for t in coeff_texts]


def cmd_cofactor(args, field, budget):
    A, us = _parse_quotient(args.relations, args.coeffs, field, budget)
    if not A.is_finite_dimensional:
        raise UsageError("relations must define a finite-dimensional ring")
    F = MonicPoly(A, us)
    c = cofactor_Dp(F)
    res = {
        "ring": _quotient_text(A),
        "F": _monic_text(F),
        "tau": c.tau, "d": c.d, "p": c.p, "E": c.exponent,
        "G": format_poly(flatten(c.G)),
        "verified": True,
    }
    return {"relations": args.relations, "coeffs": args.coeffs}, [res], True


def cmd_witness(args, field, budget):
    n, N = args.n, args.N
    if n < 1 or N < n:
        raise UsageError("need -n >= 1 and -N >= n")
    w = witness_nonrepresentability(n, N, field)
    res = {
        "m": w.m,
        "ring": _quotient_text(w.ring),
        "F": _monic_text(w.F),
        "member": f"x^{w.exponent}",
        "cofactor": format_poly(flatten(w.cofactor)),
        "non_member": f"x^{N}",
        "remainder": format_poly(flatten(w.remainder)),
        "verified": w.verify(),
    }
    return {"n": n, "N": N}, [res], True


def cmd_check(args, field, budget):
    results = run_suite(args.suite, args.seed, field, budget)
    return {"suite": args.suite}, results, all(r["pass"] for r in results)


def cmd_enumerate(args, field, budget):
    if field.characteristic == 0:
        raise UsageError("enumerate needs a finite field (--field Fp:<p>)")
    if args.n < 1:
        raise UsageError("need -n >= 1")
    if args.relations:
        A, _ = _parse_quotient(args.relations, "0", field, budget)
    else:
        A = as_local_ring(field)
    if not A.is_finite_dimensional or not A.is_local:
        raise UsageError("relations must define a local ring of finite dimension")
    pts = enumerate_points(args.n, A)
    expected = sum(1 for _ in A.maximal_ideal_elements()) ** args.n
    res = {
        "ring": _quotient_text(A),
        "count": len(pts),
        "expected": expected,
        "match": len(pts) == expected,
    }
    if args.list:
        res["points"] = [_monic_text(p.F) for p in pts]
    return {"n": args.n, "relations": args.relations or ""}, [res], len(pts) == expected


COMMANDS = {
    "hnm": cmd_hnm, "minexp": cmd_minexp, "cofactor": cmd_cofactor,
    "witness": cmd_witness, "check": cmd_check, "enumerate": cmd_enumerate,
}


# ---------------------------------------------------------------------------

def _add_common(p):
    S = argparse.SUPPRESS
    p.add_argument("--json", action="store_true", default=S, help="emit one JSON document")
    p.add_argument("--seed", type=int, default=S, help="seed for randomized suites (default 0)")
    p.add_argument("--budget", type=int, default=S, help="Groebner reduction step budget")
    p.add_argument("--field", default=S, help="coefficient field: Q or Fp:<p> (default Q)")


def build_parser():
    parser = _Parser(prog="hilb", description="Exact checks for fat points on the line.")
    _add_common(parser)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("hnm", help="presentation of H_{n,m}")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-m", type=int, required=True)

    p = sub.add_parser("minexp", help="smallest N with x^N in (x^n - u x^(n-1))")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-m", type=int, required=True)

    p = sub.add_parser("cofactor", help="G with F*G = x^E for nilpotent coefficients")
    p.add_argument("--relations", default="u^2", help="comma-separated relations of A")
    p.add_argument("--coeffs", default="u", help="comma-separated u_1..u_n")

    p = sub.add_parser("witness", help="ring and polynomial defeating exponent N")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-N", type=int, required=True)

    p = sub.add_parser("check", help="run verification suites")
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")

    p = sub.add_parser("enumerate", help="count points over a finite local ring")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--relations", default="", help="relations of A over F_p (empty: the field)")
    p.add_argument("--list", action="store_true", help="print every point")

    for p in sub.choices.values():
        _add_common(p)
    return parser


def render_text(doc):
    lines = [f"command: {doc['command']}"]
    for k, v in doc["params"].items():
        lines.append(f"{k}: {v}")
    for r in doc["results"]:
        if "name" in r:
            status = "PASS" if r["pass"] else "FAIL"
            lines.append(f"[{status}] {r['name']}: {r['detail']}")
            continue
        for k, v in r.items():
            if isinstance(v, list):
                lines.append(f"{k}:")
                lines.extend(f"  {item}" for item in v)
            elif isinstance(v, bool):
                lines.append(f"{k}: {str(v).lower()}")
            else:
                lines.append(f"{k}: {v}")
    lines.append(f"pass: {str(doc['pass']).lower()}")
    return "\n".join(lines)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    as_json = getattr(args, "json", False)
    args.seed = getattr(args, "seed", 0)
    budget_limit = getattr(args, "budget", None)
    field_arg = getattr(args, "field", None)
    try:
        if field_arg is not None:
            field = parse_field(field_arg)
        else:
            # check picks its own default rings; everything else works over Q
            field = None if args.command == "check" else QQ
        budget = Budget(budget_limit) if budget_limit is not None else None
        params, results, passed = COMMANDS[args.command](args, field, budget)
    except (UsageError, PreconditionError, PolySyntaxError) as exc:
        print(f"hilb: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"hilb: budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (VerificationError, HilbError) as exc:
        print(f"hilb: verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    params = dict(params)
    params["field"] = field_text(field) if field is not None else "default"
    params["seed"] = args.seed
    doc = {"command": args.command, "params": params, "results": results, "pass": passed}
    print(json.dumps(doc, indent=2) if as_json else render_text(doc))
    if not passed:
        failed = next((r for r in results if not r.get("pass", True)), None)
        if failed:
            print(f"hilb: first failure: {failed['name']}: {failed['detail']}", file=sys.stderr)
    return EXIT_OK if passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
