import json
import subprocess
import sys

import pytest

from hilbline.cli import lift, main, parse_field
from hilbline.exactpoly import GF, QQ, MonicPoly, PolyRing, monic_divmod, parse_poly
from hilbline.groebner import QuotientRing
from hilbline.hilbcore import construct_Hnm, same_ideal, truncated_ring
from hilbline.symfun import s_ring


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--json", *argv)
    return code, json.loads(out)


def test_hnm_output(capsys):
    code, doc = run_json(capsys, "hnm", "-n", "2", "-m", "3")
    assert code == 0 and doc["pass"]
    res = doc["results"][0]
    assert res["generators"] == ["s1^4 - 3*s1^2*s2 + s2^2", "s1^3*s2 - 2*s1*s2^2"]
    assert res["dimension"] == 10
    gens = [parse_poly(g, s_ring(2)) for g in res["generators"]]
    assert same_ideal(s_ring(2), gens, construct_Hnm(2, 3).j_gens)
    assert set(doc) == {"command", "params", "results", "pass"}


def test_hnm_small_cases(capsys):
    _, doc = run_json(capsys, "hnm", "-n", "1", "-m", "4")
    assert doc["results"][0]["generators"] == ["s1^5"]
    assert doc["results"][0]["dimension"] == 5
    _, doc = run_json(capsys, "hnm", "-n", "2", "-m", "0")
    assert doc["results"][0]["generators"] == ["s1", "s2"]
    assert doc["results"][0]["dimension"] == 1
    _, doc = run_json(capsys, "hnm", "-n", "2", "-m", "1")
    assert "note" in doc["results"][0]


def test_hnm_universal_certificate_reparses(capsys):
    _, doc = run_json(capsys, "hnm", "-n", "2", "-m", "2")
    h = construct_Hnm(2, 2)
    F = lift(doc["results"][0]["F"], h.ring)
    Y = lift(doc["results"][0]["Y"], h.ring)
    assert F * Y == PolyRing(("x",), h.ring).monomial((4,))


@pytest.mark.parametrize("n,m,N", [(2, 0, 3), (3, 2, 10), (1, 0, 2)])
def test_minexp(capsys, n, m, N):
    code, doc = run_json(capsys, "minexp", "-n", str(n), "-m", str(m))
    res = doc["results"][0]
    assert code == 0 and res["N"] == res["formula"] == N and res["match"]
    A = truncated_ring(2 ** (m + 1))
    assert lift(res["remainder_below"], A)


@pytest.mark.parametrize("n,N,m", [(1, 5, 2), (2, 4, 1), (1, 1, 0)])
def test_witness_certificates_reverify(capsys, n, N, m):
    code, doc = run_json(capsys, "witness", "-n", str(n), "-N", str(N))
    res = doc["results"][0]
    assert code == 0 and res["m"] == m
    A = truncated_ring(2 ** (m + 1))
    X = PolyRing(("x",), A)
    F = MonicPoly.from_poly(lift(res["F"], A))
    assert F.expand() * lift(res["cofactor"], A) == X.monomial((int(res["member"][2:]),))
    rem = monic_divmod(X.monomial((N,)), F)[1]
    assert rem and rem == lift(res["remainder"], A)


def test_cofactor_certificate_reverifies(capsys):
    code, doc = run_json(capsys, "cofactor", "--relations", "u^3, v^2", "--coeffs", "u + v, u*v")
    res = doc["results"][0]
    assert code == 0
    R = PolyRing(("u", "v"))
    A = QuotientRing(R, ["u^3", "v^2"])
    F = MonicPoly.from_poly(lift(res["F"], A))
    assert F.expand() * lift(res["G"], A) == PolyRing(("x",), A).monomial((res["E"],))


def test_cofactor_rejects_unit(capsys):
    code, _, err = run(capsys, "cofactor", "--relations", "u^2", "--coeffs", "1 + u")
    assert code == 64 and "nilpotent" in err


def test_enumerate(capsys):
    code, doc = run_json(capsys, "enumerate", "-n", "2", "--field", "Fp:3", "--relations", "u^3")
    assert code == 0 and doc["results"][0]["count"] == 81
    code, doc = run_json(capsys, "enumerate", "-n", "3", "--field", "F2")
    assert doc["results"][0]["count"] == 1
    code, doc = run_json(capsys, "enumerate", "-n", "1", "--field", "F2", "--relations", "u^2",
                         "--list")
    assert doc["results"][0]["points"] == ["x", "x + u"]
    code, _, _ = run(capsys, "enumerate", "-n", "1")
    assert code == 64


def test_check_suites(capsys):
    code, doc = run_json(capsys, "check", "--suite", "sym")
    assert code == 0 and all(r["pass"] for r in doc["results"])
    code, doc = run_json(capsys, "check", "--suite", "prorep", "--field", "F2")
    assert code == 0 and "F3" not in doc["results"][1]["detail"]


def test_check_is_deterministic(capsys):
    outs = [run(capsys, "check", "--suite", "all", "--seed", "42")[1] for _ in range(2)]
    assert outs[0] == outs[1]
    assert "pass: true" in outs[0]


def test_seed_changes_random_draws_only(capsys):
    a = run(capsys, "check", "--suite", "prorep", "--seed", "1", "--json")[1]
    b = run(capsys, "check", "--suite", "prorep", "--seed", "2", "--json")[1]
    assert json.loads(a)["results"] == json.loads(b)["results"]
    assert json.loads(a)["params"]["seed"] == 1


def test_exit_codes(capsys):
    assert run(capsys, "witness", "-n", "3", "-N", "1")[0] == 64
    assert run(capsys, "hnm", "-n", "3", "-m", "4", "--budget", "5")[0] == 2
    assert run(capsys, "hnm", "-n", "2", "-m", "1", "--field", "Fx")[0] == 64
    with pytest.raises(SystemExit) as exc:
        main(["nosuch"])
    assert exc.value.code == 64
    with pytest.raises(SystemExit) as exc:
        main(["hnm", "-n", "two", "-m", "1"])
    assert exc.value.code == 64


def test_global_flags_before_command(capsys):
    code, out, _ = run(capsys, "--json", "--field", "Fp:5", "hnm", "-n", "1", "-m", "2")
    doc = json.loads(out)
    assert code == 0 and doc["params"]["field"] == "Fp:5"


def test_parse_field():
    assert parse_field("Q") is QQ
    assert parse_field("Fp:7") == GF(7) == parse_field("F7")


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "hilbline.cli", "minexp", "-n", "2", "-m", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "N: 5" in proc.stdout and "match: true" in proc.stdout
