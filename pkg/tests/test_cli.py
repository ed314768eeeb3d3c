import json
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperjac.cli import mask_timings, run
from hyperjac.ffpoly import Poly
from hyperjac.galois import BivarPoly
from hyperjac.polyparse import PolySyntaxError, UnsupportedStructure, parse_poly, parse_terms

SCHEMA_KEYS = {
    "schema_version", "command", "p", "poly", "seed", "budget", "verdict", "evidence",
    "hasse_witt", "l_poly", "stats", "timings_ms", "provenance", "diagnostics",
}


def docs(argv):
    code, lines = run(argv)
    return code, [json.loads(line) for line in lines]


# -- parser -------------------------------------------------------------------------


def test_parse_examples():
    f = parse_poly("x^10 - x + z", 7)
    assert isinstance(f, BivarPoly) and f.degree_x == 10
    g = parse_poly("x^10 - x*z^7 + 1", 3)
    assert g.terms() == {(10, 0): 1, (1, 7): 2, (0, 0): 1}
    z = parse_poly("0", 5)
    assert isinstance(z, Poly) and z.is_zero()
    assert isinstance(parse_poly("x^3 + x + 1", 5), Poly)


def test_parse_reduces_and_combines():
    assert parse_poly("7*x^2 + 3 - 10", 7) == Poly(parse_poly("0", 7).field, [0])
    assert parse_terms("2*z*x + x*z") == {(1, 1): 3}
    assert parse_poly("  - x ^ 2  +  1 ", 5) == parse_poly("4*x^2+1", 5)


@pytest.mark.parametrize("text,offset", [("x^", 2), ("x+*z", 2), ("x*x", 2), ("", 0), ("x y", 2), ("3x", 1), ("x^-2", 2)])
def test_parse_errors_carry_offsets(text, offset):
    with pytest.raises(PolySyntaxError) as e:
        parse_poly(text, 5)
    assert e.value.offset == offset
    assert isinstance(e.value, SyntaxError)


def test_parentheses_unsupported():
    with pytest.raises(UnsupportedStructure):
        parse_poly("(x+1)^2", 5)


terms_st = st.dictionaries(
    st.tuples(st.integers(0, 12), st.integers(0, 4)), st.integers(-50, 50), max_size=6
)


@given(st.sampled_from([3, 5, 7, 11]), terms_st)
@settings(max_examples=200)
def test_print_parse_roundtrip(p, terms):
    text = " + ".join(f"{c}*x^{i}*z^{j}" if c >= 0 else f"0 - {-c}*x^{i}*z^{j}" for (i, j), c in terms.items()) or "0"
    text = text.replace("+ 0 -", "-")
    f = parse_poly(text, p)
    printed = str(f)
    g = parse_poly(printed, p)
    assert str(g) == printed
    assert type(g) is type(f)


# -- subcommands ------------------------------------------------------------------------


def test_galois_example():
    code, (d,) = docs(["galois", "--p", "7", "--poly", "x^10-x+z", "--budget", "500", "--seed", "42"])
    assert code == 0 and d["verdict"] == "SnCertified"
    assert SCHEMA_KEYS <= set(d)
    assert d["evidence"]["jordan_m"] == 7
    assert set(d["stats"]) >= {"samples", "ramified", "degree_drop"}


def test_galois_inconclusive_exit_1():
    code, (d,) = docs(["galois", "--p", "7", "--poly", "x^10-x+z", "--budget", "0"])
    assert code == 1 and d["verdict"] == "Inconclusive"


def test_reptheory_check_b():
    code, (d,) = docs(["reptheory", "--check-b", "--n-max", "1000"])
    assert code == 0 and d["verdict"] == "AllTrue"
    assert len(d["results"]["property_b"]) == 496
    assert all(r["verdict"] for r in d["results"]["property_b"])


def test_reptheory_tail_and_dyadic():
    code, (d,) = docs(["reptheory", "--tail", "--n-lo", "20", "--n-hi", "120", "--dyadic", "14"])
    assert code == 0
    assert d["results"]["dyadic"] == {"n": 14, "exponents": [3, 2, 1], "s": 3, "wagner_min_dim": 32}
    assert len(d["results"]["tail"]) == 101
    assert docs(["reptheory", "--tail", "--n-lo", "5"])[0] == 2
    assert docs(["reptheory"])[0] == 2


def test_hw_example():
    code, (d,) = docs(["hw", "--p", "5", "--poly", "x^3+x+1"])
    assert code == 0
    assert d["hasse_witt"] == {"matrix": [[2]], "p_rank": 1, "nilpotent": False}
    assert d["verdict"] == "RefutedByPRank"


def test_hw_consistent_exit_1():
    code, (d,) = docs(["hw", "--p", "3", "--poly", "x^3-x"])
    assert code == 1 and d["verdict"] == "ConsistentWithSupersingular"


def test_hw_batch_lines_and_summary():
    code, ds = docs(["hw", "--p", "13", "--poly", "x^10-x+z", "--budget", "20", "--seed", "3"])
    assert code == 0
    assert ds[-1]["summary"] and ds[-1]["stats"]["squarefree"] == 20
    assert len(ds) == ds[-1]["stats"]["samples"] + 1
    assert all("specialization" in d for d in ds[:-1])


def test_lpoly_example():
    code, (d,) = docs(["lpoly", "--p", "3", "--poly", "x^3-x"])
    assert code == 0 and d["verdict"] == "ConfirmedSupersingular"
    assert d["l_poly"]["coeffs"] == [1, 0, 3] and d["l_poly"]["slopes"] == ["1/2", "1/2"]


def test_morse_subcommand():
    assert docs(["morse", "--p", "7", "--poly", "x^10-x"])[0] == 0
    assert docs(["morse", "--p", "3", "--poly", "x^10-x"])[0] == 1
    assert docs(["morse", "--p", "5", "--poly", "x^10-x"])[0] == 2


def test_family_subcommand():
    code, (d,) = docs(["family", "--p", "3", "--kind", "abhyankar", "--q", "3", "--t", "7"])
    assert code == 0 and d["poly"] == "x^10 + 2*x*z^7 + 1"
    assert docs(["family", "--p", "3", "--kind", "abhyankar", "--q", "3", "--t", "5"])[0] == 2
    code, (d,) = docs(["family", "--p", "7", "--kind", "morse", "--h", "x^10-x"])
    assert code == 0 and d["poly"] == "x^10 + 6*x + 6*z"
    assert docs(["family", "--p", "7", "--kind", "even"])[0] == 2


def test_hypotheses_subcommand():
    code, (d,) = docs(["hypotheses", "--p", "7", "--poly", "x^10-x+z"])
    assert code == 0 and d["results"]["theorem_applies"]
    code, (d,) = docs(["hypotheses", "--p", "7", "--poly", "x^8-x+z"])
    assert code == 1 and not d["results"]["n_even_ge_10"]


@pytest.mark.parametrize(
    "argv",
    [
        ["hw", "--p", "2", "--poly", "x^3+x+1"],
        ["hw", "--p", "9", "--poly", "x^3+x+1"],
        ["hw", "--p", "5", "--poly", "x^3+("],
        ["hw", "--p", "5", "--poly", "x^^3"],
        ["hw", "--p", "5"],
        ["galois", "--p", "7", "--poly", "x^10-x"],
        ["bogus"],
        ["hw", "--p", "5", "--poly", "x^2+1"],
        ["galois", "--p", "7", "--poly", "x^10-x+z", "--seed", "-1"],
    ],
)
def test_usage_errors_exit_2(argv):
    code, lines = run(argv)
    assert code == 2
    assert json.loads(lines[0])


def test_caps_exit_3():
    code, (d,) = docs(["lpoly", "--p", "7", "--poly", "x^9+x+1", "--max-work", "1000"])
    assert code == 3 and d["verdict"] == "Error"
    code, _ = docs(["hw", "--p", "1009", "--poly", "x^10-x+1", "--max-work", "100"])
    assert code == 3
    code, _ = docs(["lpoly", "--p", "1009", "--poly", "x^7+x+1", "--max-work", "10000000000000"])
    assert code == 3


def test_reports_are_byte_identical_modulo_timings():
    argv = ["galois", "--p", "11", "--poly", "x^10-x+z", "--budget", "200", "--seed", "9"]
    a = [mask_timings(x) for x in run(argv)[1]]
    b = [mask_timings(x) for x in run(argv)[1]]
    assert a == b


def test_text_output():
    code, lines = run(["hw", "--p", "5", "--poly", "x^3+x+1", "--no-json"])
    assert code == 0 and lines[0].startswith("hw: RefutedByPRank")


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "hyperjac", "hw", "--p", "5", "--poly", "x^3+x+1"],
        capture_output=True, text=True,
    )
    assert out.returncode == 0
    assert json.loads(out.stdout)["verdict"] == "RefutedByPRank"
