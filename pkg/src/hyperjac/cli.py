"""Command-line front end.

Every invocation prints JSON documents (one per line) with sorted keys.
Exit codes: 0 affirmative verdict, 1 negative or inconclusive verdict,
2 usage or parse error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Any

from . import __version__
from .families import (
    Abhyankar,
    EvenTheorem,
    FamilySpec,
    InvariantViolation,
    MoriOdd,
    MorseShift,
    build_family,
    theorem_hypotheses,
)
from .ffpoly import FFError, Poly, PrimeField
from .galois import (
    BivarPoly,
    CharDividesDegree,
    GaloisVerdict,
    decide_galois,
    morse_check,
)
from .polyparse import PolySyntaxError, UnsupportedStructure, parse_poly
from .reptheory import check_property_b, dyadic, verify_tail_inequality, wagner_min_dim
from .supersing import (
    CapExceeded,
    Effort,
    HyperCurve,
    SupersingularityCertificate,
    count_work,
    hasse_witt_work,
    p_rank_survey,
    refute_supersingular,
)

SCHEMA_VERSION = 1
EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


class WorkCapExceeded(Exception):
    pass


def base_report(command: str, args: argparse.Namespace) -> dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "p": getattr(args, "p", None),
        "poly": getattr(args, "poly", None),
        "seed": args.seed,
        "budget": args.budget,
        "verdict": None,
        "evidence": None,
        "hasse_witt": None,
        "l_poly": None,
        "stats": None,
        "timings_ms": {},
        "provenance": {"tool": "hyperjac", "version": __version__},
        "diagnostics": [],
    }


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, separators=(",", ":"))


def mask_timings(line: str) -> str:
    """Report text with the timings field blanked, for byte comparisons."""
    doc = json.loads(line)
    if "timings_ms" in doc:
        doc["timings_ms"] = {}
    return dumps(doc)


def galois_section(v: GaloisVerdict, p: int) -> tuple[dict, dict]:
    evidence = {
        "jordan_m": v.jordan.m if v.jordan else None,
        "jordan_z0": v.jordan.record.z0_json(p) if v.jordan else None,
        "irreducible_z0": v.irreducible.z0_json(p) if v.irreducible else None,
        "disc_square": v.disc_square,
        "transitivity_z0": [r.z0_json(p) for r in v.transitivity] if v.transitivity else None,
        "base_degree": v.base_degree,
    }
    return evidence, dict(v.stats)


def hw_section(cert: SupersingularityCertificate) -> dict:
    return {"matrix": cert.matrix, "p_rank": cert.p_rank, "nilpotent": cert.nilpotent}


def lpoly_section(cert: SupersingularityCertificate) -> dict | None:
    if cert.l_poly is None:
        return None
    return {
        "coeffs": cert.l_poly,
        "slopes": [str(Fraction(s)) for s in cert.slopes],
        "counts": cert.counts,
    }


# -- argument helpers ----------------------------------------------------------


def _field(args) -> PrimeField:
    if args.p is None:
        raise UsageError("--p is required")
    try:
        return PrimeField(args.p)
    except FFError as e:
        raise UsageError(str(e)) from e


def _parse(args, text: str | None = None):
    text = args.poly if text is None else text
    if text is None:
        raise UsageError("--poly is required")
    _field(args)
    return parse_poly(text, args.p)


def _bivar(args) -> BivarPoly:
    f = _parse(args)
    if isinstance(f, Poly):
        raise UsageError("expected a polynomial involving z")
    return f


def _univar(args, text: str | None = None) -> Poly:
    f = _parse(args, text)
    if isinstance(f, BivarPoly):
        raise UsageError("expected a polynomial in x only")
    return f


def _check_work(args, work: int, what: str):
    if work > args.max_work:
        raise WorkCapExceeded(f"{what} needs about {work} operations, cap is {args.max_work}")


# -- subcommands ------------------------------------------------------------------


def cmd_galois(args) -> tuple[int, list[dict]]:
    F = _bivar(args)
    n = F.degree_x
    _check_work(args, args.budget * n * n * max(1, F.degree_z), "sampling")
    rep = base_report("galois", args)
    t0 = time.perf_counter()
    try:
        v = decide_galois(F, args.budget, args.seed, args.base_degree)
    except ValueError as e:
        raise UsageError(str(e)) from e
    rep["timings_ms"]["decide"] = round(1000 * (time.perf_counter() - t0), 3)
    rep["verdict"] = v.status.value
    rep["evidence"], rep["stats"] = galois_section(v, F.p)
    rep["poly"] = str(F)
    rep["diagnostics"].append(v.note)
    return (EXIT_OK if v.certified else EXIT_NEGATIVE), [rep]


def cmd_morse(args) -> tuple[int, list[dict]]:
    h = _univar(args)
    rep = base_report("morse", args)
    rep["poly"] = str(h)
    try:
        ok = morse_check(h)
    except CharDividesDegree as e:
        raise UsageError(str(e)) from e
    rep["verdict"] = "Morse" if ok else "NotMorse"
    return (EXIT_OK if ok else EXIT_NEGATIVE), [rep]


def cmd_reptheory(args) -> tuple[int, list[dict]]:
    rep = base_report("reptheory", args)
    results: dict[str, Any] = {}
    ok = True
    if args.check_b:
        if args.n_max < 10:
            raise UsageError("--n-max must be at least 10")
        table = []
        for n in range(10, args.n_max + 1, 2):
            r = check_property_b(n)
            table.append({"n": n, "s": r.s, "bound": r.bound, "branch": r.branch.value,
                          "verdict": r.verdict, "audit": r.audit})
            ok &= r.verdict
        results["property_b"] = table
    if args.tail:
        try:
            rows = verify_tail_inequality(args.n_lo, args.n_hi)
        except ValueError as e:
            raise UsageError(str(e)) from e
        results["tail"] = [{"n": n, "holds": h} for n, h in rows]
        ok &= all(h for _, h in rows)
    if args.dyadic is not None:
        if args.dyadic < 1:
            raise UsageError("--dyadic needs a positive integer")
        d = dyadic(args.dyadic)
        entry = {"n": d.n, "exponents": list(d.w), "s": d.s}
        if d.n >= 8:
            entry["wagner_min_dim"] = wagner_min_dim(d.n)
        results["dyadic"] = entry
    if not results:
        raise UsageError("choose at least one of --check-b, --tail, --dyadic")
    rep["results"] = results
    rep["verdict"] = "AllTrue" if ok else "Failure"
    return (EXIT_OK if ok else EXIT_NEGATIVE), [rep]


def _curve(f: Poly) -> HyperCurve:
    try:
        return HyperCurve(f)
    except FFError as e:
        raise UsageError(str(e)) from e


def _hw_single(args, f: Poly, command: str, effort: Effort) -> tuple[int, dict]:
    curve = _curve(f)
    _check_work(args, hasse_witt_work(curve.n, curve.p), "Hasse-Witt powering")
    if effort is Effort.FULL_L:
        _check_work(args, count_work(curve, curve.genus), "point counting")
    rep = base_report(command, args)
    rep["poly"] = str(f)
    t0 = time.perf_counter()
    cert = refute_supersingular(curve, effort)
    rep["timings_ms"]["certificate"] = round(1000 * (time.perf_counter() - t0), 3)
    rep["verdict"] = cert.verdict.value
    rep["hasse_witt"] = hw_section(cert)
    rep["l_poly"] = lpoly_section(cert)
    definitive = cert.verdict.refutes or cert.verdict.value == "ConfirmedSupersingular"
    return (EXIT_OK if definitive else EXIT_NEGATIVE), rep


def cmd_hw(args) -> tuple[int, list[dict]]:
    f = _parse(args)
    if isinstance(f, Poly):
        code, rep = _hw_single(args, f, "hw", Effort.HW_ONLY)
        return code, [rep]
    return _hw_batch(args, f)


def _hw_batch(args, F: BivarPoly) -> tuple[int, list[dict]]:
    """One document per specialization z = c in F_p, then a summary."""
    p = F.p
    if F.degree_x < 3:
        raise UsageError("need deg_x >= 3")
    _check_work(args, args.budget * hasse_witt_work(F.degree_x, p), "Hasse-Witt survey")
    t0 = time.perf_counter()
    entries = p_rank_survey(lambda c: F.specialize(c), p, args.budget, args.seed)
    elapsed = round(1000 * (time.perf_counter() - t0), 3)
    docs = []
    for e in entries:
        d = base_report("hw", args)
        d["poly"] = str(F.specialize(e.c))
        d["specialization"] = {"draw": e.draw, "z0": e.c}
        if e.certificate is None:
            d["verdict"] = "NotSquarefree"
        else:
            d["verdict"] = e.certificate.verdict.value
            d["hasse_witt"] = hw_section(e.certificate)
        docs.append(d)
    good = [e for e in entries if e.certificate is not None]
    refuted = sum(e.certificate.verdict.refutes for e in good)
    summary = base_report("hw", args)
    summary["poly"] = str(F)
    summary["timings_ms"]["survey"] = elapsed
    summary["stats"] = {
        "samples": len(entries),
        "squarefree": len(good),
        "refuted": refuted,
        "refuted_fraction": round(refuted / len(good), 6) if good else None,
        "distinct_z0": len({e.c for e in good}),
    }
    summary["verdict"] = "RefutedByPRank" if refuted else "ConsistentWithSupersingular"
    summary["summary"] = True
    docs.append(summary)
    return (EXIT_OK if refuted else EXIT_NEGATIVE), docs


def cmd_lpoly(args) -> tuple[int, list[dict]]:
    f = _univar(args)
    code, rep = _hw_single(args, f, "lpoly", Effort.FULL_L)
    return code, [rep]


def cmd_family(args) -> tuple[int, list[dict]]:
    F = _field(args)
    kind: Any
    if args.kind in ("mori", "even"):
        if args.g is None:
            raise UsageError("--g is required")
        kind = MoriOdd(args.g) if args.kind == "mori" else EvenTheorem(args.g)
    elif args.kind == "morse":
        kind = MorseShift(_univar(args, args.h))
    else:
        if args.q is None or args.t is None:
            raise UsageError("--q and --t are required")
        kind = Abhyankar(args.q, args.t)
    try:
        G = build_family(FamilySpec(kind, F))
    except InvariantViolation as e:
        raise UsageError(f"invariant violated: {e}") from e
    rep = base_report("family", args)
    rep["poly"] = str(G)
    rep["verdict"] = "Built"
    rep["results"] = {"kind": args.kind, "degree_x": G.degree_x, "degree_z": G.degree_z}
    return EXIT_OK, [rep]


def cmd_hypotheses(args) -> tuple[int, list[dict]]:
    F = _bivar(args)
    rep = base_report("hypotheses", args)
    t0 = time.perf_counter()
    h = theorem_hypotheses(F, args.budget, args.seed, args.base_degree)
    rep["timings_ms"]["checks"] = round(1000 * (time.perf_counter() - t0), 3)
    rep["poly"] = str(F)
    rep["results"] = {
        "p_odd": h.p_odd,
        "n": h.n,
        "n_even_ge_10": h.n_even_ge_10,
        "separable": h.separable,
        "irreducible_evidence": h.irreducible_evidence is not None,
        "galois": h.galois.status.value if h.galois else None,
        "theorem_applies": h.theorem_applies,
    }
    if h.galois is not None:
        rep["evidence"], rep["stats"] = galois_section(h.galois, F.p)
    rep["diagnostics"].extend(h.notes)
    rep["verdict"] = "TheoremApplies" if h.theorem_applies else "HypothesesFail"
    return (EXIT_OK if h.theorem_applies else EXIT_NEGATIVE), [rep]


COMMANDS = {
    "galois": cmd_galois,
    "morse": cmd_morse,
    "reptheory": cmd_reptheory,
    "hw": cmd_hw,
    "lpoly": cmd_lpoly,
    "family": cmd_family,
    "hypotheses": cmd_hypotheses,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, help="odd prime")
    common.add_argument("--poly", help="polynomial in x (and z)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=200)
    common.add_argument("--base-degree", type=int, default=1,
                        help="sample over GF(p^c)(z) for this c")
    common.add_argument("--json", action=argparse.BooleanOptionalAction, default=True,
                        help="JSON lines (default) or a short text summary")
    common.add_argument("--max-work", type=int, default=10**8,
                        help="cap on estimated coefficient operations")

    ap = _Parser(prog="hyperjac", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in ("galois", "morse", "hw", "lpoly", "hypotheses"):
        sub.add_parser(name, parents=[common])
    rt = sub.add_parser("reptheory", parents=[common])
    rt.add_argument("--check-b", action="store_true")
    rt.add_argument("--n-max", type=int, default=1000)
    rt.add_argument("--tail", action="store_true")
    rt.add_argument("--n-lo", type=int, default=20)
    rt.add_argument("--n-hi", type=int, default=120)
    rt.add_argument("--dyadic", type=int)
    fam = sub.add_parser("family", parents=[common])
    fam.add_argument("--kind", choices=["mori", "even", "morse", "abhyankar"], required=True)
    fam.add_argument("--g", type=int)
    fam.add_argument("--q", type=int)
    fam.add_argument("--t", type=int)
    fam.add_argument("--h", help="Morse polynomial in x")
    return ap


def _text(doc: dict) -> str:
    bits = [f"{doc['command']}: {doc['verdict']}"]
    if doc.get("poly"):
        bits.append(f"poly = {doc['poly']}")
    if doc.get("hasse_witt"):
        hw = doc["hasse_witt"]
        bits.append(f"Hasse-Witt = {hw['matrix']}, p-rank = {hw['p_rank']}")
    if doc.get("l_poly"):
        bits.append(f"L = {doc['l_poly']['coeffs']}, slopes = {doc['l_poly']['slopes']}")
    if doc.get("evidence") and doc["evidence"].get("jordan_m"):
        bits.append(f"Jordan m = {doc['evidence']['jordan_m']}")
    bits.extend(doc.get("diagnostics", [])[1:] if doc["command"] == "galois" else doc.get("diagnostics", []))
    return "; ".join(bits)


def run(argv: list[str]) -> tuple[int, list[str]]:
    """Exit code and output lines for one invocation."""
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        return EXIT_USAGE, [dumps({"error": str(e), "exit": EXIT_USAGE})]
    except SystemExit as e:  # --help
        return int(e.code or 0), []
    try:
        if args.budget < 0 or args.seed < 0:
            raise UsageError("--budget and --seed must be non-negative")
        code, docs = COMMANDS[args.command](args)
    except (UsageError, PolySyntaxError, UnsupportedStructure, FFError) as e:
        if isinstance(e, CapExceeded):
            return _failure(args, EXIT_CAP, e)
        return _failure(args, EXIT_USAGE, e)
    except WorkCapExceeded as e:
        return _failure(args, EXIT_CAP, e)
    if args.json:
        return code, [dumps(d) for d in docs]
    return code, [_text(d) for d in docs]


run_subcommand = run


def _failure(args, code: int, e: Exception) -> tuple[int, list[str]]:
    rep = base_report(args.command, args)
    rep["verdict"] = "Error"
    rep["diagnostics"] = [f"{type(e).__name__}: {e}"]
    rep["exit"] = code
    return code, [dumps(rep)]


def main(argv: list[str] | None = None) -> int:
    code, lines = run(sys.argv[1:] if argv is None else argv)
    for line in lines:
        print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
