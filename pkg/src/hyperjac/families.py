"""Explicit one-parameter families over F_p(z) and the hypothesis checklist.

Families (n the x-degree):

* ``MoriOdd(g)``:      x^(2g+1) - x + z, needs p not dividing g(2g+1)
* ``EvenTheorem(g)``:  x^(2g+2) - x + z, needs g >= 4 and p not dividing (g+1)(2g+1)
* ``MorseShift(h)``:   h(x) - z for a Morse polynomial h with p not dividing deg h
* ``Abhyankar(q, t)``: x^(q+t) - x z^t + 1, q a power of p, t > q, p not dividing t

The generic polynomial over k(z_1, ..., z_n) has Galois group S_n as well,
but needs n independent parameters and is not built here.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .ffpoly import FFError, Poly, PrimeField
from .galois import (
    BivarPoly,
    GaloisVerdict,
    SpecializationRecord,
    Status,
    bivariate_discriminant,
    decide_galois,
    morse_check,
    sample_specializations,
    irreducibility_witness,
    transitivity_certificate,
)


class InvariantViolation(FFError):
    pass


@dataclass(frozen=True)
class MoriOdd:
    g: int


@dataclass(frozen=True)
class EvenTheorem:
    g: int


@dataclass(frozen=True)
class MorseShift:
    h: Poly


@dataclass(frozen=True)
class Abhyankar:
    q: int
    t: int


@dataclass(frozen=True)
class FamilySpec:
    kind: MoriOdd | EvenTheorem | MorseShift | Abhyankar
    field: PrimeField


def _power_of(q: int, p: int) -> bool:
    if q < p:
        return False
    while q % p == 0:
        q //= p
    return q == 1


def check_invariants(spec: FamilySpec) -> None:
    p = spec.field.p
    kind = spec.kind
    if isinstance(kind, MoriOdd):
        g = kind.g
        if g < 2:
            raise InvariantViolation(f"MoriOdd needs g >= 2, got {g}")
        if g * (2 * g + 1) % p == 0:
            raise InvariantViolation(f"p = {p} divides g(2g+1) = {g * (2 * g + 1)}")
    elif isinstance(kind, EvenTheorem):
        g = kind.g
        if g < 4:
            raise InvariantViolation(f"EvenTheorem needs g >= 4 (degree >= 10), got {g}")
        if (g + 1) * (2 * g + 1) % p == 0:
            raise InvariantViolation(f"p = {p} divides (g+1)(2g+1) = {(g + 1) * (2 * g + 1)}")
    elif isinstance(kind, MorseShift):
        h = kind.h
        if h.field != spec.field:
            raise InvariantViolation("h is over a different field")
        if h.deg % p == 0:
            raise InvariantViolation(f"p = {p} divides deg h = {h.deg}")
        if not morse_check(h):
            raise InvariantViolation(f"h = {h} is not a Morse polynomial")
    elif isinstance(kind, Abhyankar):
        q, t = kind.q, kind.t
        if not _power_of(q, p):
            raise InvariantViolation(f"q = {q} is not a power of p = {p}")
        if t <= q:
            raise InvariantViolation(f"need t > q, got t = {t}, q = {q}")
        if t % p == 0:
            raise InvariantViolation(f"p = {p} divides t = {t}")
        if q + t < 10:
            raise InvariantViolation(f"n = q + t = {q + t} < 10")
    else:
        raise InvariantViolation(f"unknown family {kind!r}")


def build_family(spec: FamilySpec) -> BivarPoly:
    check_invariants(spec)
    F, kind = spec.field, spec.kind
    if isinstance(kind, MoriOdd):
        return BivarPoly.from_terms(F, {(2 * kind.g + 1, 0): 1, (1, 0): -1, (0, 1): 1})
    if isinstance(kind, EvenTheorem):
        return BivarPoly.from_terms(F, {(2 * kind.g + 2, 0): 1, (1, 0): -1, (0, 1): 1})
    if isinstance(kind, MorseShift):
        terms = {(i, 0): c for i, c in enumerate(kind.h.coeffs) if c}
        terms[(0, 1)] = -1
        return BivarPoly.from_terms(F, terms)
    n = kind.q + kind.t
    return BivarPoly.from_terms(F, {(n, 0): 1, (1, kind.t): -1, (0, 0): 1})


def genus_of(n: int) -> int:
    if n < 3:
        raise ValueError("hyperelliptic curves need deg f >= 3")
    return (n - 1) // 2


@dataclass
class HypothesisReport:
    p_odd: bool
    n: int
    n_even_ge_10: bool
    separable: bool
    irreducible_evidence: SpecializationRecord | list[SpecializationRecord] | None
    galois: GaloisVerdict | None
    theorem_applies: bool
    notes: list[str] = field(default_factory=list)


def theorem_hypotheses(F: BivarPoly, budget: int, seed: int, base_degree: int = 1) -> HypothesisReport:
    """Run every hypothesis check; failures are reported, never raised."""
    notes = []
    p_odd = F.p % 2 == 1
    n = F.degree_x
    n_ok = n % 2 == 0 and n >= 10
    D = bivariate_discriminant(F) if n >= 2 else Poly(F.field, [])
    separable = not D.is_zero()
    verdict = None
    evidence = None
    if not F.monic_in_x:
        notes.append("not monic in x: specialization certificates do not apply")
    elif n < 8:
        notes.append("degree below 8: Jordan criterion unavailable")
        records = sample_specializations(F, budget, seed, base_degree)
        evidence = irreducibility_witness(F, records) or transitivity_certificate(F, records)
    else:
        verdict = decide_galois(F, budget, seed, base_degree)
        evidence = verdict.irreducible or verdict.transitivity
    galois_ok = verdict is not None and verdict.status in (Status.SN_CERTIFIED, Status.AN_CERTIFIED)
    applies = p_odd and n_ok and separable and evidence is not None and galois_ok
    return HypothesisReport(p_odd, n, n_ok, separable, evidence, verdict, applies, notes)
