"""Frobenius cycle-type evidence for Galois groups over F_p and F_p(z).

A polynomial F(x, z) over F_p(z) is specialized at sample points z0; each
squarefree specialization yields the cycle type of a Frobenius element of
Gal(F). Two classical facts turn the samples into certificates:

* an irreducible monic specialization proves F irreducible (Gauss lemma),
  so Gal(F) is transitive. More generally, once the subset sums of the
  sampled cycle types share no value strictly between 0 and n, no proper
  orbit can exist;
* a transitive group of degree n containing an m-cycle with m prime and
  n/2 < m < n - 2 contains A_n (Jordan).

S_n and A_n are then separated by whether disc(F) is a square in the
function field.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from .ffpoly import (
    FFError,
    PrimeField,
    Poly,
    MAX_EXT_DEGREE,
    _discriminant,
    _ddf,
    _resultant,
    field_of,
    prime_factors,
    interpolate,
    is_prime,
    squarefree_decomposition,
    is_separable,
    distinct_degree_profile,
    discriminant,
)
from .rng import SplitMix64

CERTIFICATE_CONDITIONS = (
    "certified modulo the Jordan prime-cycle criterion and the "
    "specialization argument for transitivity (Gauss lemma, degree sets)"
)


class NotMonic(FFError):
    pass


class CharDividesDegree(FFError):
    pass


@dataclass(frozen=True)
class BivarPoly:
    """Polynomial in x whose coefficients are polynomials in z over F_p."""

    field: PrimeField
    coeffs: tuple[Poly, ...]

    def __post_init__(self):
        cs = list(self.coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        for c in cs:
            if c.field != self.field:
                raise FFError("coefficient over the wrong field")
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_terms(cls, field: PrimeField, terms: dict[tuple[int, int], int]) -> "BivarPoly":
        """Build from ``{(x_exp, z_exp): coefficient}``."""
        if not terms:
            return cls(field, ())
        nx = max(i for i, _ in terms) + 1
        rows = [[0] * (max((j for i2, j in terms if i2 == i), default=0) + 1) for i in range(nx)]
        for (i, j), c in terms.items():
            rows[i][j] = (rows[i][j] + c) % field.p
        return cls(field, tuple(Poly(field, r) for r in rows))

    @classmethod
    def from_univariate(cls, f: Poly) -> "BivarPoly":
        return cls(f.field, tuple(Poly(f.field, [c]) for c in f.coeffs))

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def degree_x(self) -> int:
        if not self.coeffs:
            raise FFError("degree of the zero polynomial is undefined")
        return len(self.coeffs) - 1

    @property
    def degree_z(self) -> int:
        return max((len(c) - 1 for c in self.coeffs if not c.is_zero()), default=0)

    @property
    def lc_x(self) -> Poly:
        return self.coeffs[-1]

    @property
    def monic_in_x(self) -> bool:
        return bool(self.coeffs) and self.lc_x == Poly(self.field, [1])

    def is_zero(self) -> bool:
        return not self.coeffs

    def has_z(self) -> bool:
        return self.degree_z > 0

    def terms(self) -> dict[tuple[int, int], int]:
        return {(i, j): c for i, cz in enumerate(self.coeffs) for j, c in enumerate(cz.coeffs) if c}

    def specialize(self, z0: int, E=None) -> Poly:
        """Substitute z = z0, an element of E (default: the prime field)."""
        E = E or self.field
        return Poly._raw(E, _trim_list([E.peval(c.coeffs, z0) for c in self.coeffs]))

    def to_univariate(self) -> Poly:
        if self.has_z():
            raise FFError("polynomial depends on z")
        return Poly(self.field, [c[0] for c in self.coeffs])

    def __str__(self):
        return format_bivar(self.terms())


def _trim_list(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def format_bivar(terms: dict[tuple[int, int], int]) -> str:
    """Canonical text: descending x power, then descending z power."""
    out = []
    for (i, j) in sorted(terms, key=lambda t: (-t[0], -t[1])):
        c = terms[(i, j)]
        factors = []
        if i:
            factors.append("x" if i == 1 else f"x^{i}")
        if j:
            factors.append("z" if j == 1 else f"z^{j}")
        if not factors:
            out.append(str(c))
        elif c == 1:
            out.append("*".join(factors))
        else:
            out.append("*".join([str(c)] + factors))
    return " + ".join(out) if out else "0"


@dataclass(frozen=True, order=True)
class CycleType:
    parts: tuple[int, ...]

    def __post_init__(self):
        if any(m <= 0 for m in self.parts):
            raise ValueError("cycle lengths must be positive")
        object.__setattr__(self, "parts", tuple(sorted(self.parts, reverse=True)))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def sign(self) -> int:
        return -1 if (self.n - len(self.parts)) % 2 else 1

    @property
    def is_even(self) -> bool:
        return self.sign == 1

    def __str__(self):
        return "[" + ",".join(map(str, self.parts)) + "]"


class Outcome(enum.Enum):
    RAMIFIED = "Ramified"
    DEGREE_DROP = "DegreeDrop"


@dataclass(frozen=True)
class SpecializationRecord:
    """One sample point z0.

    ``z0`` is integer-encoded in GF(p^field_degree) as built by
    ``field_of(p, field_degree)``.
    """

    index: int
    z0: int
    field_degree: int
    outcome: CycleType | Outcome
    disc_square: bool | None = None

    @property
    def squarefree(self) -> bool:
        return isinstance(self.outcome, CycleType)

    def z0_json(self, p: int) -> dict:
        digits = []
        v = self.z0
        for _ in range(self.field_degree):
            v, r = divmod(v, p)
            digits.append(r)
        return {"field_degree": self.field_degree, "coeffs": digits}


def cycle_type(f: Poly) -> CycleType:
    """Factor-degree multiset of a squarefree f over its base field."""
    return CycleType(tuple(distinct_degree_profile(f).parts()))


def classify(F: BivarPoly, z0: int, E, field_degree: int, index: int = 0) -> SpecializationRecord:
    lc = E.peval(F.lc_x.coeffs, z0)
    if lc == 0:
        return SpecializationRecord(index, z0, field_degree, Outcome.DEGREE_DROP)
    f = [E.peval(c.coeffs, z0) for c in F.coeffs]
    if len(E.pgcd(f, E.pderiv(f))) > 1:
        return SpecializationRecord(index, z0, field_degree, Outcome.RAMIFIED)
    parts = []
    for d, m in _ddf(E, f):
        parts.extend([d] * m)
    ct = CycleType(tuple(parts))
    sq = E.is_square(_discriminant(E, f)) if len(f) > 2 else None
    return SpecializationRecord(index, z0, field_degree, ct, sq)


# sampling stops at fields larger than this (tables are needed for speed)
SAMPLE_FIELD_LIMIT = 1 << 16


def _mobius(n: int) -> int:
    out = 1
    for r in prime_factors(n):
        if (n // r) % r == 0:
            return 0
        out = -out
    return out


def _new_count(p: int, c: int, j: int) -> int:
    """Elements of GF(p^(jc)) outside every GF(p^(ic)) with i a proper divisor of j."""
    return sum(_mobius(d) * p ** (c * j // d) for d in range(1, j + 1) if j % d == 0)


def _is_new(E, a: int, c: int, j: int) -> bool:
    return all(E.power(a, p_pow) != a for p_pow in (E.p ** (c * j // r) for r in prime_factors(j)))


def sample_points(p: int, count: int, seed: int, base_degree: int = 1) -> list[tuple[int, int]]:
    """The (field_degree, z0) sample schedule, without repeats.

    Levels are GF(p^(jc)) for c = base_degree and j = 1, 2, ...; level j
    contributes only points not already present at a lower level of the
    tower. Whole levels are enumerated in encoding order while the remaining
    budget covers them; the first level that does not fit gets distinct
    uniform draws from one SplitMix64(seed) stream. The schedule stops early
    if it runs past SAMPLE_FIELD_LIMIT or MAX_EXT_DEGREE.
    """
    rng = SplitMix64(seed)
    pts: list[tuple[int, int]] = []
    c = base_degree
    j = 1
    while len(pts) < count:
        k = c * j
        if k > MAX_EXT_DEGREE or p**k > SAMPLE_FIELD_LIMIT:
            break
        E = field_of(p, k)
        need = count - len(pts)
        if need >= _new_count(p, c, j):
            pts.extend((k, a) for a in range(E.q) if j == 1 or _is_new(E, a, c, j))
        else:
            seen = set()
            while len(seen) < need:
                a = rng.below(E.q)
                if a not in seen and (j == 1 or _is_new(E, a, c, j)):
                    seen.add(a)
                    pts.append((k, a))
        j += 1
    return pts


def sample_specializations(
    F: BivarPoly, count: int, seed: int, base_degree: int = 1
) -> list[SpecializationRecord]:
    """Specialize F at the scheduled points and classify each one."""
    if count < 0:
        raise ValueError("count must be non-negative")
    records = []
    for i, (k, z0) in enumerate(sample_points(F.p, count, seed, base_degree)):
        records.append(classify(F, z0, field_of(F.p, k), k, i))
    return records


def irreducibility_witness(F: BivarPoly, records: Sequence[SpecializationRecord]):
    """First record whose specialization is irreducible of full degree."""
    if not F.monic_in_x:
        raise NotMonic("irreducibility by specialization needs F monic in x")
    n = F.degree_x
    for r in records:
        if r.squarefree and r.outcome.parts == (n,):
            return r
    return None


def _subset_sums(parts: Sequence[int], n: int) -> int:
    """Bitmask of achievable sums of sub-multisets of parts, restricted to 1..n-1."""
    mask = 1
    for m in parts:
        mask |= mask << m
    return mask & (((1 << n) - 1) ^ 1)


def transitivity_certificate(F: BivarPoly, records: Sequence[SpecializationRecord]):
    """Records proving that Gal(F) acts transitively, or None.

    An orbit of size a (0 < a < n) would force every Frobenius cycle type to
    contain cycles summing to a. Once the sets of such subset sums have an
    empty common intersection no proper orbit exists. A single n-cycle is
    the special case with an empty set on its own. Returns the records used,
    in sample order.
    """
    if not F.monic_in_x:
        raise NotMonic("irreducibility by specialization needs F monic in x")
    n = F.degree_x
    common = (1 << n) - 2
    used = []
    for r in records:
        if not r.squarefree:
            continue
        nxt = common & _subset_sums(r.outcome.parts, n)
        if nxt != common:
            used.append(r)
            common = nxt
        if common == 0:
            return used
    return None


@dataclass(frozen=True)
class JordanWitness:
    m: int
    record: SpecializationRecord


def jordan_primes(n: int) -> list[int]:
    return [m for m in range(n // 2 + 1, n - 2) if is_prime(m) and 2 * m > n]


def jordan_contains_An(records: Sequence[SpecializationRecord], n: int) -> JordanWitness | None:
    """First record carrying an m-cycle, m prime, n/2 < m < n - 2."""
    if n < 8:
        raise ValueError("Jordan criterion needs n >= 8")
    ms = set(jordan_primes(n))
    for r in records:
        if not r.squarefree:
            continue
        for part in r.outcome.parts:
            if part in ms:
                return JordanWitness(part, r)
    return None


def disc_square_in_function_field(D: Poly, base_degree: int = 1) -> bool:
    """Is D in F_p[z] a square in GF(p^base_degree)(z)?

    True iff every squarefree part has even multiplicity and the leading
    coefficient is a square in GF(p^base_degree). Squarefree decomposition is
    unchanged by the constant field extension; an F_p element is a square in
    GF(p^c) for even c always, and for odd c iff it is one in F_p.
    """
    if D.is_zero():
        raise FFError("zero discriminant: polynomial is not separable")
    lc_ok = base_degree % 2 == 0 or D.field.is_square(D.lc)
    if not lc_ok:
        return False
    return all(m % 2 == 0 for _, m in squarefree_decomposition(D))


def bivariate_discriminant(F: BivarPoly) -> Poly:
    """disc_x(F) as a polynomial in z, by evaluation and interpolation.

    The discriminant is homogeneous of degree 2n-2 in the coefficients, so
    its z-degree is at most (2n-2)*deg_z F. Points where the leading
    x-coefficient vanishes are skipped.
    """
    n = F.degree_x
    if n < 2:
        raise FFError("discriminant needs deg_x >= 2")
    p = F.p
    if not F.has_z():
        return Poly(F.field, [discriminant(F.to_univariate())])
    bound = (2 * n - 2) * F.degree_z
    need = bound + 1 + F.lc_x.deg
    k = 1
    while p**k < need:
        k += 1
    E = field_of(p, k)
    xs, ys = [], []
    for z0 in range(E.q):
        if len(xs) == bound + 1:
            break
        f = [E.peval(c.coeffs, z0) for c in F.coeffs]
        if f[-1] == 0:
            continue
        xs.append(z0)
        ys.append(_discriminant(E, f))
    coeffs = interpolate(E, xs, ys)
    if any(not 0 <= c < p for c in coeffs):
        raise AssertionError("interpolated discriminant left the prime field")
    return Poly(F.field, coeffs)


class Status(enum.Enum):
    SN_CERTIFIED = "SnCertified"
    AN_CERTIFIED = "AnCertified"
    INCONCLUSIVE = "Inconclusive"


@dataclass
class GaloisVerdict:
    status: Status
    n: int
    jordan: JordanWitness | None
    irreducible: SpecializationRecord | None
    transitivity: list[SpecializationRecord] | None
    disc_square: bool | None
    stats: dict = field(default_factory=dict)
    base_degree: int = 1
    note: str = CERTIFICATE_CONDITIONS

    @property
    def certified(self) -> bool:
        return self.status is not Status.INCONCLUSIVE


def sample_stats(records: Sequence[SpecializationRecord]) -> dict:
    sf = [r for r in records if r.squarefree]
    return {
        "samples": len(records),
        "squarefree": len(sf),
        "ramified": sum(r.outcome is Outcome.RAMIFIED for r in records),
        "degree_drop": sum(r.outcome is Outcome.DEGREE_DROP for r in records),
        "even": sum(r.outcome.is_even for r in sf),
        "odd": sum(not r.outcome.is_even for r in sf),
        "distinct_cycle_types": len({r.outcome for r in sf}),
    }


def decide_galois(F: BivarPoly, budget: int, seed: int, base_degree: int = 1) -> GaloisVerdict:
    """Certify Gal(F) over GF(p^base_degree)(z) as S_n or A_n, or give up."""
    if not F.monic_in_x:
        raise NotMonic("decide_galois needs F monic in x")
    n = F.degree_x
    if n < 8:
        raise ValueError("decide_galois needs deg_x >= 8")
    records = sample_specializations(F, budget, seed, base_degree)
    stats = sample_stats(records)
    irr = irreducibility_witness(F, records)
    trans = transitivity_certificate(F, records)
    jw = jordan_contains_An(records, n)
    D = bivariate_discriminant(F)
    dsq = None if D.is_zero() else disc_square_in_function_field(D, base_degree)
    stats["disc_z_degree"] = None if D.is_zero() else D.deg
    status = Status.INCONCLUSIVE
    if trans is not None and jw is not None and dsq is not None:
        status = Status.AN_CERTIFIED if dsq else Status.SN_CERTIFIED
    return GaloisVerdict(status, n, jw, irr, trans, dsq, stats, base_degree)


def morse_check(h: Poly) -> bool:
    """Is h a Morse polynomial (distinct critical points, distinct critical values)?

    The critical-value polynomial R(T) = Res_x(h', T - h) is recovered by
    evaluating at n(n-1)+1 points of the smallest GF(p^k) that has that many
    elements and interpolating.
    """
    if not isinstance(h.field, PrimeField):
        raise FFError("morse_check works over a prime field")
    n = h.deg
    if n < 2:
        raise FFError("Morse check needs deg h >= 2")
    p = h.field.p
    if n % p == 0:
        raise CharDividesDegree(f"p={p} divides deg h={n}")
    dh = h.derivative()
    if dh.deg >= 2 and discriminant(dh) == 0:
        return False
    R = critical_value_poly(h)
    return is_separable(R) if R.deg >= 1 else True


def critical_value_poly(h: Poly) -> Poly:
    n = h.deg
    p = h.field.p
    N = n * (n - 1) + 1
    k = 1
    while p**k < N:
        k += 1
    E = field_of(p, k)
    dh = list(h.derivative().coeffs)
    neg_h = [E.neg(c) for c in h.coeffs]
    xs = list(range(N))
    ys = []
    for t in xs:
        b = list(neg_h)
        b[0] = E.add(b[0], t)
        ys.append(_resultant(E, dh, _trim_list(b)))
    coeffs = interpolate(E, xs, ys)
    if any(not 0 <= c < p for c in coeffs):
        raise AssertionError("critical-value polynomial left the prime field")
    return Poly(h.field, coeffs)
