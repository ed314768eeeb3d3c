"""Certificates against supersingularity for Jacobians of y^2 = f(x) over F_p.

Two independent routes:

* the Cartier-Manin (Hasse-Witt) matrix read off f^((p-1)/2); a nonzero
  p-rank rules out supersingularity at once;
* brute-force point counts over F_{p^k}, k <= g, giving the L-polynomial and
  its p-adic Newton slopes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

import numpy as np

from .ffpoly import FFError, Poly, PrimeField, is_separable, make_ext_field
from .rng import task_stream

POINT_COUNT_CAP = 10**7
CHUNK = 1 << 16


class CapExceeded(FFError):
    pass


class WeilBoundViolation(FFError):
    pass


@dataclass(frozen=True)
class HyperCurve:
    f: Poly

    def __post_init__(self):
        if not isinstance(self.f.field, PrimeField):
            raise FFError("curves are defined over a prime field")
        if self.f.is_zero() or self.f.deg < 3:
            raise FFError("need deg f >= 3")
        if not is_separable(self.f):
            raise FFError("f must be squarefree")

    @property
    def p(self) -> int:
        return self.f.field.p

    @property
    def n(self) -> int:
        return self.f.deg

    @property
    def genus(self) -> int:
        return (self.n - 1) // 2


# -- matrices over F_p ------------------------------------------------------


def mat_mul(A, B, p):
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) % p for col in Bt] for row in A]


def mat_pow(A, e, p):
    n = len(A)
    R = [[int(i == j) for j in range(n)] for i in range(n)]
    while e:
        if e & 1:
            R = mat_mul(R, A, p)
        A = mat_mul(A, A, p)
        e >>= 1
    return R


def mat_rank(A, p) -> int:
    M = [list(r) for r in A]
    rank = 0
    cols = len(M[0]) if M else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(M)) if M[r][c] % p), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = pow(M[rank][c], -1, p)
        M[rank] = [v * inv % p for v in M[rank]]
        for r in range(len(M)):
            if r != rank and M[r][c]:
                t = M[r][c]
                M[r] = [(a - t * b) % p for a, b in zip(M[r], M[rank])]
        rank += 1
    return rank


# -- Hasse-Witt ---------------------------------------------------------------


def hasse_witt_work(n: int, p: int) -> int:
    """Rough coefficient-operation count for computing f^((p-1)/2)."""
    d = n * (p - 1) // 2
    return d * d


def hasse_witt(curve: HyperCurve) -> list[list[int]]:
    """g x g matrix with (i, j) entry the coefficient of x^(ip - j) in f^((p-1)/2)."""
    p, g = curve.p, curve.genus
    h = curve.f ** ((p - 1) // 2)
    return [[h[i * p - j] for j in range(1, g + 1)] for i in range(1, g + 1)]


def p_rank(M: Sequence[Sequence[int]], curve: HyperCurve) -> int:
    """Stable rank of the Cartier-Manin matrix.

    Over F_p the Frobenius twist M^(p) equals M, so the p-rank is
    rank(M^g). Over F_{p^k} it would be rank(M M^(p) ... M^(p^(g-1))).
    """
    p, g = curve.p, curve.genus
    return mat_rank(mat_pow([list(r) for r in M], g, p), p)


# -- point counting -------------------------------------------------------------


def count_work(curve: HyperCurve, K: int) -> int:
    return sum(curve.p**k * curve.n * k * k for k in range(1, K + 1))


def _vmul(A: np.ndarray, B: np.ndarray, mod: Sequence[int], p: int) -> np.ndarray:
    """Multiply arrays of GF(p^k) elements given as (m, k) digit rows."""
    m, k = A.shape
    if k == 1:
        return A * B % p
    prod = np.zeros((m, 2 * k - 1), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            prod[:, i + j] += A[:, i] * B[:, j] % p
    prod %= p
    for d in range(2 * k - 2, k - 1, -1):
        c = prod[:, d]
        for j in range(k):
            if mod[j]:
                prod[:, d - k + j] = (prod[:, d - k + j] - c * mod[j]) % p
    return prod[:, :k]


def _digits(vals: np.ndarray, p: int, k: int) -> np.ndarray:
    out = np.empty((len(vals), k), dtype=np.int64)
    v = vals.copy()
    for j in range(k):
        out[:, j] = v % p
        v //= p
    return out


def count_points(curve: HyperCurve, k: int = 1) -> int:
    """Number of points over F_{p^k} on the smooth model of y^2 = f(x).

    Affine x-values contribute 1 + chi(f(x)) with chi(0) = 0. At infinity:
    one point for odd degree; for even degree two if lc(f) is a square in
    F_{p^k}, none otherwise.
    """
    p = curve.p
    q = p**k
    if q > POINT_COUNT_CAP:
        raise CapExceeded(f"p^k = {q} exceeds the point-count cap {POINT_COUNT_CAP}")
    mod = make_ext_field(p, k).modulus if k > 1 else (0, 1)
    weights = p ** np.arange(k, dtype=np.int64)
    coeffs = curve.f.coeffs

    is_sq = np.zeros(q, dtype=bool)
    for start in range(0, q, CHUNK):
        y = _digits(np.arange(start, min(q, start + CHUNK), dtype=np.int64), p, k)
        is_sq[_vmul(y, y, mod, p) @ weights] = True

    affine = 0
    for start in range(0, q, CHUNK):
        x = _digits(np.arange(start, min(q, start + CHUNK), dtype=np.int64), p, k)
        acc = np.zeros_like(x)
        acc[:, 0] = coeffs[-1]
        for c in reversed(coeffs[:-1]):
            acc = _vmul(acc, x, mod, p)
            acc[:, 0] = (acc[:, 0] + c) % p
        v = acc @ weights
        zero = v == 0
        sq = is_sq[v] & ~zero
        # 1 + chi: 2 for nonzero squares, 1 for zero, 0 otherwise
        affine += int(2 * np.count_nonzero(sq) + np.count_nonzero(zero))

    if curve.n % 2:
        inf = 1
    else:
        lc = curve.f.lc
        inf = 2 if (k % 2 == 0 or curve.f.field.is_square(lc)) else 0
    return affine + inf


# -- L-polynomial -----------------------------------------------------------------


def _elementary_from_power_sums(P: Sequence[int], m: int) -> list[int]:
    e = [1]
    for k in range(1, m + 1):
        s = sum((-1) ** (i - 1) * e[k - i] * P[i - 1] for i in range(1, k + 1))
        if s % k:
            raise WeilBoundViolation("Newton identity produced a non-integer")
        e.append(s // k)
    return e


def l_polynomial(curve: HyperCurve, counts: Sequence[int]) -> list[int]:
    """Integer coefficients a_0..a_2g of L(T) from N_1..N_g."""
    g, q = curve.genus, curve.p
    if g > 4:
        raise FFError("L-polynomial recovery is limited to g <= 4")
    if len(counts) < g:
        raise FFError(f"need N_1..N_{g}")
    P = [q**k + 1 - counts[k - 1] for k in range(1, g + 1)]
    e = _elementary_from_power_sums(P, g)
    a = [(-1) ** i * e[i] for i in range(g + 1)]
    a += [q ** (g - i) * a[i] for i in range(g - 1, -1, -1)]
    for i, ai in enumerate(a):
        bound = comb(2 * g, i)
        if ai * ai > bound * bound * q**i:
            raise WeilBoundViolation(f"|a_{i}| = {abs(ai)} exceeds the Weil bound")
    return a


def counts_from_lpoly(a: Sequence[int], q: int, K: int) -> list[int]:
    """N_1..N_K predicted by an L-polynomial (inverse Newton identities)."""
    m = len(a) - 1
    e = [(-1) ** i * a[i] for i in range(m + 1)]
    P = []
    for k in range(1, K + 1):
        s = (-1) ** (k - 1) * k * e[k] if k <= m else 0
        for i in range(1, k):
            if k - i <= m:
                s += (-1) ** (k - i - 1) * e[k - i] * P[i - 1]
        P.append(s)
    return [q**k + 1 - P[k - 1] for k in range(1, K + 1)]


def _vp(a: int, p: int) -> int:
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    return v


def newton_slopes(a: Sequence[int], p: int) -> list[Fraction]:
    """Slopes of the lower convex hull of (i, v_p(a_i)), with multiplicity."""
    pts = [(i, _vp(c, p)) for i, c in enumerate(a) if c]
    hull: list[tuple[int, int]] = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop the middle point unless it lies strictly below the chord
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    slopes = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        slopes.extend([Fraction(y2 - y1, x2 - x1)] * (x2 - x1))
    return slopes


# -- certificates ----------------------------------------------------------------


class Verdict(enum.Enum):
    REFUTED_BY_P_RANK = "RefutedByPRank"
    REFUTED_BY_NEWTON_SLOPE = "RefutedByNewtonSlope"
    CONSISTENT = "ConsistentWithSupersingular"
    CONFIRMED = "ConfirmedSupersingular"

    @property
    def refutes(self) -> bool:
        return self in (Verdict.REFUTED_BY_P_RANK, Verdict.REFUTED_BY_NEWTON_SLOPE)


class Effort(enum.Enum):
    HW_ONLY = "HWOnly"
    FULL_L = "FullL"


@dataclass
class SupersingularityCertificate:
    verdict: Verdict
    matrix: list[list[int]]
    p_rank: int
    counts: list[int] = field(default_factory=list)
    l_poly: list[int] | None = None
    slopes: list[Fraction] | None = None

    @property
    def nilpotent(self) -> bool:
        return self.p_rank == 0


def refute_supersingular(curve: HyperCurve, effort: Effort = Effort.HW_ONLY) -> SupersingularityCertificate:
    M = hasse_witt(curve)
    r = p_rank(M, curve)
    cert = SupersingularityCertificate(Verdict.CONSISTENT, M, r)
    if effort is Effort.FULL_L:
        g = curve.genus
        cert.counts = [count_points(curve, k) for k in range(1, g + 1)]
        cert.l_poly = l_polynomial(curve, cert.counts)
        cert.slopes = newton_slopes(cert.l_poly, curve.p)
    half = Fraction(1, 2)
    if r > 0:
        cert.verdict = Verdict.REFUTED_BY_P_RANK
    elif cert.slopes is not None and any(s != half for s in cert.slopes):
        cert.verdict = Verdict.REFUTED_BY_NEWTON_SLOPE
    elif cert.slopes is not None and curve.genus <= 2:
        cert.verdict = Verdict.CONFIRMED
    return cert


# -- surveys over a parameter ----------------------------------------------------


@dataclass
class SurveyEntry:
    draw: int
    c: int
    certificate: SupersingularityCertificate | None  # None when f_c is not squarefree


def p_rank_survey(family, p: int, count: int, seed: int, max_draws: int | None = None) -> list[SurveyEntry]:
    """Hasse-Witt certificates for y^2 = family(c), c drawn uniformly from F_p.

    ``family`` maps an element c of F_p to a Poly over F_p. Draws come with
    replacement from the seeded stream until ``count`` squarefree members
    have been seen (or ``max_draws`` is reached); rejected draws are kept in
    the output with ``certificate = None``.
    """
    rng = task_stream(seed, 0)
    limit = max_draws if max_draws is not None else 50 * count
    out: list[SurveyEntry] = []
    good = 0
    while good < count and len(out) < limit:
        c = rng.below(p)
        f = family(c)
        if not is_separable(f):
            out.append(SurveyEntry(len(out), c, None))
            continue
        out.append(SurveyEntry(len(out), c, refute_supersingular(HyperCurve(f))))
        good += 1
    return out
