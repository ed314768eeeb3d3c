"""Prime fields, small extension fields, and dense polynomials over them.

Field elements are plain Python ints in both cases. An element of
F_{p^k} is encoded as ``c_0 + c_1 p + ... + c_{k-1} p^{k-1}`` where
``c_0 + c_1 a + ...`` is its expansion in the power basis of a root ``a`` of
the modulus. With this encoding the prime subfield sits inside every
extension as the integers ``0 .. p-1``, zero is 0 and one is 1.

Polynomials are stored densely in ascending order. The zero polynomial has
no coefficients and asking for its degree is an error.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

MAX_MODULUS = 1 << 31
MAX_EXT_DEGREE = 12
# exp/log tables are built for extension fields up to this size
TABLE_LIMIT = 1 << 16
# switch to Kronecker substitution above this many coefficient products
KRONECKER_THRESHOLD = 4096


class FFError(ValueError):
    pass


class FieldMismatch(FFError):
    pass


class NotSquarefree(FFError):
    pass


class ZeroPolynomialError(FFError):
    pass


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------


class _FieldOps:
    """List-level polynomial kernels written against the scalar field API.

    Subclasses provide ``add, sub, neg, mul, inv`` and may override the
    kernels with faster specialisations.
    """

    p: int
    k: int
    q: int

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def power(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def elements(self) -> range:
        return range(self.q)

    def from_int(self, c: int) -> int:
        return c % self.p

    def pth_root(self, a: int) -> int:
        return self.power(a, self.q // self.p)

    def is_square(self, a: int) -> bool:
        if a == 0:
            return True
        return self.power(a, (self.q - 1) // 2) == 1

    # -- polynomial kernels on normalized coefficient lists --------------

    def padd(self, a: Sequence[int], b: Sequence[int]) -> list[int]:
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        add = self.add
        for i, bi in enumerate(b):
            out[i] = add(out[i], bi)
        return _trim(out)

    def psub(self, a: Sequence[int], b: Sequence[int]) -> list[int]:
        neg = self.neg
        return self.padd(a, [neg(c) for c in b])

    def pscale(self, a: Sequence[int], c: int) -> list[int]:
        if c == 0:
            return []
        mul = self.mul
        return [mul(c, ai) for ai in a]

    def pmul(self, a: Sequence[int], b: Sequence[int]) -> list[int]:
        if not a or not b:
            return []
        add, mul = self.add, self.mul
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = add(out[i + j], mul(ai, bj))
        return out

    def pdivmod(self, a: Sequence[int], b: Sequence[int]) -> tuple[list[int], list[int]]:
        if not b:
            raise ZeroDivisionError("polynomial division by zero")
        db = len(b) - 1
        if len(a) <= db:
            return [], list(a)
        r = list(a)
        sub, mul = self.sub, self.mul
        inv_lc = self.inv(b[-1])
        quo = [0] * (len(a) - db)
        for i in range(len(a) - 1 - db, -1, -1):
            c = r[i + db]
            if c == 0:
                continue
            c = mul(c, inv_lc)
            quo[i] = c
            for j in range(db):
                if b[j]:
                    r[i + j] = sub(r[i + j], mul(c, b[j]))
        return quo, _trim(r[:db])

    def prem(self, a: Sequence[int], b: Sequence[int]) -> list[int]:
        return self.pdivmod(a, b)[1]

    def pmulmod(self, a, b, m) -> list[int]:
        return self.prem(self.pmul(a, b), m)

    def ppowmod(self, a: Sequence[int], e: int, m: Sequence[int]) -> list[int]:
        result = [1] if len(m) > 1 else []
        base = self.prem(a, m)
        while e:
            if e & 1:
                result = self.pmulmod(result, base, m)
            e >>= 1
            if e:
                base = self.pmulmod(base, base, m)
        return result

    def pmonic(self, a: Sequence[int]) -> list[int]:
        if not a or a[-1] == 1:
            return list(a)
        return self.pscale(a, self.inv(a[-1]))

    def pgcd(self, a: Sequence[int], b: Sequence[int]) -> list[int]:
        a, b = list(a), list(b)
        while b:
            a, b = b, self.prem(a, b)
        return self.pmonic(a)

    def peval(self, a: Sequence[int], x: int) -> int:
        add, mul = self.add, self.mul
        acc = 0
        for c in reversed(a):
            acc = add(mul(acc, x), c)
        return acc

    def pderiv(self, a: Sequence[int]) -> list[int]:
        mul = self.mul
        return _trim([mul(self.from_int(i), a[i]) for i in range(1, len(a))])


@dataclass(frozen=True)
class PrimeField(_FieldOps):
    """The prime field F_p for an odd prime p < 2**31."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not 3 <= self.p < MAX_MODULUS:
            raise FFError(f"modulus must be an odd prime in [3, 2^31), got {self.p!r}")
        if not is_prime(self.p):
            raise FFError(f"{self.p} is not prime")

    @property
    def k(self) -> int:
        return 1

    @property
    def q(self) -> int:
        return self.p

    def __repr__(self) -> str:
        return f"GF({self.p})"

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def power(self, a, e):
        return pow(a, e, self.p)

    def pth_root(self, a):
        return a

    def is_square(self, a):
        a %= self.p
        return a == 0 or pow(a, (self.p - 1) // 2, self.p) == 1

    # integer kernels: accumulate, reduce once

    def padd(self, a, b):
        p = self.p
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, bi in enumerate(b):
            out[i] = (out[i] + bi) % p
        return _trim(out)

    def psub(self, a, b):
        p = self.p
        n = max(len(a), len(b))
        out = [0] * n
        for i, ai in enumerate(a):
            out[i] = ai
        for i, bi in enumerate(b):
            out[i] = (out[i] - bi) % p
        return _trim(out)

    def pscale(self, a, c):
        p = self.p
        c %= p
        if c == 0:
            return []
        return [c * ai % p for ai in a]

    def pmul(self, a, b):
        if not a or not b:
            return []
        if len(a) * len(b) > KRONECKER_THRESHOLD:
            return _kronecker_mul(a, b, self.p)
        p = self.p
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return [c % p for c in out]

    def pdivmod(self, a, b):
        if not b:
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        db = len(b) - 1
        if len(a) <= db:
            return [], list(a)
        r = list(a)
        inv_lc = pow(b[-1], -1, p)
        quo = [0] * (len(a) - db)
        nb = [-c for c in b[:db]]
        for i in range(len(a) - 1 - db, -1, -1):
            c = r[i + db] % p
            if c == 0:
                continue
            c = c * inv_lc % p
            quo[i] = c
            for j, bj in enumerate(nb):
                if bj:
                    r[i + j] += c * bj
        return quo, _trim([c % p for c in r[:db]])

    def prem(self, a, b):
        return self.pdivmod(a, b)[1]

    def peval(self, a, x):
        p = self.p
        acc = 0
        for c in reversed(a):
            acc = (acc * x + c) % p
        return acc

    def pderiv(self, a):
        p = self.p
        return _trim([i * a[i] % p for i in range(1, len(a))])


def _kronecker_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Multiply over F_p by packing both operands into one big integer."""
    bits = 2 * (p - 1).bit_length() + min(len(a), len(b)).bit_length() + 1
    A = 0
    for c in reversed(a):
        A = (A << bits) | c
    B = 0
    for c in reversed(b):
        B = (B << bits) | c
    C = A * B
    mask = (1 << bits) - 1
    out = []
    for _ in range(len(a) + len(b) - 1):
        out.append((C & mask) % p)
        C >>= bits
    return out


class ExtField(_FieldOps):
    """F_{p^k} as F_p[t]/(modulus) with integer-encoded elements.

    Arithmetic goes through exp, log and Zech tables once the field is small
    enough (``q <= TABLE_LIMIT``); beyond that it falls back to schoolbook
    multiplication of coefficient vectors.
    """

    def __init__(self, base: PrimeField, modulus: Sequence[int]):
        modulus = tuple(c % base.p for c in modulus)
        if len(modulus) < 2 or modulus[-1] != 1:
            raise FFError("extension modulus must be monic of degree >= 1")
        self.base = base
        self.p = base.p
        self.k = len(modulus) - 1
        self.q = self.p ** self.k
        self.modulus = modulus
        if not is_irreducible(Poly(base, modulus)):
            raise FFError(f"modulus {modulus} is reducible over GF({self.p})")
        self._exp = self._log = self._zech = None
        if self.k > 1 and self.q <= TABLE_LIMIT:
            self._build_tables()

    def __repr__(self):
        return f"GF({self.p}^{self.k})"

    def __eq__(self, other):
        return isinstance(other, ExtField) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    # -- vector form -----------------------------------------------------

    def to_vec(self, a: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.k):
            a, r = divmod(a, p)
            out.append(r)
        return out

    def from_vec(self, v: Sequence[int]) -> int:
        p = self.p
        a = 0
        for c in reversed(v):
            a = a * p + (c % p)
        return a

    def _vec_mul(self, a: int, b: int) -> int:
        p, k, m = self.p, self.k, self.modulus
        va, vb = self.to_vec(a), self.to_vec(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(va):
            if x:
                for j, y in enumerate(vb):
                    prod[i + j] += x * y
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i] % p
            if c:
                for j in range(k):
                    prod[i - k + j] -= c * m[j]
        return self.from_vec(prod[:k])

    def _build_tables(self):
        q = self.q
        order = q - 1
        factors = prime_factors(order)
        gen = next(
            g for g in range(2, q) if all(self._slow_pow(g, order // r) != 1 for r in factors)
        )
        exp = [0] * (2 * order)
        log = [-1] * q
        a = 1
        for i in range(order):
            exp[i] = a
            log[a] = i
            a = self._vec_mul(a, gen)
        exp[order:] = exp[:order]
        # Zech logarithms: g^zech[m] = 1 + g^m, -1 where 1 + g^m = 0
        zech = [-1] * order
        for m in range(order):
            s = self._vec_add(1, exp[m])
            zech[m] = log[s] if s else -1
        self.generator = gen
        self._exp, self._log, self._zech = exp, log, zech
        self._half = order // 2

    def _vec_add(self, a, b):
        p = self.p
        out, w = 0, 1
        while a or b:
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            out += ((ra + rb) % p) * w
            w *= p
        return out

    def _slow_pow(self, a, e):
        r = 1
        while e:
            if e & 1:
                r = self._vec_mul(r, a)
            a = self._vec_mul(a, a)
            e >>= 1
        return r

    # -- scalar API ------------------------------------------------------

    def add(self, a, b):
        if a == 0:
            return b
        if b == 0:
            return a
        log = self._log
        if log is None:
            return self._vec_add(a, b)
        la = log[a]
        m = log[b] - la
        if m < 0:
            m += self.q - 1
        z = self._zech[m]
        return 0 if z < 0 else self._exp[la + z]

    def neg(self, a):
        if a == 0:
            return 0
        if self._log is not None:
            return self._exp[self._log[a] + self._half]
        return self.from_vec([-c for c in self.to_vec(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._vec_mul(a, b)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self._exp is not None:
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return self._slow_pow(a, self.q - 2)

    def power(self, a, e):
        if self._exp is not None:
            if a == 0:
                if e < 0:
                    raise ZeroDivisionError("inverse of zero")
                return 0 if e else 1
            return self._exp[(self._log[a] * e) % (self.q - 1)]
        return super().power(a, e)

    def is_square(self, a):
        if a == 0:
            return True
        if self._log is not None:
            return self._log[a] % 2 == 0
        return self.power(a, (self.q - 1) // 2) == 1

    def from_int(self, c):
        return c % self.p

    def is_prime_subfield(self, a: int) -> bool:
        return 0 <= a < self.p

    # -- table-driven kernels --------------------------------------------

    def pmul(self, a, b):
        if self._exp is None or not a or not b:
            return super().pmul(a, b)
        exp, log, add = self._exp, self._log, self.add
        lb = [(j, log[bj]) for j, bj in enumerate(b) if bj]
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                la = log[ai]
                for j, l in lb:
                    out[i + j] = add(out[i + j], exp[la + l])
        return out

    def pdivmod(self, a, b):
        if self._exp is None:
            return super().pdivmod(a, b)
        if not b:
            raise ZeroDivisionError("polynomial division by zero")
        db = len(b) - 1
        if len(a) <= db:
            return [], list(a)
        exp, log, add = self._exp, self._log, self.add
        order = self.q - 1
        r = list(a)
        lc_log = log[b[-1]]
        # logs of -b_j
        nb = [(j, (log[bj] + self._half) % order) for j, bj in enumerate(b[:db]) if bj]
        quo = [0] * (len(a) - db)
        for i in range(len(a) - 1 - db, -1, -1):
            c = r[i + db]
            if c == 0:
                continue
            lq = (log[c] - lc_log) % order
            quo[i] = exp[lq]
            for j, l in nb:
                r[i + j] = add(r[i + j], exp[lq + l])
        return quo, _trim(r[:db])


Field = PrimeField | ExtField


def _is_irreducible_list(F: _FieldOps, f: Sequence[int]) -> bool:
    n = len(f) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    f = F.pmonic(f)
    x = [0, 1]
    q = F.q
    # Rabin: x^{q^n} = x and gcd(x^{q^{n/r}} - x, f) = 1 for primes r | n
    powers = {}
    h = x
    for d in range(1, n + 1):
        h = F.ppowmod(h, q, f)
        powers[d] = h
    if F.psub(powers[n], x):
        return False
    for r in prime_factors(n):
        g = F.pgcd(f, F.psub(powers[n // r], x))
        if len(g) > 1:
            return False
    return True


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------


class Poly:
    """Dense univariate polynomial over a PrimeField or ExtField.

    ``coeffs`` is ascending and normalized; integers given for a prime field
    are reduced mod p on construction.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs: Iterable[int] = ()):
        if isinstance(field, PrimeField):
            c = [int(v) % field.p for v in coeffs]
        else:
            c = [int(v) for v in coeffs]
            if any(not 0 <= v < field.q for v in c):
                raise FFError(f"coefficient out of range for {field!r}")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(_trim(c)))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def _raw(cls, field, coeffs: list[int]) -> "Poly":
        obj = cls.__new__(cls)
        object.__setattr__(obj, "field", field)
        object.__setattr__(obj, "coeffs", tuple(coeffs))
        return obj

    @classmethod
    def x(cls, field) -> "Poly":
        return cls._raw(field, [0, 1])

    @classmethod
    def const(cls, field, c: int) -> "Poly":
        return cls(field, [c])

    @classmethod
    def monomial(cls, field, n: int, c: int = 1) -> "Poly":
        return cls(field, [0] * n + [c])

    # -- basic queries ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def deg(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomialError("degree of the zero polynomial is undefined")
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == tuple(_trim([self.field.from_int(other)]))
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return f"Poly({self.field!r}, {list(self.coeffs)})"

    def __str__(self):
        return format_poly(self.coeffs, "x")

    # -- arithmetic ------------------------------------------------------

    def _check(self, other) -> "Poly":
        if isinstance(other, int):
            return Poly(self.field, [self.field.from_int(other)])
        if not isinstance(other, Poly):
            raise TypeError(f"cannot combine Poly with {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        return other

    def __add__(self, other):
        o = self._check(other)
        return Poly._raw(self.field, self.field.padd(self.coeffs, o.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._check(other)
        return Poly._raw(self.field, self.field.psub(self.coeffs, o.coeffs))

    def __rsub__(self, other):
        return self._check(other) - self

    def __neg__(self):
        F = self.field
        return Poly._raw(F, [F.neg(c) for c in self.coeffs])

    def __mul__(self, other):
        o = self._check(other)
        return Poly._raw(self.field, self.field.pmul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def __divmod__(self, other):
        o = self._check(other)
        quo, rem = self.field.pdivmod(self.coeffs, o.coeffs)
        return Poly._raw(self.field, quo), Poly._raw(self.field, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        F = self.field
        result, base = [1], list(self.coeffs)
        while e:
            if e & 1:
                result = F.pmul(result, base)
            e >>= 1
            if e:
                base = F.pmul(base, base)
        return Poly._raw(F, result)

    def __call__(self, x: int) -> int:
        return self.field.peval(self.coeffs, x)

    def scale(self, c: int) -> "Poly":
        return Poly._raw(self.field, self.field.pscale(self.coeffs, c))

    def monic(self) -> "Poly":
        if not self.coeffs:
            raise ZeroPolynomialError("cannot normalize the zero polynomial")
        return Poly._raw(self.field, self.field.pmonic(self.coeffs))

    def derivative(self) -> "Poly":
        return Poly._raw(self.field, self.field.pderiv(self.coeffs))

    def powmod(self, e: int, m: "Poly") -> "Poly":
        m = self._check(m)
        return Poly._raw(self.field, self.field.ppowmod(self.coeffs, e, m.coeffs))


PrimePoly = Poly


def format_poly(coeffs: Sequence[int], var: str = "x") -> str:
    """Render ascending coefficients as ``c*x^i + ...`` (descending order)."""
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
            continue
        mono = var if i == 1 else f"{var}^{i}"
        terms.append(mono if c == 1 else f"{c}*{mono}")
    return " + ".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------


def _same_field(a: Poly, b: Poly):
    if a.field != b.field:
        raise FieldMismatch(f"{a.field!r} vs {b.field!r}")


def poly_mul(a: Poly, b: Poly) -> Poly:
    _same_field(a, b)
    return a * b


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd. Both inputs zero is an error."""
    _same_field(a, b)
    if a.is_zero() and b.is_zero():
        raise ZeroPolynomialError("gcd(0, 0) is undefined")
    return Poly._raw(a.field, a.field.pgcd(a.coeffs, b.coeffs))


def is_separable(f: Poly) -> bool:
    if f.is_zero() or f.deg < 1:
        raise FFError("separability needs a non-constant polynomial")
    return poly_gcd(f, f.derivative()).deg == 0


def frobenius_power(f: Poly, d: int) -> Poly:
    """x^(q^d) mod f by square-and-multiply, q the size of the base field."""
    if f.is_zero() or f.deg < 1:
        raise FFError("frobenius_power needs deg f >= 1")
    if d < 1:
        raise FFError("d must be positive")
    F = f.field
    return Poly._raw(F, F.ppowmod([0, 1], F.q ** d, f.coeffs))


@dataclass(frozen=True)
class FactorDegreeProfile:
    entries: tuple[tuple[int, int], ...]

    @property
    def degree(self) -> int:
        return sum(d * m for d, m in self.entries)

    def parts(self) -> list[int]:
        out = []
        for d, m in self.entries:
            out.extend([d] * m)
        return sorted(out)


def _ddf(F: _FieldOps, f: list[int]) -> list[tuple[int, int]]:
    q = F.q
    rest = F.pmonic(f)
    entries = []
    h = [0, 1]
    d = 1
    while len(rest) - 1 >= 2 * d:
        h = F.ppowmod(h, q, rest)
        g = F.pgcd(rest, F.psub(h, [0, 1]))
        if len(g) > 1:
            entries.append((d, (len(g) - 1) // d))
            rest = F.pdivmod(rest, g)[0]
            h = F.prem(h, rest)
        d += 1
    if len(rest) > 1:
        entries.append((len(rest) - 1, 1))
    return entries


def distinct_degree_profile(f: Poly) -> FactorDegreeProfile:
    """Count irreducible factors of each degree of a squarefree f."""
    if not is_separable(f):
        raise NotSquarefree(f"{f} is not squarefree")
    return FactorDegreeProfile(tuple(_ddf(f.field, list(f.coeffs))))


def _resultant(F: _FieldOps, a: list[int], b: list[int]) -> int:
    res = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        if db == 0:
            return F.mul(res, F.power(b[0], da))
        r = F.prem(a, b)
        if not r:
            return 0
        if (da * db) & 1:
            res = F.neg(res)
        res = F.mul(res, F.power(b[-1], da - (len(r) - 1)))
        a, b = b, r


def resultant(a: Poly, b: Poly) -> int:
    _same_field(a, b)
    if a.is_zero() or b.is_zero():
        raise ZeroPolynomialError("resultant with the zero polynomial")
    return _resultant(a.field, list(a.coeffs), list(b.coeffs))


def _discriminant(F: _FieldOps, f: list[int]) -> int:
    n = len(f) - 1
    df = F.pderiv(f)
    if not df:
        return 0
    lc = f[-1]
    # Res(f, f') over the true degree of f'; pad to formal degree n-1
    r = _resultant(F, f, df)
    r = F.mul(r, F.power(lc, (n - 1) - (len(df) - 1) - 1))
    if (n * (n - 1) // 2) & 1:
        r = F.neg(r)
    return r


def discriminant(f: Poly) -> int:
    """(-1)^(n(n-1)/2) Res(f, f') / lc(f), with f' taken at formal degree n-1."""
    if f.is_zero() or f.deg < 2:
        raise FFError("discriminant needs deg f >= 2")
    return _discriminant(f.field, list(f.coeffs))


def is_square(field, a: int) -> bool:
    """Quadratic residue test; 0 counts as a square."""
    return field.is_square(a)


def is_irreducible(f: Poly) -> bool:
    return _is_irreducible_list(f.field, list(f.coeffs))


@lru_cache(maxsize=None)
def make_ext_field(p: int, k: int) -> ExtField:
    """GF(p^k) with the first irreducible monic modulus in counting order.

    Candidates ``t^k + c_{k-1} t^{k-1} + ... + c_0`` are tried in increasing
    order of the integer ``c_0 + c_1 p + ... + c_{k-1} p^{k-1}``.
    """
    if not 1 <= k <= MAX_EXT_DEGREE:
        raise FFError(f"extension degree must be in [1, {MAX_EXT_DEGREE}], got {k}")
    base = PrimeField(p)
    for idx in range(p**k):
        low = [(idx // p**j) % p for j in range(k)]
        cand = low + [1]
        if k > 1 and cand[0] == 0:
            continue
        if _is_irreducible_list(base, cand):
            return ExtField(base, cand)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


def field_of(p: int, k: int = 1):
    """GF(p) itself for k == 1, otherwise the tabulated extension."""
    return PrimeField(p) if k == 1 else make_ext_field(p, k)


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Monic squarefree factors with multiplicities (finite-field Yun/Musser)."""
    if f.is_zero():
        raise ZeroPolynomialError("squarefree decomposition of zero")
    F = f.field
    return [(Poly._raw(F, g), m) for g, m in _sqf(F, F.pmonic(list(f.coeffs)))]


def _sqf(F: _FieldOps, f: list[int]) -> list[tuple[list[int], int]]:
    out = []
    if len(f) <= 1:
        return out
    c = F.pgcd(f, F.pderiv(f))
    w = F.pdivmod(f, c)[0]
    i = 1
    while len(w) > 1:
        y = F.pgcd(w, c)
        z = F.pdivmod(w, y)[0]
        if len(z) > 1:
            out.append((z, i))
        i += 1
        w = y
        c = F.pdivmod(c, y)[0]
    if len(c) > 1:
        p = F.p
        root = [F.pth_root(c[j]) for j in range(0, len(c), p)]
        out.extend((g, m * p) for g, m in _sqf(F, root))
    return out


def interpolate(F: _FieldOps, xs: Sequence[int], ys: Sequence[int]) -> list[int]:
    """Coefficients of the unique polynomial of degree < len(xs) through the points."""
    n = len(xs)
    if len(set(xs)) != n:
        raise FFError("interpolation nodes must be distinct")
    add, sub, mul, inv = F.add, F.sub, F.mul, F.inv
    # Newton divided differences
    dd = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = mul(sub(dd[i], dd[i - 1]), inv(sub(xs[i], xs[i - j])))
    coeffs = [dd[-1]]
    for i in range(n - 2, -1, -1):
        # coeffs = coeffs * (x - xs[i]) + dd[i]
        nx = F.neg(xs[i])
        new = [0] * (len(coeffs) + 1)
        for j, c in enumerate(coeffs):
            new[j + 1] = add(new[j + 1], c)
            new[j] = add(new[j], mul(c, nx))
        new[0] = add(new[0], dd[i])
        coeffs = new
    return _trim(coeffs)
