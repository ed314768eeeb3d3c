"""Parser for sparse polynomial expressions in x and z.

Grammar (whitespace ignored)::

    expr := ['-'] term (('+' | '-') term)*
    term := integer | [integer '*'] mono ['*' mono]
    mono := ('x' | 'z') ['^' integer]

Each term holds at most one x-power and one z-power. Coefficients are
reduced mod p after parsing. Parentheses are outside the grammar.
"""

from __future__ import annotations

from .ffpoly import FFError, Poly, PrimeField
from .galois import BivarPoly


class PolySyntaxError(FFError, SyntaxError):
    def __init__(self, msg: str, offset: int, text: str = ""):
        FFError.__init__(self, f"{msg} at byte {offset}")
        self.msg = msg
        self.offset = offset
        self.text = text

    def __str__(self):
        return f"{self.msg} at byte {self.offset}"


class UnsupportedStructure(FFError):
    pass


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.data = text.encode()
        self.i = 0

    def skip(self):
        while self.i < len(self.data) and self.data[self.i] in b" \t\r\n":
            self.i += 1

    def peek(self) -> str:
        self.skip()
        return chr(self.data[self.i]) if self.i < len(self.data) else ""

    def take(self) -> str:
        ch = self.peek()
        self.i += 1
        return ch

    def integer(self) -> int:
        self.skip()
        start = self.i
        while self.i < len(self.data) and 48 <= self.data[self.i] <= 57:
            self.i += 1
        if start == self.i:
            raise self.error("expected integer")
        return int(self.data[start:self.i])

    def error(self, msg: str) -> PolySyntaxError:
        self.skip()
        return PolySyntaxError(msg, self.i, self.text)


def _mono(lx: _Lexer) -> tuple[str, int]:
    var = lx.peek()
    if var not in ("x", "z"):
        raise lx.error("expected 'x' or 'z'")
    lx.take()
    if lx.peek() == "^":
        lx.take()
        return var, lx.integer()
    return var, 1


def _term(lx: _Lexer) -> tuple[int, int, int]:
    coeff, ex, ez = 1, 0, 0
    seen: set[str] = set()
    if lx.peek().isdigit():
        coeff = lx.integer()
        if lx.peek() != "*":
            return coeff, 0, 0
        lx.take()
    while True:
        at = lx.i
        var, e = _mono(lx)
        if var in seen:
            raise PolySyntaxError(f"repeated variable '{var}' in one term", at, lx.text)
        seen.add(var)
        if var == "x":
            ex = e
        else:
            ez = e
        if lx.peek() != "*":
            return coeff, ex, ez
        lx.take()


def parse_terms(text: str) -> dict[tuple[int, int], int]:
    """Integer coefficients keyed by (x exponent, z exponent), unreduced."""
    if any(ch in text for ch in "()[]{}"):
        pos = min(text.encode().find(ch.encode()) for ch in "()[]{}" if ch in text)
        raise UnsupportedStructure(f"parentheses are not supported (byte {pos})")
    lx = _Lexer(text)
    if not lx.peek():
        raise lx.error("empty expression")
    terms: dict[tuple[int, int], int] = {}
    sign = 1
    if lx.peek() == "-":
        lx.take()
        sign = -1
    while True:
        c, ex, ez = _term(lx)
        terms[(ex, ez)] = terms.get((ex, ez), 0) + sign * c
        op = lx.peek()
        if op == "":
            return terms
        if op not in "+-":
            raise lx.error(f"unexpected {op!r}")
        lx.take()
        sign = 1 if op == "+" else -1


def parse_poly(text: str, p: int) -> BivarPoly | Poly:
    """BivarPoly when z occurs, otherwise a univariate Poly over F_p."""
    F = PrimeField(p)
    terms = parse_terms(text)
    if any(ez for (_, ez), c in terms.items() if c % p):
        return BivarPoly.from_terms(F, terms)
    deg = max((ex for ex, _ in terms), default=0)
    coeffs = [0] * (deg + 1)
    for (ex, _), c in terms.items():
        coeffs[ex] += c
    return Poly(F, coeffs)


def format_expr(f: BivarPoly | Poly) -> str:
    return str(f)
