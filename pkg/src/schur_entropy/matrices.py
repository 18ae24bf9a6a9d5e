"""Exact rational matrices and dense polynomials over Q.

Polynomials are tuples of :class:`Fraction` in increasing degree order.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidDimension, InvalidInput, SingularMatrix

Poly = tuple[Fraction, ...]

_ENTRY = re.compile(r"^[+-]?\d+(/[+-]?\d+)?$")


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not _ENTRY.match(text):
        raise InvalidInput(f"not a rational literal: {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise InvalidInput(f"zero denominator in {text!r}") from None


class RationalMatrix:
    """Square matrix with exact rational entries (immutable)."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(Fraction(x) for x in r) for r in rows)
        if not rows:
            raise InvalidDimension("matrix must be nonempty")
        if any(len(r) != len(rows) for r in rows):
            raise InvalidInput("matrix must be square")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    # constructors -------------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> RationalMatrix:
        """Parse ``"a,b;c,d"`` with entries ``n`` or ``n/d``."""
        if not text or not text.strip():
            raise InvalidInput("empty matrix text")
        rows = [[parse_rational(e) for e in row.split(",")] for row in text.split(";")]
        return cls(rows)

    @classmethod
    def identity(cls, m: int) -> RationalMatrix:
        return cls([[1 if i == j else 0 for j in range(m)] for i in range(m)])

    @classmethod
    def diag(cls, entries: Sequence) -> RationalMatrix:
        m = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(m)] for i in range(m)])

    @classmethod
    def companion(cls, coeffs: Sequence) -> RationalMatrix:
        """Companion matrix of the monic polynomial with lower coefficients ``coeffs``."""
        m = len(coeffs)
        rows = [[0] * m for _ in range(m)]
        for i in range(1, m):
            rows[i][i - 1] = 1
        for i in range(m):
            rows[i][m - 1] = -Fraction(coeffs[i])
        return cls(rows)

    @classmethod
    def block_diag(cls, *blocks: RationalMatrix) -> RationalMatrix:
        m = sum(b.size for b in blocks)
        rows = [[Fraction(0)] * m for _ in range(m)]
        off = 0
        for b in blocks:
            for i in range(b.size):
                for j in range(b.size):
                    rows[off + i][off + j] = b.rows[i][j]
            off += b.size
        return cls(rows)

    # views --------------------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entries(self):
        for r in self.rows:
            yield from r

    def block(self, rows: range, cols: range) -> list[list[Fraction]]:
        return [[self.rows[i][j] for j in cols] for i in rows]

    def submatrix(self, idx: range) -> RationalMatrix:
        return RationalMatrix(self.block(idx, idx))

    def transpose(self) -> RationalMatrix:
        return RationalMatrix(zip(*self.rows))

    def format(self) -> str:
        return ";".join(",".join(str(x) for x in r) for r in self.rows)

    def __eq__(self, other):
        return isinstance(other, RationalMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"RationalMatrix({self.format()!r})"

    # algebra --------------------------------------------------------------

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        cols = list(zip(*other.rows))
        return RationalMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols]
                               for r in self.rows])

    def __mul__(self, scalar) -> RationalMatrix:
        s = Fraction(scalar)
        return RationalMatrix([[s * x for x in r] for r in self.rows])

    __rmul__ = __mul__

    def __pow__(self, k: int) -> RationalMatrix:
        base = self if k >= 0 else self.inverse()
        out = RationalMatrix.identity(self.size)
        for _ in range(abs(k)):
            out = out @ base
        return out

    def apply(self, vec: Sequence) -> list[Fraction]:
        return [sum(a * Fraction(x) for a, x in zip(r, vec)) for r in self.rows]

    def det(self) -> Fraction:
        return det([list(r) for r in self.rows])

    def is_invertible(self) -> bool:
        return self.det() != 0

    def inverse(self) -> RationalMatrix:
        return RationalMatrix(inverse([list(r) for r in self.rows]))


def det(a: list[list[Fraction]]) -> Fraction:
    a = [list(map(Fraction, r)) for r in a]
    m = len(a)
    sign = 1
    out = Fraction(1)
    for k in range(m):
        piv = next((i for i in range(k, m) if a[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        out *= a[k][k]
        for i in range(k + 1, m):
            f = a[i][k] / a[k][k]
            if f:
                for j in range(k, m):
                    a[i][j] -= f * a[k][j]
    return sign * out


def inverse(a: list[list[Fraction]]) -> list[list[Fraction]]:
    """Gauss-Jordan inverse over Q; raises SingularMatrix."""
    m = len(a)
    aug = [list(map(Fraction, r)) + [Fraction(int(i == j)) for j in range(m)]
           for i, r in enumerate(a)]
    for k in range(m):
        piv = next((i for i in range(k, m) if aug[i][k] != 0), None)
        if piv is None:
            raise SingularMatrix("matrix is not invertible over Q")
        aug[k], aug[piv] = aug[piv], aug[k]
        inv = 1 / aug[k][k]
        aug[k] = [x * inv for x in aug[k]]
        for i in range(m):
            if i != k and aug[i][k] != 0:
                f = aug[i][k]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[k])]
    return [r[m:] for r in aug]


# polynomials over Q -------------------------------------------------------

def poly_trim(f: Sequence) -> Poly:
    f = [Fraction(c) for c in f]
    while f and f[-1] == 0:
        f.pop()
    return tuple(f)


def poly_add(f: Poly, g: Poly) -> Poly:
    n = max(len(f), len(g))
    return poly_trim([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)
                      for i in range(n)])


def poly_sub(f: Poly, g: Poly) -> Poly:
    return poly_add(f, tuple(-c for c in g))


def poly_mul(f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return ()
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return poly_trim(out)


def poly_divmod(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    g = poly_trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(poly_trim(f))
    q = [Fraction(0)] * max(len(r) - len(g) + 1, 0)
    lead = g[-1]
    while len(r) >= len(g) and r:
        c = r[-1] / lead
        shift = len(r) - len(g)
        q[shift] = c
        for i, b in enumerate(g):
            r[shift + i] -= c * b
        r = list(poly_trim(r))
    return poly_trim(q), tuple(r)


def poly_exact_div(f: Poly, g: Poly) -> Poly:
    q, r = poly_divmod(f, g)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def poly_monic(f: Poly) -> Poly:
    return tuple(c / f[-1] for c in f)


def poly_gcd(f: Poly, g: Poly) -> Poly:
    f, g = poly_trim(f), poly_trim(g)
    while g:
        f, g = g, poly_divmod(f, g)[1]
    return poly_monic(f) if f else ()


def poly_derivative(f: Poly) -> Poly:
    return poly_trim([i * c for i, c in enumerate(f)][1:])


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm over Q: ``f = lc * prod(g_i ** i)`` with ``g_i`` squarefree."""
    f = poly_monic(poly_trim(f))
    out = []
    d = poly_derivative(f)
    a = poly_gcd(f, d)
    b = poly_exact_div(f, a)
    c = poly_exact_div(d, a)
    i = 1
    while len(b) > 1:
        dd = poly_sub(c, poly_derivative(b))
        g = poly_gcd(b, dd) if dd else b
        if len(g) > 1:
            out.append((g, i))
        b = poly_exact_div(b, g)
        c = poly_exact_div(dd, g) if dd else ()
        i += 1
    return out


def char_poly(m: RationalMatrix) -> Poly:
    """``det(xI - M)`` by Bareiss fraction-free elimination over Q[x].

    Every division in the Bareiss recurrence is exact, so the intermediate
    entries stay polynomial.
    """
    n = m.size
    a: list[list[Poly]] = [
        [poly_trim([-m[i, j], 1] if i == j else [-m[i, j]]) for j in range(n)]
        for i in range(n)
    ]
    sign = 1
    prev: Poly = (Fraction(1),)
    for k in range(n - 1):
        if not a[k][k]:
            piv = next((i for i in range(k + 1, n) if a[i][k]), None)
            if piv is None:
                return ()
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = poly_sub(poly_mul(a[i][j], a[k][k]), poly_mul(a[i][k], a[k][j]))
                a[i][j] = poly_exact_div(num, prev)
            a[i][k] = ()
        prev = a[k][k]
    out = a[n - 1][n - 1]
    return tuple(sign * c for c in out)


def poly_to_str(f: Poly, var: str = "x") -> str:
    terms = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if mono and c == 1:
            terms.append(mono)
        elif mono and c == -1:
            terms.append("-" + mono)
        else:
            terms.append(f"{c}{'*' + mono if mono else ''}")
    return " + ".join(terms).replace("+ -", "- ") or "0"
