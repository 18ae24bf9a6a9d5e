"""Fixed-precision p-adic numbers, polynomials over Q_p and Newton polygons.

A scalar is stored as ``p**valuation * unit`` with ``unit`` a p-adic unit
known modulo ``p**precision``.  Scalars created from rationals additionally
remember their exact rational value; arithmetic between two such scalars is
carried out exactly, so cancellation never loses information.  Scalars that
only exist as digit strings (for example Hensel-lifted roots) use tracked
relative precision and raise :class:`PrecisionExhausted` when a sum cancels
every known digit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InvalidInput, PadicDivisionByZero, PrecisionExhausted

INFINITY = math.inf
DEFAULT_PRECISION = 64

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Miller-Rabin with the first twelve prime bases (deterministic below 3.3e24)."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def int_valuation(n: int, p: int) -> int | float:
    if n == 0:
        return INFINITY
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def rational_valuation(x: Fraction | int, p: int) -> int | float:
    x = Fraction(x)
    if x == 0:
        return INFINITY
    return int_valuation(x.numerator, p) - int_valuation(x.denominator, p)


def split_rational(x: Fraction | int, p: int) -> tuple[int | float, Fraction]:
    """Return ``(v, u)`` with ``x == p**v * u`` and ``u`` a p-adic unit."""
    x = Fraction(x)
    if x == 0:
        return INFINITY, Fraction(0)
    v = rational_valuation(x, p)
    return v, x / Fraction(p) ** v


def reduce_mod_power(x: Fraction | int, p: int, d: int) -> Fraction:
    """Canonical representative of ``x`` modulo ``p**d * Z_p``.

    The result is the truncated p-adic expansion of ``x`` below ``p**d``: a
    rational with p-power denominator in ``[0, p**d)``.
    """
    x = Fraction(x)
    if x == 0:
        return Fraction(0)
    v, u = split_rational(x, p)
    if v >= d:
        return Fraction(0)
    k = d - v
    mod = p**k
    digits = u.numerator * pow(u.denominator, -1, mod) % mod
    return Fraction(digits) * Fraction(p) ** v


@dataclass(frozen=True)
class PadicContext:
    """Prime and number of significant digits."""

    p: int
    K: int = DEFAULT_PRECISION

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise InvalidInput(f"p must be prime (got {self.p!r})")
        if not isinstance(self.K, int) or self.K < 1:
            raise InvalidInput(f"precision K must be a positive integer (got {self.K!r})")

    @cached_property
    def modulus(self) -> int:
        return self.p**self.K

    def zero(self) -> PadicScalar:
        return PadicScalar.zero(self)

    def __call__(self, num, den=1) -> PadicScalar:
        return embed_rational(num, den, self)


class PadicScalar:
    """An element of Q_p, see the module docstring for the representation."""

    __slots__ = ("ctx", "valuation", "unit", "precision", "exact")

    def __init__(self, ctx: PadicContext, valuation, unit: int, precision: int,
                 exact: Fraction | None = None):
        self.ctx = ctx
        self.valuation = valuation
        self.unit = unit
        self.precision = precision
        self.exact = exact

    # construction -----------------------------------------------------

    @classmethod
    def zero(cls, ctx: PadicContext) -> PadicScalar:
        return cls(ctx, INFINITY, 0, ctx.K, Fraction(0))

    @classmethod
    def from_fraction(cls, x: Fraction | int, ctx: PadicContext) -> PadicScalar:
        x = Fraction(x)
        if x == 0:
            return cls.zero(ctx)
        v, u = split_rational(x, ctx.p)
        mod = ctx.modulus
        unit = u.numerator * pow(u.denominator, -1, mod) % mod
        return cls(ctx, v, unit, ctx.K, x)

    @classmethod
    def from_digits(cls, value: int, ctx: PadicContext, valuation_shift: int = 0,
                    precision: int | None = None) -> PadicScalar:
        """Inexact scalar ``p**valuation_shift * value`` known to ``precision`` relative digits.

        Raises PrecisionExhausted if ``value`` is zero: a digit string of
        zeros carries no valuation information.
        """
        if value == 0:
            raise PrecisionExhausted("digit string is zero; valuation indeterminate")
        k = int_valuation(value, ctx.p)
        prec = ctx.K if precision is None else min(precision, ctx.K)
        unit = (value // ctx.p**k) % ctx.p**prec
        return cls(ctx, valuation_shift + k, unit, prec, None)

    # predicates and views ---------------------------------------------

    def is_zero(self) -> bool:
        return self.valuation == INFINITY

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    def norm(self) -> float:
        """The p-adic absolute value ``p**(-valuation)``."""
        if self.is_zero():
            return 0.0
        return float(Fraction(self.ctx.p) ** (-self.valuation))

    def lift(self) -> Fraction:
        """Rational value: exact if known, else the truncated expansion."""
        if self.exact is not None:
            return self.exact
        if self.is_zero():
            return Fraction(0)
        return Fraction(self.unit) * Fraction(self.ctx.p) ** self.valuation

    def to_json(self) -> dict:
        return {
            "p": self.ctx.p,
            "valuation": "inf" if self.is_zero() else int(self.valuation),
            "unit": str(self.unit),
            "precision": self.precision,
        }

    # arithmetic ---------------------------------------------------------

    def _check(self, other) -> PadicScalar:
        if isinstance(other, (int, Fraction)):
            return PadicScalar.from_fraction(other, self.ctx)
        if not isinstance(other, PadicScalar):
            return NotImplemented
        if other.ctx != self.ctx:
            raise InvalidInput("p-adic scalars from different contexts")
        return other

    def __neg__(self) -> PadicScalar:
        if self.exact is not None:
            return PadicScalar.from_fraction(-self.exact, self.ctx)
        mod = self.ctx.p**self.precision
        return PadicScalar(self.ctx, self.valuation, (-self.unit) % mod, self.precision)

    def __add__(self, other) -> PadicScalar:
        other = self._check(other)
        if other is NotImplemented:
            return other
        if self.exact is not None and other.exact is not None:
            return PadicScalar.from_fraction(self.exact + other.exact, self.ctx)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        p = self.ctx.p
        v0 = min(self.valuation, other.valuation)
        abs_prec = min(self.valuation + self.precision, other.valuation + other.precision)
        mod = p ** (abs_prec - v0)
        s = (self.unit * p ** (self.valuation - v0)
             + other.unit * p ** (other.valuation - v0)) % mod
        if s == 0:
            raise PrecisionExhausted(
                f"addition cancelled all {abs_prec - v0} known digits",
                suggested_precision=2 * self.ctx.K,
            )
        k = int_valuation(s, p)
        prec = abs_prec - v0 - k
        return PadicScalar(self.ctx, v0 + k, (s // p**k) % p**prec, prec)

    __radd__ = __add__

    def __sub__(self, other) -> PadicScalar:
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> PadicScalar:
        return (-self) + other

    def __mul__(self, other) -> PadicScalar:
        other = self._check(other)
        if other is NotImplemented:
            return other
        if self.exact is not None and other.exact is not None:
            return PadicScalar.from_fraction(self.exact * other.exact, self.ctx)
        if self.is_zero() or other.is_zero():
            return PadicScalar.zero(self.ctx)
        prec = min(self.precision, other.precision)
        unit = self.unit * other.unit % self.ctx.p**prec
        return PadicScalar(self.ctx, self.valuation + other.valuation, unit, prec)

    __rmul__ = __mul__

    def __truediv__(self, other) -> PadicScalar:
        other = self._check(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise PadicDivisionByZero("division by the zero p-adic scalar")
        if self.exact is not None and other.exact is not None:
            return PadicScalar.from_fraction(self.exact / other.exact, self.ctx)
        if self.is_zero():
            return PadicScalar.zero(self.ctx)
        prec = min(self.precision, other.precision)
        mod = self.ctx.p**prec
        unit = self.unit * pow(other.unit, -1, mod) % mod
        return PadicScalar(self.ctx, self.valuation - other.valuation, unit, prec)

    def __rtruediv__(self, other) -> PadicScalar:
        return self._check(other) / self

    def __pow__(self, e: int) -> PadicScalar:
        result = PadicScalar.from_fraction(1, self.ctx)
        base = self if e >= 0 else PadicScalar.from_fraction(1, self.ctx) / self
        for _ in range(abs(e)):
            result = result * base
        return result

    # comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        if self.exact is not None and other.exact is not None:
            return self.exact == other.exact
        if self.valuation != other.valuation:
            return False
        if self.is_zero():
            return True
        mod = self.ctx.p ** min(self.precision, other.precision)
        return (self.unit - other.unit) % mod == 0

    def __hash__(self):
        if self.exact is not None:
            return hash(self.exact)
        return hash((self.ctx, self.valuation))

    def __repr__(self) -> str:
        if self.is_zero():
            return f"PadicScalar(0, p={self.ctx.p})"
        if self.exact is not None:
            return f"PadicScalar({self.exact}, p={self.ctx.p})"
        return (f"PadicScalar({self.ctx.p}^{self.valuation}*{self.unit} "
                f"+ O({self.ctx.p}^{self.valuation + self.precision}))")


def embed_rational(num: int, den: int, ctx: PadicContext) -> PadicScalar:
    """Image of ``num/den`` in Q_p."""
    if den == 0:
        raise InvalidInput("denominator must be nonzero")
    return PadicScalar.from_fraction(Fraction(num, den), ctx)


def as_scalar(x, ctx: PadicContext) -> PadicScalar:
    if isinstance(x, PadicScalar):
        if x.ctx != ctx:
            raise InvalidInput("p-adic scalars from different contexts")
        return x
    return PadicScalar.from_fraction(Fraction(x), ctx)


class PadicPoly:
    """Polynomial over Q_p; ``coefficients[i]`` multiplies ``x**i``."""

    def __init__(self, coefficients: Iterable, ctx: PadicContext):
        coeffs = [as_scalar(c, ctx) for c in coefficients]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        if not coeffs:
            raise InvalidInput("the zero polynomial has no Newton polygon")
        self.ctx = ctx
        self.coefficients = tuple(coeffs)

    @classmethod
    def from_rationals(cls, coefficients: Sequence, ctx: PadicContext) -> PadicPoly:
        return cls([Fraction(c) for c in coefficients], ctx)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __mul__(self, other: PadicPoly) -> PadicPoly:
        out = [self.ctx.zero() for _ in range(self.degree + other.degree + 1)]
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] = out[i + j] + a * b
        return PadicPoly(out, self.ctx)

    def __call__(self, x) -> PadicScalar:
        x = as_scalar(x, self.ctx)
        acc = self.ctx.zero()
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"PadicPoly({[c.lift() for c in self.coefficients]}, p={self.ctx.p})"


@dataclass(frozen=True)
class NewtonPolygon:
    """Segments ``(slope, horizontal_length)`` with strictly increasing slopes.

    ``zero_roots`` counts the factor ``x**m`` split off before building the hull.
    """

    segments: tuple[tuple[Fraction, int], ...]
    zero_roots: int = 0

    @property
    def length(self) -> int:
        return sum(n for _, n in self.segments)


def _cross(o, a, b) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def newton_polygon(f: PadicPoly) -> NewtonPolygon:
    """Lower convex hull of ``(i, v(a_i))`` over the nonzero coefficients."""
    coeffs = f.coefficients
    zero_roots = 0
    while coeffs[zero_roots].is_zero():
        zero_roots += 1
    points = [(i - zero_roots, Fraction(c.valuation))
              for i, c in enumerate(coeffs[zero_roots:]) if not c.is_zero()]
    hull: list[tuple[int, Fraction]] = []
    for pt in points:
        # <= 0 also drops collinear middle points, keeping slopes strictly increasing
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    segments = tuple(
        (Fraction(b[1] - a[1], b[0] - a[0]), b[0] - a[0])
        for a, b in zip(hull, hull[1:])
    )
    return NewtonPolygon(segments, zero_roots)


def root_valuations(np_: NewtonPolygon) -> list[Fraction]:
    """Valuations of the nonzero roots, with multiplicity, in increasing order."""
    out = []
    for slope, length in np_.segments:
        out.extend([-slope] * length)
    return sorted(out)
