"""Closed-form entropies of linear endomorphisms given by rational matrices.

Over R^m the entropy is the sum of ``log|lambda|`` over eigenvalues outside
the closed unit disc; over Q_p^m the same sum is taken with the p-adic
absolute value, which only needs the valuations of the eigenvalues and
therefore the Newton polygon of the characteristic polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import InvalidInput, NotAnEndomorphism, RootFindingFailure, SingularMatrix
from .matrices import Poly, RationalMatrix, char_poly, squarefree_decomposition
from .padic_core import (PadicContext, PadicPoly, newton_polygon, rational_valuation,
                         root_valuations)

BOUNDARY_TOL = 1e-9
RESIDUAL_TOL = 1e-12
MAX_ITERATIONS = 500


@dataclass(frozen=True)
class EntropyValue:
    """Entropy as ``coeff * log p`` (exact) or as a float with an error bound (real)."""

    kind: str
    coeff: Fraction | None = None
    p: int | None = None
    real_value: float | None = None
    error: float = 0.0
    warnings: tuple[str, ...] = ()
    details: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        if self.kind not in ("exact-p-adic", "real"):
            raise InvalidInput(f"unknown entropy kind {self.kind!r}")
        if self.kind == "exact-p-adic" and (self.coeff is None or self.coeff < 0):
            raise InvalidInput("exact entropy needs a nonnegative coefficient")
        if self.kind == "real" and (self.real_value is None or self.real_value < 0):
            raise InvalidInput("real entropy must be nonnegative")
        if self.error < 0:
            raise InvalidInput("error bound must be nonnegative")

    @classmethod
    def exact(cls, coeff, p: int, **details) -> EntropyValue:
        return cls("exact-p-adic", coeff=Fraction(coeff), p=p, details=details)

    @property
    def is_exact(self) -> bool:
        return self.kind == "exact-p-adic"

    @property
    def value(self) -> float:
        if self.is_exact:
            return float(self.coeff) * math.log(self.p)
        return self.real_value

    def __add__(self, other: EntropyValue) -> EntropyValue:
        if self.is_exact and other.is_exact:
            if self.p != other.p:
                raise InvalidInput("cannot add entropies for different primes")
            return EntropyValue.exact(self.coeff + other.coeff, self.p)
        return EntropyValue("real", real_value=self.value + other.value,
                            error=self.error + other.error,
                            warnings=self.warnings + other.warnings)

    def to_json(self) -> dict:
        if self.is_exact:
            return {"kind": self.kind, "p": self.p, "coeff": str(self.coeff),
                    "value_log_p": True, "value": self.value}
        return {"kind": self.kind, "value": self.real_value, "error": self.error,
                "warnings": list(self.warnings)}


@dataclass(frozen=True)
class MixedShape:
    """``Q_p^epsilon x Z_p^zeta``."""

    p: int
    epsilon: int
    zeta: int

    def __post_init__(self):
        if self.epsilon < 0 or self.zeta < 0 or self.epsilon + self.zeta < 1:
            raise InvalidInput("need epsilon, zeta >= 0 and epsilon + zeta >= 1")

    @property
    def dim(self) -> int:
        return self.epsilon + self.zeta


# real case --------------------------------------------------------------------

def _aberth(coeffs: Poly) -> tuple[np.ndarray, np.ndarray]:
    """Simultaneous root iteration for a squarefree polynomial; returns roots and error radii."""
    c = np.array([complex(x) for x in coeffs[::-1]])  # highest degree first
    c = c / c[0]
    deg = len(c) - 1
    if deg == 1:
        return np.array([-c[1]]), np.zeros(1)
    dc = np.polyder(c)
    absc = np.abs(c)
    radius = 1 + float(np.max(np.abs(c[1:])))
    z = radius * np.exp(2j * np.pi * (np.arange(deg) + 0.25) / deg)
    for _ in range(MAX_ITERATIONS):
        w = np.polyval(c, z) / np.polyval(dc, z)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        s = (1.0 / diff).sum(axis=1) - 1.0  # drop the diagonal term
        corr = w / (1 - w * s)
        z = z - corr
        if np.all(np.abs(corr) <= 1e-15 * np.maximum(1.0, np.abs(z))):
            break
    for _ in range(2):
        z = z - np.polyval(c, z) / np.polyval(dc, z)
    scale = np.polyval(absc, np.abs(z))
    residual = np.abs(np.polyval(c, z)) / scale
    if not np.all(residual <= RESIDUAL_TOL):
        raise RootFindingFailure(f"root iteration did not converge (residual {residual.max():.3g})")
    newton = np.abs(np.polyval(c, z) / np.polyval(dc, z))
    err = deg * newton + 4 * np.finfo(float).eps * np.maximum(1.0, np.abs(z))
    return z, err


def eigenvalues(M: RationalMatrix) -> list[tuple[complex, int, float]]:
    """Numerical eigenvalues ``(lambda, multiplicity, error radius)``.

    Multiplicities come from an exact squarefree decomposition, so the
    numerical iteration only ever sees simple roots.
    """
    out = []
    for g, mult in squarefree_decomposition(char_poly(M)):
        roots, errs = _aberth(g)
        out.extend((complex(r), mult, float(e)) for r, e in zip(roots, errs))
    return out


def entropy_real(M: RationalMatrix, tol: float = BOUNDARY_TOL) -> EntropyValue:
    total = 0.0
    error = 0.0
    warnings = []
    for lam, mult, err in eigenvalues(M):
        a = abs(lam)
        if abs(a - 1) <= tol:
            warnings.append(f"eigenvalue {lam:.12g} lies within {tol:g} of the unit circle; excluded")
        elif a > 1:
            total += mult * math.log(a)
            error += mult * err / (a - err) if a > err else math.inf
    return EntropyValue("real", real_value=total, error=error, warnings=tuple(warnings))


# p-adic case --------------------------------------------------------------------

def padic_root_valuations(M: RationalMatrix, ctx: PadicContext) -> tuple[list[Fraction], int]:
    poly = PadicPoly.from_rationals(char_poly(M), ctx)
    np_ = newton_polygon(poly)
    return root_valuations(np_), np_.zero_roots


def entropy_padic(M: RationalMatrix, ctx: PadicContext) -> EntropyValue:
    if not M.is_invertible():
        raise SingularMatrix("p-adic entropy requires an invertible matrix")
    vals, _ = padic_root_valuations(M, ctx)
    coeff = sum((-v for v in vals if v < 0), Fraction(0))
    return EntropyValue.exact(coeff, ctx.p, root_valuations=[str(v) for v in vals])


def validate_mixed(M: RationalMatrix, shape: MixedShape) -> None:
    """Raise NotAnEndomorphism unless ``M`` defines a continuous endomorphism.

    Coordinates are ordered ``(Q_p part, Z_p part)`` and ``M`` acts on
    column vectors.  Continuity forces the Q_p -> Z_p block to vanish and the
    Z_p -> Z_p block to be integral.
    """
    if M.size != shape.dim:
        raise InvalidInput(f"matrix size {M.size} does not match shape dimension {shape.dim}")
    e, p = shape.epsilon, shape.p
    qp, zp = range(0, e), range(e, shape.dim)
    if any(x != 0 for row in M.block(zp, qp) for x in row):
        raise NotAnEndomorphism("the Q_p -> Z_p block must be zero")
    if any(rational_valuation(x, p) < 0 for row in M.block(zp, zp) for x in row):
        raise NotAnEndomorphism("the Z_p -> Z_p block must have entries of valuation >= 0")


def entropy_mixed(M: RationalMatrix, shape: MixedShape, ctx: PadicContext | None = None) -> EntropyValue:
    """Entropy on ``Q_p^eps x Z_p^zeta``: the Q_p block carries everything.

    ``N = Q_p^eps x 0`` is invariant, and the quotient ``Z_p^zeta`` has only
    zero-entropy endomorphisms, so ``h = h(M|_N) + 0``.
    """
    validate_mixed(M, shape)
    ctx = ctx or PadicContext(shape.p)
    if ctx.p != shape.p:
        raise InvalidInput("context prime differs from shape prime")
    if shape.epsilon == 0:
        return EntropyValue.exact(0, shape.p, justification="Z_p^zeta only: every endomorphism has entropy 0")
    h = entropy_padic(M.submatrix(range(shape.epsilon)), ctx)
    return EntropyValue.exact(
        h.coeff, shape.p,
        justification="h = h(restriction to Q_p^eps x 0) + h(induced map on Z_p^zeta) = h(restriction) + 0",
        restriction_coeff=str(h.coeff), quotient_coeff="0",
    )


@dataclass(frozen=True)
class AdditionReport:
    h_total: EntropyValue
    h_restriction: EntropyValue
    h_quotient: EntropyValue
    invariant_block: int
    equal: bool
    monotone: bool

    def to_json(self) -> dict:
        return {
            "p": self.h_total.p,
            "h_total": str(self.h_total.coeff),
            "h_restriction": str(self.h_restriction.coeff),
            "h_quotient": str(self.h_quotient.coeff),
            "invariant_block": self.invariant_block,
            "equal": self.equal,
            "monotone": self.monotone,
        }


def addition_check(M: RationalMatrix, split: tuple[int, int], ctx: PadicContext) -> AdditionReport:
    """Compare ``h(M)`` with ``h(M|_N) + h(M on quotient)`` for a block-triangular ``M``.

    With column vectors, the first block spans an invariant subspace when the
    lower-left block vanishes; otherwise the second block must be invariant.
    """
    m1, m2 = split
    if m1 < 1 or m2 < 1 or m1 + m2 != M.size:
        raise InvalidInput(f"split {split} does not partition a {M.size}x{M.size} matrix")
    first, second = range(0, m1), range(m1, m1 + m2)
    if all(x == 0 for row in M.block(second, first) for x in row):
        inv, quo, invariant_block = first, second, 0
    elif all(x == 0 for row in M.block(first, second) for x in row):
        inv, quo, invariant_block = second, first, 1
    else:
        raise InvalidInput("matrix is not block triangular for the given split")
    total = entropy_padic(M, ctx)
    restriction = entropy_padic(M.submatrix(inv), ctx)
    quotient = entropy_padic(M.submatrix(quo), ctx)
    return AdditionReport(
        h_total=total,
        h_restriction=restriction,
        h_quotient=quotient,
        invariant_block=invariant_block,
        equal=total.coeff == restriction.coeff + quotient.coeff,
        monotone=restriction.coeff <= total.coeff and quotient.coeff <= total.coeff,
    )
