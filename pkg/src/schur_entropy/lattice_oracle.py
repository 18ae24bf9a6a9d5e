"""Brute-force entropy through cotrajectories of Z_p-lattices.

A lattice ``L = B Z_p^m`` in Q_p^m is stored by the columns of ``B`` in
Hermite normal form: upper triangular, diagonal ``p**d_i``, and entries
above the diagonal reduced to their p-adic expansion below ``p**d_i`` of
their row.  All entries are rationals, so every computation is exact; the
canonical form makes equal lattices compare equal.

For an invertible ``M`` and ``V = Z_p^m`` the cotrajectories
``C_n = V & M^-1 V & ... & M^-(n-1) V`` shrink, and ``[V : C_n] = p**e_n``
grows linearly with slope equal to the entropy coefficient of ``M``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .entropy_formulas import entropy_padic
from .errors import InvalidDimension, InvalidInput, NotASublattice, PrecisionExhausted, SingularMatrix
from .matrices import RationalMatrix, inverse
from .padic_core import PadicContext, rational_valuation, reduce_mod_power, split_rational

Column = tuple[Fraction, ...]


def _hermite(generators: Sequence[Sequence[Fraction]], m: int, p: int) -> tuple[Column, ...]:
    """Hermite normal form of the Z_p-span of ``generators`` (column vectors)."""
    pool = [list(map(Fraction, g)) for g in generators if any(g)]
    cols: list[list[Fraction] | None] = [None] * m
    for i in range(m - 1, -1, -1):
        best, best_v = None, math.inf
        for k, g in enumerate(pool):
            v = rational_valuation(g[i], p)
            if v < best_v:
                best, best_v = k, v
        if best is None:
            raise SingularMatrix("generators do not span a full-rank lattice")
        piv = pool.pop(best)
        for g in pool:
            if g[i]:
                f = g[i] / piv[i]
                for r in range(i + 1):
                    g[r] -= f * piv[r]
        _, unit = split_rational(piv[i], p)
        cols[i] = [x / unit for x in piv]
        pool = [g for g in pool if any(g[: i])]
    diag = [rational_valuation(cols[i][i], p) for i in range(m)]
    for j in range(m):
        cj = cols[j]
        for i in range(j - 1, -1, -1):
            x = cj[i]
            r = reduce_mod_power(x, p, diag[i])
            if r != x:
                q = (x - r) / Fraction(p) ** diag[i]
                ci = cols[i]
                for row in range(i + 1):
                    cj[row] -= q * ci[row]
    return tuple(tuple(c) for c in cols)


def _is_integral(rows, p: int) -> bool:
    return all(rational_valuation(x, p) >= 0 for r in rows for x in r)


class ZpLattice:
    """Full-rank Z_p-lattice in Q_p^m in canonical Hermite form."""

    __slots__ = ("ctx", "m", "columns")

    def __init__(self, generators: Sequence[Sequence], ctx: PadicContext):
        generators = [tuple(Fraction(x) for x in g) for g in generators]
        if not generators:
            raise InvalidDimension("a lattice needs at least one generator")
        m = len(generators[0])
        if m < 1 or any(len(g) != m for g in generators):
            raise InvalidDimension("generators must share a positive ambient dimension")
        self.ctx = ctx
        self.m = m
        self.columns = _hermite(generators, m, ctx.p)

    @classmethod
    def from_basis_rows(cls, rows: Sequence[Sequence], ctx: PadicContext) -> ZpLattice:
        """Lattice spanned by the columns of the matrix given row by row."""
        return cls(list(zip(*rows)), ctx)

    @property
    def basis(self) -> tuple[tuple[Fraction, ...], ...]:
        """Basis matrix, row-major; its columns span the lattice."""
        return tuple(zip(*self.columns))

    @property
    def diagonal_valuations(self) -> tuple[int, ...]:
        return tuple(rational_valuation(self.columns[i][i], self.ctx.p) for i in range(self.m))

    def det_valuation(self) -> int:
        return sum(self.diagonal_valuations)

    def contains_vector(self, vec: Sequence) -> bool:
        coords = _solve_upper(self.columns, [Fraction(x) for x in vec])
        return all(rational_valuation(c, self.ctx.p) >= 0 for c in coords)

    def issubset(self, other: ZpLattice) -> bool:
        return all(other.contains_vector(c) for c in self.columns)

    def dual(self) -> ZpLattice:
        """``{y : y.x in Z_p for all x in L}``, spanned by the columns of ``B^-T``."""
        inv = inverse([list(r) for r in self.basis])
        return ZpLattice(inv, self.ctx)  # rows of B^-1 are the columns of B^-T

    def __eq__(self, other):
        return (isinstance(other, ZpLattice) and self.ctx.p == other.ctx.p
                and self.columns == other.columns)

    def __hash__(self):
        return hash((self.ctx.p, self.columns))

    def __repr__(self):
        return f"ZpLattice(p={self.ctx.p}, basis={[[str(x) for x in r] for r in self.basis]})"

    def to_json(self) -> dict:
        return {"p": self.ctx.p, "basis": [[str(x) for x in r] for r in self.basis]}


def _solve_upper(columns: tuple[Column, ...], vec: list[Fraction]) -> list[Fraction]:
    m = len(columns)
    x = [Fraction(0)] * m
    rhs = list(vec)
    for i in range(m - 1, -1, -1):
        x[i] = rhs[i] / columns[i][i]
        for r in range(i + 1):
            rhs[r] -= x[i] * columns[i][r]
    return x


def standard_lattice(m: int, ctx: PadicContext, scale: int = 0) -> ZpLattice:
    """``p**scale * Z_p^m``."""
    if m < 1:
        raise InvalidDimension(f"ambient dimension must be >= 1 (got {m})")
    q = Fraction(ctx.p) ** scale
    return ZpLattice([[q if i == j else 0 for i in range(m)] for j in range(m)], ctx)


def preimage(M: RationalMatrix, L: ZpLattice) -> ZpLattice:
    """``{x : Mx in L} = M^-1 L``."""
    if M.size != L.m:
        raise InvalidInput("matrix and lattice dimensions differ")
    Minv = M.inverse()
    return ZpLattice([Minv.apply(c) for c in L.columns], L.ctx)


def image(M: RationalMatrix, L: ZpLattice) -> ZpLattice:
    if not M.is_invertible():
        raise SingularMatrix("image of a lattice under a singular map is not full rank")
    return ZpLattice([M.apply(c) for c in L.columns], L.ctx)


def lattice_sum(L1: ZpLattice, L2: ZpLattice) -> ZpLattice:
    return ZpLattice(list(L1.columns) + list(L2.columns), L1.ctx)


def intersect(L1: ZpLattice, L2: ZpLattice) -> ZpLattice:
    """Largest lattice inside both, as the dual of the sum of the duals."""
    if L1.m != L2.m or L1.ctx.p != L2.ctx.p:
        raise InvalidInput("lattices live in different ambient spaces")
    if L1 == L2:
        return L1
    out = lattice_sum(L1.dual(), L2.dual()).dual()
    if not (out.issubset(L1) and out.issubset(L2)):
        raise PrecisionExhausted("intersection failed its containment check")
    return out


@dataclass(frozen=True)
class IndexValue:
    """The index ``p**exponent``."""

    exponent: int

    def __post_init__(self):
        if self.exponent < 0:
            raise InvalidInput("index exponent must be nonnegative")


def index(L_sub: ZpLattice, L_sup: ZpLattice) -> IndexValue:
    if not L_sub.issubset(L_sup):
        raise NotASublattice("first lattice is not contained in the second")
    return IndexValue(L_sub.det_valuation() - L_sup.det_valuation())


def elementary_divisor_valuations(L_sub: ZpLattice, L_sup: ZpLattice) -> list[int]:
    """Smith-form exponents of ``L_sup`` relative to ``L_sub`` (sum = index exponent)."""
    p = L_sub.ctx.p
    sup_inv = inverse([list(r) for r in L_sup.basis])
    a = [[sum(sup_inv[i][k] * L_sub.basis[k][j] for k in range(L_sub.m))
          for j in range(L_sub.m)] for i in range(L_sub.m)]
    if not _is_integral(a, p):
        raise NotASublattice("first lattice is not contained in the second")
    out = []
    while a:
        v, i0, j0 = min((rational_valuation(x, p), i, j)
                        for i, r in enumerate(a) for j, x in enumerate(r))
        if v == math.inf:
            raise SingularMatrix("relative basis is singular")
        piv = a[i0][j0]
        rest = [i for i in range(len(a)) if i != i0]
        cols = [j for j in range(len(a)) if j != j0]
        a = [[a[i][j] - a[i][j0] * a[i0][j] / piv for j in cols] for i in rest]
        out.append(int(v))
    return out


def cotrajectories(M: RationalMatrix, n_max: int, ctx: PadicContext,
                   V: ZpLattice | None = None) -> Iterator[ZpLattice]:
    """Yield ``C_1, ..., C_{n_max}`` using ``C_n = V & M^-1 C_{n-1}``."""
    if not M.is_invertible():
        raise SingularMatrix("cotrajectories are computed for invertible matrices only")
    V = V or standard_lattice(M.size, ctx)
    C = V
    yield C
    for _ in range(n_max - 1):
        C = intersect(V, preimage(M, C))
        yield C


def cotrajectory(M: RationalMatrix, n: int, ctx: PadicContext, V: ZpLattice | None = None) -> ZpLattice:
    if n < 1:
        raise InvalidInput("n must be a positive integer")
    for C in cotrajectories(M, n, ctx, V):
        pass
    return C


@dataclass(frozen=True)
class EntropyEstimate:
    p: int
    n: tuple[int, ...]
    e: tuple[int, ...]
    estimates: tuple[float, ...]
    limit_coeff: Fraction
    agrees_with_formula: bool | None = None
    formula_coeff: Fraction | None = None

    @property
    def limit(self) -> float:
        return float(self.limit_coeff) * math.log(self.p)

    def to_json(self) -> dict:
        out = {
            "p": self.p,
            "n": list(self.n),
            "e": list(self.e),
            "estimates": list(self.estimates),
            "limit_coeff": str(self.limit_coeff),
            "agrees_with_formula": self.agrees_with_formula,
        }
        if self.formula_coeff is not None:
            out["formula_coeff"] = str(self.formula_coeff)
        return out


def entropy_estimate(M: RationalMatrix, n_max: int, ctx: PadicContext,
                     compare: bool = True) -> EntropyEstimate:
    """Index growth ``e_n`` of the cotrajectories of ``Z_p^m``.

    The limit is the last difference ``e_N - e_{N-1}``, exact once ``e_n``
    has become affine; the whole sequence is returned for inspection.
    """
    if n_max < 2:
        raise InvalidInput("n_max must be at least 2")
    V = standard_lattice(M.size, ctx)
    e = [index(C, V).exponent for C in cotrajectories(M, n_max, ctx, V)]
    ns = tuple(range(1, n_max + 1))
    log_p = math.log(ctx.p)
    limit = Fraction(e[-1] - e[-2])
    formula = entropy_padic(M, ctx).coeff if compare else None
    return EntropyEstimate(
        p=ctx.p,
        n=ns,
        e=tuple(e),
        estimates=tuple(en * log_p / n for n, en in zip(ns, e)),
        limit_coeff=limit,
        agrees_with_formula=None if formula is None else limit == formula,
        formula_coeff=formula,
    )
