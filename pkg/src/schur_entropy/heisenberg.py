"""Heisenberg groups H_n(R) over R = Q_p^eps x Z_p^zeta.

``M(a, b, c)`` is the unitriangular matrix with first row ``(1, a, c)``,
identity block in the middle and last column ``(c, b^T, 1)``; the product is
``M(a,b,c) M(u,v,w) = M(a+u, b+v, c+w+a.v)``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

import numpy as np

from .entropy_formulas import EntropyValue, MixedShape, entropy_mixed
from .errors import InvalidEndo, InvalidInput, NotAnEndomorphism, RingMismatch
from .matrices import RationalMatrix, parse_rational
from .padic_core import DEFAULT_PRECISION, PadicContext, PadicScalar, rational_valuation


@dataclass(frozen=True)
class RingDescriptor:
    p: int
    epsilon: int
    zeta: int
    K: int = DEFAULT_PRECISION

    def __post_init__(self):
        if self.epsilon < 0 or self.zeta < 0 or self.epsilon + self.zeta < 1:
            raise InvalidInput("ring needs epsilon, zeta >= 0 with epsilon + zeta >= 1")

    @cached_property
    def ctx(self) -> PadicContext:
        return PadicContext(self.p, self.K)

    @property
    def rank(self) -> int:
        return self.epsilon + self.zeta

    @property
    def factors(self) -> tuple[str, ...]:
        return ("Qp",) * self.epsilon + ("Zp",) * self.zeta

    def factor_ring(self, k: int) -> RingDescriptor:
        if self.factors[k] == "Qp":
            return RingDescriptor(self.p, 1, 0, self.K)
        return RingDescriptor(self.p, 0, 1, self.K)

    def __str__(self):
        parts = []
        if self.epsilon:
            parts.append("Qp" if self.epsilon == 1 else f"Qp^{self.epsilon}")
        if self.zeta:
            parts.append("Zp" if self.zeta == 1 else f"Zp^{self.zeta}")
        return " x ".join(parts)

    @classmethod
    def parse(cls, text: str, p: int, K: int = DEFAULT_PRECISION) -> RingDescriptor:
        """Parse ``"Qp^e x Zp^z"``; either factor may be omitted, exponents default to 1."""
        eps = zeta = 0
        for part in text.lower().replace("*", "x").split("x"):
            part = part.strip()
            if not part:
                raise InvalidInput(f"malformed ring {text!r}")
            m = re.fullmatch(r"(qp|zp)(?:\^(\d+))?", part)
            if not m:
                raise InvalidInput(f"malformed ring factor {part!r}")
            k = int(m.group(2) or 1)
            if m.group(1) == "qp":
                eps += k
            else:
                zeta += k
        return cls(p, eps, zeta, K)


class RingElement:
    """Componentwise element of R; Z_p components have valuation >= 0."""

    __slots__ = ("ring", "components")

    def __init__(self, ring: RingDescriptor, components: Sequence):
        ctx = ring.ctx
        comps = tuple(c if isinstance(c, PadicScalar) else PadicScalar.from_fraction(Fraction(c), ctx)
                      for c in components)
        if len(comps) != ring.rank:
            raise InvalidInput(f"ring element needs {ring.rank} components, got {len(comps)}")
        for kind, c in zip(ring.factors, comps):
            if kind == "Zp" and c.valuation < 0:
                raise InvalidInput(f"component {c.lift()} is not in Z_p")
        self.ring = ring
        self.components = comps

    @classmethod
    def zero(cls, ring: RingDescriptor) -> RingElement:
        return cls(ring, [0] * ring.rank)

    @classmethod
    def scalar(cls, ring: RingDescriptor, x) -> RingElement:
        return cls(ring, [x] * ring.rank)

    @classmethod
    def unit_vector(cls, ring: RingDescriptor, k: int) -> RingElement:
        return cls(ring, [int(i == k) for i in range(ring.rank)])

    def _same(self, other: RingElement):
        if other.ring != self.ring:
            raise RingMismatch(f"ring {other.ring} differs from {self.ring}")

    def __add__(self, other: RingElement) -> RingElement:
        self._same(other)
        return RingElement(self.ring, [x + y for x, y in zip(self.components, other.components)])

    def __sub__(self, other: RingElement) -> RingElement:
        self._same(other)
        return RingElement(self.ring, [x - y for x, y in zip(self.components, other.components)])

    def __neg__(self) -> RingElement:
        return RingElement(self.ring, [-x for x in self.components])

    def __mul__(self, other) -> RingElement:
        if isinstance(other, RingElement):
            self._same(other)
            return RingElement(self.ring, [x * y for x, y in zip(self.components, other.components)])
        s = Fraction(other)
        return RingElement(self.ring, [x * s for x in self.components])

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def __eq__(self, other):
        return (isinstance(other, RingElement) and self.ring == other.ring
                and self.components == other.components)

    def __hash__(self):
        return hash(self.components)

    def to_text(self) -> str:
        vals = [str(c.lift()) for c in self.components]
        return vals[0] if len(vals) == 1 else "[" + ", ".join(vals) + "]"

    def __repr__(self):
        return self.to_text()


def dot(a: Sequence[RingElement], b: Sequence[RingElement], ring: RingDescriptor) -> RingElement:
    acc = RingElement.zero(ring)
    for x, y in zip(a, b):
        acc = acc + x * y
    return acc


class HeisenbergElement:
    __slots__ = ("ring", "n", "a", "b", "c")

    def __init__(self, ring: RingDescriptor, a: Sequence, b: Sequence, c):
        if len(a) != len(b) or len(a) < 1:
            raise InvalidInput("a and b must have the same positive length n")
        coerce = (lambda x: x if isinstance(x, RingElement) else
                  RingElement(ring, x if isinstance(x, (list, tuple)) else [x] * ring.rank))
        self.ring = ring
        self.n = len(a)
        self.a = tuple(coerce(x) for x in a)
        self.b = tuple(coerce(x) for x in b)
        self.c = coerce(c)
        for x in self.a + self.b + (self.c,):
            if x.ring != ring:
                raise RingMismatch("entries from a different ring")

    @classmethod
    def identity(cls, n: int, ring: RingDescriptor) -> HeisenbergElement:
        z = RingElement.zero(ring)
        return cls(ring, [z] * n, [z] * n, z)

    @classmethod
    def from_rationals(cls, ring: RingDescriptor, a, b, c) -> HeisenbergElement:
        """Scalars are broadcast to every ring component; lists give components."""
        return cls(ring, list(a), list(b), c)

    def is_central(self) -> bool:
        return all(x.is_zero() for x in self.a + self.b)

    def is_identity(self) -> bool:
        return self.is_central() and self.c.is_zero()

    def __eq__(self, other):
        return (isinstance(other, HeisenbergElement) and self.ring == other.ring
                and self.a == other.a and self.b == other.b and self.c == other.c)

    def __hash__(self):
        return hash((self.a, self.b, self.c))

    def __mul__(self, other: HeisenbergElement) -> HeisenbergElement:
        return hmul(self, other)

    def to_text(self) -> str:
        return (f"a=({', '.join(x.to_text() for x in self.a)}); "
                f"b=({', '.join(x.to_text() for x in self.b)}); c={self.c.to_text()}")

    def to_json(self) -> dict:
        comp = lambda x: [str(c.lift()) for c in x.components]
        return {"ring": str(self.ring), "p": self.ring.p, "n": self.n,
                "a": [comp(x) for x in self.a], "b": [comp(x) for x in self.b], "c": comp(self.c)}

    def __repr__(self):
        return f"M({self.to_text()})"

    @classmethod
    def parse(cls, text: str, ring: RingDescriptor) -> HeisenbergElement:
        """Parse ``"a=(...); b=(...); c=..."``; ring elements are ``r`` or ``[r1, r2, ...]``."""
        m = re.fullmatch(r"\s*a\s*=\s*\((.*)\)\s*;\s*b\s*=\s*\((.*)\)\s*;\s*c\s*=\s*(.+?)\s*", text)
        if not m:
            raise InvalidInput(f"malformed Heisenberg element {text!r}")
        a = [_parse_ring_element(t, ring) for t in _split_top(m.group(1))]
        b = [_parse_ring_element(t, ring) for t in _split_top(m.group(2))]
        return cls(ring, a, b, _parse_ring_element(m.group(3), ring))


def _split_top(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    if any(not p.strip() for p in parts):
        raise InvalidInput(f"empty entry in {text!r}")
    return parts


def _parse_ring_element(text: str, ring: RingDescriptor) -> RingElement:
    text = text.strip()
    if text.startswith("[") and text.endswith("]"):
        vals = [parse_rational(t) for t in text[1:-1].split(",")]
    else:
        vals = [parse_rational(text)] * ring.rank
    return RingElement(ring, vals)


def _same_group(g: HeisenbergElement, h: HeisenbergElement):
    if g.ring != h.ring:
        raise RingMismatch(f"rings differ: {g.ring} vs {h.ring}")
    if g.n != h.n:
        raise RingMismatch(f"dimensions differ: {g.n} vs {h.n}")


def hmul(g: HeisenbergElement, h: HeisenbergElement) -> HeisenbergElement:
    _same_group(g, h)
    ring = g.ring
    return HeisenbergElement(
        ring,
        [x + y for x, y in zip(g.a, h.a)],
        [x + y for x, y in zip(g.b, h.b)],
        g.c + h.c + dot(g.a, h.b, ring),
    )


def hinv(g: HeisenbergElement) -> HeisenbergElement:
    return HeisenbergElement(g.ring, [-x for x in g.a], [-x for x in g.b],
                             -g.c + dot(g.a, g.b, g.ring))


def hcomm(g: HeisenbergElement, h: HeisenbergElement) -> HeisenbergElement:
    """``g^-1 h^-1 g h = M(0, 0, a.v - u.b)`` for ``g = M(a,b,c)``, ``h = M(u,v,w)``."""
    _same_group(g, h)
    ring = g.ring
    z = RingElement.zero(ring)
    return HeisenbergElement(ring, [z] * g.n, [z] * g.n,
                             dot(g.a, h.b, ring) - dot(h.a, g.b, ring))


def hpow(g: HeisenbergElement, k: int) -> HeisenbergElement:
    """``g**k`` by repeated multiplication (negative ``k`` via the inverse)."""
    base = g if k >= 0 else hinv(g)
    out = HeisenbergElement.identity(g.n, g.ring)
    for _ in range(abs(k)):
        out = hmul(out, base)
    return out


def hpow_p(g: HeisenbergElement) -> HeisenbergElement:
    """Closed form of ``g**p``: ``M(pa, pb, pc + p(p-1)/2 a.b)``."""
    p = g.ring.p
    tri = p * (p - 1) // 2
    return HeisenbergElement(g.ring, [x * p for x in g.a], [x * p for x in g.b],
                             g.c * p + dot(g.a, g.b, g.ring) * tri)


def split_element(g: HeisenbergElement) -> list[HeisenbergElement]:
    """Project to ``H_n(Q_p)^eps x H_n(Z_p)^zeta``, one element per ring factor."""
    out = []
    for k in range(g.ring.rank):
        sub = g.ring.factor_ring(k)
        pick = lambda x: RingElement(sub, [x.components[k]])
        out.append(HeisenbergElement(sub, [pick(x) for x in g.a], [pick(x) for x in g.b], pick(g.c)))
    return out


def assemble(parts: Sequence[HeisenbergElement], ring: RingDescriptor) -> HeisenbergElement:
    """Inverse of :func:`split_element`."""
    if len(parts) != ring.rank:
        raise InvalidInput("one component element per ring factor is required")
    n = parts[0].n
    for k, part in enumerate(parts):
        if part.ring != ring.factor_ring(k) or part.n != n:
            raise RingMismatch(f"component {k} lives in the wrong group")
    glue = lambda xs: RingElement(ring, [x.components[0] for x in xs])
    return HeisenbergElement(
        ring,
        [glue([q.a[i] for q in parts]) for i in range(n)],
        [glue([q.b[i] for q in parts]) for i in range(n)],
        glue([q.c for q in parts]),
    )


# endomorphisms --------------------------------------------------------------

@dataclass(frozen=True)
class HeisenbergEndo:
    """``M(a, b, c) -> M(aA, bB, s c)`` with rational ``A``, ``B``, ``s``.

    This is a homomorphism exactly when ``A B^T = s I``.
    """

    A: RationalMatrix
    B: RationalMatrix
    s: Fraction

    def __post_init__(self):
        object.__setattr__(self, "s", Fraction(self.s))
        if self.A.size != self.B.size:
            raise InvalidInput("A and B must have the same size")

    @property
    def n(self) -> int:
        return self.A.size

    @classmethod
    def identity(cls, n: int) -> HeisenbergEndo:
        return cls(RationalMatrix.identity(n), RationalMatrix.identity(n), Fraction(1))


def check_endo(psi: HeisenbergEndo, ring: RingDescriptor | None = None) -> None:
    if psi.A @ psi.B.transpose() != RationalMatrix.identity(psi.n) * psi.s:
        raise InvalidEndo("A B^T must equal s I")
    if ring is not None and ring.zeta > 0:
        p = ring.p
        if any(rational_valuation(x, p) < 0
               for x in list(psi.A.entries()) + list(psi.B.entries()) + [psi.s]):
            raise InvalidEndo("A, B and s must be p-integral to preserve the Z_p factors")


def endo_validate(psi: HeisenbergEndo, ring: RingDescriptor | None = None) -> bool:
    try:
        check_endo(psi, ring)
    except InvalidEndo:
        return False
    return True


def _row_times(vec: Sequence[RingElement], A: RationalMatrix, ring: RingDescriptor) -> list[RingElement]:
    out = []
    for j in range(A.size):
        acc = RingElement.zero(ring)
        for i, x in enumerate(vec):
            if A[i, j]:
                acc = acc + x * A[i, j]
        out.append(acc)
    return out


def endo_apply(psi: HeisenbergEndo, g: HeisenbergElement) -> HeisenbergElement:
    check_endo(psi, g.ring)
    if psi.n != g.n:
        raise InvalidInput("endomorphism and element have different n")
    return HeisenbergElement(g.ring, _row_times(g.a, psi.A, g.ring),
                             _row_times(g.b, psi.B, g.ring), g.c * psi.s)


def endo_entropy(psi: HeisenbergEndo, ring: RingDescriptor) -> EntropyValue:
    """Entropy via the centre ``Z = [H, H] ~ R`` and the abelianisation ``R^2n``.

    The group is totally disconnected, so ``h(psi) = h(psi|_Z) + h(psi on H/Z)``.
    Both pieces are linear maps of ``Q_p^* x Z_p^*`` handled by ``entropy_mixed``.
    """
    check_endo(psi, ring)
    ctx = ring.ctx
    centre = RationalMatrix.identity(ring.rank) * psi.s
    h_centre = entropy_mixed(centre, MixedShape(ring.p, ring.epsilon, ring.zeta), ctx)
    # row-vector action a -> aA is the column action A^T
    D = RationalMatrix.block_diag(psi.A.transpose(), psi.B.transpose())
    quotient = RationalMatrix.block_diag(*([D] * ring.rank))
    try:
        h_quot = entropy_mixed(quotient, MixedShape(ring.p, 2 * psi.n * ring.epsilon,
                                                    2 * psi.n * ring.zeta), ctx)
    except NotAnEndomorphism as exc:  # pragma: no cover - excluded by check_endo
        raise InvalidEndo(str(exc)) from exc
    total = h_centre.coeff + h_quot.coeff
    return EntropyValue.exact(total, ring.p, centre_coeff=str(h_centre.coeff),
                              abelianisation_coeff=str(h_quot.coeff))


# generators and Frattini quotient --------------------------------------------

def generators(n: int, ring: RingDescriptor) -> list[HeisenbergElement]:
    """``M(r e_k, 0, 0)`` and ``M(0, r e_k, 0)`` for ``r`` the unit of each ring factor.

    For a Z_p factor these generate ``H_n(Z_p)`` topologically.  Q_p is not
    topologically finitely generated; there the set generates the compact open
    subgroup ``H_n(Z_p)``, the closed subgroup realising the p-rank.
    """
    if n < 1:
        raise InvalidInput("n must be positive")
    z = RingElement.zero(ring)
    out = []
    for k in range(ring.rank):
        r = RingElement.unit_vector(ring, k)
        for i in range(n):
            e = [r if j == i else z for j in range(n)]
            out.append(HeisenbergElement(ring, e, [z] * n, z))
            out.append(HeisenbergElement(ring, [z] * n, e, z))
    return out


class TruncatedHeisenberg:
    """``H_n(Z/p^K)`` with elements as integer rows ``(a_1..a_n, b_1..b_n, c)``.

    All operations are vectorised over the leading axis.
    """

    def __init__(self, n: int, p: int, K: int = 2):
        self.n, self.p, self.K = n, p, K
        self.q = p**K
        self.width = 2 * n + 1
        if self.q ** self.width >= 2**62:
            raise InvalidInput("truncated group too large to encode")
        self._radix = self.q ** np.arange(self.width, dtype=np.int64)

    @property
    def order(self) -> int:
        return self.q**self.width

    def identity(self, count: int = 1) -> np.ndarray:
        return np.zeros((count, self.width), dtype=np.int64)

    def mul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        n, q = self.n, self.q
        out = (x + y) % q
        out[..., -1] = (x[..., -1] + y[..., -1] + (x[..., :n] * y[..., n:2 * n]).sum(-1)) % q
        return out

    def inv(self, x: np.ndarray) -> np.ndarray:
        n, q = self.n, self.q
        out = (-x) % q
        out[..., -1] = (-x[..., -1] + (x[..., :n] * x[..., n:2 * n]).sum(-1)) % q
        return out

    def power(self, x: np.ndarray, k: int) -> np.ndarray:
        out = self.identity(len(x))
        for _ in range(k):
            out = self.mul(out, x)
        return out

    def comm(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))

    def encode(self, x: np.ndarray) -> np.ndarray:
        return x @ self._radix

    def decode(self, codes: np.ndarray) -> np.ndarray:
        codes = np.asarray(codes, dtype=np.int64)
        return (codes[:, None] // self._radix) % self.q

    def all_elements(self) -> np.ndarray:
        return self.decode(np.arange(self.order, dtype=np.int64))

    def generators(self) -> np.ndarray:
        g = np.zeros((2 * self.n, self.width), dtype=np.int64)
        for i in range(2 * self.n):
            g[i, i] = 1
        return g

    def closure(self, gens: np.ndarray) -> np.ndarray:
        """Sorted codes of the subgroup generated by ``gens`` (finite group: products suffice)."""
        gens = gens[self.encode(gens) != 0]
        seen = np.array([0], dtype=np.int64)
        frontier = self.identity()
        while len(frontier):
            prods = self.mul(np.repeat(frontier, len(gens), axis=0), np.tile(gens, (len(frontier), 1)))
            codes = np.unique(self.encode(prods))
            new = np.setdiff1d(codes, seen, assume_unique=True)
            seen = np.union1d(seen, new)
            frontier = self.decode(new)
        return seen


def _member(codes: np.ndarray, sorted_codes: np.ndarray) -> np.ndarray:
    idx = np.minimum(np.searchsorted(sorted_codes, codes), len(sorted_codes) - 1)
    return sorted_codes[idx] == codes


@dataclass
class FrattiniQuotient:
    """Concrete ``G / G^p[G,G]`` for ``G = H_n(Z/p^K)``."""

    n: int
    p: int
    K: int
    group_order: int
    frattini_order: int
    cosets: int
    rank: int
    elementary_abelian: bool
    exhaustive: bool
    coset_representatives: np.ndarray = field(repr=False)


def frattini_quotient(n: int, p: int, K: int = 2, exhaustive: bool | None = None,
                      exhaustive_limit: int = 20000) -> FrattiniQuotient:
    """Build ``Phi = G^p [G,G]`` and enumerate its cosets by breadth-first search.

    With ``exhaustive`` every p-th power and every commutator of the whole
    group enters the generating set of ``Phi``.  Otherwise ``Phi`` is generated
    by the p-th powers and pairwise commutators of the generators, and is then
    checked to be normal with ``G/Phi`` abelian of exponent p, which forces
    equality with ``G^p[G,G]``.
    """
    G = TruncatedHeisenberg(n, p, K)
    gens = G.generators()
    if exhaustive is None:
        exhaustive = G.order <= exhaustive_limit
    if exhaustive:
        elems = G.all_elements()
        pieces = [G.power(elems, p)]
        if G.order ** 2 <= 5 * 10**7:
            left = np.repeat(elems, G.order, axis=0)
            right = np.tile(elems, (G.order, 1))
        else:
            left = np.repeat(elems, len(gens), axis=0)
            right = np.tile(gens, (G.order, 1))
        pieces.append(G.comm(left, right))
        phi_gens = G.decode(np.unique(G.encode(np.concatenate(pieces))))
    else:
        k = len(gens)
        ii, jj = np.triu_indices(k, 1)
        phi_gens = np.concatenate([G.power(gens, p), G.comm(gens[ii], gens[jj])])
    phi = G.closure(phi_gens)

    phi_elems = G.decode(phi)
    normal = all(
        _member(G.encode(G.mul(G.mul(np.repeat(g[None], len(phi_elems), 0), phi_elems),
                                G.inv(g[None]))), phi).all()
        for g in gens
    )
    commutators_in = _member(G.encode(G.comm(np.repeat(gens, len(gens), 0),
                                             np.tile(gens, (len(gens), 1)))), phi).all()
    powers_in = _member(G.encode(G.power(gens, p)), phi).all()

    reps = G.identity()
    frontier = G.identity()
    while len(frontier):
        found = []
        for x in frontier:
            for g in gens:
                cand = G.mul(x[None], g[None])
                test = G.mul(G.inv(reps), np.repeat(cand, len(reps), 0))
                if not _member(G.encode(test), phi).any():
                    reps = np.concatenate([reps, cand])
                    found.append(cand[0])
        frontier = np.array(found, dtype=np.int64).reshape(-1, G.width)
    cosets = len(reps)
    if cosets * len(phi) != G.order:
        raise ArithmeticError("coset enumeration does not match Lagrange's theorem")
    elementary = bool(normal and commutators_in and powers_in)
    rank = round(math.log(cosets, p))
    if p**rank != cosets:
        raise ArithmeticError("quotient order is not a power of p")
    return FrattiniQuotient(n, p, K, G.order, len(phi), cosets, rank, elementary,
                            exhaustive, reps)


@dataclass(frozen=True)
class FrattiniRankReport:
    n: int
    ring: RingDescriptor
    rank: int
    per_factor: tuple[tuple[str, int, str], ...]

    def to_json(self) -> dict:
        return {
            "n": self.n, "ring": str(self.ring), "p": self.ring.p, "rank": self.rank,
            "per_factor": [{"factor": f, "rank": r, "method": m} for f, r, m in self.per_factor],
        }


def frattini_rank_report(n: int, ring: RingDescriptor, K: int = 2,
                         concrete_limit: int = 2 * 10**6) -> FrattiniRankReport:
    """p-rank of ``H_n(R)`` as the sum of the Frattini-quotient ranks of its factors.

    Z_p factors use the concrete quotient of ``H_n(Z/p^K)`` when its Frattini
    subgroup has at most ``concrete_limit`` elements.  Q_p factors use the
    rule ``Frat >= Z`` with quotient ``Q_p^2n`` of rank ``2n``.
    """
    if n < 1:
        raise InvalidInput("n must be positive")
    per = []
    zp_result = None
    if ring.zeta:
        frat_size = ring.p ** (K * (2 * n + 1) - 2 * n)
        if frat_size <= concrete_limit and ring.p ** (K * (2 * n + 1)) < 2**62:
            fq = frattini_quotient(n, ring.p, K)
            if not fq.elementary_abelian:
                raise ArithmeticError("Frattini quotient is not elementary abelian")
            zp_result = (fq.rank, f"coset enumeration in H_{n}(Z/{ring.p}^{K})")
        else:
            zp_result = (2 * n, "symbolic (group too large to enumerate)")
    for kind in ring.factors:
        if kind == "Qp":
            per.append(("Qp", 2 * n, "symbolic: Frat contains the centre, quotient Q_p^2n"))
        else:
            per.append(("Zp", zp_result[0], zp_result[1]))
    return FrattiniRankReport(n, ring, sum(r for _, r, _ in per), tuple(per))


def frattini_rank(n: int, ring: RingDescriptor, K: int = 2) -> int:
    return frattini_rank_report(n, ring, K).rank


def rank_formula(n: int, ring: RingDescriptor) -> int:
    return 2 * n * ring.rank
