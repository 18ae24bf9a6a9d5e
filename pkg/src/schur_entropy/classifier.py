"""Structural descriptors of finite-rank locally compact abelian p-groups.

A descriptor ``(alpha, beta, gamma, delta)`` stands for
``Q_p^alpha x Z_p^beta x Z(p^inf)^gamma x E_p`` with ``E_p`` finite of
p-rank ``delta``.  Such a group has p-rank ``alpha + beta + gamma + delta``,
always has finite entropy, and has only zero-entropy endomorphisms exactly
when ``alpha = 0``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import InvalidInput
from .heisenberg import RingDescriptor
from .padic_core import is_prime


class EntropyClass(enum.Enum):
    E0 = "E0"                    # every endomorphism has entropy 0
    EFiniteOnly = "EFiniteOnly"  # all entropies finite, some positive
    Unknown = "Unknown"

    @property
    def finite(self) -> bool:
        """Membership in the finite-entropy class (E0 is contained in it)."""
        return self in (EntropyClass.E0, EntropyClass.EFiniteOnly)

    @property
    def severity(self) -> int:
        return {"E0": 0, "EFiniteOnly": 1, "Unknown": 2}[self.value]


@dataclass(frozen=True)
class GroupDescriptor:
    p: int
    alpha: int = 0
    beta: int = 0
    gamma: int = 0
    delta: int = 0
    finite_part_order: int | None = None

    def __post_init__(self):
        if not is_prime(self.p):
            raise InvalidInput(f"p must be prime (got {self.p})")
        if min(self.alpha, self.beta, self.gamma, self.delta) < 0:
            raise InvalidInput("descriptor counts must be nonnegative")
        fo = self.finite_part_order
        if fo is not None:
            if fo < 1:
                raise InvalidInput("finite part order must be positive")
            if self.delta == 0 and fo != 1:
                raise InvalidInput("a finite part of rank 0 is trivial")
            if self.delta > 0 and (fo < self.p**self.delta or not _is_power_of(fo, self.p)):
                raise InvalidInput("finite p-group of rank delta has order p^k with k >= delta")

    @property
    def counts(self) -> tuple[int, int, int, int]:
        return self.alpha, self.beta, self.gamma, self.delta

    @property
    def compact(self) -> bool:
        """Q_p and Z(p^inf) factors are non-compact; Z_p^beta x E_p is compact."""
        return self.alpha == 0 and self.gamma == 0

    def direct_sum(self, other: GroupDescriptor) -> GroupDescriptor:
        if other.p != self.p:
            raise InvalidInput("descriptors for different primes")
        order = None
        if self.finite_part_order is not None and other.finite_part_order is not None:
            order = self.finite_part_order * other.finite_part_order
        return GroupDescriptor(self.p, self.alpha + other.alpha, self.beta + other.beta,
                               self.gamma + other.gamma, self.delta + other.delta, order)

    __add__ = direct_sum

    def describe(self) -> str:
        parts = [f"{name}^{k}" for name, k in
                 (("Qp", self.alpha), ("Zp", self.beta), ("Z(p^inf)", self.gamma)) if k]
        if self.delta:
            parts.append(f"E_p(rank {self.delta})")
        return " x ".join(parts) or "trivial"

    def to_json(self) -> dict:
        return {"p": self.p, "alpha": self.alpha, "beta": self.beta, "gamma": self.gamma,
                "delta": self.delta, "finite_part_order": self.finite_part_order}


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def rank(d: GroupDescriptor) -> int:
    return d.alpha + d.beta + d.gamma + d.delta


def entropy_class(d: GroupDescriptor) -> EntropyClass:
    return EntropyClass.E0 if d.alpha == 0 else EntropyClass.EFiniteOnly


# report labels
COMPACT_FINITE = "compact-finite-entropy"   # compact central quotient with finite entropy
COMPACT_ZERO = "compact-zero-entropy"       # compact central quotient with zero entropy
NONCOMPACT_WITNESS = "noncompact-witness"   # Heisenberg witness with non-compact pieces
DEGENERATE = "degenerate"                   # abelian: trivial central quotient and derived group


@dataclass(frozen=True)
class SchurReport:
    subject: str
    central_quotient: GroupDescriptor
    derived: GroupDescriptor
    hypothesis_class: EntropyClass
    conclusion_class: EntropyClass
    theorem_instance: str
    subject_class: EntropyClass | None = None

    @property
    def central_quotient_compact(self) -> bool:
        return self.central_quotient.compact

    @property
    def derived_compact(self) -> bool:
        return self.derived.compact

    def implication_holds(self) -> bool:
        """Compact central quotient forces a compact derived group of no worse class."""
        if not self.central_quotient_compact:
            return True
        return self.derived_compact and self.conclusion_class.severity <= self.hypothesis_class.severity

    def to_json(self) -> dict:
        part = lambda d, cls: {**d.to_json(), "rank": rank(d), "compact": d.compact, "class": cls.value}
        out = {
            "subject": self.subject,
            "central_quotient": part(self.central_quotient, self.hypothesis_class),
            "derived": part(self.derived, self.conclusion_class),
            "theorem_instance": self.theorem_instance,
            "implication_holds": self.implication_holds(),
        }
        if self.subject_class is not None:
            out["subject_class"] = self.subject_class.value
        return out


def _instance_label(cq: GroupDescriptor, cq_class: EntropyClass) -> str:
    if not cq.compact:
        return NONCOMPACT_WITNESS
    return COMPACT_ZERO if cq_class is EntropyClass.E0 else COMPACT_FINITE


def schur_report_heisenberg(n: int, ring: RingDescriptor) -> SchurReport:
    """Central quotient ``R^2n`` and derived group ``Z ~ R`` of ``H_n(R)``."""
    if n < 1:
        raise InvalidInput("n must be positive")
    eps, zeta = ring.epsilon, ring.zeta
    cq = GroupDescriptor(ring.p, 2 * n * eps, 2 * n * zeta, 0, 0)
    der = GroupDescriptor(ring.p, eps, zeta, 0, 0)
    cq_class, der_class = entropy_class(cq), entropy_class(der)
    return SchurReport(
        subject=f"H_{n}({ring})",
        central_quotient=cq,
        derived=der,
        hypothesis_class=cq_class,
        conclusion_class=der_class,
        theorem_instance=_instance_label(cq, cq_class),
    )


def schur_check_abelian(d: GroupDescriptor) -> SchurReport:
    trivial = GroupDescriptor(d.p)
    return SchurReport(
        subject=d.describe(),
        central_quotient=trivial,
        derived=trivial,
        hypothesis_class=EntropyClass.E0,
        conclusion_class=EntropyClass.E0,
        theorem_instance=DEGENERATE,
        subject_class=entropy_class(d),
    )
