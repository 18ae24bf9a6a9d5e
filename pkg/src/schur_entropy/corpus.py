"""Random rational matrices with controlled p-adic valuations, and the bundled corpus."""

from __future__ import annotations

import json
import random
from fractions import Fraction
from importlib import resources

from .matrices import RationalMatrix

CORPUS_SEED = 20240601
CORPUS_SIZE = 50


def random_unit(rng: random.Random, p: int, bound: int = 30) -> Fraction:
    """Random p-adic unit ``+-a/b`` with ``a, b`` small and prime to ``p``."""
    a = rng.choice([x for x in range(1, bound) if x % p])
    b = rng.choice([x for x in range(1, 10) if x % p])
    return Fraction(rng.choice((1, -1)) * a, b)


def random_entry(rng: random.Random, p: int, vmin: int = -3, vmax: int = 3,
                 zero_rate: float = 0.2) -> Fraction:
    if rng.random() < zero_rate:
        return Fraction(0)
    return Fraction(p) ** rng.randint(vmin, vmax) * random_unit(rng, p)


def random_invertible(rng: random.Random, p: int, m: int, vmin: int = -3, vmax: int = 3) -> RationalMatrix:
    while True:
        M = RationalMatrix([[random_entry(rng, p, vmin, vmax) for _ in range(m)] for _ in range(m)])
        if M.is_invertible():
            return M


def random_integral(rng: random.Random, p: int, m: int, invertible: bool = True) -> RationalMatrix:
    """Entries of valuation >= 0 (not necessarily invertible over Z_p)."""
    while True:
        M = RationalMatrix([[random_entry(rng, p, 0, 3) for _ in range(m)] for _ in range(m)])
        if not invertible or M.is_invertible():
            return M


def random_block_triangular(rng: random.Random, p: int, m1: int, m2: int,
                            upper: bool = True) -> RationalMatrix:
    """Invertible matrix whose first (upper) or second (lower) block is invariant."""
    A = random_invertible(rng, p, m1)
    D = random_invertible(rng, p, m2)
    rows = [[Fraction(0)] * (m1 + m2) for _ in range(m1 + m2)]
    for i in range(m1):
        for j in range(m1):
            rows[i][j] = A[i, j]
    for i in range(m2):
        for j in range(m2):
            rows[m1 + i][m1 + j] = D[i, j]
    off_rows, off_cols = (range(m1), range(m1, m1 + m2)) if upper else (range(m1, m1 + m2), range(m1))
    for i in off_rows:
        for j in off_cols:
            rows[i][j] = random_entry(rng, p)
    return RationalMatrix(rows)


def make_corpus(seed: int = CORPUS_SEED, size: int = CORPUS_SIZE) -> list[dict]:
    rng = random.Random(seed)
    out = []
    for _ in range(size):
        p = rng.choice((2, 3, 5))
        m = rng.randint(1, 3)
        out.append({"p": p, "matrix": random_invertible(rng, p, m).format()})
    return out


def load_corpus() -> list[tuple[int, RationalMatrix]]:
    """The bundled matrix corpus as ``(p, M)`` pairs."""
    text = resources.files("schur_entropy").joinpath("data/corpus.json").read_text()
    return [(e["p"], RationalMatrix.parse(e["matrix"])) for e in json.loads(text)["matrices"]]


def write_corpus(path) -> None:
    data = {"seed": CORPUS_SEED, "matrices": make_corpus()}
    with open(path, "w") as fh:
        json.dump(data, fh, indent=1)
        fh.write("\n")
