import itertools
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from schur_entropy.errors import InvalidEndo, InvalidInput, RingMismatch, SingularMatrix
from schur_entropy.heisenberg import (HeisenbergElement, HeisenbergEndo, RingDescriptor,
                                      TruncatedHeisenberg, assemble, endo_apply, endo_entropy,
                                      endo_validate, frattini_quotient, frattini_rank,
                                      frattini_rank_report, generators, hcomm, hinv, hmul, hpow,
                                      hpow_p, rank_formula, split_element)
from schur_entropy.matrices import RationalMatrix

from conftest import random_element


def ring(text, p=3):
    return RingDescriptor.parse(text, p)


def elem(R, a, b, c):
    return HeisenbergElement.from_rationals(R, a, b, c)


def as_matrices(g):
    """One (n+2)x(n+2) unitriangular rational matrix per ring component."""
    out = []
    n = g.n
    for k in range(g.ring.rank):
        M = [[Fraction(int(i == j)) for j in range(n + 2)] for i in range(n + 2)]
        for i in range(n):
            M[0][1 + i] = g.a[i].components[k].lift()
            M[1 + i][n + 1] = g.b[i].components[k].lift()
        M[0][n + 1] = g.c.components[k].lift()
        out.append(M)
    return out


def matmul(X, Y):
    return [[sum(X[i][k] * Y[k][j] for k in range(len(Y))) for j in range(len(Y[0]))] for i in range(len(X))]


def from_matrices(mats, R, n):
    a = [[M[0][1 + i] for M in mats] for i in range(n)]
    b = [[M[1 + i][n + 1] for M in mats] for i in range(n)]
    return HeisenbergElement(R, a, b, [M[0][n + 1] for M in mats])


CONFIGS = [("Zp", 2, 1), ("Zp", 3, 2), ("Zp", 5, 1), ("Qp", 3, 1), ("Qp x Zp", 5, 2),
           ("Qp^1 x Zp^2", 2, 1)]


def test_ring_descriptor_parse():
    R = ring("Qp^1 x Zp^2", 5)
    assert (R.epsilon, R.zeta, R.rank) == (1, 2, 3)
    assert R.factors == ("Qp", "Zp", "Zp")
    assert ring("Zp").epsilon == 0
    for bad in ("", "Rp", "Qp^0 x Zp^0", "Qp^-1"):
        with pytest.raises(InvalidInput):
            RingDescriptor.parse(bad, 5)


def test_product_examples():
    R = ring("Zp", 5)
    assert hmul(elem(R, [1], [0], 0), elem(R, [0], [1], 0)) == elem(R, [1], [1], 1)
    g = elem(R, [3], [4], 7)
    assert hmul(g, HeisenbergElement.identity(1, R)) == g
    assert hmul(elem(R, [1], [1], 0), elem(R, [1], [1], 0)) == elem(R, [2], [2], 1)


def test_inverse_examples():
    R = ring("Zp", 5)
    assert hinv(elem(R, [0], [0], 4)) == elem(R, [0], [0], -4)
    assert hinv(HeisenbergElement.identity(1, R)).is_identity()
    g = elem(R, [1], [1], 1)
    assert hinv(g) == elem(R, [-1], [-1], 0)
    ginv = as_matrices(g)[0]
    inv = [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]
    inv[0][1], inv[1][2], inv[0][2] = -ginv[0][1], -ginv[1][2], ginv[0][1] * ginv[1][2] - ginv[0][2]
    assert matmul(ginv, inv) == [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]
    assert hinv(g) == from_matrices([inv], R, 1)


def test_commutator_examples():
    R = ring("Zp", 5)
    g, h = elem(R, [1], [0], 0), elem(R, [0], [1], 0)
    assert hcomm(g, h) == elem(R, [0], [0], 1)
    assert hcomm(g, h) == hmul(hmul(hmul(hinv(g), hinv(h)), g), h)
    assert hcomm(g, g).is_identity()
    assert hcomm(elem(R, [0], [0], 3), h).is_identity()


def test_power_examples():
    R3, R2 = ring("Zp", 3), ring("Zp", 2)
    assert hpow_p(elem(R3, [1], [1], 0)) == elem(R3, [3], [3], 3)
    assert hpow_p(elem(R2, [1], [1], 0)) == elem(R2, [2], [2], 1)
    assert hpow_p(HeisenbergElement.identity(2, R3)).is_identity()
    g = elem(R3, [1], [2], 5)
    assert hpow(g, -2) == hinv(hmul(g, g))
    assert hpow(g, 0).is_identity()


def test_element_text_roundtrip_and_errors():
    R = ring("Qp x Zp", 5)
    g = HeisenbergElement.parse("a=([1/5, 2], 3); b=(0, [1, 1/3]); c=[7, 0]", R)
    assert HeisenbergElement.parse(g.to_text(), R) == g
    assert g.to_json()["a"] == [["1/5", "2"], ["3", "3"]]
    with pytest.raises(InvalidInput):
        HeisenbergElement.parse("a=(1/5); b=(0); c=0", R)  # 1/5 is not in Z_p
    with pytest.raises(InvalidInput):
        HeisenbergElement.parse("a=(1, 2); b=(0); c=0", R)
    with pytest.raises(RingMismatch):
        hmul(g, elem(ring("Qp x Zp", 3), [1, 1], [1, 1], 0))


@pytest.mark.parametrize("text,p,n", CONFIGS)
def test_product_matches_matrix_multiplication(text, p, n):
    R = ring(text, p)
    rng = random.Random(f"{text}-{p}-{n}")
    for _ in range(40):
        g, h = random_element(rng, R, n), random_element(rng, R, n)
        prod = [matmul(X, Y) for X, Y in zip(as_matrices(g), as_matrices(h))]
        assert hmul(g, h) == from_matrices(prod, R, n)


@pytest.mark.parametrize("text,p,n", CONFIGS)
def test_group_laws(text, p, n):
    R = ring(text, p)
    rng = random.Random(p * 31 + n)
    e = HeisenbergElement.identity(n, R)
    for _ in range(60):
        g, h, k = (random_element(rng, R, n) for _ in range(3))
        assert hmul(hmul(g, h), k) == hmul(g, hmul(h, k))
        assert hmul(g, e) == g == hmul(e, g)
        assert hmul(g, hinv(g)).is_identity() and hmul(hinv(g), g).is_identity()
        c = hcomm(g, h)
        assert c.is_central()
        assert c == hmul(hmul(hmul(hinv(g), hinv(h)), g), h)
        assert hcomm(c, k).is_identity()
        assert hpow_p(g) == hpow(g, p)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_p_power_is_p_fold_product(p):
    R = ring("Qp x Zp", p)
    rng = random.Random(p)
    for _ in range(40):
        g = random_element(rng, R, 2)
        acc = HeisenbergElement.identity(2, R)
        for _ in range(p):
            acc = hmul(acc, g)
        assert hpow_p(g) == acc


def test_split_examples():
    R = ring("Qp x Zp", 5)
    assert all(x.is_identity() for x in split_element(HeisenbergElement.identity(1, R)))
    g = elem(R, [[Fraction(1, 5), 2]], [[0, 1]], [3, 4])
    q, z = split_element(g)
    assert q == elem(R.factor_ring(0), [Fraction(1, 5)], [0], 3)
    assert z == elem(R.factor_ring(1), [2], [1], 4)
    assert assemble([q, z], R) == g
    with pytest.raises(RingMismatch):
        assemble([z, q], R)


@pytest.mark.parametrize("text,p,n", [c for c in CONFIGS if " x " in c[0]])
def test_split_is_a_homomorphism(text, p, n):
    R = ring(text, p)
    rng = random.Random(7 * p + n)
    for _ in range(40):
        g, h = random_element(rng, R, n), random_element(rng, R, n)
        parts = split_element(hmul(g, h))
        assert parts == [hmul(x, y) for x, y in zip(split_element(g), split_element(h))]
        assert assemble(split_element(g), R) == g


# endomorphisms --------------------------------------------------------------

def endo(A, B, s):
    return HeisenbergEndo(RationalMatrix.parse(A), RationalMatrix.parse(B), Fraction(s))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_endo_examples(p):
    Qp = ring("Qp", p)
    assert endo_apply(HeisenbergEndo.identity(1), elem(Qp, [1], [2], 3)) == elem(Qp, [1], [2], 3)
    psi = endo(f"{p}", f"1/{p}", 1)
    assert endo_validate(psi, Qp)
    assert not endo_validate(psi, ring("Zp", p))
    assert not endo_validate(endo("1", f"{p}", 1))
    with pytest.raises(InvalidEndo):
        endo_apply(endo("1", f"{p}", 1), elem(Qp, [1], [1], 0))
    rng = random.Random(p)
    for _ in range(100):
        g, h = random_element(rng, Qp, 1), random_element(rng, Qp, 1)
        assert endo_apply(psi, hmul(g, h)) == hmul(endo_apply(psi, g), endo_apply(psi, h))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_endo_entropy_examples(p):
    Qp, Zp = ring("Qp", p), ring("Zp", p)
    assert endo_entropy(HeisenbergEndo.identity(2), Qp).coeff == 0
    assert endo_entropy(endo(f"{p}", f"1/{p}", 1), Qp).coeff == 1
    assert endo_entropy(endo(f"1/{p}", f"1/{p}", f"1/{p**2}"), Qp).coeff == 4
    assert endo_entropy(endo(f"{p}", "1", p), Zp).coeff == 0
    # s = 0 on Q_p is singular on the centre
    with pytest.raises(SingularMatrix):
        endo_entropy(endo("1", "0", 0), Qp)
    # ... but entropy on Z_p factors needs no invertibility
    assert endo_entropy(endo("1", "0", 0), Zp).coeff == 0
    mixed = ring("Qp x Zp", p)
    assert endo_entropy(endo(f"{p}", "1", p), mixed).coeff == 0


@st.composite
def integral_endos(draw):
    p = draw(st.sampled_from([2, 3, 5]))
    n = draw(st.integers(1, 2))
    rng = random.Random(draw(st.integers(0, 2**32)))
    while True:
        A = RationalMatrix([[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)])
        if A.is_invertible():
            break
    s = A.det() * p ** rng.randint(0, 2)
    B = (A.inverse().transpose()) * s  # integral: s / det(A) * adj(A)^T
    return p, HeisenbergEndo(A, B, s)


@settings(max_examples=40, deadline=None)
@given(integral_endos())
def test_integral_endos_over_zp_have_zero_entropy(data):
    p, psi = data
    R = ring("Zp^2", p)
    assert endo_validate(psi, R)
    assert endo_entropy(psi, R).coeff == 0


# generators and Frattini quotient ------------------------------------------------

def test_generator_examples():
    Zp = ring("Zp", 5)
    assert generators(1, Zp) == [elem(Zp, [1], [0], 0), elem(Zp, [0], [1], 0)]
    assert len(generators(2, Zp)) == 4
    assert len(generators(2, ring("Qp x Zp", 5))) == 8
    Qp = ring("Qp", 5)
    assert generators(1, Qp) == [elem(Qp, [1], [0], 0), elem(Qp, [0], [1], 0)]


@pytest.mark.parametrize("n,p", [(1, 2), (1, 3), (1, 5), (2, 2), (2, 3)])
def test_generators_close_up_to_the_truncated_group(n, p):
    G = TruncatedHeisenberg(n, p, 2)
    assert len(G.closure(G.generators())) == G.order


def naive_frattini_cosets(p, K=2):
    """|H_1(Z/p^K)| / |G^p [G,G]| with plain tuples."""
    q = p**K
    mul = lambda x, y: ((x[0] + y[0]) % q, (x[1] + y[1]) % q, (x[2] + y[2] + x[0] * y[1]) % q)
    inv = lambda x: (-x[0] % q, -x[1] % q, (x[0] * x[1] - x[2]) % q)

    def power(x, k):
        acc = (0, 0, 0)
        for _ in range(k):
            acc = mul(acc, x)
        return acc

    G = list(itertools.product(range(q), repeat=3))
    gens = {power(g, p) for g in G}
    gens |= {mul(mul(inv(g), inv(h)), mul(g, h)) for g in G for h in G}
    phi = {(0, 0, 0)}
    frontier = list(phi)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in phi:
                    phi.add(y)
                    nxt.append(y)
        frontier = nxt
    assert len(G) % len(phi) == 0
    return len(G) // len(phi)


@pytest.mark.parametrize("p", [2, 3])
def test_frattini_quotient_against_naive_enumeration(p):
    fq = frattini_quotient(1, p, 2, exhaustive=True)
    assert fq.cosets == naive_frattini_cosets(p) == p**2
    assert fq.rank == 2 and fq.elementary_abelian


@pytest.mark.parametrize("p", [2, 3, 5])
def test_frattini_quotient_n1_exhaustive(p):
    fq = frattini_quotient(1, p, 2, exhaustive=True)
    assert fq.exhaustive and fq.cosets == p**2 and fq.rank == 2
    assert fq.group_order == p**6 and fq.frattini_order == p**4


def test_frattini_generator_route_matches_exhaustive():
    for n, p in [(1, 3), (2, 2)]:
        assert frattini_quotient(n, p, 2, exhaustive=False).cosets == \
            frattini_quotient(n, p, 2, exhaustive=True).cosets


@pytest.mark.parametrize("p", [2, 3])
def test_truncated_arithmetic_matches_exact(p):
    G = TruncatedHeisenberg(2, p, 3)
    R = ring("Zp", p)
    rng = np.random.default_rng(p)
    x = rng.integers(0, p**3, size=(50, 5))
    y = rng.integers(0, p**3, size=(50, 5))
    to_elem = lambda r: elem(R, list(map(int, r[:2])), list(map(int, r[2:4])), int(r[4]))
    got = G.mul(x, y)
    for i in range(50):
        exact = hmul(to_elem(x[i]), to_elem(y[i]))
        assert to_elem(got[i]) == elem(R, *[[int(c.components[0].lift()) % p**3 for c in part]
                                           for part in (exact.a, exact.b)],
                                       int(exact.c.components[0].lift()) % p**3)
    assert (G.mul(x, G.inv(x)) == 0).all()


def test_rank_examples():
    assert frattini_rank(1, ring("Zp", 3)) == 2
    assert frattini_rank(2, ring("Qp x Zp", 3)) == 8
    report = frattini_rank_report(2, ring("Qp x Zp", 2))
    methods = [m for _, _, m in report.per_factor]
    assert methods[0].startswith("symbolic") and "coset enumeration" in methods[1]
    assert rank_formula(3, ring("Qp^1 x Zp^2", 2)) == 18
