"""Polynomial arithmetic, squarefree split, factorization, minimal polynomials."""

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclomod.fields import GF2, QQ, gf
from cyclomod.linalg import DenseMatrix
from cyclomod.polynomials import (
    Polynomial,
    factor,
    factor_gfp,
    factor_q,
    min_poly,
    poly_gcd,
    squarefree_decomposition,
)


def poly(field, coeffs):
    return Polynomial(field, coeffs)


def reassemble(f, factors):
    prod = Polynomial(f.field, [f.leading])
    for g, m in factors:
        prod = prod * g**m
    return prod


def test_divmod_and_gcd():
    f = poly(QQ, [-1, 0, 1])  # t^2 - 1
    g = poly(QQ, [1, 1])  # t + 1
    q, r = divmod(f, g)
    assert q == poly(QQ, [-1, 1]) and r.is_zero
    assert poly_gcd(f, g) == g.monic()
    assert poly_gcd(poly(QQ, []), g) == g
    with pytest.raises(ZeroDivisionError):
        divmod(f, poly(QQ, []))


def test_derivative_char_p():
    f = poly(gf(3), [1, 0, 0, 2])  # 2t^3 + 1, derivative 6t^2 = 0
    assert f.derivative().is_zero
    assert poly(GF2, [0, 1, 1]).derivative() == poly(GF2, [1])


def test_evaluate_matrix():
    m = DenseMatrix(QQ, [[0, 1], [1, 0]])
    f = poly(QQ, [-1, 0, 1])  # t^2 - 1 kills the swap matrix
    assert f.evaluate_matrix(m).is_zero()
    g = poly(QQ, [2, 3])
    assert g.evaluate_matrix(m) == DenseMatrix(QQ, [[2, 3], [3, 2]])


def test_squarefree_trivial_t3_plus_t_gf2():
    # t^3 + t = t (t+1)^2 over GF(2)
    f = poly(GF2, [0, 1, 0, 1])
    got = squarefree_decomposition(f)
    assert got == [(poly(GF2, [0, 1]), 1), (poly(GF2, [1, 1]), 2)]


def test_squarefree_pth_power_route():
    # (t+1)^4 over GF(2) has zero derivative twice over
    f = poly(GF2, [1, 1]) ** 4
    assert squarefree_decomposition(f) == [(poly(GF2, [1, 1]), 4)]
    # mixed: t^2 (t^2+t+1)^3 over GF(2)
    f = poly(GF2, [0, 1]) ** 2 * poly(GF2, [1, 1, 1]) ** 3
    got = squarefree_decomposition(f)
    assert dict((str(g), m) for g, m in got) == {"t": 2, "t^2 + t + 1": 3}


def test_squarefree_seeded_quintics_gf3():
    # seeded random quintics over GF(3): multiply back, parts coprime and squarefree
    field = gf(3)
    rng = random.Random(4021)
    for _ in range(30):
        coeffs = [rng.randrange(3) for _ in range(5)] + [rng.randrange(1, 3)]
        f = poly(field, coeffs)
        parts = squarefree_decomposition(f)
        assert reassemble(f, parts) == f
        for (g, _), (h, _) in itertools.combinations(parts, 2):
            assert poly_gcd(g, h).degree == 0
        for g, _ in parts:
            assert poly_gcd(g, g.derivative()).degree <= 0


def test_squarefree_yun_rationals():
    f = poly(QQ, [1, 1]) ** 2 * poly(QQ, [-2, 1]) ** 3 * poly(QQ, [1, 0, 1])
    got = squarefree_decomposition(f)
    # deterministic order: by (degree, coefficients)
    assert got == [
        (poly(QQ, [-2, 1]), 3),
        (poly(QQ, [1, 1]), 2),
        (poly(QQ, [1, 0, 1]), 1),
    ]


def exhaustive_irreducible_check(g):
    """No monic divisor of degree 1..deg/2, by exhaustive enumeration."""
    field = g.field
    p = field.characteristic
    for d in range(1, g.degree // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            h = Polynomial(field, list(tail) + [1])
            if (g % h).is_zero:
                return False
    return True


def test_factor_gfp_trivial_example():
    f = poly(GF2, [0, 1]) * poly(GF2, [1, 1]) ** 2
    assert factor_gfp(f) == [(poly(GF2, [0, 1]), 1), (poly(GF2, [1, 1]), 2)]


def test_factor_gfp_seeded_degree6_gf5():
    # oracle: multiply back, then certify irreducibility by exhaustive divisor search
    field = gf(5)
    rng = random.Random(98)
    for _ in range(12):
        coeffs = [rng.randrange(5) for _ in range(6)] + [rng.randrange(1, 5)]
        f = poly(field, coeffs)
        factors = factor_gfp(f)
        assert reassemble(f, factors) == f
        for g, _ in factors:
            assert g.is_monic
            assert exhaustive_irreducible_check(g)


def test_factor_gfp_rejects_rationals():
    with pytest.raises(ValueError):
        factor_gfp(poly(QQ, [1, 1]))


def test_factor_q_trivial_examples():
    # (t^2+1)(t-3) expanded, both factors irreducible over Q
    f = poly(QQ, [1, 0, 1]) * poly(QQ, [-3, 1])
    assert factor_q(f) == [(poly(QQ, [-3, 1]), 1), (poly(QQ, [1, 0, 1]), 1)]
    # cyclotomic-style: t^4 + t^3 + t^2 + t + 1 irreducible
    f = poly(QQ, [1, 1, 1, 1, 1])
    assert factor_q(f) == [(f, 1)]
    # non-monic with rational coefficients
    f = poly(QQ, [Fraction(1, 2), 1]) * poly(QQ, [2, 1]) * 3
    got = factor_q(f)
    assert reassemble(f, got) == f
    assert all(g.is_monic for g, _ in got)


def test_factor_q_needs_recombination():
    # x^4 + 1 is irreducible over Q but splits modulo every prime
    f = poly(QQ, [1, 0, 0, 0, 1])
    assert factor_q(f) == [(f, 1)]
    # (x^2-2)(x^2-3): each quadratic stays whole only after recombination
    f = poly(QQ, [-2, 0, 1]) * poly(QQ, [-3, 0, 1])
    assert factor_q(f) == [(poly(QQ, [-3, 0, 1]), 1), (poly(QQ, [-2, 0, 1]), 1)]


def test_factor_q_seeded_products():
    rng = random.Random(314)
    pool = [
        poly(QQ, [1, 1]),
        poly(QQ, [-1, 1]),
        poly(QQ, [2, 1]),
        poly(QQ, [1, 0, 1]),
        poly(QQ, [-2, 0, 1]),
        poly(QQ, [1, 1, 1]),
        poly(QQ, [-1, 3, 1]),
    ]
    for _ in range(10):
        picks = [rng.choice(pool) for _ in range(rng.randrange(2, 5))]
        lead = Fraction(rng.randrange(1, 5), rng.randrange(1, 4))
        f = poly(QQ, [lead])
        for g in picks:
            f = f * g
        got = factor_q(f)
        assert reassemble(f, got) == f
        total = sum(g.degree * m for g, m in got)
        assert total == f.degree


def test_factor_q_degree_cap():
    f = poly(QQ, [0] * 33 + [1])
    with pytest.raises(ValueError, match="degree cap exceeded"):
        factor_q(f)
    assert factor_q(f, degree_cap=40) == [(poly(QQ, [0, 1]), 33)]


def test_factor_dispatch():
    assert factor(poly(GF2, [1, 1, 1])) == [(poly(GF2, [1, 1, 1]), 1)]
    assert factor(poly(QQ, [1, 2, 1])) == [(poly(QQ, [1, 1]), 2)]


def test_min_poly_three_cycle():
    # powers of the 3-cycle: I, c, c^2 independent, c^3 = I
    field = QQ
    c = DenseMatrix(field, [[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    assert min_poly(c) == poly(field, [-1, 0, 0, 1])
    i = DenseMatrix.identity(field, 3)
    one = c
    two = c * c
    assert two * c == i
    flat = [i.flatten(), one.flatten(), two.flatten()]
    from cyclomod.linalg import SpanSolver

    solver = SpanSolver(field, 9)
    assert all(solver.add(v) for v in flat)


def test_min_poly_divides_and_annihilates():
    rng = random.Random(10)
    for field in (GF2, gf(5), QQ):
        for _ in range(10):
            n = rng.randrange(1, 5)
            if field.is_rational:
                m = DenseMatrix(field, [[rng.randrange(-3, 4) for _ in range(n)] for _ in range(n)])
            else:
                p = field.characteristic
                m = DenseMatrix(field, [[rng.randrange(p) for _ in range(n)] for _ in range(n)])
            f = min_poly(m)
            assert f.is_monic
            assert f.evaluate_matrix(m).is_zero()
            assert f.degree <= n
            # minimality: powers below the degree stay independent
            from cyclomod.linalg import SpanSolver

            solver = SpanSolver(field, n * n)
            power = DenseMatrix.identity(field, n)
            for _ in range(f.degree):
                assert solver.add(power.flatten())
                power = power * m


def test_min_poly_nilpotent():
    n = DenseMatrix(QQ, [[0, 1], [0, 0]])
    assert min_poly(n) == poly(QQ, [0, 0, 1])
    assert min_poly(DenseMatrix.identity(QQ, 4)) == poly(QQ, [-1, 1])
