from __future__ import annotations

import random
from fractions import Fraction

import pytest
import sympy

from artifact.poly import NotDivisibleError, Poly, PolyMatrix, laurent_quotient, rational_det

SYMS = sympy.symbols("z1:5")


def random_poly(rng: random.Random, nvars: int = 4, terms: int = 4, deg: int = 3) -> Poly:
    data = {}
    for _ in range(terms):
        exp = tuple(rng.randint(0, deg) for _ in range(nvars))
        data[exp] = data.get(exp, 0) + rng.randint(-5, 5)
    return Poly(nvars, data)


def to_sympy(p: Poly):
    return sum((c * sympy.Mul(*[s**e for s, e in zip(SYMS, exp)]) for exp, c in p.terms.items()), sympy.Integer(0))


def test_ring_operations_match_sympy():
    rng = random.Random(3)
    for _ in range(60):
        a, b = random_poly(rng), random_poly(rng)
        assert sympy.expand(to_sympy(a * b) - to_sympy(a) * to_sympy(b)) == 0
        assert sympy.expand(to_sympy(a - b) - (to_sympy(a) - to_sympy(b))) == 0
        assert sympy.expand(to_sympy(a**2) - to_sympy(a) ** 2) == 0


def test_exact_division_recovers_factor():
    rng = random.Random(4)
    for _ in range(40):
        a, b = random_poly(rng), random_poly(rng)
        if b.is_zero() or a.is_zero():
            continue
        assert (a * b).exact_div(b) == a


def test_inexact_division_raises():
    x, y = Poly.var(2, 1), Poly.var(2, 2)
    with pytest.raises(NotDivisibleError):
        (x * x + y).exact_div(x)


def test_evaluate_and_substitute():
    rng = random.Random(5)
    for _ in range(20):
        p = random_poly(rng)
        pt = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(4)]
        expected = to_sympy(p).subs(dict(zip(SYMS, [sympy.Rational(v.numerator, v.denominator) for v in pt])))
        assert p.evaluate(pt) == Fraction(int(sympy.numer(expected)), int(sympy.denom(expected)))
        images = [Poly.var(4, 2), Poly.var(4, 1), Poly.var(4, 4), Poly.var(4, 3)]
        q = p.substitute(images)
        assert q.evaluate([pt[1], pt[0], pt[3], pt[2]]) == p.evaluate(pt)


def test_determinants_match_sympy():
    rng = random.Random(6)
    for size in (2, 3, 4):
        for _ in range(5):
            rows = [[random_poly(rng, terms=2, deg=1) for _ in range(size)] for _ in range(size)]
            mine = PolyMatrix(rows).det()
            ref = sympy.Matrix([[to_sympy(p) for p in r] for r in rows]).det(method="berkowitz")
            assert sympy.expand(to_sympy(mine) - ref) == 0


def test_rational_det():
    assert rational_det([[2, 1], [1, 1]]) == 1
    assert rational_det([[Fraction(1, 2), 0], [0, 4]]) == 2
    assert rational_det([]) == 1


def test_laurent_quotient_exact():
    x, y = Poly.var(2, 1), Poly.var(2, 2)
    assert laurent_quotient([(x * y + x, 1), (x, -1)], 2) == y + 1


def test_terms_round_trip_and_format():
    p = Poly(3, {(1, 0, 2): -3, (0, 0, 0): 1})
    assert Poly.from_terms(3, p.to_terms()) == p
    assert p.format() == "-3*z1*z3^2 + 1"
