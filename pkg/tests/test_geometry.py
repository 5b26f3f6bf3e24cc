from __future__ import annotations

import itertools
import random
from fractions import Fraction

from artifact.braid import solid_indices, to_single, w_sequence
from artifact.geometry import (GridMinors, b_matrix, braid_matrix, braid_variety_ideal, bruhat_position,
                               chamber_minor, is_unimodular, parametrize, permutation_cells_point,
                               z_coset_matrices, z_coset_matrix, z_vars)
from artifact.poly import Poly, rational_matmul
from artifact.seeds import SeedBuilder, random_point_in_r, random_w0_word
from artifact.weyl import Perm

RUNNING = (-2, 1, 2, 1, -1, 1, 2)


def z(k: int) -> Poly:
    return Poly.var(7, k)


def test_z4_matches_reference_matrix():
    one = Poly.const(7, 1)
    expected = [[z(6), -one, 0 * one], [z(5) * z(7) - 1, 0 * one, -z(5)], [z(7), 0 * one, -one]]
    got = z_coset_matrix(RUNNING, 3, 4)
    assert all(got[r, c] == expected[r][c] for r in range(3) for c in range(3))


def test_h_plus_4():
    rng = random.Random(1)
    for _ in range(10):
        point = [Fraction(rng.randint(1, 9), rng.randint(1, 4)) for _ in range(7)]
        w, h = bruhat_position(z_coset_matrix(RUNNING, 3, 4).evaluate(point))
        assert w == w_sequence(RUNNING, 3)[4]
        assert h == [point[6], 1, 1 / point[6]]


def test_phi_permutation():
    assert parametrize(RUNNING, 3).phi == (1, 5, 7, 6, 4, 3, 2)


def test_dimension_bookkeeping():
    closed, opened = braid_variety_ideal(to_single(RUNNING, 3), 3)
    assert len(z_vars(7)) == 7 and len(closed) == 3 and len(opened) == 3
    assert len(solid_indices(RUNNING, 3)) == 4


def test_chamber_minors_of_running_example():
    got = {c: chamber_minor(RUNNING, 3, c) for c in solid_indices(RUNNING, 3)}
    assert got[5] == z(7)
    assert got[4] == z(4) * z(7)
    assert got[2] == z(2) * z(4) * z(7) - z(3) * z(7) - 1
    assert got[1] == z(3) * z(7) - z(4) * z(6) + 1


def test_coset_recursion_matches_direct_products():
    rng = random.Random(2)
    for _ in range(10):
        b = random_w0_word(3, rng, 8)
        rec = z_coset_matrices(b, 3)
        for c in range(len(b) + 1):
            assert rec[c] == z_coset_matrix(b, 3, c)


def test_bruhat_round_trip():
    rng = random.Random(3)
    for _ in range(100):
        n = rng.randint(2, 5)
        w = Perm(tuple(rng.sample(range(1, n + 1), n)))
        h = [Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3)) for _ in range(n)]
        assert bruhat_position(permutation_cells_point(w, h, rng)) == (w, h)


def test_unimodularity():
    rng = random.Random(4)
    for _ in range(20):
        n = rng.randint(2, 4)
        word = [rng.randint(1, n - 1) for _ in range(rng.randint(0, 6))]
        assert is_unimodular(word, n)


def test_braid_matrix_positions():
    for i in (1, 2):
        m = b_matrix(3, i, Poly.var(1, 1)).evaluate([Fraction(5)])
        w, h = bruhat_position(m)
        assert w == Perm.simple(3, i) and h == [1, 1, 1]


def test_chain_positions_at_points_of_r():
    rng = random.Random(5)
    for _ in range(10):
        n = rng.choice([3, 4])
        b = random_w0_word(n, rng, 8)
        builder = SeedBuilder(b, n)
        point = random_point_in_r(builder, rng)
        if point is None:
            continue
        par = parametrize(b, n)
        g = [m.evaluate(point) for m in par.g]
        gp = [m.evaluate(point) for m in par.g_prime]
        assert bruhat_position(rational_matmul(_inverse(gp[0]), g[0]))[0] == Perm.longest(n)
        assert g[-1] == gp[-1]
        for c in range(1, len(b) + 1):
            x_step = rational_matmul(_inverse(g[c - 1]), g[c])
            y_step = rational_matmul(_inverse(gp[c - 1]), gp[c])
            x_pos, y_pos = bruhat_position(x_step)[0], bruhat_position(y_step)[0]
            if b[c - 1] > 0:
                assert x_pos == Perm.simple(n, b[c - 1]) and y_pos == Perm.identity(n)
            else:
                assert y_pos == Perm.simple(n, n + b[c - 1]) and x_pos == Perm.identity(n)


def test_grid_minors_are_monomials_in_chamber_minors():
    # every grid minor is a product of chamber minors up to sign, checked at random points
    rng = random.Random(6)
    b = RUNNING
    gm = GridMinors(b, 3)
    for c, i in itertools.product(range(8), (1, 2, -1, -2)):
        assert isinstance(gm.minor(c, i), Poly)
    point = [Fraction(rng.randint(1, 7)) for _ in range(7)]
    for c in range(8):
        w, h = bruhat_position(gm.z(c).evaluate(point))
        assert w == w_sequence(b, 3)[c]
        assert gm.h_diag_at(c, point) == h


def _inverse(m):
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(r == c)) for c in range(n)] for r, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]
