"""Exact ``SL_n`` matrices over ``Z[z_1..z_l]``: braid matrices, the
parametrization of double braid varieties, relative positions, the cosets
``Z_c`` and grid/chamber minors.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .braid import negative_positions, positive_positions, star, to_single, w_sequence
from .poly import Number, Poly, PolyMatrix, laurent_quotient, rational_matmul
from .weyl import Perm, demazure_product


class GeometryError(ValueError):
    pass


# -- basic matrices ------------------------------------------------------------------
def b_matrix(n: int, i: int, var: Poly) -> PolyMatrix:
    """``B_i(z) = x_i(z) s_i``: identity with the block ``[[z, -1], [1, 0]]`` at rows/cols ``i, i+1``."""
    if not 1 <= i <= n - 1:
        raise GeometryError(f"B_{i} undefined in SL_{n}")
    m = PolyMatrix.identity(n, var.nvars)
    one = Poly.const(var.nvars, 1)
    zero = Poly.const(var.nvars, 0)
    m.rows[i - 1][i - 1] = var
    m.rows[i - 1][i] = -one
    m.rows[i][i - 1] = one
    m.rows[i][i] = zero
    return m


def int_identity(n: int) -> list[list[int]]:
    return [[int(r == c) for c in range(n)] for r in range(n)]


def s_dot(n: int, i: int) -> list[list[int]]:
    """Lift of ``s_i``: ``B_i(0)``."""
    if not 1 <= i <= n - 1:
        raise GeometryError(f"s_{i} undefined in SL_{n}")
    m = int_identity(n)
    m[i - 1][i - 1], m[i - 1][i], m[i][i - 1], m[i][i] = 0, -1, 1, 0
    return m


def chevalley_x(n: int, i: int, p: Number) -> list[list[Number]]:
    m: list[list[Number]] = int_identity(n)  # type: ignore[assignment]
    m[i - 1][i] = p
    return m


def torus_chi(n: int, i: int, t: Number) -> list[list[Number]]:
    """``chi_i(t) = diag(1, .., t, 1/t, .., 1)`` with ``t`` in slot ``i``."""
    m: list[list[Number]] = int_identity(n)  # type: ignore[assignment]
    m[i - 1][i - 1] = Fraction(t)
    m[i][i] = 1 / Fraction(t)
    return m


def lift(w: Perm) -> list[list[int]]:
    """``w-dot``: product of ``s_dot`` over the lexicographically smallest reduced word."""
    m = int_identity(w.n)
    for i in w.lex_reduced_word():
        m = rational_matmul(m, s_dot(w.n, i))  # type: ignore[assignment]
    return m


def int_minor(m: Sequence[Sequence[int]], rows: Sequence[int], cols: Sequence[int]) -> int:
    from .poly import rational_det

    return int(rational_det([[m[r][c] for c in cols] for r in rows]))


def braid_matrix(word: Sequence[int], n: int, variables: Sequence[Poly]) -> PolyMatrix:
    nvars = variables[0].nvars if variables else 0
    m = PolyMatrix.identity(n, nvars)
    for i, v in zip(word, variables):
        m = m @ b_matrix(n, i, v)
    return m


def z_vars(l: int) -> list[Poly]:
    return [Poly.var(l, k) for k in range(1, l + 1)]


# -- braid variety ---------------------------------------------------------------------
def braid_variety_ideal(beta: Sequence[int], n: int) -> tuple[list[Poly], list[Poly]]:
    """Closed equations (strictly lower entries of ``w0-dot B_beta``) and open
    conditions (its diagonal)."""
    if demazure_product(beta, n) != Perm.longest(n):
        raise GeometryError("Demazure product of the word is not w0")
    l = len(beta)
    m = PolyMatrix.from_ints(lift(Perm.longest(n)), l) @ braid_matrix(beta, n, z_vars(l))
    closed = [m[r, c] for r in range(n) for c in range(r)]
    opened = [m[r, r] for r in range(n)]
    return closed, opened


# -- parametrization -----------------------------------------------------------------------
@dataclass(frozen=True)
class Parametrization:
    n: int
    word: tuple[int, ...]
    g_prime: tuple[PolyMatrix, ...]  # g'_0 .. g'_l
    g: tuple[PolyMatrix, ...]  # g_0 .. g_l
    flags: tuple[PolyMatrix, ...]  # F_0 .. F_l in the z' variables
    phi: tuple[int, ...]  # phi[d-1] = c with z'_d <-> z_c

    def phi_star_images(self) -> list[Poly]:
        """Images of ``z'_1..z'_l`` as polynomials in ``z``."""
        l = len(self.word)
        return [Poly.var(l, c) for c in self.phi]

    def phi_inverse_images(self) -> list[Poly]:
        """Images of ``z_1..z_l`` in the ``z'`` ring."""
        l = len(self.word)
        inv = [0] * l
        for d, c in enumerate(self.phi, start=1):
            inv[c - 1] = d
        return [Poly.var(l, d) for d in inv]


def phi_map(b: Sequence[int]) -> tuple[int, ...]:
    """``phi(d) = a_d`` for the negatives, then ``b_m, ..., b_1`` for the positives."""
    return tuple(negative_positions(b)) + tuple(reversed(positive_positions(b)))


def parametrize(b: Sequence[int], n: int) -> Parametrization:
    l = len(b)
    zs = z_vars(l)
    gp = [PolyMatrix.identity(n, l)]
    for c in range(1, l + 1):
        x = b[c - 1]
        gp.append(gp[-1] @ b_matrix(n, star(-x, n), zs[c - 1]) if x < 0 else gp[-1])
    g: list[PolyMatrix] = [PolyMatrix.identity(n, l)] * (l + 1)
    g[l] = gp[l]
    for c in range(l, 0, -1):
        x = b[c - 1]
        g[c - 1] = g[c] @ b_matrix(n, x, zs[c - 1]) if x > 0 else g[c]
    single = to_single(b, n)
    flags = [PolyMatrix.identity(n, l)]
    for d, i in enumerate(single, start=1):
        flags.append(flags[-1] @ b_matrix(n, i, zs[d - 1]))
    return Parametrization(n, tuple(b), tuple(gp), tuple(g), tuple(flags), phi_map(b))


def z_coset_matrix(b: Sequence[int], n: int, c: int) -> PolyMatrix:
    """``Z_c``: starred negatives after ``c`` in order, then positives after ``c`` from the right."""
    l = len(b)
    zs = z_vars(l)
    m = PolyMatrix.identity(n, l)
    for d in range(c + 1, l + 1):
        if b[d - 1] < 0:
            m = m @ b_matrix(n, star(-b[d - 1], n), zs[d - 1])
    for d in range(l, c, -1):
        if b[d - 1] > 0:
            m = m @ b_matrix(n, b[d - 1], zs[d - 1])
    return m


def z_coset_matrices(b: Sequence[int], n: int) -> list[PolyMatrix]:
    """All ``Z_0..Z_l`` by the recursion ``Z_{c-1} = Z_c B_i`` or ``B_{i*} Z_c``."""
    l = len(b)
    zs = z_vars(l)
    out: list[PolyMatrix] = [PolyMatrix.identity(n, l)] * (l + 1)
    for c in range(l, 0, -1):
        x = b[c - 1]
        if x > 0:
            out[c - 1] = out[c] @ b_matrix(n, x, zs[c - 1])
        else:
            out[c - 1] = b_matrix(n, star(-x, n), zs[c - 1]) @ out[c]
    return out


@dataclass(frozen=True)
class Coset:
    matrix: PolyMatrix
    position: Perm


def z_coset(b: Sequence[int], n: int, c: int) -> Coset:
    return Coset(z_coset_matrix(b, n, c), w_sequence(b, n)[c])


# -- relative position ---------------------------------------------------------------------
def bruhat_position(m: Sequence[Sequence[Number]]) -> tuple[Perm, list[Fraction]]:
    """``(w, h)`` with ``m`` in ``U+ w-dot h U+``.

    Columns are processed left to right: the pivot is the lowest nonzero entry,
    entries above it are cleared with row operations and entries to its right
    with column operations.
    """
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    w = [0] * n
    used: set[int] = set()
    for j in range(n):
        r = next((r for r in range(n - 1, -1, -1) if r not in used and a[r][j] != 0), None)
        if r is None:
            raise GeometryError("singular matrix has no relative position")
        used.add(r)
        w[j] = r + 1
        p = a[r][j]
        for rr in range(r):
            if a[rr][j] != 0:
                f = a[rr][j] / p
                for cc in range(n):
                    a[rr][cc] -= f * a[r][cc]
        for cc in range(j + 1, n):
            if a[r][cc] != 0:
                f = a[r][cc] / p
                for rr in range(n):
                    a[rr][cc] -= f * a[rr][j]
    perm = Perm(tuple(w))
    wd = lift(perm)
    h = [a[w[j] - 1][j] / wd[w[j] - 1][j] for j in range(n)]
    return perm, h


def leading_minor_profile(m: PolyMatrix, w: Perm) -> list[Poly]:
    """``omega_j(h) = eps_j * minor(m, rows w([j]), cols [j])`` for ``j = 1..n``."""
    wd = lift(w)
    out = []
    for j in range(1, m.shape[0] + 1):
        rows = sorted(w(k) - 1 for k in range(1, j + 1))
        cols = list(range(j))
        eps = int_minor(wd, rows, cols)
        if eps not in (1, -1):
            raise GeometryError("sign minor of the lift is not a unit")
        out.append(m.minor(rows, cols) if eps == 1 else -m.minor(rows, cols))
    return out


def generic_position(m: PolyMatrix, rng: random.Random | None = None, tries: int = 5) -> Perm:
    """Relative position at a generic point: the longest position seen at random points."""
    rng = rng or random.Random(0)
    best: Perm | None = None
    for _ in range(tries):
        point = [rng.randint(-10**6, 10**6) for _ in range(m.nvars)]
        w, _ = bruhat_position(m.evaluate(point))
        if best is None or w.length() > best.length():
            best = w
    assert best is not None
    return best


def bruhat_position_poly(m: PolyMatrix, w: Perm | None = None) -> tuple[Perm, list[Poly]]:
    """Symbolic version: returns ``w`` and the leading minors ``omega_1..omega_n`` of ``h``;
    ``h_j = omega_j / omega_{j-1}``."""
    w = w or generic_position(m)
    return w, leading_minor_profile(m, w)


# -- grid and chamber minors ---------------------------------------------------------------------
@dataclass(frozen=True)
class MinorMonomial:
    """``prod_k Delta_{c,k}^{exps[k-1]}`` over positive grid minors of one ``Z_c``."""

    c: int
    exps: tuple[int, ...]


class GridMinors:
    """Grid minors ``Delta_{c,i}`` of a double braid word in ``SL_n``."""

    def __init__(self, b: Sequence[int], n: int) -> None:
        self.b = tuple(b)
        self.n = n
        self.l = len(b)
        self.w = w_sequence(b, n)
        self.w0 = Perm.longest(n)
        self._z = z_coset_matrices(b, n)
        self._pos: dict[int, list[Poly]] = {}

    def z(self, c: int) -> PolyMatrix:
        return self._z[c]

    def u(self, c: int) -> Perm:
        return self.w0 * self.w[c]

    def positive(self, c: int) -> list[Poly]:
        """``[Delta_{c,1}, .., Delta_{c,n}]`` (the last is the determinant, 1)."""
        if c not in self._pos:
            self._pos[c] = leading_minor_profile(self._z[c], self.w[c])
        return self._pos[c]

    def negative_monomial(self, c: int, i: int) -> MinorMonomial:
        """``Delta_{c,-i} = prod_{k : u(k) <= i} h_k`` written in the positive minors."""
        u = self.u(c)
        exps = []
        for k in range(1, self.n):
            exps.append(int(u(k) <= i) - int(u(k + 1) <= i))
        return MinorMonomial(c, tuple(exps))

    def minor(self, c: int, i: int) -> Poly:
        """``Delta_{c,i}`` for signed ``i``; the negative side must be a polynomial."""
        if i > 0:
            return self.positive(c)[i - 1]
        mono = self.negative_monomial(c, -i)
        pos = self.positive(c)
        return laurent_quotient(((pos[k], e) for k, e in enumerate(mono.exps)), self.l)

    def chamber(self, c: int) -> Poly:
        """``Delta_c = Delta_{c-1, i_c}``."""
        x = self.b[c - 1]
        return self.minor(c - 1, x)

    def h_diag_at(self, c: int, point: Sequence[Number]) -> list[Fraction]:
        vals = [Fraction(p.evaluate(point)) for p in self.positive(c)]
        out = []
        prev = Fraction(1)
        for v in vals:
            out.append(v / prev)
            prev = v
        return out


def grid_minor(b: Sequence[int], n: int, c: int, i: int) -> Poly:
    return GridMinors(b, n).minor(c, i)


def chamber_minor(b: Sequence[int], n: int, c: int) -> Poly:
    return GridMinors(b, n).chamber(c)


def is_unimodular(word: Sequence[int], n: int) -> bool:
    l = len(word)
    det = braid_matrix(word, n, z_vars(l)).det() if l else Poly.const(0, 1)
    return det == 1 or det == -1


def random_unipotent(n: int, rng: random.Random, bound: int = 5) -> list[list[Fraction]]:
    return [[Fraction(int(r == c)) if r >= c else Fraction(rng.randint(-bound, bound)) for c in range(n)]
            for r in range(n)]


def permutation_cells_point(w: Perm, h: Sequence[Fraction], rng: random.Random) -> list[list[Fraction]]:
    """A random element of ``U+ w-dot h U+`` with the given torus part."""
    n = w.n
    wd = lift(w)
    mid = [[Fraction(wd[r][c]) * h[c] for c in range(n)] for r in range(n)]
    return rational_matmul(rational_matmul(random_unipotent(n, rng), mid), random_unipotent(n, rng))  # type: ignore[return-value]
