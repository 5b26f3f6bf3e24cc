"""Cluster seeds of double braid varieties, assembled along two routes.

* Deodhar route: chamber minors, cocharacters, unitriangular extraction of the
  cluster variables, and the Deodhar 2-form built from ``L_{c,i}``.
* Weave route: vertex cycles of the double inductive weave, ``u``-variables
  and the weave 2-form (bottom slice plus local vertex contributions).

Solid crossings are indexed by their Deodhar index ``e``; the weave index is
``l - e``.  A 2-form is stored as a skew matrix ``S`` with
``Omega = sum_{e<f} S[e][f] dlog x_e ^ dlog x_f``, so ``eps_ef = S[e][f] / (2 d_e)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .braid import (BraidError, apply_move, double_string_of, is_mutable, mirror, solid_indices, to_single,
                    w_sequence, w_sequence_of_string)
from .cartan import CartanData, apply_word_coweight, inversion_coroots, inversion_roots, pair, type_a
from .geometry import GridMinors, bruhat_position, braid_matrix, parametrize, z_vars
from .poly import NotDivisibleError, Poly, laurent_quotient
from .tropical import coweight, cycles_of, lusztig_datum
from .weave import Weave, build_double_inductive
from .weyl import Perm

Vec = list[Fraction]
Skew = list[list[Fraction]]


class SeedError(ValueError):
    pass


# -- small linear algebra on 1-forms ----------------------------------------------------
def zero_skew(k: int) -> Skew:
    return [[Fraction(0)] * k for _ in range(k)]


def add_wedge(s: Skew, a: Sequence[Fraction], b: Sequence[Fraction], coef: Fraction | int = 1) -> None:
    """``s += coef * (a ^ b)`` in the skew-matrix representation."""
    k = len(a)
    for e in range(k):
        if not a[e] and not b[e]:
            continue
        for f in range(k):
            v = a[e] * b[f] - a[f] * b[e]
            if v:
                s[e][f] += coef * v


def cyclic_wedge(us: Sequence[Sequence[Fraction]], k: int) -> Skew:
    """``u_1^u_2 + u_2^u_3 + ... + u_r^u_1``."""
    s = zero_skew(k)
    r = len(us)
    for t in range(r):
        add_wedge(s, us[t], us[(t + 1) % r])
    return s


def skew_add(a: Skew, b: Skew, coef: Fraction | int = 1) -> Skew:
    return [[x + coef * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def trivalent_contribution(d: int, u_top_left, u_bottom, u_top_right, k: int) -> Skew:
    """``2d (u1^u2 + u2^u3 + u3^u1)`` with ``u1, u3`` on top and ``u2`` below."""
    s = cyclic_wedge([u_top_left, u_bottom, u_top_right], k)
    return [[2 * d * x for x in row] for row in s]


def hexavalent_contribution(d: int, top, bottom, k: int) -> Skew:
    """``d cyc(u_1, u_2, u_3) - d cyc(u_1', u_2', u_3')``."""
    return skew_add(cyclic_wedge(top, k), cyclic_wedge(bottom, k), -1) if d == 1 else [
        [d * x for x in row] for row in skew_add(cyclic_wedge(top, k), cyclic_wedge(bottom, k), -1)]


def octavalent_contribution(top, bottom, k: int) -> Skew:
    """``2 cyc(u_1..u_4) - 2 cyc(u_1'..u_4')``."""
    s = skew_add(cyclic_wedge(top, k), cyclic_wedge(bottom, k), -1)
    return [[2 * x for x in row] for row in s]


def dodecavalent_contribution(cartan: CartanData, top, bottom, k: int) -> Skew:
    """``sum_{i<k} m_ik (u_i ^ u_k - u'_{7-k} ^ u'_{7-i})`` with ``m`` the pairing matrix of ``212121``."""
    from .cartan import symmetrized_pair_matrix

    m = symmetrized_pair_matrix(cartan, (2, 1, 2, 1, 2, 1))
    s = zero_skew(k)
    for i in range(6):
        for j in range(i + 1, 6):
            add_wedge(s, top[i], top[j], m[i][j])
            add_wedge(s, bottom[5 - j], bottom[5 - i], -m[i][j])
    return s


def slice_form(cartan: CartanData, word: Sequence[int], us: Sequence[Sequence[Fraction]], k: int) -> Skew:
    """``sum_{i<k} d_{j_i} <alpha^j_i, chi^j_k> dlog u_i ^ dlog u_k``."""
    roots = inversion_roots(cartan, word)
    coroots = inversion_coroots(cartan, word)
    s = zero_skew(k)
    for i in range(len(word)):
        for j in range(i + 1, len(word)):
            coef = cartan.sym(word[i]) * pair(cartan, roots[i], coroots[j])
            if coef:
                add_wedge(s, us[i], us[j], coef)
    return s


# -- seeds -------------------------------------------------------------------------------
@dataclass
class Seed:
    indices: list[int]  # solid crossings, decreasing Deodhar index
    variables: dict[int, Poly]
    frozen: dict[int, bool]
    omega: Skew  # 2-form in the order of ``indices``
    d: dict[int, int]
    length: int = 0
    extra: dict = field(default_factory=dict)

    def position(self, e: int) -> int:
        return self.indices.index(e)

    def eps_full(self) -> Skew:
        return extract_epsilon(self.omega, [self.d[e] for e in self.indices], strict=False)

    @property
    def epsilon(self) -> list[list[int]]:
        """Mutable rows by all columns, integral."""
        full = self.eps_full()
        out = []
        for r, e in enumerate(self.indices):
            if not self.frozen[e]:
                row = full[r]
                if any(x.denominator != 1 for x in row):
                    raise SeedError("exchange matrix has a non-integral mutable row")
                out.append([int(x) for x in row])
        return out

    @property
    def mutable(self) -> list[int]:
        return [e for e in self.indices if not self.frozen[e]]

    def weave_index_map(self) -> dict[int, int]:
        return {e: self.length - e for e in self.indices}


def extract_epsilon(omega: Skew, d: Sequence[int], strict: bool = True) -> Skew:
    """``eps_ef = Omega_ef / (2 d_e)``."""
    out = [[Fraction(x) / (2 * d[e]) for x in row] for e, row in enumerate(omega)]
    if strict:
        for row in out:
            if any(x.denominator != 1 for x in row):
                raise SeedError("epsilon is not integral")
    for e in range(len(d)):
        for f in range(len(d)):
            if d[e] * out[e][f] != -d[f] * out[f][e]:
                raise SeedError("epsilon is not skew-symmetrizable with the given d")
    return out


class SeedBuilder:
    """All intermediate data for one double braid word in ``SL_n``."""

    def __init__(self, b: Sequence[int], n: int, require_w0: bool = True, weave: Weave | None = None) -> None:
        self.b = tuple(b)
        self.n = n
        self.l = len(b)
        self.cartan = type_a(n - 1)
        self.w = w_sequence(b, n)
        if require_w0 and self.w[0] != Perm.longest(n):
            raise SeedError("Demazure product of the word is not w0")
        self.solid = solid_indices(b, n)
        self.weave: Weave = weave if weave is not None else build_double_inductive(double_string_of(b, n), n)
        if [mirror(e, self.l) for e in self.solid] != self.weave.vertex_crossings():
            raise SeedError("weave vertex crossings do not mirror the solid crossings")
        self.minors = GridMinors(b, n)
        self._cycles = None
        self._gamma: dict[tuple[int, int], tuple[int, ...]] = {}
        self._vars: dict[int, Poly] | None = None

    # -- cocharacters ------------------------------------------------------------
    @property
    def cycles(self):
        if self._cycles is None:
            self._cycles = cycles_of(self.weave)
        return self._cycles

    def gamma(self, c: int, e: int) -> tuple[int, ...]:
        """``gamma_{c,e}`` = weave cocharacter at depth ``l - c`` for vertex ``l - e``."""
        key = (c, e)
        if key not in self._gamma:
            cb, eb = mirror(c, self.l), mirror(e, self.l)
            if cb <= eb:
                self._gamma[key] = self.cartan.zero()
            else:
                self._gamma[key] = coweight(self.cartan, lusztig_datum(self.weave, cb, eb, self.cycles[eb]))
        return self._gamma[key]

    def gamma_neg(self, c: int, e: int) -> tuple[int, ...]:
        """``u_c . gamma_{c,e}``: the cocharacter seen by negative grid minors."""
        u = self.minors.u(c)
        return apply_word_coweight(self.cartan, u.lex_reduced_word(), self.gamma(c, e))

    def ord(self, c: int, i: int, e: int) -> int:
        """Exponent of ``x_e`` in ``Delta_{c,i}``."""
        return self.gamma(c, e)[i - 1] if i > 0 else self.gamma_neg(c, e)[-i - 1]

    def cochar_table(self) -> dict[tuple[int, int], tuple[int, ...]]:
        return {(c, e): self.gamma(c, e) for c in range(self.l + 1) for e in self.solid}

    # -- exponent matrix and variables ------------------------------------------------
    def exponent_matrix(self) -> list[list[int]]:
        """``A[r][s]`` = exponent of ``x_{solid[s]}`` in ``Delta_{solid[r]}``."""
        rows = []
        for c in self.solid:
            rows.append([self.ord(c - 1, self.b[c - 1], e) for e in self.solid])
        from .poly import rational_det

        if abs(rational_det(rows)) != 1 if rows else False:
            raise SeedError("exponent matrix is not unimodular")
        return rows

    def chamber(self, c: int) -> Poly:
        return self.minors.chamber(c)

    def cluster_variables(self) -> dict[int, Poly]:
        if self._vars is not None:
            return self._vars
        a = self.exponent_matrix()
        k = len(self.solid)
        triangular = all(a[r][s] == 0 for r in range(k) for s in range(r)) and all(a[r][r] == 1 for r in range(k))
        xs: dict[int, Poly] = {}
        if triangular:
            for r in range(k - 1, -1, -1):
                c = self.solid[r]
                factors = [(self.chamber(c), 1)] + [(xs[self.solid[s]], -a[r][s]) for s in range(r + 1, k) if a[r][s]]
                xs[c] = _laurent_poly(factors, self.l)
        else:
            inv = _integer_inverse(a)
            chambers = [self.chamber(c) for c in self.solid]
            for r, e in enumerate(self.solid):
                xs[e] = _laurent_poly([(chambers[s], inv[r][s]) for s in range(k) if inv[r][s]], self.l)
        self._vars = xs
        return xs

    def frozen(self) -> dict[int, bool]:
        return {e: not is_mutable(self.b, self.n, e) for e in self.solid}

    # -- 2-forms ----------------------------------------------------------------
    def _l_form(self, c: int, i: int) -> Vec:
        """``L_{c,i}`` as coefficients of ``dlog x_e``."""
        j = abs(i)
        row = self.cartan.a[j - 1]
        out = []
        for e in self.solid:
            g = self.gamma(c, e) if i > 0 else self.gamma_neg(c, e)
            out.append(Fraction(sum(row[k] * g[k] for k in range(self.cartan.rank)), 2))
        return out

    def deodhar_form(self) -> Skew:
        k = len(self.solid)
        s = zero_skew(k)
        for c in self.solid:
            i = self.b[c - 1]
            sign = 1 if i > 0 else -1
            add_wedge(s, self._l_form(c - 1, i), self._l_form(c, i), sign * 2 * self.cartan.sym(abs(i)))
        return s

    def dlog_u(self) -> dict[int, Vec]:
        """``dlog u_edge = sum_e nu_e(edge) dlog x_e`` for every weave edge."""
        pos = {self.l - e: r for r, e in enumerate(self.solid)}
        k = len(self.solid)
        out: dict[int, Vec] = {}
        for edge in self.weave.edges:
            vec = [Fraction(0)] * k
            for eb, nu in self.cycles.items():
                if nu[edge.id]:
                    vec[pos[eb]] += nu[edge.id]
            out[edge.id] = vec
        return out

    def weave_form(self) -> Skew:
        k = len(self.solid)
        du = self.dlog_u()
        bottom_ids = self.weave.slice_edges[self.l]
        s = slice_form(self.cartan, self.weave.slice_word(self.l), [du[x] for x in bottom_ids], k)
        for v in self.weave.vertices():
            if v.kind == "3":
                d = self.cartan.sym(v.color)
                s = skew_add(s, trivalent_contribution(d, du[v.inputs[0]], du[v.outputs[0]], du[v.inputs[1]], k))
            elif v.kind == "6":
                d = self.cartan.sym(self.weave.edge(v.inputs[0]).color)
                s = skew_add(s, hexavalent_contribution(d, [du[x] for x in v.inputs], [du[x] for x in v.outputs], k))
        return s

    def seed(self, route: str = "deodhar") -> Seed:
        omega = self.deodhar_form() if route == "deodhar" else self.weave_form()
        d = {e: 1 for e in self.solid}
        return Seed(list(self.solid), dict(self.cluster_variables()), self.frozen(), omega, d, self.l)

    # -- checks -----------------------------------------------------------------
    def h_identity_failures(self) -> list[tuple[int, int]]:
        """``(c, i)`` where ``Delta_{c,i} != prod_e x_e^{ord(c,i,e)}``, both signs of ``i``."""
        xs = self.cluster_variables()
        bad = []
        for c in range(self.l + 1):
            for i in list(range(1, self.n)) + [-j for j in range(1, self.n)]:
                lhs = self.minors.minor(c, i)
                num = Poly.const(self.l, 1)
                den = Poly.const(self.l, 1)
                for e in self.solid:
                    g = self.ord(c, i, e)
                    if g > 0:
                        num = num * xs[e] ** g
                    elif g < 0:
                        den = den * xs[e] ** (-g)
                if lhs * den != num:
                    bad.append((c, i))
        return bad

    def weave_torus_positions_ok(self, zprime: Sequence[Fraction]) -> bool:
        """Weave side: the flags bounding each slice interval are in position ``w^s_k``."""
        single = to_single(self.b, self.n)
        s = double_string_of(self.b, self.n)
        ws = w_sequence_of_string(s, self.n)
        negs = sum(1 for x in self.b if x < 0)
        nl = nr = 0
        for k, (_, side) in enumerate(s, start=1):
            if side == "L":
                nl += 1
            else:
                nr += 1
            lo, hi = negs - nl, negs + nr
            m = _rational_braid(single[lo:hi], zprime[lo:hi], self.n)
            pos, _ = bruhat_position(m)
            if pos != ws[k]:
                return False
        return True

    def deodhar_positions_ok(self, z: Sequence[Fraction]) -> bool:
        for c in range(self.l + 1):
            pos, _ = bruhat_position(self.minors.z(c).evaluate(z))
            if pos != self.w[c]:
                return False
        return True

    def torus_check(self, z: Sequence[Fraction]) -> dict[str, bool]:
        """Evaluate all four torus-membership criteria at one point of ``R(b)``."""
        xs = self.cluster_variables()
        phi = parametrize(self.b, self.n).phi
        zprime = [z[c - 1] for c in phi]
        return {
            "deodhar": self.deodhar_positions_ok(z),
            "weave": self.weave_torus_positions_ok(zprime),
            "chamber": all(self.chamber(c).evaluate(z) != 0 for c in self.solid),
            "variables": all(xs[e].evaluate(z) != 0 for e in self.solid),
        }


def _rational_braid(word: Sequence[int], values: Sequence[Fraction], n: int) -> list[list[Fraction]]:
    from .geometry import int_identity
    from .poly import rational_matmul

    m: list[list[Fraction]] = [[Fraction(x) for x in row] for row in int_identity(n)]
    for i, z in zip(word, values):
        blk = [[Fraction(x) for x in row] for row in int_identity(n)]
        blk[i - 1][i - 1], blk[i - 1][i], blk[i][i - 1], blk[i][i] = Fraction(z), Fraction(-1), Fraction(1), Fraction(0)
        m = rational_matmul(m, blk)  # type: ignore[assignment]
    return m


def _laurent_poly(factors, nvars: int) -> Poly:
    try:
        return laurent_quotient(factors, nvars)
    except NotDivisibleError as exc:
        raise SeedError("cluster variable extraction produced a non-polynomial") from exc


def _integer_inverse(a: list[list[int]]) -> list[list[int]]:
    k = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(r == c)) for c in range(k)] for r, row in enumerate(a)]
    for col in range(k):
        piv = next(r for r in range(col, k) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(k):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    inv = [[m[r][k + c] for c in range(k)] for r in range(k)]
    if any(x.denominator != 1 for row in inv for x in row):
        raise SeedError("exponent matrix is not unimodular")
    return [[int(x) for x in row] for row in inv]


# -- public operations --------------------------------------------------------------------
def cochar_table(b: Sequence[int], n: int) -> dict[tuple[int, int], tuple[int, ...]]:
    return SeedBuilder(b, n).cochar_table()


def exponent_matrix(b: Sequence[int], n: int) -> list[list[int]]:
    return SeedBuilder(b, n).exponent_matrix()


def cluster_variables(b: Sequence[int], n: int) -> dict[int, Poly]:
    return SeedBuilder(b, n).cluster_variables()


def deodhar_exchange(b: Sequence[int], n: int) -> Skew:
    return SeedBuilder(b, n).deodhar_form()


def weave_exchange(b: Sequence[int], n: int) -> Skew:
    return SeedBuilder(b, n).weave_form()


def seed_of(b: Sequence[int], n: int, route: str = "deodhar") -> Seed:
    return SeedBuilder(b, n).seed(route)


def mutate(seed: Seed, k: int) -> Seed:
    """Matrix mutation plus the exchange relation at mutable index ``k``."""
    if seed.frozen.get(k, True):
        raise SeedError(f"index {k} is not mutable")
    eps = seed.eps_full()
    idx = seed.indices
    r = idx.index(k)
    size = len(idx)
    new_eps = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            if i == r or j == r:
                new_eps[i][j] = -eps[i][j]
            else:
                new_eps[i][j] = eps[i][j] + (abs(eps[i][r]) * eps[r][j] + eps[i][r] * abs(eps[r][j])) / 2
    nvars = seed.variables[k].nvars
    plus = Poly.const(nvars, 1)
    minus = Poly.const(nvars, 1)
    for j, e in enumerate(idx):
        x = eps[j][r]
        if x.denominator != 1:
            raise SeedError("non-integral exchange exponent")
        if x > 0:
            plus = plus * seed.variables[e] ** int(x)
        elif x < 0:
            minus = minus * seed.variables[e] ** int(-x)
    try:
        new_x = (plus + minus).exact_div(seed.variables[k])
    except NotDivisibleError as exc:
        raise SeedError("exchange relation is not polynomial") from exc
    variables = dict(seed.variables)
    variables[k] = new_x
    omega = [[new_eps[i][j] * 2 * seed.d[idx[i]] for j in range(size)] for i in range(size)]
    return Seed(list(idx), variables, dict(seed.frozen), omega, dict(seed.d), seed.length, dict(seed.extra))


def _normalize_sign(p: Poly) -> tuple[Poly, int]:
    if p.is_zero():
        return p, 1
    _, c = p.leading()
    return (p, 1) if c > 0 else (-p, -1)


def seed_in_zprime(seed: Seed, b: Sequence[int], n: int) -> Seed:
    """Rewrite the variables of a seed of ``b`` in the ``z'`` coordinates of its single braid word."""
    par = parametrize(b, n)
    images = par.phi_inverse_images()
    variables = {e: p.substitute(images) for e, p in seed.variables.items()}
    return Seed(list(seed.indices), variables, dict(seed.frozen), seed.omega, dict(seed.d), seed.length,
                dict(seed.extra))


def compare_seeds(s1: Seed, s2: Seed) -> tuple[bool, str]:
    """Equality up to relabeling of indices and signs of variables."""
    if len(s1.indices) != len(s2.indices):
        return False, "different cluster sizes"
    key2 = {}
    for e in s2.indices:
        key2.setdefault(_normalize_sign(s2.variables[e])[0], []).append(e)
    mapping: dict[int, int] = {}
    for e in s1.indices:
        p, _ = _normalize_sign(s1.variables[e])
        cands = [f for f in key2.get(p, []) if f not in mapping.values()]
        if not cands:
            return False, f"variable {s1.variables[e]} of index {e} has no partner"
        mapping[e] = cands[0]
    for e in s1.indices:
        if s1.frozen[e] != s2.frozen[mapping[e]]:
            return False, f"frozen flag of {e} differs"
    eps1, eps2 = s1.eps_full(), s2.eps_full()
    for a, e in enumerate(s1.indices):
        for b_, f in enumerate(s1.indices):
            if s1.frozen[e] and s1.frozen[f]:
                continue
            if eps1[a][b_] != eps2[s2.indices.index(mapping[e])][s2.indices.index(mapping[f])]:
                return False, f"epsilon entry ({e},{f}) differs"
    return True, "equal up to relabeling"


def braid_move_images(single: Sequence[int], single_new: Sequence[int]) -> list[Poly]:
    """Images of the new word's ``z''`` coordinates in the old ``z'`` ring, from
    ``B_i(a)B_j(b) = B_j(b)B_i(a)`` and ``B_i(a)B_j(b)B_i(c) = B_j(c)B_i(ac - b)B_j(a)``."""
    l = len(single)
    zs = z_vars(l)
    images = list(zs)
    diff = [q for q in range(l) if single[q] != single_new[q]]
    if not diff:
        return images
    q = diff[0]
    if len(diff) == 2 and diff[1] == q + 1 and single[q] == single_new[q + 1]:
        images[q], images[q + 1] = zs[q + 1], zs[q]
        return images
    a, b_, c = zs[q], zs[q + 1], zs[q + 2]
    images[q], images[q + 1], images[q + 2] = c, a * c - b_, a
    return images


@dataclass
class MoveReport:
    kind: str
    position: int
    c: int
    all_solid: bool
    special: bool
    expected: str  # "mutation" or "relabeling"
    ok: bool
    detail: str
    new_word: tuple[int, ...] = ()


def check_move(b: Sequence[int], n: int, kind: str, position: int | None = None) -> MoveReport:
    """Recompute the seed after a double braid move and compare with the predicted effect."""
    res = apply_move(b, n, kind, position)
    if res.kind == "B5":
        raise BraidError("B5 acts by a quasi-cluster transformation; its seed effect is not compared")
    s_old = seed_in_zprime(seed_of(b, n), b, n)
    s_new = seed_in_zprime(seed_of(res.word, n), res.word, n)
    single_old, single_new = to_single(b, n), to_single(res.word, n)
    images = braid_move_images(single_old, single_new)
    if images != z_vars(len(b)):
        s_new = Seed(list(s_new.indices), {e: p.substitute(images) for e, p in s_new.variables.items()},
                     dict(s_new.frozen), s_new.omega, dict(s_new.d), s_new.length)
    mutation = (res.kind == "B3" and res.all_solid) or (res.kind == "B1" and res.special)
    expected = "mutation" if mutation else "relabeling"
    target = s_old
    if mutation:
        if s_old.frozen[res.c]:
            return MoveReport(res.kind, res.position, res.c, res.all_solid, res.special, expected, False,
                              f"crossing {res.c} is frozen", res.word)
        target = mutate(s_old, res.c)
    ok, detail = compare_seeds(target, s_new)
    return MoveReport(res.kind, res.position, res.c, res.all_solid, res.special, expected, ok, detail, res.word)


# -- main theorem report ------------------------------------------------------------------
SAMPLE_VALUES = [Fraction(v) for v in (-2, -1, 0, 1, 2)] + [Fraction(1, 2), Fraction(-1, 3)]


@dataclass
class VerifyReport:
    word: tuple[int, ...]
    n: int
    forms_equal: bool = True
    forms_relation: str = "equal"  # "equal", "negated" or "different"
    h_identity: bool = True
    tori: bool = True
    points_tested: int = 0
    points_in_torus: int = 0
    witnesses: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.forms_equal and self.h_identity and self.tori


def random_point_in_r(builder: SeedBuilder, rng: random.Random, values: Sequence[Fraction] = SAMPLE_VALUES,
                      tries: int = 200) -> list[Fraction] | None:
    """A point with ``Z_0`` in the ``w0`` cell, drawn from a small value set."""
    w0 = Perm.longest(builder.n)
    z0 = builder.minors.z(0)
    for _ in range(tries):
        z = [rng.choice(values) for _ in range(builder.l)]
        pos, _ = bruhat_position(z0.evaluate(z))
        if pos == w0:
            return z
    return None


def verify_main_theorem(b: Sequence[int], n: int, rng: random.Random | None = None, points: int = 20,
                        checks: Sequence[str] = ("tori", "vars", "forms")) -> VerifyReport:
    rng = rng or random.Random(0)
    builder = SeedBuilder(b, n)
    rep = VerifyReport(tuple(b), n)
    if "forms" in checks:
        od, ow = builder.deodhar_form(), builder.weave_form()
        rep.forms_relation = forms_relation(od, ow)
        if od != ow:
            rep.forms_equal = False
            rep.witnesses.append(f"2-forms {rep.forms_relation}: deodhar={_fmt(od)} weave={_fmt(ow)}")
        else:
            extract_epsilon(od, [1] * len(builder.solid), strict=False)
    if "vars" in checks:
        bad = builder.h_identity_failures()
        if bad:
            rep.h_identity = False
            rep.witnesses.append(f"h+ identity fails at (c, i) = {bad[0]}")
    if "tori" in checks:
        for _ in range(points):
            z = random_point_in_r(builder, rng)
            if z is None:
                break
            rep.points_tested += 1
            res = builder.torus_check(z)
            if len(set(res.values())) != 1:
                rep.tori = False
                rep.witnesses.append(f"torus criteria disagree at z={[str(x) for x in z]}: {res}")
                break
            rep.points_in_torus += int(res["chamber"])
    return rep


def forms_relation(a: Skew, b: Skew) -> str:
    if a == b:
        return "equal"
    if a == [[-x for x in row] for row in b]:
        return "negated"
    return "different"


def _fmt(s: Skew) -> str:
    return str([[str(x) for x in row] for row in s])


def random_w0_word(n: int, rng: random.Random, max_len: int = 10, allow_negative: bool = True) -> tuple[int, ...]:
    """Rejection-sample a double braid word with Demazure product ``w0``."""
    w0len = n * (n - 1) // 2
    letters = [x for i in range(1, n) for x in ((i, -i) if allow_negative else (i,))]
    while True:
        length = rng.randint(w0len, max_len)
        b = tuple(rng.choice(letters) for _ in range(length))
        if w_sequence(b, n)[0] == Perm.longest(n):
            return b


def seed_to_json(seed: Seed, names: Callable[[int], str] | None = None) -> dict:
    eps = seed.eps_full()
    return {
        "variables": [
            {"index": e, "poly": seed.variables[e].format(), "terms": seed.variables[e].to_terms(),
             "frozen": seed.frozen[e], "weave_index": seed.length - e}
            for e in seed.indices
        ],
        "epsilon": [[str(x) if x.denominator != 1 else int(x) for x in row] for row in eps],
        "d": [seed.d[e] for e in seed.indices],
        "weave_index_map": {str(e): seed.length - e for e in seed.indices},
    }


def seed_to_dot(seed: Seed) -> str:
    eps = seed.eps_full()
    lines = ["digraph quiver {"]
    for e in seed.indices:
        shape = "box" if seed.frozen[e] else "circle"
        lines.append(f'  x{e} [shape={shape}, label="x{e}"];')
    for a, e in enumerate(seed.indices):
        for b_, f in enumerate(seed.indices):
            v = eps[a][b_]
            if v > 0 and not (seed.frozen[e] and seed.frozen[f]):
                lines.append(f'  x{e} -> x{f} [label="{v}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
