"""Sparse multivariate polynomials over the integers, and matrices of them.

A :class:`Poly` lives in a ring ``Z[z_1..z_N]`` with a fixed number of
variables ``N``.  Terms are stored as ``{exponent_tuple: coefficient}`` with
zero coefficients never stored, so equality is structural.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Exponent = tuple[int, ...]
Number = Union[int, Fraction]


class NotDivisibleError(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


class Poly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, int] | None = None) -> None:
        self.nvars = nvars
        clean: dict[Exponent, int] = {}
        if terms:
            for exp, coeff in terms.items():
                if coeff:
                    if len(exp) != nvars:
                        raise ValueError(f"exponent {exp} does not have {nvars} entries")
                    clean[exp] = int(coeff)
        self.terms = clean

    # -- constructors ---------------------------------------------------------
    @classmethod
    def const(cls, nvars: int, value: int) -> Poly:
        return cls(nvars, {(0,) * nvars: value} if value else None)

    @classmethod
    def var(cls, nvars: int, index: int) -> Poly:
        """The variable ``z_index`` (1-based)."""
        if not 1 <= index <= nvars:
            raise IndexError(f"variable z{index} outside z1..z{nvars}")
        exp = [0] * nvars
        exp[index - 1] = 1
        return cls(nvars, {tuple(exp): 1})

    @classmethod
    def _from_clean(cls, nvars: int, terms: dict[Exponent, int]) -> Poly:
        out = cls.__new__(cls)
        out.nvars = nvars
        out.terms = terms
        return out

    # -- basic predicates -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0,) * self.nvars in self.terms)

    def constant_value(self) -> int:
        return self.terms.get((0,) * self.nvars, 0)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def variables(self) -> set[int]:
        """1-based indices of variables that occur."""
        used: set[int] = set()
        for exp in self.terms:
            used.update(i + 1 for i, k in enumerate(exp) if k)
        return used

    def leading(self) -> tuple[Exponent, int]:
        """Lexicographically largest term."""
        exp = max(self.terms)
        return exp, self.terms[exp]

    # -- arithmetic -----------------------------------------------------------
    def _coerce(self, other: object) -> Poly:
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials live in rings with different variable counts")
            return other
        if isinstance(other, int):
            return Poly.const(self.nvars, other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> Poly:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for exp, c in o.terms.items():
            v = terms.get(exp, 0) + c
            if v:
                terms[exp] = v
            else:
                terms.pop(exp, None)
        return Poly._from_clean(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly._from_clean(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: object) -> Poly:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> Poly:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> Poly:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if not self.terms or not o.terms:
            return Poly._from_clean(self.nvars, {})
        terms: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = terms.get(e, 0) + c1 * c2
                if v:
                    terms[e] = v
                else:
                    del terms[e]
        return Poly._from_clean(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = Poly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def exact_div(self, other: Poly) -> Poly:
        """Quotient ``self / other``; raises :class:`NotDivisibleError` on remainder."""
        o = self._coerce(other)
        if o.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if len(o.terms) == 1:
            (ge, gc), = o.terms.items()
            out: dict[Exponent, int] = {}
            for e, c in self.terms.items():
                if c % gc or any(a < b for a, b in zip(e, ge)):
                    raise NotDivisibleError("monomial does not divide")
                out[tuple(a - b for a, b in zip(e, ge))] = c // gc
            return Poly._from_clean(self.nvars, out)
        rem = dict(self.terms)
        quot: dict[Exponent, int] = {}
        ge, gc = o.leading()
        while rem:
            fe = max(rem)
            fc = rem[fe]
            if fc % gc or any(a < b for a, b in zip(fe, ge)):
                raise NotDivisibleError("polynomial division leaves a remainder")
            qe = tuple(a - b for a, b in zip(fe, ge))
            qc = fc // gc
            quot[qe] = qc
            for e, c in o.terms.items():
                t = tuple(a + b for a, b in zip(e, qe))
                v = rem.get(t, 0) - c * qc
                if v:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        return Poly._from_clean(self.nvars, quot)

    def divides(self, other: Poly) -> bool:
        try:
            other.exact_div(self)
        except NotDivisibleError:
            return False
        return True

    # -- evaluation and substitution -------------------------------------------
    def evaluate(self, point: Sequence[Number]) -> Number:
        if len(point) != self.nvars:
            raise ValueError(f"point has {len(point)} coordinates, ring has {self.nvars}")
        total: Number = 0
        for exp, c in self.terms.items():
            term: Number = c
            for v, k in zip(point, exp):
                if k:
                    term *= v**k
            total += term
        return total

    def substitute(self, images: Sequence[Poly]) -> Poly:
        """Ring map sending ``z_i`` to ``images[i-1]``."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        target = images[0].nvars if images else 0
        result = Poly.const(target, 0)
        cache: dict[tuple[int, int], Poly] = {}
        for exp, c in self.terms.items():
            term = Poly.const(target, c)
            for i, k in enumerate(exp):
                if k:
                    key = (i, k)
                    if key not in cache:
                        cache[key] = images[i] ** k
                    term = term * cache[key]
            result = result + term
        return result

    def permute_variables(self, mapping: Sequence[int]) -> Poly:
        """Rename ``z_i`` to ``z_{mapping[i-1]}`` (1-based bijection)."""
        terms: dict[Exponent, int] = {}
        for exp, c in self.terms.items():
            new = [0] * self.nvars
            for i, k in enumerate(exp):
                new[mapping[i] - 1] = k
            terms[tuple(new)] = c
        return Poly._from_clean(self.nvars, terms)

    # -- comparison, hashing, printing -------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.terms == ({(0,) * self.nvars: other} if other else {})
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-k for k in t[0])))

    def to_terms(self) -> list[list]:
        """Canonical sparse serialization: ``[[coeff, [exponents...]], ...]``."""
        return [[c, list(e)] for e, c in self.sorted_terms()]

    @classmethod
    def from_terms(cls, nvars: int, data: Iterable[Sequence]) -> Poly:
        return cls(nvars, {tuple(e): int(c) for c, e in data})

    def __str__(self) -> str:
        return self.format()

    def format(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = names or [f"z{i + 1}" for i in range(self.nvars)]
        pieces: list[str] = []
        for exp, c in self.sorted_terms():
            mono = "*".join(
                names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(exp) if k
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"Poly({self.format()!r})"


def monomial_product(factors: Iterable[tuple[Poly, int]], nvars: int) -> Poly:
    """Product of ``f**k`` over nonnegative exponents."""
    out = Poly.const(nvars, 1)
    for f, k in factors:
        if k < 0:
            raise ValueError("use laurent_quotient for negative exponents")
        if k:
            out = out * f**k
    return out


def laurent_quotient(factors: Iterable[tuple[Poly, int]], nvars: int) -> Poly:
    """Exact value of ``prod f**k`` for integer ``k``; must be a polynomial."""
    num = Poly.const(nvars, 1)
    den = Poly.const(nvars, 1)
    for f, k in factors:
        if k > 0:
            num = num * f**k
        elif k < 0:
            den = den * f ** (-k)
    return num.exact_div(den)


class PolyMatrix:
    """Square or rectangular matrix with :class:`Poly` entries."""

    __slots__ = ("rows", "nvars")

    def __init__(self, rows: Sequence[Sequence[Poly]]) -> None:
        self.rows = [list(r) for r in rows]
        self.nvars = self.rows[0][0].nvars if self.rows and self.rows[0] else 0

    @classmethod
    def identity(cls, n: int, nvars: int) -> PolyMatrix:
        return cls([[Poly.const(nvars, int(i == j)) for j in range(n)] for i in range(n)])

    @classmethod
    def from_ints(cls, rows: Sequence[Sequence[int]], nvars: int) -> PolyMatrix:
        return cls([[Poly.const(nvars, v) for v in r] for r in rows])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij: tuple[int, int]) -> Poly:
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: PolyMatrix) -> PolyMatrix:
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise ValueError("shape mismatch")
        zero = Poly.const(self.nvars, 0)
        out = []
        for i in range(n):
            row = []
            for j in range(m):
                acc = zero
                for t in range(k):
                    a = self.rows[i][t]
                    if a.terms:
                        b = other.rows[t][j]
                        if b.terms:
                            acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.rows == other.rows

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> PolyMatrix:
        """0-based row and column selections."""
        return PolyMatrix([[self.rows[r][c] for c in cols] for r in rows])

    def minor(self, rows: Sequence[int], cols: Sequence[int]) -> Poly:
        return self.submatrix(rows, cols).det()

    def det(self) -> Poly:
        n, m = self.shape
        if n != m:
            raise ValueError("determinant of a non-square matrix")
        if n <= 3:
            return _cofactor_det(self.rows, self.nvars)
        return bareiss_det(self.rows, self.nvars)

    def evaluate(self, point: Sequence[Number]) -> list[list[Number]]:
        return [[p.evaluate(point) for p in row] for row in self.rows]

    def substitute(self, images: Sequence[Poly]) -> PolyMatrix:
        return PolyMatrix([[p.substitute(images) for p in row] for row in self.rows])

    def to_lists(self) -> list[list[str]]:
        return [[p.format() for p in row] for row in self.rows]

    def __repr__(self) -> str:
        return "PolyMatrix(" + repr(self.to_lists()) + ")"


def _cofactor_det(rows: Sequence[Sequence[Poly]], nvars: int) -> Poly:
    n = len(rows)
    if n == 0:
        return Poly.const(nvars, 1)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = Poly.const(nvars, 0)
    for j in range(n):
        a = rows[0][j]
        if a.is_zero():
            continue
        sub = [[r[k] for k in range(n) if k != j] for r in rows[1:]]
        term = a * _cofactor_det(sub, nvars)
        total = total + term if j % 2 == 0 else total - term
    return total


def bareiss_det(rows: Sequence[Sequence[Poly]], nvars: int) -> Poly:
    """Fraction-free Gaussian elimination; every division is exact."""
    m = [list(r) for r in rows]
    n = len(m)
    sign = 1
    prev = Poly.const(nvars, 1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            swap = next((r for r in range(k + 1, n) if not m[r][k].is_zero()), None)
            if swap is None:
                return Poly.const(nvars, 0)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev)
        prev = m[k][k]
    return m[n - 1][n - 1] if sign > 0 else -m[n - 1][n - 1]


def rational_det(rows: Sequence[Sequence[Number]]) -> Fraction:
    """Determinant of a matrix of exact rationals by Gaussian elimination."""
    m = [[Fraction(v) for v in r] for r in rows]
    n = len(m)
    det = Fraction(1)
    for k in range(n):
        piv = next((r for r in range(k, n) if m[r][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        det *= m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            if f:
                for j in range(k, n):
                    m[i][j] -= f * m[k][j]
    return det


def rational_matmul(a: Sequence[Sequence[Number]], b: Sequence[Sequence[Number]]) -> list[list[Number]]:
    return [[sum(a[i][t] * b[t][j] for t in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]
