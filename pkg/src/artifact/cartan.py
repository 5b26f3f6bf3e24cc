"""Finite-type symmetrizable Cartan data and root/coroot arithmetic.

Conventions: ``a[i][j] = <alpha_i, chi_j>`` with 1-based indices exposed to
callers and 0-based storage.  Coweights are vectors in the simple-coroot basis,
roots in the simple-root basis, weights in the fundamental-weight basis.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Sequence

from .poly import rational_det

CoweightVec = tuple[int, ...]
RootVec = tuple[int, ...]
WeightVec = tuple[int, ...]


class CartanError(ValueError):
    """Invalid Cartan data or out-of-range index."""


# Order of s_i s_j from the product a_ij * a_ji.
_BRAID_ORDER = {0: 2, 1: 3, 2: 4, 3: 6}


@dataclass(frozen=True)
class CartanData:
    rank: int
    a: tuple[tuple[int, ...], ...]
    d: tuple[int, ...]
    family: str = "Generic"
    _star: tuple[int, ...] = field(default=(), repr=False, compare=False)

    def __post_init__(self) -> None:
        n = self.rank
        if n < 1:
            raise CartanError("rank must be positive")
        if len(self.a) != n or any(len(row) != n for row in self.a):
            raise CartanError("Cartan matrix must be rank x rank")
        if len(self.d) != n or any(x <= 0 for x in self.d):
            raise CartanError("symmetrizers must be positive, one per index")
        for i in range(n):
            if self.a[i][i] != 2:
                raise CartanError(f"a[{i + 1}][{i + 1}] must be 2")
            for j in range(n):
                if i == j:
                    continue
                if self.a[i][j] > 0:
                    raise CartanError("off-diagonal entries must be nonpositive")
                if (self.a[i][j] == 0) != (self.a[j][i] == 0):
                    raise CartanError("a_ij = 0 must match a_ji = 0")
                if self.d[i] * self.a[i][j] != self.d[j] * self.a[j][i]:
                    raise CartanError("d_i a_ij = d_j a_ji fails")
                if self.a[i][j] * self.a[j][i] not in _BRAID_ORDER:
                    raise CartanError("not of finite type")
        sym = [[self.d[i] * self.a[i][j] for j in range(n)] for i in range(n)]
        for k in range(1, n + 1):
            if rational_det([row[:k] for row in sym[:k]]) <= 0:
                raise CartanError("symmetrized matrix is not positive definite (not finite type)")
        object.__setattr__(self, "_star", _compute_star(self))

    # -- indices -------------------------------------------------------------
    def check_index(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise CartanError(f"index {i} outside 1..{self.rank}")

    def entry(self, i: int, j: int) -> int:
        """``a_ij`` with 1-based indices."""
        return self.a[i - 1][j - 1]

    def sym(self, i: int) -> int:
        return self.d[i - 1]

    def braid_order(self, i: int, j: int) -> int:
        """Order ``m_ij`` of ``s_i s_j``."""
        if i == j:
            return 1
        return _BRAID_ORDER[self.entry(i, j) * self.entry(j, i)]

    def is_simply_laced(self) -> bool:
        return all(self.braid_order(i, j) <= 3 for i in range(1, self.rank + 1) for j in range(1, self.rank + 1))

    def star(self, i: int) -> int:
        self.check_index(i)
        return self._star[i - 1]

    # -- vectors -------------------------------------------------------------
    def simple_coroot(self, i: int) -> CoweightVec:
        self.check_index(i)
        return tuple(int(k == i - 1) for k in range(self.rank))

    def simple_root(self, i: int) -> RootVec:
        return self.simple_coroot(i)

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.rank

    def to_json(self) -> dict[str, Any]:
        if self.family == "TypeA":
            return {"type": "A", "rank": self.rank}
        return {"matrix": [list(r) for r in self.a], "symmetrizers": list(self.d)}


def type_a(n_minus_1: int) -> CartanData:
    """Cartan data of type ``A_{n-1}``, the root datum of ``SL_n``."""
    if n_minus_1 < 1:
        raise CartanError("type A rank must be at least 1")
    r = n_minus_1
    a = tuple(tuple(2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(r)) for i in range(r))
    return CartanData(r, a, (1,) * r, "TypeA")


def from_matrix(a: Sequence[Sequence[int]], d: Sequence[int]) -> CartanData:
    return CartanData(len(a), tuple(tuple(int(x) for x in row) for row in a), tuple(int(x) for x in d))


def g2() -> CartanData:
    """The ``G_2`` datum with ``a_12 = -3`` and symmetrizers ``(1, 3)``."""
    return from_matrix([[2, -3], [-1, 2]], [1, 3])


def parse_cartan(spec: str | dict[str, Any]) -> CartanData:
    """Accept ``{"type":"A","rank":r}``, ``{"matrix":..., "symmetrizers":...}``,
    their JSON text, or the short forms ``A2`` and ``G2``."""
    if isinstance(spec, str):
        text = spec.strip()
        if text.startswith("{"):
            spec = json.loads(text)
        elif text.upper().startswith("A") and text[1:].isdigit():
            return type_a(int(text[1:]))
        elif text.upper() == "G2":
            return g2()
        else:
            raise CartanError(f"unrecognized Cartan spec {spec!r}")
    if "type" in spec:
        if str(spec["type"]).upper() != "A":
            raise CartanError("only type A has a named constructor; pass a matrix instead")
        return type_a(int(spec["rank"]))
    if "matrix" in spec:
        return from_matrix(spec["matrix"], spec.get("symmetrizers") or [1] * len(spec["matrix"]))
    raise CartanError("Cartan spec needs 'type' or 'matrix'")


# -- reflections and pairing ---------------------------------------------------
def reflect_coweight(cartan: CartanData, i: int, c: Sequence[int]) -> CoweightVec:
    """``s_i(c)`` using ``s_i(chi_k) = chi_k - a_ik chi_i``."""
    cartan.check_index(i)
    row = cartan.a[i - 1]
    shift = sum(row[k] * c[k] for k in range(cartan.rank))
    out = list(c)
    out[i - 1] -= shift
    return tuple(out)


def reflect_root(cartan: CartanData, i: int, r: Sequence[int]) -> RootVec:
    """``s_i(r)`` using ``s_i(alpha_k) = alpha_k - a_ki alpha_i``."""
    cartan.check_index(i)
    shift = sum(cartan.a[k][i - 1] * r[k] for k in range(cartan.rank))
    out = list(r)
    out[i - 1] -= shift
    return tuple(out)


def reflect_weight(cartan: CartanData, i: int, lam: Sequence[int]) -> WeightVec:
    """``s_i(lambda) = lambda - <lambda, chi_i> alpha_i`` in the fundamental-weight basis."""
    cartan.check_index(i)
    li = lam[i - 1]
    row = cartan.a[i - 1]
    return tuple(lam[k] - li * row[k] for k in range(cartan.rank))


def pair(cartan: CartanData, r: Sequence[int], c: Sequence[int]) -> int:
    """``<r, c>`` extended bilinearly from ``<alpha_j, chi_k> = a_jk``."""
    n = cartan.rank
    return sum(r[j] * c[k] * cartan.a[j][k] for j in range(n) for k in range(n) if r[j] and c[k])


def apply_word_coweight(cartan: CartanData, word: Sequence[int], c: Sequence[int]) -> CoweightVec:
    """``s_{w_1} ... s_{w_k} (c)``: the rightmost letter acts first."""
    out = tuple(c)
    for i in reversed(word):
        out = reflect_coweight(cartan, i, out)
    return out


def apply_word_root(cartan: CartanData, word: Sequence[int], r: Sequence[int]) -> RootVec:
    out = tuple(r)
    for i in reversed(word):
        out = reflect_root(cartan, i, out)
    return out


def longest_word(cartan: CartanData) -> tuple[int, ...]:
    """A reduced word for the longest element, found by driving rho to -rho."""
    lam = [1] * cartan.rank
    word: list[int] = []
    while True:
        pos = next((k for k in range(cartan.rank) if lam[k] > 0), None)
        if pos is None:
            break
        lam = list(reflect_weight(cartan, pos + 1, lam))
        word.append(pos + 1)
    return tuple(reversed(word))


def _compute_star(cartan: CartanData) -> tuple[int, ...]:
    word = longest_word(cartan)
    out = []
    for i in range(1, cartan.rank + 1):
        image = apply_word_root(cartan, word, cartan.simple_root(i))
        neg = tuple(-x for x in image)
        j = next(k for k in range(cartan.rank) if neg[k] == 1)
        if neg != cartan.simple_root(j + 1):
            raise CartanError("w0 does not send a simple root to a negative simple root")
        out.append(j + 1)
    return tuple(out)


def star(cartan: CartanData, i: int) -> int:
    return cartan.star(i)


def symmetrized_pair_matrix(cartan: CartanData, word: Sequence[int]) -> list[list[int]]:
    """``M_ik = d_{j_i} <alpha^j_i, chi^j_k>`` over the inversion roots and coroots of ``word``."""
    roots = inversion_roots(cartan, word)
    coroots = inversion_coroots(cartan, word)
    return [[cartan.sym(word[i]) * pair(cartan, roots[i], coroots[k]) for k in range(len(word))] for i in range(len(word))]


def inversion_coroots(cartan: CartanData, word: Sequence[int]) -> list[CoweightVec]:
    """``chi^j_k = s_{j_l} ... s_{j_{k+1}} chi_{j_k}`` for ``k = 1..l``."""
    out: list[CoweightVec] = [()] * len(word)
    for k in range(len(word) - 1, -1, -1):
        out[k] = apply_word_coweight(cartan, word[k + 1:][::-1], cartan.simple_coroot(word[k]))
    return out


def inversion_roots(cartan: CartanData, word: Sequence[int]) -> list[RootVec]:
    """``alpha^j_k = s_{j_l} ... s_{j_{k+1}} alpha_{j_k}``."""
    out: list[RootVec] = [()] * len(word)
    for k in range(len(word) - 1, -1, -1):
        out[k] = apply_word_root(cartan, word[k + 1:][::-1], cartan.simple_root(word[k]))
    return out
