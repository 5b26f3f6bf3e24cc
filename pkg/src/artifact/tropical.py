"""Lusztig cycles on weaves, Lusztig data, coweights and double Lusztig data.

Tropical rules at a vertex, inputs on top read left to right:

* 6-valent ``(a1, a2, a3) -> (a2 + a3 - m, m, a1 + a2 - m)`` with ``m = min(a1, a3)``
* 4-valent: the two values swap
* trivalent: ``min(a1, a2)``
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .braid import double_string_of
from .cartan import CartanData, inversion_coroots, inversion_roots, pair, type_a
from .weave import Weave, build_double_inductive
from .weyl import Move, Perm, apply_word_move, word_moves

Cycle = dict[int, int]


class TropicalError(ValueError):
    pass


class UnsupportedVertexError(TropicalError):
    """Tropical propagation through 8- or 12-valent vertices is not implemented."""


# -- local rules ---------------------------------------------------------------
def hexavalent_rule(a1: int, a2: int, a3: int) -> tuple[int, int, int]:
    m = min(a1, a3)
    return a2 + a3 - m, m, a1 + a2 - m


def tetravalent_rule(a1: int, a2: int) -> tuple[int, int]:
    return a2, a1


def trivalent_rule(a1: int, a2: int) -> int:
    return min(a1, a2)


# -- cycles --------------------------------------------------------------------
def vertex_cycle(w: Weave, e: int) -> Cycle:
    """``nu_e``: 1 on the bottom edge of the trivalent vertex below depth ``e``,
    propagated downward by the tropical rules; 0 on every edge above it."""
    source = w.trivalent_of(e)
    values: Cycle = {edge.id: 0 for edge in w.edges}
    values[source.outputs[0]] = 1
    for strip in w.strips[e + 1 :]:
        for v in strip.vertices:
            a = [values[x] for x in v.inputs]
            if v.kind == "6":
                out = hexavalent_rule(*a)
            elif v.kind == "4":
                out = tetravalent_rule(*a)
            elif v.kind == "3":
                out = (trivalent_rule(*a),)
            else:
                raise UnsupportedVertexError(f"{v.kind}-valent vertex")
            for x, val in zip(v.outputs, out):
                values[x] = val
    return values


def check_cycle(w: Weave, values: Cycle, e: int) -> bool:
    """Re-check the tropical rules at every vertex strictly below vertex ``e``."""
    for strip in w.strips[e + 1 :]:
        for v in strip.vertices:
            a = [values[x] for x in v.inputs]
            got = tuple(values[x] for x in v.outputs)
            want = {"6": lambda: hexavalent_rule(*a), "4": lambda: tetravalent_rule(*a),
                    "3": lambda: (trivalent_rule(*a),)}[v.kind]()
            if got != want:
                return False
    return all(x >= 0 for x in values.values())


# -- Lusztig data ----------------------------------------------------------------
@dataclass(frozen=True)
class LusztigDatum:
    word: tuple[int, ...]
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.word) != len(self.weights):
            raise TropicalError("word and weights differ in length")


def lusztig_datum(w: Weave, c: int, e: int, cycle: Cycle | None = None) -> LusztigDatum:
    nu = cycle if cycle is not None else vertex_cycle(w, e)
    return LusztigDatum(w.slice_word(c), tuple(nu[x] for x in w.slice_edges[c]))


def is_reduced_generic(cartan: CartanData, word: Sequence[int]) -> bool:
    """A word is reduced iff all of its inversion roots are positive."""
    return all(all(x >= 0 for x in r) and any(r) for r in inversion_roots(cartan, word))


def coweight(cartan: CartanData, d: LusztigDatum) -> tuple[int, ...]:
    """``sum_r f(r) chi^j_r``."""
    if not is_reduced_generic(cartan, d.word):
        raise TropicalError(f"word {d.word} is not reduced")
    total = [0] * cartan.rank
    for f, chi in zip(d.weights, inversion_coroots(cartan, d.word)):
        if f:
            for k in range(cartan.rank):
                total[k] += f * chi[k]
    return tuple(total)


def coweight_expression(d: LusztigDatum) -> str:
    """Render the coweight as ``s2s1·χ2``-style terms, one per nonzero weight."""
    terms = []
    for r, f in enumerate(d.weights):
        if not f:
            continue
        prefix = "".join(f"s{j}" for j in reversed(d.word[r + 1 :]))
        body = (prefix + "·" if prefix else "") + f"χ{d.word[r]}"
        terms.append(body if f == 1 else f"{f}·{body}")
    return " + ".join(terms) if terms else "0"


def format_coweight(c: Sequence[int]) -> str:
    parts = []
    for k, x in enumerate(c, start=1):
        if x:
            coef = "" if x == 1 else ("-" if x == -1 else str(x))
            parts.append(f"{coef}χ{k}")
    return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def weave_cocharacter(b: Sequence[int], n: int, c: int, e: int, w: Weave | None = None) -> tuple[int, ...]:
    """``gamma^We_{c,e}`` for the double inductive weave of ``b``."""
    w = w if w is not None else build_double_inductive(double_string_of(b, n), n)
    cartan = type_a(n - 1)
    if c <= e:
        return cartan.zero()
    return coweight(cartan, lusztig_datum(w, c, e))


def cycles_of(w: Weave) -> dict[int, Cycle]:
    return {e: vertex_cycle(w, e) for e in w.vertex_crossings()}


def lusztig_table(w: Weave) -> list[dict]:
    """Rows for depths ``1..l``: slice word, and per vertex crossing the weights,
    symbolic coweight and coordinates."""
    cartan = type_a(w.n - 1)
    cycles = cycles_of(w)
    rows = []
    for c in range(1, w.depth_count + 1):
        row = {"depth": c, "word": list(w.slice_word(c)), "cycles": {}}
        for e, nu in cycles.items():
            d = lusztig_datum(w, c, e, nu)
            row["cycles"][e] = {
                "weights": list(d.weights),
                "expression": coweight_expression(d) if c > e else "0",
                "coweight": list(coweight(cartan, d)),
            }
        rows.append(row)
    return rows


# -- Langlands dual cycles and the slice pairing --------------------------------------
def dual_cycle(cartan: CartanData, color: int, values: Sequence[int], word: Sequence[int]) -> list[Fraction]:
    """``nu^vee(i) = nu(i) d_{j_i} / d_color``."""
    dc = cartan.sym(color)
    return [Fraction(v * cartan.sym(j), dc) for v, j in zip(values, word)]


def slice_intersection(cartan: CartanData, word: Sequence[int], nu_c: Sequence[int], nu_d: Sequence[int],
                       color_c: int | None = None) -> Fraction:
    """``1/2 sum_{i,k} sign(k - i) nu_c^vee(i) nu_d(k) <alpha^j_i, chi^j_k>``."""
    if not is_reduced_generic(cartan, word):
        raise TropicalError("slice intersection needs a reduced word")
    color = color_c if color_c is not None else word[0] if word else 1
    dual = dual_cycle(cartan, color, nu_c, word)
    roots = inversion_roots(cartan, word)
    coroots = inversion_coroots(cartan, word)
    total = Fraction(0)
    for i in range(len(word)):
        if not dual[i]:
            continue
        for k in range(len(word)):
            if k == i or not nu_d[k]:
                continue
            sign = 1 if k > i else -1
            total += sign * dual[i] * nu_d[k] * pair(cartan, roots[i], coroots[k])
    return total / 2


# -- weighted expressions and Matsumoto transport -----------------------------------
def transport(d: LusztigDatum, chain: Sequence[Move]) -> LusztigDatum:
    """Carry weights along commutation (swap) and braid (tropical) moves."""
    word, f = d.word, list(d.weights)
    for m in chain:
        p = m.position - 1
        if m.kind == 2:
            f[p], f[p + 1] = f[p + 1], f[p]
        else:
            f[p : p + 3] = hexavalent_rule(*f[p : p + 3])
        word = apply_word_move(word, m)
    return LusztigDatum(word, tuple(f))


def matsumoto_check(d: LusztigDatum, n: int) -> bool:
    """Transport ``d`` to every reduced word along a BFS tree, then check every
    move-graph edge is consistent with the transported weights."""
    table = {d.word: d.weights}
    queue = deque([d.word])
    while queue:
        cur = queue.popleft()
        for m, nxt in word_moves(cur):
            if nxt not in table:
                table[nxt] = transport(LusztigDatum(cur, table[cur]), [m]).weights
                queue.append(nxt)
    for word, f in table.items():
        for m, nxt in word_moves(word):
            if transport(LusztigDatum(word, f), [m]).weights != table[nxt]:
                return False
    return True


# -- double Lusztig data ------------------------------------------------------------
@dataclass(frozen=True)
class DoubleLusztigDatum:
    word: tuple[int, ...]
    weights: tuple[int, ...]


def signed_star(x: int, n: int) -> int:
    return (n - abs(x)) * (1 if x > 0 else -1)


def double_value(word: Sequence[int], n: int) -> Perm:
    """``s_{j_l*}^- ... s_{j_1*}^- s_{j_1}^+ ... s_{j_l}^+``."""
    neg = [n + x for x in reversed(word) if x < 0]  # s^-_{j*} with j = -k is s_{k*}
    pos = [x for x in word if x > 0]
    return Perm.from_word(n, neg + pos)


def is_double_reduced(word: Sequence[int], n: int) -> bool:
    return double_value(word, n).length() == len(word)


def datum_to_single(d: DoubleLusztigDatum, n: int) -> LusztigDatum:
    negs = [(n + x, f) for x, f in zip(d.word, d.weights) if x < 0][::-1]
    poss = [(x, f) for x, f in zip(d.word, d.weights) if x > 0]
    items = negs + poss
    return LusztigDatum(tuple(x for x, _ in items), tuple(f for _, f in items))


def double_moves(d: DoubleLusztigDatum, n: int) -> list[tuple[str, int, DoubleLusztigDatum]]:
    """Every applicable B1..B4 move, in order of position."""
    out = []
    for p in range(1, len(d.word)):
        x, y = d.word[p - 1], d.word[p]
        if (x > 0) != (y > 0):
            out.append(("B1", p, double_lusztig_move(d, n, "B1", p)))
        elif abs(abs(x) - abs(y)) > 1:
            out.append(("B2", p, double_lusztig_move(d, n, "B2", p)))
        if p + 2 <= len(d.word):
            z = d.word[p + 1]
            if z == x and (x > 0) == (y > 0) and abs(abs(x) - abs(y)) == 1:
                out.append(("B3", p, double_lusztig_move(d, n, "B3", p)))
    if d.word:
        out.append(("B4", 1, double_lusztig_move(d, n, "B4", 1)))
    return out


def double_lusztig_move(d: DoubleLusztigDatum, n: int, kind: str, position: int = 1) -> DoubleLusztigDatum:
    word, f = list(d.word), list(d.weights)
    p = position - 1
    kind = kind.upper()
    if kind in ("B1", "B2"):
        if not 0 <= p < len(word) - 1:
            raise TropicalError("move window leaves the word")
        x, y = word[p], word[p + 1]
        opposite = (x > 0) != (y > 0)
        if kind == "B1" and not opposite:
            raise TropicalError("B1 needs opposite signs")
        if kind == "B2" and (opposite or abs(abs(x) - abs(y)) < 2):
            raise TropicalError("B2 needs same-sign commuting letters")
        word[p], word[p + 1] = y, x
        f[p], f[p + 1] = f[p + 1], f[p]
    elif kind == "B3":
        if not 0 <= p < len(word) - 2:
            raise TropicalError("move window leaves the word")
        x, y, z = word[p : p + 3]
        if not (x == z and (x > 0) == (y > 0) and abs(abs(x) - abs(y)) == 1):
            raise TropicalError("B3 needs a same-sign window iji")
        word[p : p + 3] = [y, x, y]
        f[p : p + 3] = hexavalent_rule(*f[p : p + 3])
    elif kind == "B4":
        if not word:
            raise TropicalError("B4 needs a nonempty word")
        word[0] = -signed_star(word[0], n)
    else:
        raise TropicalError(f"unknown move {kind}")
    return DoubleLusztigDatum(tuple(word), tuple(f))


def _bfs_double(d: DoubleLusztigDatum, n: int):
    """Breadth-first traversal of the move graph; yields ``(datum, parent_word)``."""
    seen = {d.word: d}
    queue = deque([d])
    order = [d]
    while queue:
        cur = queue.popleft()
        for _, _, nxt in double_moves(cur, n):
            if nxt.word not in seen:
                seen[nxt.word] = nxt
                queue.append(nxt)
                order.append(nxt)
    return seen, order


ETOP_MAX_LENGTH = 10


def etop_preconditions(d: DoubleLusztigDatum, n: int, i: int) -> bool:
    w = double_value(d.word, n)
    if i > 0:
        return not w.right_grows(i)
    return not w.left_grows(n + i)


def etop(d: DoubleLusztigDatum, n: int, i: int) -> DoubleLusztigDatum:
    """Bring the word to one ending with ``i`` (nearest in the move graph), then zero the last weight."""
    if len(d.word) > ETOP_MAX_LENGTH:
        raise TropicalError("etop search refused beyond the size guard")
    if not is_double_reduced(d.word, n):
        raise TropicalError("datum word is not double reduced")
    if not etop_preconditions(d, n, i):
        raise TropicalError(f"{i} cannot be a terminal letter of this datum")
    _, order = _bfs_double(d, n)
    target = next((x for x in order if x.word and x.word[-1] == i), None)
    if target is None:
        raise TropicalError(f"no double reduced word ends with {i}")
    return DoubleLusztigDatum(target.word, target.weights[:-1] + (0,))


def transport_double(d: DoubleLusztigDatum, n: int, word: Sequence[int]) -> DoubleLusztigDatum:
    """Move ``d`` to the given double reduced word along the BFS tree."""
    seen, _ = _bfs_double(d, n)
    word = tuple(word)
    if word not in seen:
        raise TropicalError("target word not reachable by double braid moves")
    return seen[word]


def etop_all_choices(d: DoubleLusztigDatum, n: int, i: int) -> list[DoubleLusztigDatum]:
    """``e^top_i`` computed from every word ending in ``i``, each transported back to ``d.word``."""
    seen, order = _bfs_double(d, n)
    out = []
    for x in order:
        if x.word and x.word[-1] == i:
            y = DoubleLusztigDatum(x.word, x.weights[:-1] + (0,))
            out.append(transport_double(y, n, d.word))
    return out


def double_reduced_words(w: Perm) -> list[tuple[int, ...]]:
    """All double reduced words for ``w`` (exhaustive; small cases only)."""
    n = w.n
    ell = w.length()
    letters = [x for i in range(1, n) for x in (i, -i)]
    out = []

    def rec(prefix: tuple[int, ...]) -> None:
        if len(prefix) == ell:
            if double_value(prefix, n) == w:
                out.append(prefix)
            return
        for x in letters:
            cand = prefix + (x,)
            if double_value(cand, n).length() == len(cand):
                rec(cand)

    rec(())
    return out

