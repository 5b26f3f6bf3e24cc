"""Braid words, double braid words and double strings for ``SL_n``.

A double braid word is a sequence of nonzero signed indices in ``±[1, n-1]``.
Crossings are numbered ``c = 1..l`` from the left, and the running Weyl group
elements ``w_c`` are indexed the same way, with ``w_l = id`` and ``w_0`` the
Demazure product.  The double string lists the letters from the right, so
entry ``k`` corresponds to crossing ``c = l + 1 - k`` and ``c̄ = l - c``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .weyl import Perm, demazure_product, demazure_step, is_reduced

Letter = int
DoubleString = tuple[tuple[int, str], ...]


class BraidError(ValueError):
    pass


def star(i: int, n: int) -> int:
    """``i*`` in ``SL_n``."""
    return n - i


def check_word(b: Sequence[int], n: int, allow_negative: bool = True) -> tuple[int, ...]:
    out = []
    for pos, x in enumerate(b, start=1):
        if not isinstance(x, int) or x == 0 or abs(x) > n - 1 or (x < 0 and not allow_negative):
            raise BraidError(f"invalid letter {x!r} at position {pos} for SL_{n}")
        out.append(x)
    return tuple(out)


def parse_word(text: str, n: int, allow_negative: bool = True) -> tuple[int, ...]:
    """Parse ``"-2,1,2"``, ``"[-2, 1, 2]"`` or ``"-2 1 2"``."""
    tokens = [t for t in re.split(r"[\s,\[\]]+", text.strip()) if t]
    letters = []
    for pos, tok in enumerate(tokens, start=1):
        try:
            letters.append(int(tok))
        except ValueError:
            raise BraidError(f"cannot parse letter {tok!r} at position {pos}") from None
    return check_word(letters, n, allow_negative)


def mirror(c: int, length: int) -> int:
    """``c̄ = l - c``, the depth matching Deodhar index ``c``."""
    return length - c


def negative_positions(b: Sequence[int]) -> list[int]:
    return [c for c, x in enumerate(b, start=1) if x < 0]


def positive_positions(b: Sequence[int]) -> list[int]:
    return [c for c, x in enumerate(b, start=1) if x > 0]


def to_single(b: Sequence[int], n: int) -> tuple[int, ...]:
    """Starred negatives in order, then the positives reversed."""
    neg = [star(-x, n) for x in b if x < 0]
    pos = [x for x in b if x > 0][::-1]
    return tuple(neg + pos)


def demazure_of_double(b: Sequence[int], n: int) -> Perm:
    return w_sequence(b, n)[0]


def w_sequence(b: Sequence[int], n: int) -> list[Perm]:
    """``[w_0, ..., w_l]`` with ``w_l = id``; a positive letter multiplies on the
    right, a negative letter ``-j`` by ``s_{j*}`` on the left, Demazure style."""
    l = len(b)
    w: list[Perm] = [Perm.identity(n)] * (l + 1)
    for c in range(l, 0, -1):
        x = b[c - 1]
        if x > 0:
            w[c - 1] = demazure_step(w[c], x, "R")
        else:
            w[c - 1] = demazure_step(w[c], star(-x, n), "L")
    return w


def solid_indices(b: Sequence[int], n: int) -> list[int]:
    """Solid crossings ``e`` (where ``w_{e-1} = w_e``) in decreasing order."""
    w = w_sequence(b, n)
    return [c for c in range(len(b), 0, -1) if w[c - 1] == w[c]]


def is_solid(b: Sequence[int], n: int, c: int) -> bool:
    w = w_sequence(b, n)
    return w[c - 1] == w[c]


# -- double strings ------------------------------------------------------------
def double_string_of(b: Sequence[int], n: int) -> DoubleString:
    out = []
    for x in reversed(b):
        out.append((x, "R") if x > 0 else (star(-x, n), "L"))
    return tuple(out)


def double_word_of(s: Sequence[tuple[int, str]], n: int) -> tuple[int, ...]:
    out = []
    for i, side in reversed(s):
        if side == "R":
            out.append(i)
        elif side == "L":
            out.append(-star(i, n))
        else:
            raise BraidError(f"side must be L or R, got {side!r}")
    return tuple(out)


def format_double_string(s: Sequence[tuple[int, str]], n: int) -> str:
    """Render ``L`` entries as ``j*L`` with ``j = i*``, matching the word's negative letter."""
    parts = []
    for i, side in s:
        parts.append(f"{i}R" if side == "R" else f"{star(i, n)}*L")
    return " ".join(parts)


def parse_double_string(text: str, n: int) -> DoubleString:
    out = []
    for tok in text.split():
        m = re.fullmatch(r"(\d+)(\*?)([LR])", tok)
        if not m:
            raise BraidError(f"cannot parse double string entry {tok!r}")
        i = int(m.group(1))
        if not 1 <= i <= n - 1:
            raise BraidError(f"index {i} out of range in {tok!r}")
        if m.group(2):
            i = star(i, n)
        out.append((i, m.group(3)))
    return tuple(out)


def w_sequence_of_string(s: Sequence[tuple[int, str]], n: int) -> list[Perm]:
    """``[w^s_0, ..., w^s_l]`` with ``w^s_0 = id``."""
    w = [Perm.identity(n)]
    for i, side in s:
        w.append(demazure_step(w[-1], i, side))
    return w


# -- v-sequences ---------------------------------------------------------------
@dataclass(frozen=True)
class VSequence:
    e: int
    v: tuple[Perm, ...]

    @property
    def mutable(self) -> bool:
        v0 = self.v[0]
        return v0 == Perm.longest(v0.n)


def v_sequence(b: Sequence[int], n: int, e: int) -> VSequence:
    """Follow ``w_c`` down to ``e``, take the plain (length-dropping) product at ``e``,
    then continue with Demazure steps."""
    w = w_sequence(b, n)
    if not 1 <= e <= len(b) or w[e - 1] != w[e]:
        raise BraidError(f"crossing {e} is not solid")
    v = list(w)
    x = b[e - 1]
    v[e - 1] = w[e].right_mul(x) if x > 0 else w[e].left_mul(star(-x, n))
    for c in range(e - 1, 0, -1):
        y = b[c - 1]
        v[c - 1] = demazure_step(v[c], y, "R") if y > 0 else demazure_step(v[c], star(-y, n), "L")
    return VSequence(e, tuple(v))


def is_mutable(b: Sequence[int], n: int, e: int) -> bool:
    return v_sequence(b, n, e).mutable


# -- double braid moves -----------------------------------------------------------
@dataclass(frozen=True)
class MoveResult:
    word: tuple[int, ...]
    kind: str
    position: int
    c: int
    all_solid: bool
    special: bool


def _sign(x: int) -> int:
    return 1 if x > 0 else -1


def apply_move(b: Sequence[int], n: int, kind: str, position: int | None = None) -> MoveResult:
    """Apply a double braid move.

    ``position`` is the 1-based index of the leftmost letter in the window; it is
    implied for B4 (last letter) and B5 (first letter).  ``c`` in the result is
    the index of the rightmost letter of the window, the crossing at which a
    mutation happens.
    """
    b = tuple(b)
    l = len(b)
    kind = kind.upper()
    w = w_sequence(b, n)

    def solid(c: int) -> bool:
        return w[c - 1] == w[c]

    if kind == "B4":
        if not b:
            raise BraidError("B4 needs a nonempty word")
        x = b[-1]
        new = b[:-1] + ((-star(x, n)) if x > 0 else star(-x, n),)
        return MoveResult(new, kind, l, l, solid(l), False)
    if kind == "B5":
        if not b:
            raise BraidError("B5 needs a nonempty word")
        return MoveResult((-b[0],) + b[1:], kind, 1, 1, solid(1), False)
    if position is None:
        raise BraidError(f"{kind} needs a position")
    p = position
    if kind in ("B1", "B2"):
        if not 1 <= p < l:
            raise BraidError(f"{kind} window at {p} leaves the word")
        x, y = b[p - 1], b[p]
        c = p + 1
        if kind == "B1":
            if _sign(x) == _sign(y):
                raise BraidError("B1 needs letters of opposite signs")
            both = solid(p) and solid(c)
            pos_letter, neg_letter = (x, -y) if x > 0 else (y, -x)
            special = both and w[c].right_mul(pos_letter) == w[c].left_mul(star(neg_letter, n))
        else:
            if _sign(x) != _sign(y) or abs(abs(x) - abs(y)) < 2:
                raise BraidError("B2 needs same-sign commuting letters")
            both = solid(p) and solid(c)
            special = False
        new = b[: p - 1] + (y, x) + b[p + 1 :]
        return MoveResult(new, kind, p, c, both, special)
    if kind == "B3":
        if not 1 <= p <= l - 2:
            raise BraidError("B3 window leaves the word")
        x, y, z = b[p - 1 : p + 2]
        if not (x == z and _sign(x) == _sign(y) and abs(abs(x) - abs(y)) == 1):
            raise BraidError("B3 needs a same-sign window iji with |i - j| = 1")
        c = p + 2
        all_solid = solid(p) and solid(p + 1) and solid(c)
        new = b[: p - 1] + (y, x, y) + b[p + 2 :]
        return MoveResult(new, kind, p, c, all_solid, False)
    raise BraidError(f"unknown move {kind}")


def applicable_moves(b: Sequence[int], n: int) -> list[tuple[str, int]]:
    """All ``(kind, position)`` pairs that :func:`apply_move` accepts, B5 excluded."""
    out: list[tuple[str, int]] = []
    l = len(b)
    for p in range(1, l):
        x, y = b[p - 1], b[p]
        if _sign(x) != _sign(y):
            out.append(("B1", p))
        elif abs(abs(x) - abs(y)) >= 2:
            out.append(("B2", p))
        if p <= l - 2:
            z = b[p + 1]
            if x == z and _sign(x) == _sign(y) and abs(abs(x) - abs(y)) == 1:
                out.append(("B3", p))
    if l:
        out.append(("B4", l))
    return out


def richardson_to_braid(v_word: Sequence[int], w_word: Sequence[int], n: int) -> tuple[int, ...]:
    """``beta * reverse(w_word)`` where ``v_word`` is a reduced word for ``w0 v``."""
    if not is_reduced(v_word, n):
        raise BraidError("v_word is not reduced")
    if not is_reduced(w_word, n):
        raise BraidError("w_word is not reduced")
    return tuple(v_word) + tuple(reversed(w_word))


def is_w0_word(b: Sequence[int], n: int) -> bool:
    return demazure_of_double(b, n) == Perm.longest(n)


def all_double_words(n: int, length: int) -> Iterable[tuple[int, ...]]:
    """Every double braid word of the given length (exponential; tests only)."""
    letters = [x for i in range(1, n) for x in (i, -i)]
    if length == 0:
        yield ()
        return
    for rest in all_double_words(n, length - 1):
        for x in letters:
            yield rest + (x,)


def single_demazure(word: Sequence[int], n: int) -> Perm:
    return demazure_product(word, n)
