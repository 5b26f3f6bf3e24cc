"""Type A Weyl group elements as permutations, with Demazure products,
Bruhat order, reduced words and the commutation/braid move graph.

Words act by function composition: ``w = s_{j1} ... s_{jk}`` applies
``s_{jk}`` first.  Right multiplication by ``s_i`` swaps positions ``i, i+1``
of the one-line window; left multiplication swaps the values ``i, i+1``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

Word = tuple[int, ...]

MAX_ENUM_N = 8


class WeylError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Perm:
    window: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.window) != list(range(1, len(self.window) + 1)):
            raise WeylError(f"{self.window} is not a permutation window")

    @classmethod
    def identity(cls, n: int) -> Perm:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, n: int, i: int) -> Perm:
        return cls.identity(n).right_mul(i)

    @classmethod
    def longest(cls, n: int) -> Perm:
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def from_word(cls, n: int, word: Iterable[int]) -> Perm:
        w = cls.identity(n)
        for i in word:
            w = w.right_mul(i)
        return w

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, k: int) -> int:
        return self.window[k - 1]

    def __mul__(self, other: Perm) -> Perm:
        return Perm(tuple(self.window[v - 1] for v in other.window))

    def inverse(self) -> Perm:
        inv = [0] * self.n
        for pos, v in enumerate(self.window, start=1):
            inv[v - 1] = pos
        return Perm(tuple(inv))

    def _check(self, i: int) -> None:
        if not 1 <= i < self.n:
            raise WeylError(f"simple reflection s{i} not in S{self.n}")

    def right_mul(self, i: int) -> Perm:
        self._check(i)
        w = list(self.window)
        w[i - 1], w[i] = w[i], w[i - 1]
        return Perm(tuple(w))

    def left_mul(self, i: int) -> Perm:
        self._check(i)
        swap = {i: i + 1, i + 1: i}
        return Perm(tuple(swap.get(v, v) for v in self.window))

    def length(self) -> int:
        w = self.window
        return sum(1 for a in range(self.n) for b in range(a + 1, self.n) if w[a] > w[b])

    def right_grows(self, i: int) -> bool:
        self._check(i)
        return self.window[i - 1] < self.window[i]

    def left_grows(self, i: int) -> bool:
        self._check(i)
        return self.window.index(i) < self.window.index(i + 1)

    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.n + 1))

    def lex_reduced_word(self) -> Word:
        """Lexicographically smallest reduced word."""
        word: list[int] = []
        w = self
        while not w.is_identity():
            i = next(k for k in range(1, self.n) if not w.left_grows(k))
            word.append(i)
            w = w.left_mul(i)
        return tuple(word)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.window)) + "]"


def demazure_step(w: Perm, i: int, side: str = "R") -> Perm:
    """``w * s_i`` (side ``R``) or ``s_i * w`` (side ``L``) if that is longer, else ``w``."""
    if side == "R":
        return w.right_mul(i) if w.right_grows(i) else w
    if side == "L":
        return w.left_mul(i) if w.left_grows(i) else w
    raise WeylError(f"side must be 'L' or 'R', got {side!r}")


def demazure_product(word: Iterable[int], n: int) -> Perm:
    w = Perm.identity(n)
    for i in word:
        w = demazure_step(w, i, "R")
    return w


def demazure_product_left(word: Sequence[int], n: int) -> Perm:
    """Same product folded from the right end with left steps."""
    w = Perm.identity(n)
    for i in reversed(word):
        w = demazure_step(w, i, "L")
    return w


def is_reduced(word: Sequence[int], n: int) -> bool:
    w = Perm.identity(n)
    for i in word:
        if not w.right_grows(i):
            return False
        w = w.right_mul(i)
    return True


def bruhat_leq(u: Perm, w: Perm) -> bool:
    """Rank-matrix (dot) criterion."""
    if u.n != w.n:
        raise WeylError("permutations of different sizes")
    n = u.n
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            cu = sum(1 for a in range(i) if u.window[a] >= j)
            cw = sum(1 for a in range(i) if w.window[a] >= j)
            if cu > cw:
                return False
    return True


# -- word moves ----------------------------------------------------------------
@dataclass(frozen=True)
class Move:
    """A commutation (``kind=2``) or braid (``kind=3``) move at 1-based ``position``."""

    position: int
    kind: int


def apply_word_move(word: Sequence[int], move: Move) -> Word:
    p = move.position - 1
    w = list(word)
    if move.kind == 2:
        a, b = w[p], w[p + 1]
        if abs(a - b) < 2:
            raise WeylError(f"letters {a},{b} do not commute")
        w[p], w[p + 1] = b, a
    elif move.kind == 3:
        a, b, c = w[p : p + 3]
        if not (a == c and abs(a - b) == 1):
            raise WeylError(f"no braid relation at {move.position} in {tuple(word)}")
        w[p : p + 3] = [b, a, b]
    else:
        raise WeylError(f"unsupported move kind {move.kind}")
    return tuple(w)


def word_moves(word: Sequence[int]) -> list[tuple[Move, Word]]:
    """Applicable moves in order of ascending position (commutation before braid at equal position)."""
    out: list[tuple[Move, Word]] = []
    for p in range(len(word) - 1):
        a, b = word[p], word[p + 1]
        if abs(a - b) >= 2:
            m = Move(p + 1, 2)
            out.append((m, apply_word_move(word, m)))
        if p + 2 < len(word) and word[p + 2] == a and abs(a - b) == 1:
            m = Move(p + 1, 3)
            out.append((m, apply_word_move(word, m)))
    return out


def _guard(n: int) -> None:
    if n > MAX_ENUM_N:
        raise WeylError(f"enumeration refused for n={n} > {MAX_ENUM_N}")


def reduced_words(w: Perm) -> set[Word]:
    _guard(w.n)
    start = w.lex_reduced_word()
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for _, nxt in word_moves(cur):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def reduced_word_graph(w: Perm) -> dict[Word, list[tuple[Move, Word]]]:
    """Adjacency lists of the move graph on reduced words of ``w``."""
    return {word: word_moves(word) for word in sorted(reduced_words(w))}


def move_chain(source: Sequence[int], target: Sequence[int], n: int) -> list[Move]:
    """Shortest chain of moves from ``source`` to ``target``; ties go to the leftmost move."""
    _guard(n)
    source, target = tuple(source), tuple(target)
    if not is_reduced(source, n) or not is_reduced(target, n):
        raise WeylError("move_chain needs reduced words")
    if Perm.from_word(n, source) != Perm.from_word(n, target):
        raise WeylError("words represent different elements")
    parent: dict[Word, tuple[Word, Move] | None] = {source: None}
    queue = deque([source])
    while queue:
        cur = queue.popleft()
        if cur == target:
            break
        for move, nxt in word_moves(cur):
            if nxt not in parent:
                parent[nxt] = (cur, move)
                queue.append(nxt)
    chain: list[Move] = []
    cur = target
    while parent[cur] is not None:
        prev, move = parent[cur]  # type: ignore[misc]
        chain.append(move)
        cur = prev
    return chain[::-1]


def find_chain(source: Sequence[int], n: int, accept) -> tuple[list[Move], Word]:
    """BFS from ``source`` to the first reduced word satisfying ``accept``."""
    _guard(n)
    source = tuple(source)
    parent: dict[Word, tuple[Word, Move] | None] = {source: None}
    queue = deque([source])
    found = None
    while queue:
        cur = queue.popleft()
        if accept(cur):
            found = cur
            break
        for move, nxt in word_moves(cur):
            if nxt not in parent:
                parent[nxt] = (cur, move)
                queue.append(nxt)
    if found is None:
        raise WeylError("no reduced word satisfies the requested condition")
    chain: list[Move] = []
    cur = found
    while parent[cur] is not None:
        prev, move = parent[cur]  # type: ignore[misc]
        chain.append(move)
        cur = prev
    return chain[::-1], found


def replay(word: Sequence[int], chain: Iterable[Move]) -> Word:
    out = tuple(word)
    for m in chain:
        out = apply_word_move(out, m)
    return out
