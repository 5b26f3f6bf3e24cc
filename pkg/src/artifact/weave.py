"""Depth-stratified weaves and the double inductive weave builder.

A weave is stored as a replayable list of strips.  Strip ``k`` (``1 <= k <= l``)
sits between depth ``k-1`` and depth ``k``: a new line of color ``i_k`` enters on
side ``L`` or ``R``; if the Demazure product grows nothing else happens,
otherwise the current slice is rewritten by 4- and 6-valent vertices until it
begins (``L``) or ends (``R``) with ``i_k`` and a trivalent vertex merges that
strand with the new line.  Every edge segment has a stable integer id.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Sequence, Union

from .braid import DoubleString, double_string_of, double_word_of
from .cartan import CartanData
from .weyl import Move, Perm, demazure_step, find_chain

Word = tuple[int, ...]


class WeaveError(ValueError):
    pass


@dataclass(frozen=True)
class Vertex:
    """A weave vertex.  ``inputs``/``outputs`` are edge ids left to right, top and bottom."""

    kind: str  # "4", "6" or "3"
    strip: int
    inputs: tuple[int, ...]
    outputs: tuple[int, ...]
    position: int  # 1-based slice position of the leftmost input strand (after the new line is placed)
    color: int = 0
    side: str = ""


@dataclass(frozen=True)
class Strip:
    k: int
    letter: int
    side: str
    grows: bool
    new_edge: int
    moves: tuple[Move, ...]
    vertices: tuple[Vertex, ...]

    @property
    def trivalent(self) -> Vertex | None:
        return next((v for v in self.vertices if v.kind == "3"), None)


@dataclass(frozen=True)
class Edge:
    id: int
    color: int
    born: int  # strip that created it (0 never occurs: every edge starts inside a strip)
    dies: int | None  # strip that consumed it, None if it reaches the bottom


@dataclass(frozen=True)
class Weave:
    n: int
    string: DoubleString
    strips: tuple[Strip, ...]
    slices: tuple[Word, ...]
    slice_edges: tuple[tuple[int, ...], ...]
    edges: tuple[Edge, ...] = field(compare=True)

    @property
    def depth_count(self) -> int:
        return len(self.strips)

    def edge(self, eid: int) -> Edge:
        return self.edges[eid]

    def slice_word(self, depth: int) -> Word:
        if not 0 <= depth <= self.depth_count:
            raise WeaveError(f"depth {depth} outside 0..{self.depth_count}")
        return self.slices[depth]

    def vertex_crossings(self) -> list[int]:
        """``J^We``: ``e`` such that strip ``e+1`` carries a trivalent vertex, ascending."""
        return [s.k - 1 for s in self.strips if not s.grows]

    def trivalent_of(self, e: int) -> Vertex:
        strip = self.strips[e]  # strip k = e + 1 lives at list index e
        tri = strip.trivalent
        if tri is None:
            raise WeaveError(f"{e} is not a vertex crossing")
        return tri

    def vertices(self) -> list[Vertex]:
        return [v for s in self.strips for v in s.vertices]

    def truncate(self, depth: int) -> Weave:
        if not 0 <= depth <= self.depth_count:
            raise WeaveError(f"depth {depth} outside 0..{self.depth_count}")
        alive = {e for s in self.strips[:depth] for v in s.vertices for e in v.outputs} | {
            s.new_edge for s in self.strips[:depth]
        }
        edges = tuple(
            Edge(e.id, e.color, e.born, e.dies if e.dies is not None and e.dies <= depth else None)
            for e in self.edges
            if e.id in alive
        )
        if [e.id for e in edges] != list(range(len(edges))):
            raise WeaveError("edge ids are not creation-ordered")
        return Weave(self.n, self.string[:depth], self.strips[:depth], self.slices[: depth + 1],
                     self.slice_edges[: depth + 1], edges)

    def element(self, depth: int) -> Perm:
        return Perm.from_word(self.n, self.slices[depth])


def _check_cartan(n: int | CartanData) -> int:
    if isinstance(n, CartanData):
        if n.family != "TypeA" or not n.is_simply_laced():
            raise WeaveError("weaves are built only for type A data (braid moves with m_ij > 3 unsupported)")
        return n.rank + 1
    return n


class WeaveBuilder:
    """Incremental strip-by-strip construction.

    Callers decide for each strip whether the new line grows the slice or is
    merged by a trivalent vertex; :func:`build_double_inductive` decides by the
    Demazure product, the plabic compiler by its own solidity scan.
    """

    def __init__(self, n: int, mirror_rewrite: bool = False) -> None:
        self.n = n
        self.mirror_rewrite = mirror_rewrite
        self.edges: list[list[Any]] = []  # [color, born, dies]
        self.word: Word = ()
        self.ids: tuple[int, ...] = ()
        self.string: list[tuple[int, str]] = []
        self.slices: list[Word] = [()]
        self.slice_edges: list[tuple[int, ...]] = [()]
        self.strips: list[Strip] = []

    def _new_edge(self, color: int, strip: int) -> int:
        self.edges.append([color, strip, None])
        return len(self.edges) - 1

    def _finish(self) -> None:
        self.slices.append(self.word)
        self.slice_edges.append(self.ids)

    def grow(self, i: int, side: str) -> None:
        k = len(self.strips) + 1
        self.string.append((i, side))
        line = self._new_edge(i, k)
        if side == "R":
            self.word, self.ids = self.word + (i,), self.ids + (line,)
        else:
            self.word, self.ids = (i,) + self.word, (line,) + self.ids
        self.strips.append(Strip(k, i, side, True, line, (), ()))
        self._finish()

    def merge(self, i: int, side: str) -> None:
        k = len(self.strips) + 1
        self.string.append((i, side))
        line = self._new_edge(i, k)
        word, ids, edges = self.word, self.ids, self.edges
        if side == "R":
            accept = lambda u: u[-1] == i
        else:
            accept = lambda u: u[0] == i
        if self.mirror_rewrite:
            chain_m, _ = find_chain(tuple(reversed(word)), self.n, lambda u: accept(tuple(reversed(u))))
            chain = [_mirror_move(m, len(word)) for m in chain_m]
        else:
            chain, _ = find_chain(word, self.n, accept)
        verts: list[Vertex] = []
        offset = 1 if side == "L" else 0  # slice positions include the new line on the left
        for m in chain:
            p = m.position - 1
            width = 2 if m.kind == 2 else 3
            before = word[p : p + width]
            after = (before[1], before[0]) if width == 2 else (before[1], before[0], before[1])
            ins = ids[p : p + width]
            outs = tuple(self._new_edge(c, k) for c in after)
            for e in ins:
                edges[e][2] = k
            verts.append(Vertex(str(2 * width), k, ins, outs, m.position + offset))
            word = word[:p] + after + word[p + width :]
            ids = ids[:p] + outs + ids[p + width :]
        bottom = self._new_edge(i, k)
        if side == "R":
            ins = (ids[-1], line)
            ids = ids[:-1] + (bottom,)
            pos = len(word)
        else:
            ins = (line, ids[0])
            ids = (bottom,) + ids[1:]
            pos = 1
        for e in ins:
            edges[e][2] = k
        verts.append(Vertex("3", k, ins, (bottom,), pos, i, side))
        self.word, self.ids = word, ids
        self.strips.append(Strip(k, i, side, False, line, tuple(chain), tuple(verts)))
        self._finish()

    def weave(self) -> Weave:
        return Weave(self.n, tuple(self.string), tuple(self.strips), tuple(self.slices), tuple(self.slice_edges),
                     tuple(Edge(j, c, b, d) for j, (c, b, d) in enumerate(self.edges)))


def build_double_inductive(s: Sequence[tuple[int, str]], n: Union[int, CartanData], require_w0: bool = False,
                           mirror_rewrite: bool = False) -> Weave:
    """Build the double inductive weave of a double string.

    ``mirror_rewrite`` uses the mirror image of the greedy rewrite (search from the
    reversed word); both choices give the same slice words whenever the target is
    unique, and equivalent weaves always.
    """
    n = _check_cartan(n)
    s = tuple((int(i), str(side)) for i, side in s)
    for i, side in s:
        if not 1 <= i <= n - 1 or side not in ("L", "R"):
            raise WeaveError(f"invalid double string entry {(i, side)}")
    builder = WeaveBuilder(n, mirror_rewrite)
    w = Perm.identity(n)
    for i, side in s:
        nxt = demazure_step(w, i, side)
        if nxt != w:
            builder.grow(i, side)
            w = nxt
        else:
            builder.merge(i, side)
    if require_w0 and w != Perm.longest(n):
        raise WeaveError("Demazure product of the double string is not w0")
    return builder.weave()


def _mirror_move(m: Move, length: int) -> Move:
    width = 2 if m.kind == 2 else 3
    return Move(length - (m.position - 1) - width + 1, m.kind)


def weave_of_double_word(b: Sequence[int], n: int) -> Weave:
    return build_double_inductive(double_string_of(b, n), n)


def right_inductive(beta: Sequence[int], n: int) -> Weave:
    """Weave of the double string ``(i_1 R, ..., i_r R)``, a weave for ``beta``."""
    return build_double_inductive(tuple((i, "R") for i in beta), n)


def left_inductive(beta: Sequence[int], n: int) -> Weave:
    """Weave of ``(i_r L, ..., i_1 L)``, whose single braid word is again ``beta``."""
    return build_double_inductive(tuple((i, "L") for i in reversed(beta)), n)


def underlying_double_word(w: Weave) -> tuple[int, ...]:
    return double_word_of(w.string, w.n)


def replay_slices(w: Weave) -> list[Word]:
    """Recompute each slice word from the strip events alone."""
    word: Word = ()
    out = [word]
    for strip in w.strips:
        word = (strip.letter,) + word if strip.side == "L" else word + (strip.letter,)
        for v in strip.vertices:
            p = v.position - 1
            if v.kind == "4":
                word = word[:p] + (word[p + 1], word[p]) + word[p + 2 :]
            elif v.kind == "6":
                a, b = word[p], word[p + 1]
                word = word[:p] + (b, a, b) + word[p + 3 :]
            else:
                word = word[:p] + word[p + 1 :]
        out.append(word)
    return out


# -- serialization ---------------------------------------------------------------
_PALETTE = ["red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "teal"]


def serialize_dot(w: Weave) -> str:
    lines = ["graph weave {", "  node [shape=point];"]
    if not w.strips:
        lines.append("}")
        return "\n".join(lines) + "\n"
    producer: dict[int, str] = {}
    consumer: dict[int, str] = {}
    for strip in w.strips:
        producer[strip.new_edge] = f"top{strip.new_edge}"
        lines.append(f'  top{strip.new_edge} [shape=plaintext, label="{strip.letter}{strip.side}"];')
        for j, v in enumerate(strip.vertices):
            name = f"v{strip.k}_{j}"
            lines.append(f'  {name} [shape=circle, label="{v.kind}", xlabel="d{strip.k}"];')
            for e in v.inputs:
                consumer[e] = name
            for e in v.outputs:
                producer[e] = name
    for e in w.edges:
        if e.id not in consumer:
            consumer[e.id] = f"bottom{e.id}"
            lines.append(f"  bottom{e.id} [shape=plaintext, label=\"\"];")
    for e in w.edges:
        color = _PALETTE[(e.color - 1) % len(_PALETTE)]
        lines.append(f'  {producer[e.id]} -- {consumer[e.id]} [color={color}, label="e{e.id}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_dict(w: Weave) -> dict[str, Any]:
    return {
        "n": w.n,
        "string": [[i, s] for i, s in w.string],
        "slices": [list(x) for x in w.slices],
        "slice_edges": [list(x) for x in w.slice_edges],
        "edges": [{"id": e.id, "color": e.color, "born": e.born, "dies": e.dies} for e in w.edges],
        "strips": [
            {
                "k": s.k,
                "letter": s.letter,
                "side": s.side,
                "grows": s.grows,
                "new_edge": s.new_edge,
                "moves": [[m.position, m.kind] for m in s.moves],
                "vertices": [
                    {"kind": v.kind, "in": list(v.inputs), "out": list(v.outputs), "position": v.position,
                     "color": v.color, "side": v.side}
                    for v in s.vertices
                ],
            }
            for s in w.strips
        ],
    }


def serialize_json(w: Weave) -> str:
    return json.dumps(to_dict(w), sort_keys=True)


def from_json(text: str) -> Weave:
    d = json.loads(text)
    strips = tuple(
        Strip(
            s["k"], s["letter"], s["side"], s["grows"], s["new_edge"],
            tuple(Move(p, k) for p, k in s["moves"]),
            tuple(Vertex(v["kind"], s["k"], tuple(v["in"]), tuple(v["out"]), v["position"], v["color"], v["side"])
                  for v in s["vertices"]),
        )
        for s in d["strips"]
    )
    return Weave(
        d["n"],
        tuple((i, side) for i, side in d["string"]),
        strips,
        tuple(tuple(x) for x in d["slices"]),
        tuple(tuple(x) for x in d["slice_edges"]),
        tuple(Edge(e["id"], e["color"], e["born"], e["dies"]) for e in d["edges"]),
    )
