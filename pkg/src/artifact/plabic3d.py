"""Type-A 3D plabic graphs with ``u = w0``, recorded by their positive braid word.

The solidity of each crossing comes from a right-to-left Demazure scan: the
partial product ``delta_j = delta(beta_j)`` of the suffix ``beta_j`` grows by left
multiplication, and crossing ``j`` is solid exactly when ``s_{i_j} delta_j`` does
not lengthen it.  The compiler turns hollow crossings into new weave lines and
solid crossings into a braid-move strip followed by a trivalent vertex, working
directly in the rotated coordinates where the result is a right inductive weave.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Sequence

from .braid import check_word, demazure_of_double, to_single
from .cartan import CartanData
from .seeds import Seed, SeedBuilder, compare_seeds
from .weave import Weave, WeaveBuilder, WeaveError, left_inductive, right_inductive
from .weyl import Perm


class PlabicError(ValueError):
    pass


@dataclass(frozen=True)
class PlabicGraph3D:
    n: int
    word: tuple[int, ...]

    @staticmethod
    def from_dict(d: dict[str, Any]) -> PlabicGraph3D:
        try:
            rank, word = int(d["rank"]), d["word"]
        except (KeyError, TypeError, ValueError) as exc:
            raise PlabicError(f"plabic input needs integer 'rank' and list 'word': {exc}") from None
        return PlabicGraph3D.of(word, rank + 1)

    @staticmethod
    def from_json(text: str) -> PlabicGraph3D:
        return PlabicGraph3D.from_dict(json.loads(text))

    @staticmethod
    def of(word: Sequence[int], n: int) -> PlabicGraph3D:
        w = check_word(list(word), n)
        if any(x < 0 for x in w) and any(x > 0 for x in w):
            raise PlabicError("a 3D plabic word is all positive or all negative")
        return PlabicGraph3D(n, w)

    @property
    def positive(self) -> bool:
        return all(x > 0 for x in self.word)

    def to_dict(self) -> dict[str, Any]:
        return {"rank": self.n - 1, "word": list(self.word)}


def scan_solidity(g: PlabicGraph3D) -> list[bool]:
    """``flags[j-1]`` is True when crossing ``j`` is solid."""
    delta = Perm.identity(g.n)
    flags = [False] * len(g.word)
    for j in range(len(g.word), 0, -1):
        i = abs(g.word[j - 1])
        if delta.left_grows(i):
            delta = delta.left_mul(i)
        else:
            flags[j - 1] = True
    return flags


def hollow_positions(g: PlabicGraph3D) -> list[int]:
    return [j for j, solid in enumerate(scan_solidity(g), start=1) if not solid]


def compile_weave(g: PlabicGraph3D, cartan: CartanData | None = None) -> Weave:
    """Weave of a 3D plabic graph, in the orientation of the weave of its double braid word."""
    if cartan is not None and (cartan.family != "TypeA" or cartan.rank != g.n - 1):
        raise PlabicError("3D plabic graphs are compiled for type A of matching rank only")
    if not g.positive:
        return left_inductive(to_single(g.word, g.n), g.n)
    builder = WeaveBuilder(g.n)
    flags = scan_solidity(g)
    for j in range(len(g.word), 0, -1):
        i = g.word[j - 1]
        if flags[j - 1]:
            builder.merge(i, "R")
        else:
            builder.grow(i, "R")
    return builder.weave()


def reference_weave(g: PlabicGraph3D) -> Weave:
    single = to_single(g.word, g.n)
    return right_inductive(single, g.n) if g.positive else left_inductive(single, g.n)


@dataclass
class PlabicReport:
    word: tuple[int, ...]
    hollow: list[int]
    vertex_crossings: list[int]
    slices_equal: bool
    crossings_mirror: bool
    seeds_equal: bool | None
    detail: str

    @property
    def ok(self) -> bool:
        return self.slices_equal and self.crossings_mirror and self.seeds_equal is not False


def negate_seed(seed: Seed) -> Seed:
    """Opposite quiver: same variables, exchange matrix negated."""
    omega = [[-x for x in row] for row in seed.omega]
    return Seed(list(seed.indices), dict(seed.variables), dict(seed.frozen), omega, dict(seed.d), seed.length,
                dict(seed.extra))


def plabic_seed(g: PlabicGraph3D, opposite_quiver: bool = False) -> Seed:
    """Seed read off the compiled weave; ``opposite_quiver`` negates the exchange matrix."""
    seed = SeedBuilder(g.word, g.n, weave=compile_weave(g)).seed("weave")
    return negate_seed(seed) if opposite_quiver else seed


def verify_plabic(g: PlabicGraph3D, with_seed: bool = True, opposite_quiver: bool = False) -> PlabicReport:
    """Compare the compiled weave with the reference inductive weave.

    Slice words are compared at every integer depth, a stronger test than weave
    equivalence.  ``opposite_quiver`` compares the plabic seed, read with the
    opposite exchange matrix, against the negated reference seed, so the
    verdict does not depend on the flag; it only changes the reported seed.
    """
    compiled = compile_weave(g)
    ref = reference_weave(g)
    l = len(g.word)
    flags = scan_solidity(g)
    mirror_ok = compiled.vertex_crossings() == sorted(l - j for j in range(1, l + 1) if flags[j - 1])
    slices_ok = compiled.slices == ref.slices
    seeds_ok: bool | None = None
    detail = "slices identical" if slices_ok else "slice words differ (equivalence unknown)"
    if with_seed and demazure_of_double(g.word, g.n) == Perm.longest(g.n):
        try:
            mine = plabic_seed(g, opposite_quiver)
            theirs = SeedBuilder(g.word, g.n, weave=ref).seed("weave")
            if opposite_quiver:
                theirs = negate_seed(theirs)
        except (WeaveError, ValueError) as exc:
            seeds_ok, detail = False, f"seed construction failed: {exc}"
        else:
            seeds_ok, why = compare_seeds(mine, theirs)
            detail += "; seeds " + ("identical" if seeds_ok else f"differ: {why}")
    return PlabicReport(g.word, hollow_positions(g), compiled.vertex_crossings(), slices_ok, mirror_ok, seeds_ok,
                        detail)
