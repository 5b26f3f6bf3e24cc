from __future__ import annotations

import json
import random

import pytest

from artifact.braid import is_w0_word
from artifact.plabic3d import (PlabicError, PlabicGraph3D, compile_weave, hollow_positions, plabic_seed,
                               reference_weave, scan_solidity, verify_plabic)
from artifact.seeds import random_w0_word
from artifact.weyl import demazure_product_left

FIGURE_WORD = (1, 2, 2, 1, 2, 2, 1, 1)


def brute_solidity(word, n):
    """Solid iff the Demazure product of the suffix does not change when the letter is prepended."""
    flags = []
    for j in range(1, len(word) + 1):
        after = demazure_product_left(word[j:], n)
        flags.append(demazure_product_left(word[j - 1 :], n) == after)
    return flags


def test_figure_example_hollow_crossings():
    g = PlabicGraph3D.of(FIGURE_WORD, 3)
    assert hollow_positions(g) == [4, 6, 8]
    assert compile_weave(g).vertex_crossings() == [1, 3, 5, 6, 7]


def test_scan_matches_brute_force():
    rng = random.Random(41)
    for _ in range(50):
        n = rng.choice([3, 4])
        word = tuple(rng.randint(1, n - 1) for _ in range(rng.randint(0, 9)))
        assert scan_solidity(PlabicGraph3D.of(word, n)) == brute_solidity(word, n)


def test_trivial_cases():
    assert scan_solidity(PlabicGraph3D.of((1, 2, 1), 3)) == [False, False, False]
    assert scan_solidity(PlabicGraph3D.of((2, 2, 2), 3)) == [True, True, False]
    assert compile_weave(PlabicGraph3D.of((1, 2, 1), 3)).vertices() == []


def test_compiled_equals_reference_on_random_words():
    rng = random.Random(42)
    for _ in range(30):
        n = rng.choice([2, 3, 4])
        g = PlabicGraph3D.of(random_w0_word(n, rng, 10, allow_negative=False), n)
        assert compile_weave(g).slices == reference_weave(g).slices
        rep = verify_plabic(g)
        assert rep.ok and rep.seeds_equal


def test_all_negative_words_delegate_to_left_inductive():
    g = PlabicGraph3D.of((-1, -2, -2, -1, -1), 3)
    w = compile_weave(g)
    assert all(side == "L" for _, side in w.string)
    assert verify_plabic(g).ok


def test_opposite_quiver_negates_exchange_matrix():
    g = PlabicGraph3D.of(FIGURE_WORD, 3)
    assert is_w0_word(FIGURE_WORD, 3)
    a, b = plabic_seed(g), plabic_seed(g, opposite_quiver=True)
    assert b.omega == [[-x for x in row] for row in a.omega]
    assert verify_plabic(g, opposite_quiver=True).ok


def test_json_input():
    g = PlabicGraph3D.from_json(json.dumps({"rank": 2, "word": list(FIGURE_WORD)}))
    assert g == PlabicGraph3D.of(FIGURE_WORD, 3)
    assert PlabicGraph3D.from_dict(g.to_dict()) == g
    with pytest.raises(PlabicError):
        PlabicGraph3D.from_json('{"word": [1]}')
    with pytest.raises(PlabicError):
        PlabicGraph3D.of((1, -1), 3)


def test_non_w0_word_skips_seed_comparison():
    rep = verify_plabic(PlabicGraph3D.of((1, 1), 3))
    assert rep.seeds_equal is None and rep.ok
