"""Cluster seeds of double braid varieties, computed two ways and compared.

The Deodhar route works with grid minors of a double braid word; the weave
route works with the double inductive weave of the same word.  Both produce
cluster variables and an exchange matrix in exact arithmetic.
"""

from __future__ import annotations

from .cartan import CartanData, g2, parse_cartan, type_a
from .plabic3d import PlabicGraph3D, compile_weave, scan_solidity, verify_plabic
from .seeds import (Seed, SeedBuilder, check_move, cluster_variables, deodhar_exchange, mutate, seed_of,
                    verify_main_theorem, weave_exchange)
from .weave import Weave, build_double_inductive, left_inductive, right_inductive, weave_of_double_word
from .weyl import Perm

__all__ = [
    "CartanData", "g2", "parse_cartan", "type_a",
    "PlabicGraph3D", "compile_weave", "scan_solidity", "verify_plabic",
    "Seed", "SeedBuilder", "check_move", "cluster_variables", "deodhar_exchange", "mutate", "seed_of",
    "verify_main_theorem", "weave_exchange",
    "Weave", "build_double_inductive", "left_inductive", "right_inductive", "weave_of_double_word",
    "Perm",
]
