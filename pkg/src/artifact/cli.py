"""Command line front end.

Exit codes: 0 when every requested check passes, 1 on a verification failure,
2 on bad input.  Output depends only on the arguments, including ``--seed``.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Any, Sequence

from .braid import BraidError, applicable_moves, apply_move, double_string_of, format_double_string, parse_word, \
    to_single, w_sequence
from .cartan import CartanData, CartanError, parse_cartan
from .plabic3d import PlabicError, PlabicGraph3D, compile_weave, plabic_seed, verify_plabic
from .seeds import SeedBuilder, SeedError, check_move, random_w0_word, seed_to_dot, seed_to_json, \
    verify_main_theorem
from .tropical import format_coweight, lusztig_table
from .weave import WeaveError, serialize_dot, serialize_json, weave_of_double_word

CHECKS = ("tori", "vars", "forms", "moves")


class InputError(ValueError):
    pass


def _type_a_size(cartan: CartanData) -> int:
    if cartan.family != "TypeA":
        raise InputError("this command realizes geometry for SL_n only; pass a type A Cartan spec")
    return cartan.rank + 1


def _word(args: argparse.Namespace, n: int) -> tuple[int, ...]:
    if args.word is None:
        raise InputError("--word is required")
    return parse_word(args.word, n)


def _need_w0(b: Sequence[int], n: int) -> None:
    if w_sequence(b, n)[0].length() != n * (n - 1) // 2:
        raise InputError("the Demazure product of the word is not w0")


def _emit(args: argparse.Namespace, text: str) -> None:
    out = sys.stdout if args.output in (None, "-") else open(args.output, "w", encoding="utf-8")
    try:
        out.write(text if text.endswith("\n") else text + "\n")
    finally:
        if out is not sys.stdout:
            out.close()


def _dump(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


# -- commands -------------------------------------------------------------------------
def cmd_seed(args: argparse.Namespace, cartan: CartanData) -> int:
    n = _type_a_size(cartan)
    b = _word(args, n)
    _need_w0(b, n)
    seed = SeedBuilder(b, n).seed(args.route)
    if args.format == "dot":
        _emit(args, seed_to_dot(seed))
    elif args.format == "table":
        lines = [f"word {list(b)}  single {list(to_single(b, n))}"]
        for e in seed.indices:
            tag = "frozen" if seed.frozen[e] else "mutable"
            lines.append(f"x{e:<3} {tag:<8} {seed.variables[e].format()}")
        lines.append("epsilon:")
        for row in seed.eps_full():
            lines.append("  " + " ".join(f"{str(x):>5}" for x in row))
        _emit(args, "\n".join(lines))
    else:
        data = seed_to_json(seed)
        data["word"] = list(b)
        data["route"] = args.route
        _emit(args, _dump(data))
    return 0


def cmd_lusztig_table(args: argparse.Namespace, cartan: CartanData) -> int:
    n = _type_a_size(cartan)
    b = _word(args, n)
    rows = lusztig_table(weave_of_double_word(b, n))
    if args.format == "json":
        _emit(args, _dump({"word": list(b), "rows": [{**r, "cycles": {str(k): v for k, v in r["cycles"].items()}}
                                                      for r in rows]}))
        return 0
    cycles = sorted(rows[0]["cycles"]) if rows else []
    header = ["depth", "word"] + [f"nu{e}" for e in cycles] + [f"chi{e}" for e in cycles]
    table = [header]
    for r in rows:
        line = [str(r["depth"]), "".join(map(str, r["word"]))]
        line += ["".join(map(str, r["cycles"][e]["weights"])) for e in cycles]
        line += [f'{r["cycles"][e]["expression"]} = {format_coweight(r["cycles"][e]["coweight"])}' for e in cycles]
        table.append(line)
    widths = [max(len(row[k]) for row in table) for k in range(len(header))]
    _emit(args, "\n".join("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in table))
    return 0


def _parse_checks(text: str) -> list[str]:
    checks = [c.strip() for c in text.split(",") if c.strip()]
    bad = [c for c in checks if c not in CHECKS]
    if bad or not checks:
        raise InputError(f"--checks takes a comma separated subset of {','.join(CHECKS)}")
    return checks


def cmd_verify(args: argparse.Namespace, cartan: CartanData) -> int:
    n = _type_a_size(cartan)
    checks = _parse_checks(args.checks)
    rng = random.Random(args.seed)
    words = [_word(args, n)] if args.word is not None else [random_w0_word(n, rng, args.max_length)
                                                             for _ in range(args.random)]
    lines = [f"verify seed={args.seed} n={n} checks={','.join(checks)} points={args.points}"]
    failed = 0
    for b in words:
        _need_w0(b, n)
        rep = verify_main_theorem(b, n, rng, args.points, checks)
        ok = rep.ok
        parts = []
        if "forms" in checks:
            parts.append(f"forms={rep.forms_relation}")
        if "vars" in checks:
            parts.append(f"h_identity={'ok' if rep.h_identity else 'FAIL'}")
        if "tori" in checks:
            parts.append(f"tori={'ok' if rep.tori else 'FAIL'}({rep.points_in_torus}/{rep.points_tested} in torus)")
        if "moves" in checks:
            kinds: dict[str, list[int]] = {}
            for kind, pos in applicable_moves(b, n):
                m = check_move(b, n, kind, pos)
                kinds.setdefault(kind, [0, 0])
                kinds[kind][0] += m.ok
                kinds[kind][1] += 1
                if not m.ok:
                    ok = False
                    rep.witnesses.append(f"{kind} at {pos}: {m.detail}")
            parts.append("moves=" + ",".join(f"{k}:{a}/{t}" for k, (a, t) in sorted(kinds.items())))
        failed += not ok
        lines.append(f"{'PASS' if ok else 'FAIL'} {list(b)} " + " ".join(parts))
        lines.extend(f"    {w}" for w in rep.witnesses)
    lines.append(f"{len(words) - failed}/{len(words)} words passed")
    _emit(args, "\n".join(lines))
    return 1 if failed else 0


def cmd_move(args: argparse.Namespace, cartan: CartanData) -> int:
    n = _type_a_size(cartan)
    b = _word(args, n)
    kind = args.kind.upper()
    if kind == "B5":
        res = apply_move(b, n, kind)
        _emit(args, f"B5 {list(b)} -> {list(res.word)} (quasi-cluster transformation, seed not compared)")
        return 0
    _need_w0(b, n)
    rep = check_move(b, n, kind, args.pos)
    verdict = f"{rep.expected} at c={rep.c} " + ("verified" if rep.ok else "FAILED")
    text = (f"{rep.kind} {list(b)} -> {list(rep.new_word)}\n"
            f"all_solid={rep.all_solid} special={rep.special}\n{verdict}: {rep.detail}")
    _emit(args, text)
    return 0 if rep.ok else 1


def cmd_plabic(args: argparse.Namespace, cartan: CartanData) -> int:
    if args.input is not None:
        with (sys.stdin if args.input == "-" else open(args.input, encoding="utf-8")) as fh:
            g = PlabicGraph3D.from_json(fh.read())
    else:
        n = _type_a_size(cartan)
        g = PlabicGraph3D.of(_word(args, n), n)
    rep = verify_plabic(g, opposite_quiver=args.opposite_quiver)
    w = compile_weave(g)
    data: dict[str, Any] = {
        "plabic": g.to_dict(),
        "hollow": rep.hollow,
        "vertex_crossings": rep.vertex_crossings,
        "slices": [list(s) for s in w.slices],
        "slices_equal": rep.slices_equal,
        "crossings_mirror": rep.crossings_mirror,
        "seeds_equal": rep.seeds_equal,
        "detail": rep.detail,
        "opposite_quiver": args.opposite_quiver,
    }
    if rep.seeds_equal is not None:
        data["seed"] = seed_to_json(plabic_seed(g, args.opposite_quiver))
    if args.format == "dot":
        _emit(args, serialize_dot(w))
    else:
        _emit(args, _dump(data))
    return 0 if rep.ok else 1


def cmd_weave(args: argparse.Namespace, cartan: CartanData) -> int:
    n = _type_a_size(cartan)
    b = _word(args, n)
    w = weave_of_double_word(b, n)
    if args.format == "json":
        _emit(args, serialize_json(w))
    elif args.format == "table":
        lines = [f"double string {format_double_string(double_string_of(b, n), n)}",
                 f"vertex crossings {w.vertex_crossings()}"]
        lines += [f"depth {d:>2}: {''.join(map(str, s))}" for d, s in enumerate(w.slices)]
        _emit(args, "\n".join(lines))
    else:
        _emit(args, serialize_dot(w))
    return 0


# -- parser ---------------------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cartan", default="A2", help="A<r>, G2, or JSON {'type':'A','rank':r} / {'matrix':...}")
    common.add_argument("--word", help="double braid word, e.g. '-2,1,2,1,-1,1,2'")
    common.add_argument("--seed", type=int, default=0, help="random seed for evaluation points and fuzz words")
    common.add_argument("--output", "-o", help="output file (default stdout)")

    p = argparse.ArgumentParser(prog="artifact", description="Cluster seeds of double braid varieties.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("seed", parents=[common], help="emit the seed of a word")
    s.add_argument("--format", choices=("json", "dot", "table"), default="json")
    s.add_argument("--route", choices=("deodhar", "weave"), default="deodhar")
    s.set_defaults(func=cmd_seed)

    s = sub.add_parser("lusztig-table", parents=[common], help="Lusztig data of the double inductive weave")
    s.add_argument("--format", choices=("table", "json"), default="table")
    s.set_defaults(func=cmd_lusztig_table)

    s = sub.add_parser("verify", parents=[common], help="check tori, variables, 2-forms and moves")
    s.add_argument("--checks", default="tori,vars,forms")
    s.add_argument("--points", type=int, default=20)
    s.add_argument("--random", type=int, default=10, help="number of random words when --word is absent")
    s.add_argument("--max-length", type=int, default=10)
    s.add_argument("--format", choices=("table",), default="table")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("move", parents=[common], help="apply a double braid move and compare seeds")
    s.add_argument("kind", choices=("B1", "B2", "B3", "B4", "B5", "b1", "b2", "b3", "b4", "b5"))
    s.add_argument("--pos", type=int, help="1-based leftmost letter of the window (B1-B3)")
    s.add_argument("--format", choices=("table",), default="table")
    s.set_defaults(func=cmd_move)

    s = sub.add_parser("plabic", parents=[common], help="compile a 3D plabic graph to a weave and verify it")
    s.add_argument("--input", help="JSON file with {'rank': r, 'word': [...]}, '-' for stdin")
    s.add_argument("--opposite-quiver", action="store_true", help="report the seed with the opposite quiver")
    s.add_argument("--format", choices=("json", "dot"), default="json")
    s.set_defaults(func=cmd_plabic)

    s = sub.add_parser("weave", parents=[common], help="double inductive weave of a word")
    s.add_argument("--format", choices=("dot", "json", "table"), default="dot")
    s.set_defaults(func=cmd_weave)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        cartan = parse_cartan(args.cartan)
        return args.func(args, cartan)
    except (InputError, BraidError, CartanError, PlabicError, WeaveError, SeedError, OSError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
