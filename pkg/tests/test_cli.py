from __future__ import annotations

import json
import subprocess
import sys
from fractions import Fraction

from artifact.cli import main

RUNNING = "-2,1,2,1,-1,1,2"


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_seed_json(capsys):
    code, out, _ = run(capsys, "seed", f"--word={RUNNING}")
    data = json.loads(out)
    assert code == 0 and len(data["variables"]) == 4
    assert [v["frozen"] for v in data["variables"]] == [False, False, True, True]


def test_seed_of_reduced_word_is_empty(capsys):
    code, out, _ = run(capsys, "seed", "--word=1,2,1")
    assert code == 0 and json.loads(out)["variables"] == []


def test_invalid_letter_reports_position(capsys):
    code, _, err = run(capsys, "seed", "--word=1,3,1")
    assert code == 2 and "position 2" in err


def test_non_w0_word_is_input_error(capsys):
    assert run(capsys, "seed", "--word=1,1")[0] == 2


def test_bad_flag_is_input_error(capsys):
    assert run(capsys, "seed", "--format=png", f"--word={RUNNING}")[0] == 2
    assert run(capsys, "verify", "--checks=bogus", f"--word={RUNNING}")[0] == 2
    assert run(capsys, "seed", "--cartan=G2", f"--word={RUNNING}")[0] == 2


def test_lusztig_table(capsys):
    code, out, _ = run(capsys, "lusztig-table", f"--word={RUNNING}")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 8
    assert "s2s1·χ2 = χ1" in lines[5]
    code, out, _ = run(capsys, "lusztig-table", "--word=1", "--format=json")
    assert code == 0 and len(json.loads(out)["rows"]) == 1


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", f"--word={RUNNING}", "--checks=tori,vars,moves")
    assert code == 0 and "1/1 words passed" in out
    code, out, _ = run(capsys, "verify", f"--word={RUNNING}")
    assert code == 1 and "forms=negated" in out


def test_verify_random_words_is_deterministic(capsys):
    first = run(capsys, "verify", "--random=3", "--seed=7", "--checks=tori,vars")
    second = run(capsys, "verify", "--random=3", "--seed=7", "--checks=tori,vars")
    assert first == second and first[0] == 0
    assert "seed=7" in first[1].splitlines()[0]


def test_move_b3_mutation(capsys):
    code, out, _ = run(capsys, "move", "B3", "--word=1,2,1,1,2,1", "--pos=1")
    assert code == 0 and "mutation at c=3 verified" in out


def test_move_b5_word_only(capsys):
    code, out, _ = run(capsys, "move", "B5", f"--word={RUNNING}")
    assert code == 0 and "[2, 1, 2, 1, -1, 1, 2]" in out


def test_plabic_command(capsys, tmp_path):
    path = tmp_path / "g.json"
    path.write_text(json.dumps({"rank": 2, "word": [1, 2, 2, 1, 2, 2, 1, 1]}))
    code, out, _ = run(capsys, "plabic", f"--input={path}")
    data = json.loads(out)
    assert code == 0 and data["hollow"] == [4, 6, 8] and data["seeds_equal"]
    code, out2, _ = run(capsys, "plabic", f"--input={path}", "--opposite-quiver")
    eps1, eps2 = data["seed"]["epsilon"], json.loads(out2)["seed"]["epsilon"]
    assert eps2 == [[_neg(x) for x in row] for row in eps1]


def _neg(x: int | str) -> int | str:
    return -x if isinstance(x, int) else str(-Fraction(x))


def test_weave_dot_vertex_counts(capsys):
    code, out, _ = run(capsys, "weave", f"--word={RUNNING}")
    assert code == 0
    assert out.count('label="3"') == 4 and out.count('label="6"') == 1


def test_output_file(capsys, tmp_path):
    path = tmp_path / "w.json"
    assert run(capsys, "weave", f"--word={RUNNING}", "--format=json", f"--output={path}")[0] == 0
    assert json.loads(path.read_text())["n"] == 3


def test_module_entry_point_is_byte_identical():
    cmd = [sys.executable, "-m", "artifact", "seed", f"--word={RUNNING}", "--format=dot"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a.startswith(b"digraph quiver {")
