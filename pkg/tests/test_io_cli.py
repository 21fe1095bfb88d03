import json

import pytest

from posetdist import (Embedding, gen_boolean, gen_divisibility, pentagon)
from posetdist.cli import main
from posetdist.errors import ParseError
from posetdist.io import (coloring_json, dump_poset, embedding_text, load_poset,
                          parse_coloring, parse_embedding, parse_json, parse_text, to_dot,
                          to_json, to_text)

M_TEXT = """# the pentagon
label 0 z
label 1 w
label 2 y
label 3 x
label 4 v
z < w
z < y
y < x
w < v
x < v
"""


def test_text_round_trip():
    m = parse_text(M_TEXT)
    assert m == pentagon()
    assert parse_text(to_text(m)) == m
    L = gen_divisibility(150)
    assert parse_text(to_text(L)) == L


def test_json_round_trip():
    L = gen_boolean(3)
    assert parse_json(to_json(L)) == L


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as err:
        parse_text("0 < 1\n\n1 <\n")
    assert err.value.line == 3
    with pytest.raises(ParseError):
        parse_text("0 < 1\n1 < 0\n")
    with pytest.raises(ParseError):
        parse_text("label x y\n")
    with pytest.raises(ParseError):
        parse_json("{")


def test_empty_text():
    assert parse_text("").n == 0
    assert parse_text("n 3\n").n == 3


def test_dot_layers_by_rank():
    dot = to_dot(pentagon())
    assert "rankdir=BT" in dot
    assert "{ rank=same; 1 2 }" in dot
    assert dot.count("->") == 5


def test_embedding_and_coloring_round_trip():
    emb = Embedding(((0,), (2, 1), (3,)))
    assert parse_embedding(embedding_text(emb)) == emb
    with pytest.raises(ParseError):
        parse_embedding("rank 1: 0\n")
    from posetdist import Coloring
    c = Coloring((0, 1, 1), ("green", "red"))
    assert parse_coloring(coloring_json(c)) == c
    assert parse_coloring("[0, 1, 0]").colors == (0, 1, 0)


@pytest.fixture
def files(tmp_path):
    m = tmp_path / "m.txt"
    m.write_text(M_TEXT)
    l150 = tmp_path / "l150.txt"
    dump_poset(gen_divisibility(150), l150)
    return tmp_path, m, l150


def test_cli_analyze(files, capsys):
    _, m, l150 = files
    assert main(["analyze", str(m)]) == 0
    out = capsys.readouterr().out
    assert "lattice: yes" in out and "distributive: no" in out and "|Aut|: 1" in out
    assert main(["analyze", str(l150)]) == 0
    out = capsys.readouterr().out
    assert "|Q_L|: 4" in out and "|J(Q_L)|: 12" in out


def test_cli_analyze_empty(tmp_path, capsys):
    empty = tmp_path / "e.txt"
    empty.write_text("")
    assert main(["analyze", str(empty)]) == 0
    assert "n: 0" in capsys.readouterr().out


def test_cli_gen(tmp_path):
    out = tmp_path / "b3.json"
    assert main(["gen", "boolean", "3", "-o", str(out)]) == 0
    assert load_poset(out).n == 8
    out = tmp_path / "l.txt"
    assert main(["gen", "divisibility", "150", "-o", str(out)]) == 0
    assert load_poset(out) == gen_divisibility(150)
    out = tmp_path / "c.txt"
    assert main(["gen", "chains", "3x2", "-o", str(out)]) == 0
    assert len(load_poset(out).covers) == 3
    assert main(["gen", "boolean", "40"]) == 1
    assert main(["gen", "chains", "3y2"]) == 2


def test_cli_color(files, capsys):
    tmp, m, l150 = files
    out = tmp / "c.json"
    assert main(["color", "linext", str(l150), "-o", str(out)]) == 0
    text = capsys.readouterr().out
    assert "colors: 2" in text and "red points: 3" in text and "PASS" in text
    assert json.loads(out.read_text())["colors"].count(1) == 3
    assert main(["color", "dilworth", str(m)]) == 0
    assert "colors: 2" in capsys.readouterr().out
    assert main(["color", "boolean", "4"]) == 0
    text = capsys.readouterr().out
    assert "PASS" in text and int(text.split("colors: ")[1].split()[0]) <= 7
    assert main(["color", "linext", str(m)]) == 1
    assert main(["color", "improved", str(l150)]) == 1
    assert "NeedsThreeColors" in capsys.readouterr().out
    b3 = tmp / "b3.txt"
    dump_poset(gen_boolean(3), b3)
    assert main(["color", "improved", str(b3)]) == 0
    assert "colors: 5" in capsys.readouterr().out


def test_cli_color_leftmost(tmp_path, capsys):
    poset = tmp_path / "l36.txt"
    dump_poset(gen_divisibility(36), poset)
    emb = tmp_path / "l36.emb"
    emb.write_text("rank 0: 0\nrank 1: 1 2\nrank 2: 3 4 5\nrank 3: 6 7\nrank 4: 8\n")
    assert main(["color", "leftmost", str(poset), "--embedding", str(emb)]) == 0
    assert "PASS" in capsys.readouterr().out
    assert main(["color", "leftmost", str(poset)]) == 2


def test_cli_dnum_and_manifest(tmp_path, capsys):
    s4 = tmp_path / "s4.txt"
    s4.write_text("".join(f"{i} < {4 + j}\n" for i in range(4) for j in range(4) if i != j))
    man = tmp_path / "run.json"
    assert main(["dnum", str(s4), "--manifest", str(man)]) == 0
    assert "D: 2" in capsys.readouterr().out
    data = json.loads(man.read_text())
    assert data["seedless"] and len(data["input_digest"]) == 64
    b3 = tmp_path / "b3.txt"
    dump_poset(gen_boolean(3), b3)
    assert main(["dnum", str(b3), "--chromatic"]) == 0
    assert "chi_D: 5" in capsys.readouterr().out
    assert main(["dnum", str(b3), "--chromatic", "--cap", "4"]) == 1
    one = tmp_path / "one.txt"
    one.write_text("n 1\n")
    assert main(["dnum", str(one)]) == 0
    assert "D: 1" in capsys.readouterr().out


def test_cli_usage_errors(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("0 < 1\nnonsense\n")
    assert main(["analyze", str(bad)]) == 2
    assert main(["analyze", str(tmp_path / "missing.txt")]) == 2
    assert main([]) == 2
    assert main(["color", "nope", "x"]) == 2
