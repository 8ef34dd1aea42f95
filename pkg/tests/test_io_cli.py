import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from tcimbalance import Certificate, SuccinctGraph, imbalance_of_layout, validate_twin_cover
from tcimbalance.cli import main, pick_mode
from tcimbalance.errors import ParseError
from tcimbalance.generators import random_instance, random_succinct
from tcimbalance.graph import TwinCover, expand_succinct
from tcimbalance.io import (
    parse_certificate, parse_graph, parse_layout, parse_succinct, sniff, write_certificate,
    write_graph, write_layout, write_succinct,
)

from instances import TRI_PENDANT, star


@pytest.fixture
def files(tmp_path):
    def put(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return put


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def field(out, key):
    for line in out.splitlines():
        if line.startswith(key + " "):
            return line.split(" ", 1)[1]
    raise KeyError(key)


# ---- formats ----------------------------------------------------------------

@given(st.integers(0, 12), st.integers(0, 12), st.integers(1, 4), st.integers(0, 10**6))
@settings(max_examples=100)
def test_graph_round_trip(n, k, max_clique, seed):
    k = min(k, n)
    g, cover = random_instance(n, k, max_clique, seed)
    assert parse_graph(write_graph(g, cover)) == (g, cover)
    assert parse_graph(write_graph(g)) == (g, None)


@given(st.integers(0, 4), st.lists(st.integers(1, 10**15), max_size=6), st.integers(0, 10**6))
@settings(max_examples=100)
def test_succinct_round_trip(k, sizes, seed):
    sg = random_succinct(k, sizes, random.Random(seed))
    assert parse_succinct(write_succinct(sg)) == sg


@given(st.lists(st.integers(1, 9), max_size=5), st.lists(st.integers(1, 6), max_size=8))
def test_certificate_and_layout_round_trip(pi, locs):
    cert = Certificate(tuple(pi), tuple(locs))
    assert parse_certificate(write_certificate(cert)) == cert
    assert parse_layout(write_layout(locs)) == tuple(locs)


def test_comments_and_sniff():
    text = "# a star\n\ngraph 3 2\ne 1 2\n# mid\ne 1 3\ncover 1\n"
    g, cover = parse_graph(text)
    assert g == star(2) and cover == TwinCover((1,))
    assert sniff(text) == "graph"
    assert sniff("succinct 0 0\n") == "succinct"


@pytest.mark.parametrize("text", [
    "graph 3 1\ne 1 2\ne 2 3\n",     # edge count mismatch
    "graph 3 1\ne 2 1\n",            # u >= v
    "graph 3 2\ne 1 2\ne 1 2\n",     # duplicate
    "e 1 2\n",                       # no header
    "graph 3 1\ne 1 x\n",
    "graph 3 0\nfoo 1\n",
])
def test_bad_graphs(text):
    with pytest.raises(ParseError):
        parse_graph(text)


@pytest.mark.parametrize("text", [
    "succinct 1 1\nc 3 1 2\n",       # attachment out of range
    "succinct 1 1\nc 0 0\n",         # empty clique
    "succinct 2 1\nc 3 2 1\n",       # short attachment list
    "succinct 2 1\nc 1 0\nhe 1 2\n", # cover edge after cliques
    "succinct 1 2\nc 1 0\n",
])
def test_bad_succinct(text):
    with pytest.raises(ParseError):
        parse_succinct(text)


# ---- CLI ----------------------------------------------------------------------

def test_solve_star_oracle(files, capsys):
    path = files("star13.g", write_graph(star(3)))
    code, out, _ = run(capsys, "solve", "--graph", path, "--cover", "1", "--mode", "oracle")
    assert code == 0 and field(out, "imbalance") == "4"


def test_solve_decision_no(files, capsys):
    path = files("tri_pendant.g", write_graph(TRI_PENDANT))
    code, out, _ = run(capsys, "solve", "--graph", path, "--cover", "1", "--mode", "dp",
                       "--target", 3)
    assert code == 1
    assert field(out, "imbalance") == "4" and field(out, "decision") == "NO"


def test_solve_succinct_yes(files, capsys):
    p = files("p.sg", "succinct 1 3\nc 1 1 1\nc 2 1 1\nc 3 1 1\n")
    code, out, _ = run(capsys, "solve-succinct", "--input", p, "--target", 8)
    assert code == 0 and field(out, "decision") == "YES"
    assert field(out, "mode") == "k1"


@pytest.mark.parametrize("mode", ["oracle", "dp", "ilp", "auto"])
def test_solve_modes_agree_and_witness_is_valid(files, capsys, mode):
    g, cover = random_instance(9, 2, 4, seed=17)
    path = files("g.g", write_graph(g, cover))
    code, out, _ = run(capsys, "solve", "--graph", path, "--mode", mode, "--json")
    res = json.loads(out)
    assert code == 0
    assert isinstance(res["imbalance"], str)
    assert sorted(res["layout"]) == list(range(1, 10))
    assert str(imbalance_of_layout(g, res["layout"])) == res["imbalance"]


def test_json_values_are_decimal_strings(files, capsys):
    p = files("big.sg", "succinct 1 1\nc 1000000000000 1 1\n")
    c = files("big.cert", "pi 1\nloc 1\n")
    code, out, _ = run(capsys, "verify", "--input", p, "--cert", c, "--json", "--target", 10**24)
    res = json.loads(out)
    assert code == 0
    assert res["imbalance"] == str(10**24 // 2 + 10**12)
    assert res["target"] == str(10**24) and res["decision"] == "YES"


def test_verify_examples(files, capsys):
    p = files("p.sg", "succinct 1 3\nc 1 1 1\nc 2 1 1\nc 3 1 1\n")
    good = files("good.cert", "pi 1\nloc 2 2 1\n")
    bad = files("bad.cert", "pi 1\nloc 1 1 1\n")
    code, out, _ = run(capsys, "verify", "--input", p, "--cert", good, "--target", 8)
    assert (code, field(out, "imbalance"), field(out, "decision")) == (0, "8", "YES")
    code, out, _ = run(capsys, "verify", "--input", p, "--cert", bad, "--target", 8)
    assert (code, field(out, "imbalance"), field(out, "decision")) == (1, "14", "NO")
    broken = files("broken.cert", "pi 1\nloc 1 1\n")
    assert run(capsys, "verify", "--input", p, "--cert", broken)[0] == 2


def test_gen_partition(tmp_path, capsys):
    out_path = tmp_path / "p.sg"
    code, out, _ = run(capsys, "gen", "partition", "--numbers", "1,2,3", "--output", out_path)
    assert code == 0 and out.strip() == "t=8"
    assert out_path.read_text().splitlines()[0] == "succinct 1 3"
    code, out, err = run(capsys, "gen", "partition", "--numbers", "1,2,3")
    assert out.startswith("succinct 1 3") and err.strip() == "t=8"


def test_gen_random_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.g", tmp_path / "b.g"
    for p in (a, b):
        assert run(capsys, "gen", "random", "--n", 11, "--k", 3, "--max-clique", 4,
                   "--seed", 99, "--output", p)[0] == 0
    assert a.read_bytes() == b.read_bytes()
    g, cover = parse_graph(a.read_text())
    validate_twin_cover(g, cover)


def test_gen_random_without_cover(capsys):
    code, out, _ = run(capsys, "gen", "random", "--n", 6, "--k", 0, "--seed", 1)
    g, cover = parse_graph(out)
    d = validate_twin_cover(g, cover)
    assert d.k == 0 and sum(c.size for c in d.cliques) == 6
    assert run(capsys, "gen", "random", "--n", 3, "--k", 5)[0] == 2


def test_bound(files, capsys):
    p = files("p.sg", "succinct 1 3\nc 1 1 1\nc 2 1 1\nc 3 1 1\n")
    code, out, _ = run(capsys, "bound", "--input", p)
    assert code == 0 and field(out, "iota") == "6" and field(out, "parity_bound") == "8"
    g = files("g.g", write_graph(star(3), TwinCover((1,))))
    code, out, _ = run(capsys, "bound", "--input", g)
    assert field(out, "iota") == "0" and field(out, "parity_bound") == "3"


def test_convert_round_trip(tmp_path, capsys):
    g, cover = random_instance(10, 2, 4, seed=3)
    src = tmp_path / "g.g"
    src.write_text(write_graph(g, cover))
    mid, back = tmp_path / "g.sg", tmp_path / "g2.g"
    assert run(capsys, "convert", "--input", src, "--output", mid)[0] == 0
    assert run(capsys, "convert", "--input", mid, "--output", back)[0] == 0
    d1 = validate_twin_cover(g, cover)
    d2 = validate_twin_cover(*parse_graph(back.read_text()))
    assert d1.graph.n == d2.graph.n and len(d1.graph.edges) == len(d2.graph.edges)
    assert sorted(c.size for c in d1.cliques) == sorted(c.size for c in d2.cliques)
    assert sorted(d1.census().values()) == sorted(d2.census().values())


def test_convert_refuses_huge(files, capsys):
    p = files("huge.sg", "succinct 1 1\nc 1000000000 1 1\n")
    code, _, err = run(capsys, "convert", "--input", p)
    assert code == 2 and "error" in err


def test_dump_model(files, tmp_path, capsys):
    path = files("star.g", write_graph(star(3), TwinCover((1,))))
    dump = tmp_path / "m.txt"
    code, out, _ = run(capsys, "solve", "--graph", path, "--dump-model", dump)
    assert code == 0 and field(out, "imbalance") == "4"
    assert "var x[" in dump.read_text()


@pytest.mark.parametrize("argv", [
    ["solve", "--graph", "/nonexistent/file"],
    ["solve"],
    ["frobnicate"],
])
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_bad_cover_exits_2(files, capsys):
    path = files("p3.g", "graph 3 2\ne 1 2\ne 2 3\n")
    assert run(capsys, "solve", "--graph", path, "--cover", "3")[0] == 2
    assert run(capsys, "solve", "--graph", path)[0] == 2


def test_auto_mode_routing():
    assert pick_mode(validate_twin_cover(star(3), [1])) == "k1"
    g, cover = expand_succinct(SuccinctGraph(2, frozenset(), tuple((2, {1}) for _ in range(12))))
    assert pick_mode(validate_twin_cover(g, cover)) == "ilp"
    g, cover = expand_succinct(SuccinctGraph(2, frozenset(), tuple((9, {1}) for _ in range(12))))
    assert pick_mode(validate_twin_cover(g, cover)) == "dp"
    g, cover = expand_succinct(SuccinctGraph(2, frozenset(), tuple((9, {1}) for _ in range(3))))
    assert pick_mode(validate_twin_cover(g, cover)) == "oracle"
