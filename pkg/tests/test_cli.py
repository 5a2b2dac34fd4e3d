import numpy as np
import pytest

from orderedpaths import io
from orderedpaths.cli import main
from orderedpaths.core import OrderedColoring, PathSpec, is_valid_certificate
from orderedpaths.turan import extremal_star


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("argv, first", [
    (("bound", "ramsey", "--family", "ap", "--n", 8), "17"),
    (("bound", "turan", "--family", "ap", "--N", 8, "--n", 6), "22"),
    (("bound", "ramsey", "--family", "pgg", "--n", 8), "20"),
    (("bound", "bipartite", "--family", "pll", "--N", 8, "--n", 6), "12"),
    (("bound", "turan", "--family", "pgg", "--N", 16, "--n", 8), "384"),
])
def test_bound(capsys, argv, first):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.splitlines()[0] == first


def test_usage_errors(capsys):
    assert run(capsys, "bound", "ramsey", "--family", "nope", "--n", 3)[0] == 2
    assert run(capsys, "bound", "turan", "--family", "ap", "--n", 3)[0] == 2
    assert run(capsys, "bound", "ramsey", "--family", "pll", "--n", 5)[0] == 2
    assert main([]) == 2
    assert main(["--version"]) == 0


def test_find_and_verify(tmp_path, capsys):
    host = tmp_path / "k17.txt"
    io.write_text(host, io.format_coloring(OrderedColoring.monochromatic(17)))
    cert, trace = tmp_path / "cert.txt", tmp_path / "trace.txt"
    code, out, _ = run(capsys, "find", host, "--family", "ap", "--n", 8, "--out", cert, "--trace", trace)
    assert code == 0 and "AP_8 found" in out
    c, N = io.parse_certificate(io.read_text(cert))
    assert N == 17 and is_valid_certificate(c, io.parse_host(io.read_text(host)))
    assert run(capsys, "verify", cert, host)[0] == 0
    assert "grey" in io.read_text(trace)
    io.write_text(cert, io.read_text(cert).replace("1 17", "17 1"))
    assert run(capsys, "verify", cert, host)[0] == 1


@pytest.mark.parametrize("family", ["pll", "pgg", "pgl"])
def test_find_other_families_on_colorings(tmp_path, capsys, family):
    host = tmp_path / "c.txt"
    assert run(capsys, "random", "--N", 20, "--seed", 5, "--out", host)[0] == 0
    cert = tmp_path / "cert.txt"
    assert run(capsys, "find", host, "--family", family, "--n", 8, "--out", cert)[0] == 0
    assert run(capsys, "verify", cert, host)[0] == 0


def test_find_on_graphs(tmp_path, capsys):
    star = tmp_path / "star.txt"
    io.write_text(star, io.format_graph(extremal_star(17, 7)))
    code, out, _ = run(capsys, "find", star, "--family", "ap", "--n", 7, "--best-effort")
    assert code == 1 and "no AP_7" in out
    assert run(capsys, "find", star, "--family", "ap", "--n", 7)[0] == 2
    g = extremal_star(17, 7).with_edges([(5, 9)])
    io.write_text(star, io.format_graph(g, "edges"))
    code, out, _ = run(capsys, "find", star, "--family", "ap", "--n", 7)
    assert code == 0 and out.startswith("certificate ap 7 17")
    code, out, _ = run(capsys, "find", star, "--family", "pgl", "--n", 6)
    assert code == 0 and out.startswith("certificate pgl 6 17")


def test_find_bipartite_graph(tmp_path, capsys):
    path = tmp_path / "b.txt"
    assert run(capsys, "construct", "extremal-bipartite", "--N", 8, "--n", 6, "--family", "pgg", "--out", path)[1] \
        .strip() == "12"
    assert run(capsys, "find", path, "--family", "pgg", "--n", 6, "--best-effort")[0] == 1
    assert run(capsys, "find", path, "--family", "ap", "--n", 6, "--bipartite", "--best-effort")[0] in (0, 1)
    assert run(capsys, "find", path, "--family", "mp", "--n", 4)[0] == 2


def test_truncated_file(tmp_path, capsys):
    path = tmp_path / "t.txt"
    io.write_text(path, "17\nRRRR\n")
    code, _, err = run(capsys, "find", path, "--family", "ap", "--n", 8)
    assert code == 2 and "error" in err
    assert run(capsys, "find", tmp_path / "missing.txt", "--family", "ap", "--n", 8)[0] == 2


@pytest.mark.parametrize("kind, family, edges", [("extremal-star", "ap", 70), ("extremal-band", "ap", 70)])
def test_construct(tmp_path, capsys, kind, family, edges):
    path = tmp_path / "g.txt"
    code, out, _ = run(capsys, "construct", kind, "--N", 17, "--n", 7, "--out", path, "--family", family)
    assert code == 0 and int(out) == edges
    assert io.parse_graph(io.read_text(path)).edge_count == edges
    code, out, _ = run(capsys, "construct", kind, "--N", 6, "--n", 4, "--format", "edges")
    assert out.splitlines()[:2] == ["9", "6 edges"] and len(out.splitlines()) == 11


def test_search(tmp_path, capsys):
    code, out, _ = run(capsys, "search", "ramsey", "--family", "ap", "--n", 4, "--out-dir", tmp_path)
    assert code == 0 and out.splitlines()[0] == "7"
    w = io.parse_coloring(io.read_text(tmp_path / "witness_AP_4_6.txt"))
    from tests.oracles import mono_free
    assert mono_free(w, PathSpec("ap", 4))
    assert run(capsys, "search", "turan", "--family", "pgg", "--N", 6, "--n", 4)[1].splitlines()[0] == "11"
    assert run(capsys, "search", "turan", "--family", "pll", "--N", 6, "--n", 4)[1].splitlines()[0] == "9"
    assert run(capsys, "search", "bipartite", "--family", "pll", "--N", 8, "--n", 6)[1].splitlines()[0] == "12"
    assert run(capsys, "search", "ramsey", "--family", "ap", "--n", 5, "--N", 8)[1].startswith("witness")
    assert run(capsys, "search", "turan", "--family", "pll", "--n", 4)[0] == 2


def test_search_budget_exit_code(capsys, monkeypatch):
    assert run(capsys, "search", "ramsey", "--family", "ap", "--n", 6, "--N", 12, "--budget", 1000)[0] == 3
    monkeypatch.setenv("ORDEREDPATHS_NODE_BUDGET", "100")
    assert run(capsys, "search", "ramsey", "--family", "ap", "--n", 5, "--N", 9)[0] == 3


def test_encode_decode(tmp_path, capsys):
    cnf = tmp_path / "f.cnf"
    code, out, _ = run(capsys, "encode", "--family", "ap", "--n", 4, "--N", 6, "--out", cnf)
    assert code == 0 and out.strip() == "p cnf 15 30"
    assert "p cnf 1 2" in run(capsys, "encode", "--family", "ap", "--n", 2, "--N", 2)[1]
    model = tmp_path / "m.txt"
    io.write_text(model, "v " + " ".join(str(i) for i in range(1, 16)) + " 0\n")
    assert run(capsys, "decode", model, "--family", "ap", "--n", 4, "--N", 6)[0] == 4
    code, out, _ = run(capsys, "decode", model, "--family", "ap", "--n", 4, "--N", 6, "--no-check")
    assert code == 0 and io.parse_coloring(out) == OrderedColoring.monochromatic(6)
    io.write_text(model, "1 2 0\n")
    assert run(capsys, "decode", model, "--family", "ap", "--n", 4, "--N", 6)[0] == 2


def test_render_and_random_determinism(tmp_path, capsys):
    a = run(capsys, "random", "--N", 9, "--seed", 3)[1]
    assert a == run(capsys, "random", "--N", 9, "--seed", 3)[1]
    path = tmp_path / "c.txt"
    io.write_text(path, a)
    code, out, _ = run(capsys, "render", path, "--family", "ap", "--n", 4)
    assert code == 0 and "g" in out
    assert run(capsys, "render", path)[1].count("R") + run(capsys, "render", path)[1].count("B") == 36


def test_module_entry_point():
    import subprocess
    import sys
    out = subprocess.run([sys.executable, "-m", "orderedpaths", "bound", "ramsey", "--family", "ap", "--n", "13"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.splitlines()[0] == "31"
