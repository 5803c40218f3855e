from pathlib import Path

import pytest

import hyperbfs

DATA = Path(__file__).resolve().parents[2] / "data"


def test_builtin_profiles():
    assert hyperbfs.builtin("boolean").profile()["bfs_valid"]
    signed = hyperbfs.builtin("signed").profile()
    assert signed["zero_sum_free"] == (False, ("1", "-1"))
    assert "boolean" in hyperbfs.builtin_names()


def test_value_set_operations():
    vs = hyperbfs.load_value_set(str(DATA / "nonannihilating3.vs"))
    assert vs.id == "nonannihilating3"
    assert vs.elements == ["0", "1", "x"]
    assert vs.times("0", "x") == "x"
    assert vs.profile()["zero_annihilates"] == (False, ("x",))
    again = hyperbfs.parse_value_set(vs.to_text(), "copy")
    assert again.profile() == vs.profile()


def test_bfs_on_figure_graphs():
    g = hyperbfs.parse_hypergraph((DATA / "fig1_3.dhg").read_text())
    assert g.vertices == ["a", "b", "c"]
    boolean = hyperbfs.builtin("boolean")
    assert hyperbfs.bfs(boolean, g, ["a"]) == (["k"], ["b", "c"])
    assert hyperbfs.bfs(boolean, g, ["a"], mode="sparse") == (["k"], ["b", "c"])
    with pytest.raises(hyperbfs.Error):
        hyperbfs.bfs(hyperbfs.builtin("nonannihilating"), g, ["a"], mode="sparse")
    with pytest.raises(hyperbfs.Error):
        hyperbfs.bfs(boolean, g, ["z"])


def test_reports_and_cli():
    lines = hyperbfs.report(hyperbfs.builtin("signed")).splitlines()
    assert len(lines) == 3
    assert all('"agreement":true' in line for line in lines)
    code, out, _ = hyperbfs.run_cli(["bfs", "--graph", str(DATA / "fig1_6.dhg"), "--source", "a"])
    assert code == 0
    assert out == "edges: k1,k2\nvertices: a,b\n"
    code, _, err = hyperbfs.run_cli(["verify", "--theorem", "2.1", "--carrier", "2"])
    assert code == 0
    assert "4 agreements" in err
