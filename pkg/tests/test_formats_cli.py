"""JSON formats, DOT/SVG emission and the command line."""

import json
from fractions import Fraction

import pytest

from wdpoly import INF, FormatError, PointConfig, WeightedDigraph
from wdpoly import formats as fmt
from wdpoly.cli import run
from wdpoly.dot import dot_of_digraph
from wdpoly.svg import render_svg


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj), encoding="utf-8")
    return str(p)


MATRIX_OBJ = {
    "rows": 3,
    "cols": 3,
    "entries": [["1", "4", "1"], ["-1", "0", "-2"], ["3", "inf", "2"]],
}

CONFIG_OBJ = {
    "rows": 3,
    "cols": 3,
    "entries": [["0", "0", "0"], ["1", "1", "inf"], ["0", "2", "inf"]],
}


def digraph_obj():
    w = WeightedDigraph.from_matrix(fmt.parse_matrix(MATRIX_OBJ))
    return fmt.digraph_to_obj(w)


# ---------------------------------------------------------------------------
# formats


def test_value_round_trip():
    for raw in ("3", "-1/2", "inf"):
        assert fmt.render_value(fmt.parse_value(raw)) == raw


def test_matrix_round_trip():
    m = fmt.parse_matrix(MATRIX_OBJ)
    assert m.entry(3, 2) is INF
    assert fmt.matrix_to_obj(m) == MATRIX_OBJ


def test_matrix_parse_errors():
    with pytest.raises(FormatError):
        fmt.parse_matrix({"rows": 2, "cols": 2})
    with pytest.raises(FormatError):
        fmt.parse_matrix({"rows": 2, "cols": 2, "entries": [["0", "0"]]})
    with pytest.raises(FormatError):
        # JSON floats are rejected; exactness requires strings or ints
        fmt.parse_matrix({"rows": 1, "cols": 1, "entries": [[0.5]]})


def test_digraph_round_trip():
    obj = digraph_obj()
    w = fmt.parse_digraph(obj)
    assert fmt.digraph_to_obj(w) == obj
    assert w.weight(2, 3) == Fraction(-2)


def test_digraph_parse_errors():
    with pytest.raises(FormatError):
        fmt.parse_digraph({"nodes": 2, "arcs": [{"from": 1, "to": 5, "w": "0"}]})
    with pytest.raises(FormatError):
        fmt.parse_digraph({"nodes": 0, "arcs": []})


def test_support_graph_round_trip():
    obj = {"d": 2, "n": 2, "arcs": [[1, 1], [2, 2]]}
    g = fmt.parse_support_graph(obj)
    assert fmt.graph_to_obj(g) == obj
    with pytest.raises(FormatError):
        fmt.parse_support_graph({"d": 1, "n": 1, "arcs": [[2, 1]]})


def test_point_parsing():
    pt = fmt.parse_point("0, 1/2, inf")
    assert pt == [Fraction(0), Fraction(1, 2), INF]
    with pytest.raises(FormatError):
        fmt.parse_point("")
    with pytest.raises(FormatError):
        fmt.parse_point("0,abc")


def test_write_atomic(tmp_path):
    target = tmp_path / "out.json"
    fmt.write_atomic(str(target), "payload\n")
    assert target.read_text(encoding="utf-8") == "payload\n"
    leftovers = [p for p in tmp_path.iterdir() if p.name.startswith(".tmp-")]
    assert leftovers == []


# ---------------------------------------------------------------------------
# DOT and SVG


def test_dot_output_is_deterministic():
    w = fmt.parse_digraph(digraph_obj())
    a = dot_of_digraph(w)
    b = dot_of_digraph(w)
    assert a == b
    assert a.startswith("digraph")
    assert 'n1 -> n3 [label="1"];' in a
    # the zero-weight loop at node 2 is suppressed
    assert "n2 -> n2" not in a


def test_svg_output_is_deterministic_and_bounded():
    v = PointConfig(fmt.parse_matrix(CONFIG_OBJ))
    a = render_svg(v)
    assert a == render_svg(v)
    assert a.startswith("<svg")
    assert a.endswith("</svg>\n")
    # all coordinates carry exactly two decimals
    import re

    for num in re.findall(r'x1="([0-9.]+)"', a):
        assert len(num.split(".")[1]) == 2


def test_svg_rejects_other_dimensions():
    from wdpoly import CapabilityError

    v = PointConfig.make([[0, 0], [1, 2]])
    with pytest.raises(CapabilityError):
        render_svg(v)


# ---------------------------------------------------------------------------
# command line


def test_cli_kleene_golden(tmp_path, capsys):
    path = write(tmp_path, "w.json", {"nodes": 3, "arcs": digraph_obj()["arcs"]})
    assert run(["kleene", path]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["entries"] == [["0", "4", "1"], ["-1", "0", "-2"], ["3", "7", "0"]]


def test_cli_feasible_exit_codes(tmp_path, capsys):
    good = write(tmp_path, "good.json", digraph_obj())
    assert run(["feasible", good]) == 0
    bad = write(
        tmp_path,
        "bad.json",
        {
            "nodes": 2,
            "arcs": [
                {"from": 1, "to": 2, "w": "-1"},
                {"from": 2, "to": 1, "w": "0"},
            ],
        },
    )
    capsys.readouterr()
    assert run(["feasible", bad]) == 1
    out = json.loads(capsys.readouterr().out)
    assert out["feasible"] is False
    assert out["cycle"][0] == out["cycle"][-1]


def test_cli_member_tcone(tmp_path, capsys):
    path = write(
        tmp_path,
        "v.json",
        {
            "rows": 3,
            "cols": 3,
            "entries": [["0", "0", "0"], ["1", "0", "inf"], ["2", "-1", "inf"]],
        },
    )
    assert run(["member", path, "0,2,3/2"]) == 0
    first = json.loads(capsys.readouterr().out)
    assert first["member"] is True
    assert run(["member", path, "0,5,0"]) == 1
    second = json.loads(capsys.readouterr().out)
    assert second["member"] is False


def test_cli_member_halfspace(tmp_path, capsys):
    path = write(
        tmp_path,
        "h.json",
        {
            "matrix": {"rows": 2, "cols": 1, "entries": [["0"], ["0"]]},
            "selection": [[1, 1]],
        },
    )
    assert run(["member", path, "1,0", "--system"]) == 0
    assert run(["member", path, "0,1", "--system"]) == 1


def test_cli_cells_and_output_file(tmp_path):
    vpath = write(tmp_path, "v.json", CONFIG_OBJ)
    out = tmp_path / "cells.json"
    assert run(["cells", vpath, "-o", str(out)]) == 0
    cells = json.loads(out.read_text(encoding="utf-8"))
    assert cells and all(
        set(c) == {"covector", "tuple", "dim", "bounded", "in_tcone", "stratum"}
        for c in cells
    )


def test_cli_subdivision(tmp_path, capsys):
    path = write(
        tmp_path,
        "sq.json",
        {"rows": 2, "cols": 2, "entries": [["0", "0"], ["0", "1"]]},
    )
    assert run(["subdivision", path]) == 0
    cells = json.loads(capsys.readouterr().out)
    assert [c["vertices"] for c in cells] == [
        [[1, 1], [1, 2], [2, 1]],
        [[1, 2], [2, 1], [2, 2]],
    ]


def test_cli_usage_and_format_errors(tmp_path, capsys):
    assert run(["kleene"]) == 2  # missing argument
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    assert run(["kleene", str(bad)]) == 2
    missing = str(tmp_path / "nope.json")
    assert run(["kleene", missing]) == 2
    capsys.readouterr()


def test_cli_capability_exit(tmp_path, capsys):
    big = write(
        tmp_path,
        "big.json",
        {"nodes": 11, "arcs": [{"from": 1, "to": 2, "w": "0"}]},
    )
    assert run(["faces", big]) == 3
    capsys.readouterr()


def test_cli_infeasible_kleene_exit(tmp_path, capsys):
    bad = write(
        tmp_path,
        "neg.json",
        {
            "nodes": 2,
            "arcs": [
                {"from": 1, "to": 2, "w": "-1"},
                {"from": 2, "to": 1, "w": "0"},
            ],
        },
    )
    assert run(["kleene", bad]) == 1
    capsys.readouterr()


def test_cli_export_dot_and_svg(tmp_path, capsys):
    vpath = write(tmp_path, "v.json", CONFIG_OBJ)
    assert run(["export-dot", vpath]) == 0
    assert "digraph" in capsys.readouterr().out
    out = tmp_path / "pic.svg"
    assert run(["plot-svg", vpath, "-o", str(out)]) == 0
    assert out.read_text(encoding="utf-8").startswith("<svg")
