import numpy as np
import pytest
from click.testing import CliRunner

from framecond import ParseError, WeightedGraph
from framecond.cli import main
from framecond.io import (
    emit_dot,
    emit_graph,
    emit_report,
    format_number,
    parse_frame_file,
    parse_graph_file,
    render_report,
)


def test_format_number():
    assert format_number(0.0) == "0.000000"
    assert format_number(float("inf")) == "inf"
    assert format_number(1.0) == format_number(1.0)
    assert format_number(1234567.0).startswith("1234570")


def test_parse_frame_file(tmp_path):
    p = tmp_path / "f.csv"
    p.write_text("# comment\n1, 0, 1\n0, 2, 1\n")
    f = parse_frame_file(p)
    assert f.dim == 2 and f.count == 3
    assert f.vectors[1, 1] == 2.0


def test_parse_frame_errors(tmp_path):
    p = tmp_path / "bad.csv"
    p.write_text("1, 2\n1, x\n")
    with pytest.raises(ParseError) as err:
        parse_frame_file(p)
    assert err.value.line == 2 and err.value.column == 2

    p.write_text("1, 2, 3\n1, 2\n")
    with pytest.raises(ParseError, match="ragged"):
        parse_frame_file(p)

    p.write_text("# nothing\n")
    with pytest.raises(ParseError, match="no data"):
        parse_frame_file(p)


def test_parse_graph_file(tmp_path):
    p = tmp_path / "g.edg"
    p.write_text("n 4\n0 1\n1 2 0.5  # half\n2 3\n")
    g = parse_graph_file(p)
    assert g.vertex_count == 4
    assert g.edges == ((0, 1, 1.0), (1, 2, 0.5), (2, 3, 1.0))


def test_parse_graph_errors(tmp_path):
    p = tmp_path / "g.edg"
    for text, match in [
        ("0 0\n", "self-loop"),
        ("0 1\n1 0\n", "duplicate"),
        ("0 1 -2\n", "nonpositive"),
        ("0 1 x\n", "bad weight"),
        ("0\n", "tokens"),
        ("n x\n0 1\n", "vertex count"),
    ]:
        p.write_text(text)
        with pytest.raises(ParseError, match=match):
            parse_graph_file(p)


def test_graph_round_trip(tmp_path, rng):
    g = WeightedGraph(
        5,
        tuple(
            (i, j, float(rng.uniform(0.1, 3.0)))
            for i in range(5)
            for j in range(i + 1, 5)
        ),
    )
    path = tmp_path / "out.edg"
    emit_graph(g, path)
    back = parse_graph_file(path)
    assert back.vertex_count == g.vertex_count
    for (u1, v1, w1), (u2, v2, w2) in zip(g.edges, back.edges):
        assert (u1, v1) == (u2, v2)
        assert abs(w1 - w2) <= 1e-12


def test_report_determinism(tmp_path):
    from framecond import Frame, solve_sdp2

    rep = solve_sdp2(Frame(np.array([[1.0, 0.0, 1.0], [0.0, 2.0, 1.0]])))
    first = emit_report(rep, tmp_path / "a.txt", extra={"input": "x"})
    second = emit_report(rep, tmp_path / "b.txt", extra={"input": "x"})
    assert first == second
    assert (tmp_path / "a.txt").read_bytes() == (tmp_path / "b.txt").read_bytes()
    assert "after.condition_number" in first


def test_emit_dot(tmp_path):
    g = WeightedGraph(3, ((0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)))
    text = emit_dot(g, np.array([1.0, 2.0, 3.0]), tmp_path / "g.dot")
    assert text.startswith("graph G {")
    assert "penwidth=4" in text and "penwidth=0.5" in text
    uniform = emit_dot(g, np.ones(3), tmp_path / "u.dot")
    assert uniform.count("penwidth=2.25") == 3
    with pytest.raises(ValueError):
        emit_dot(g, np.ones(2), tmp_path / "bad.dot")


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def frame_file(tmp_path):
    p = tmp_path / "f.csv"
    p.write_text("2,0,0,1\n0,1,1,1\n")
    return str(p)


@pytest.fixture
def graph_file(tmp_path):
    p = tmp_path / "g.edg"
    p.write_text("0 1\n1 2\n2 3\n3 0\n0 2\n")
    return str(p)


def test_cli_frame_analyze(runner, frame_file):
    result = runner.invoke(main, ["frame", "analyze", frame_file])
    assert result.exit_code == 0
    assert "condition_number" in result.output


def test_cli_frame_scale_all_methods(runner, frame_file):
    for method in ("sdp1", "sdp2", "sdp3", "qp4"):
        result = runner.invoke(main, ["frame", "scale", "--method", method, frame_file])
        assert result.exit_code == 0, result.output
        assert "status = optimal" in result.output


def test_cli_frame_scalable(runner, frame_file):
    result = runner.invoke(main, ["frame", "scalable", frame_file])
    assert result.exit_code == 0
    assert "scalable = true" in result.output


def test_cli_parse_error_exit_code(runner, tmp_path):
    p = tmp_path / "bad.csv"
    p.write_text("1, x\n1, 2\n")
    result = runner.invoke(main, ["frame", "analyze", str(p)])
    assert result.exit_code == 2
    assert "error:" in result.output


def test_cli_infeasible_exit_code(runner, tmp_path):
    p = tmp_path / "disc.edg"
    p.write_text("n 4\n0 1\n2 3\n")
    result = runner.invoke(main, ["graph", "condition", str(p)])
    assert result.exit_code == 3


def test_cli_max_iter_exit_code(runner, frame_file):
    result = runner.invoke(
        main, ["--max-iter", "1", "frame", "scale", "--method", "sdp2", frame_file]
    )
    assert result.exit_code == 4


def test_cli_report_file_reproducible(runner, graph_file, tmp_path):
    out1, out2 = str(tmp_path / "r1.txt"), str(tmp_path / "r2.txt")
    for out in (out1, out2):
        result = runner.invoke(main, ["--report", out, "graph", "condition", graph_file])
        assert result.exit_code == 0
    with open(out1, "rb") as a, open(out2, "rb") as b:
        assert a.read() == b.read()


def test_cli_graph_gap_and_dot(runner, graph_file, tmp_path):
    dot = str(tmp_path / "g.dot")
    result = runner.invoke(main, ["graph", "gap", "--dot", dot, graph_file])
    assert result.exit_code == 0
    with open(dot) as fh:
        assert "graph G {" in fh.read()


def test_cli_graph_resistance(runner, graph_file):
    result = runner.invoke(main, ["graph", "resistance", graph_file])
    assert result.exit_code == 0
    assert "average" in result.output and "pairwise.0-1" in result.output


def test_cli_experiment(runner):
    args = ["--seed", "5", "experiment", "conjecture", "--generator", "erdos_renyi",
            "--trials", "2", "--n", "7", "--p", "0.5"]
    a = runner.invoke(main, args)
    b = runner.invoke(main, args)
    assert a.exit_code == 0
    assert a.output == b.output
    assert "decrease_fraction" in a.output
