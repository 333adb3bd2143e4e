"""File ingestion and report emission for the command-line front end.

Frame files are CSV with N rows and M columns (row r, column c holds
coordinate r of vector c).  Graph files are whitespace-delimited edge
lists ``u v [w]`` with 0-based vertex indices, optional ``# comments``,
and an optional ``n N`` header fixing the vertex count.  Reports are
deterministic key-value text; graphs render to dot format with edge
pen-widths proportional to weight.
"""

import numpy as np

from .exceptions import ParseError
from .frames import Frame
from .graphs import WeightedGraph

__all__ = [
    "parse_frame_file",
    "parse_graph_file",
    "emit_report",
    "emit_graph",
    "emit_dot",
    "format_number",
]


def format_number(x):
    """Render a float with 6 significant figures, deterministically."""
    x = float(x)
    if x == 0.0:
        return "0.000000"
    if not np.isfinite(x):
        return "inf" if x > 0 else "-inf"
    out = np.format_float_positional(x, precision=6, unique=False, fractional=False)
    return out.rstrip(".")


def parse_frame_file(path):
    """Read an N x M frame matrix from comma-separated numeric text."""
    rows = []
    width = None
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            tokens = [t.strip() for t in line.split(",")]
            values = []
            for col, tok in enumerate(tokens, start=1):
                try:
                    values.append(float(tok))
                except ValueError:
                    raise ParseError(f"non-numeric token {tok!r}", line=lineno, column=col)
            if width is None:
                width = len(values)
            elif len(values) != width:
                raise ParseError(
                    f"ragged row: expected {width} values, got {len(values)}", line=lineno
                )
            rows.append(values)
    if not rows:
        raise ParseError(f"no data rows in {path}")
    try:
        return Frame(np.array(rows))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def parse_graph_file(path):
    """Read a weighted edge list.

    Lines are ``u v w`` (or ``u v`` with weight 1); ``# ...`` comments
    are ignored; a line ``n N`` sets the vertex count, which otherwise
    defaults to one more than the largest index seen.
    """
    edges = []
    declared_n = None
    max_index = -1
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            tokens = line.split()
            if tokens[0] == "n":
                if len(tokens) != 2:
                    raise ParseError("header must be 'n N'", line=lineno)
                try:
                    declared_n = int(tokens[1])
                except ValueError:
                    raise ParseError(f"bad vertex count {tokens[1]!r}", line=lineno)
                continue
            if len(tokens) not in (2, 3):
                raise ParseError(f"expected 'u v [w]', got {len(tokens)} tokens", line=lineno)
            try:
                u, v = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise ParseError(f"bad vertex index in {tokens[:2]}", line=lineno)
            w = 1.0
            if len(tokens) == 3:
                try:
                    w = float(tokens[2])
                except ValueError:
                    raise ParseError(f"bad weight {tokens[2]!r}", line=lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", line=lineno)
            if w <= 0:
                raise ParseError(f"nonpositive weight {w}", line=lineno)
            key = (min(u, v), max(u, v))
            if any((a, b) == key for a, b, _ in edges):
                raise ParseError(f"duplicate edge ({key[0]}, {key[1]})", line=lineno)
            edges.append((key[0], key[1], w))
            max_index = max(max_index, u, v)
    if not edges:
        raise ParseError(f"no edges in {path}")
    n = declared_n if declared_n is not None else max_index + 1
    try:
        return WeightedGraph(n, tuple(edges))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def _flatten(prefix, value, lines):
    from dataclasses import fields, is_dataclass

    if is_dataclass(value):
        for f in fields(value):
            _flatten(f"{prefix}.{f.name}" if prefix else f.name, getattr(value, f.name), lines)
    elif isinstance(value, dict):
        for key in sorted(value):
            _flatten(f"{prefix}.{key}", value[key], lines)
    elif isinstance(value, (list, tuple, np.ndarray)):
        seq = list(value)
        if seq and all(isinstance(v, (int, float, np.floating, np.integer)) for v in seq):
            lines.append((prefix, " ".join(format_number(v) for v in seq)))
        else:
            for idx, item in enumerate(seq):
                _flatten(f"{prefix}[{idx}]", item, lines)
    elif isinstance(value, (float, np.floating)):
        lines.append((prefix, format_number(value)))
    elif isinstance(value, (bool, np.bool_)):
        lines.append((prefix, "true" if value else "false"))
    elif isinstance(value, (int, np.integer)):
        lines.append((prefix, str(int(value))))
    elif value is None:
        lines.append((prefix, "none"))
    else:
        lines.append((prefix, str(value)))


def render_report(report, extra=None):
    """Flatten a report dataclass into deterministic key-value text."""
    lines = []
    if extra:
        for key in extra:
            _flatten(key, extra[key], lines)
    _flatten("", report, lines)
    return "\n".join(f"{k} = {v}" for k, v in lines) + "\n"


def emit_report(report, path, extra=None):
    """Write a structured key-value report; byte-identical across reruns."""
    text = render_report(report, extra=extra)
    with open(path, "w") as fh:
        fh.write(text)
    return text


def emit_graph(graph, path):
    """Write a graph back to edge-list text at full precision, so that
    parsing the output reproduces the edge set and weights exactly."""
    lines = [f"n {graph.vertex_count}"]
    for u, v, w in graph.edges:
        lines.append(f"{u} {v} {w!r}")
    text = "\n".join(lines) + "\n"
    with open(path, "w") as fh:
        fh.write(text)
    return text


def emit_dot(graph, scalings, path):
    """Write the reweighted graph as dot text.

    Each edge carries its weight and a pen-width scaled linearly to
    [0.5, 4.0] across the weight range (constant 2.25 when all weights
    are equal).
    """
    scalings = np.asarray(scalings, dtype=float)
    if scalings.size != graph.edge_count:
        raise ValueError(
            f"got {scalings.size} scalings for {graph.edge_count} edges"
        )
    weights = graph.weights * scalings
    lo, hi = float(weights.min()), float(weights.max())
    if hi - lo <= 1e-12 * max(1.0, hi):
        widths = np.full(weights.size, 2.25)
    else:
        widths = 0.5 + 3.5 * (weights - lo) / (hi - lo)
    lines = ["graph G {"]
    for i in range(graph.vertex_count):
        lines.append(f'  {i} [label="{i}"];')
    for (u, v, _), w, pw in zip(graph.edges, weights, widths):
        lines.append(
            f"  {u} -- {v} [weight={format_number(w)}, penwidth={format_number(pw)}];"
        )
    lines.append("}")
    text = "\n".join(lines) + "\n"
    with open(path, "w") as fh:
        fh.write(text)
    return text
