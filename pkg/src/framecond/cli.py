"""Command-line front end.

Subcommands mirror the library surface: ``frame analyze|scale|scalable``,
``graph condition|gap|resistance``, and ``experiment conjecture``.  Every
command writes a deterministic key-value report (stdout or ``--report``)
and exits 0 on success, 2 on parse errors, 3 on infeasible problems, and
4 when the solver hit its iteration cap.
"""

import sys

import click
import numpy as np

from .conditioners import SolverOptions, solve_qp4, solve_sdp1, solve_sdp2, solve_sdp3
from .exceptions import (
    DisconnectedGraphError,
    InfeasibleProblemError,
    ParseError,
    SolverError,
)
from .frames import frame_operator, is_scalable, summarize
from .graphs import conjecture_experiment, graph_condition, graph_gap, resistance_summary
from .io import emit_dot, parse_frame_file, parse_graph_file, render_report

EXIT_PARSE = 2
EXIT_INFEASIBLE = 3
EXIT_MAX_ITER = 4

_SOLVERS = {"sdp1": solve_sdp1, "sdp2": solve_sdp2, "sdp3": solve_sdp3, "qp4": solve_qp4}


def _options(ctx):
    return SolverOptions(
        max_iterations=ctx.obj["max_iter"],
        objective_tolerance=ctx.obj["objective_tol"],
        feasibility_tolerance=ctx.obj["feasibility_tol"],
        seed=ctx.obj["seed"],
    )


def _write(ctx, report, extra):
    extra = dict(extra)
    extra["options.objective_tolerance"] = ctx.obj["objective_tol"]
    extra["options.feasibility_tolerance"] = ctx.obj["feasibility_tol"]
    extra["options.max_iterations"] = ctx.obj["max_iter"]
    extra["options.seed"] = ctx.obj["seed"]
    text = render_report(report, extra=extra)
    path = ctx.obj["report_path"]
    if path is None:
        click.echo(text, nl=False)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _fail(code, message):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _status_exit(status):
    if status == "infeasible":
        sys.exit(EXIT_INFEASIBLE)
    if status == "max_iter":
        sys.exit(EXIT_MAX_ITER)
    sys.exit(0)


@click.group()
@click.option("--report", "report_path", type=click.Path(dir_okay=False), default=None,
              help="Write the report here instead of stdout.")
@click.option("--objective-tol", type=float, default=1e-6, show_default=True)
@click.option("--feasibility-tol", type=float, default=1e-8, show_default=True)
@click.option("--max-iter", type=int, default=10_000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.pass_context
def main(ctx, report_path, objective_tol, feasibility_tol, max_iter, seed):
    """Condition frames and reweight graph Laplacians."""
    ctx.ensure_object(dict)
    ctx.obj.update(
        report_path=report_path,
        objective_tol=objective_tol,
        feasibility_tol=feasibility_tol,
        max_iter=max_iter,
        seed=seed,
    )


@main.group()
def frame():
    """Operations on frame CSV files."""


def _load_frame(path):
    try:
        return parse_frame_file(path)
    except ParseError as exc:
        _fail(EXIT_PARSE, str(exc))


def _load_graph(path):
    try:
        return parse_graph_file(path)
    except ParseError as exc:
        _fail(EXIT_PARSE, str(exc))


@frame.command()
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@click.pass_context
def analyze(ctx, input_path):
    """Spectral summary of the frame operator."""
    fr = _load_frame(input_path)
    stats = summarize(frame_operator(fr))
    _write(ctx, stats, {"command": "frame analyze", "input": input_path,
                        "dim": fr.dim, "count": fr.count, "is_frame": fr.is_frame})
    sys.exit(0)


@frame.command()
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--method", type=click.Choice(sorted(_SOLVERS)), required=True)
@click.pass_context
def scale(ctx, input_path, method):
    """Optimize the frame scaling with the chosen method."""
    fr = _load_frame(input_path)
    try:
        report = _SOLVERS[method](fr, _options(ctx))
    except SolverError as exc:
        _fail(1, str(exc))
    extra = {"command": "frame scale", "input": input_path}
    if report.scaling is not None:
        extra["scales"] = report.scales
    _write(ctx, report, extra)
    _status_exit(report.status)


@frame.command()
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--tol", type=float, default=1e-6, show_default=True)
@click.pass_context
def scalable(ctx, input_path, tol):
    """Decide whether the frame admits an exact Parseval rescaling."""
    fr = _load_frame(input_path)
    verdict, weights = is_scalable(fr, tol=tol)
    extra = {"command": "frame scalable", "input": input_path, "tol": tol,
             "scalable": verdict}
    if weights is not None:
        extra["scaling"] = weights
        extra["scales"] = np.sqrt(weights)
    _write(ctx, summarize(frame_operator(fr)), extra)
    sys.exit(0)


@main.group()
def graph():
    """Operations on edge-list graph files."""


def _run_graph(ctx, input_path, dot_path, which):
    g = _load_graph(input_path)
    try:
        report = which(g, _options(ctx))
    except (DisconnectedGraphError, InfeasibleProblemError) as exc:
        _fail(EXIT_INFEASIBLE, str(exc))
    except SolverError as exc:
        _fail(1, str(exc))
    name = "graph condition" if which is graph_condition else "graph gap"
    _write(ctx, report, {"command": name, "input": input_path})
    if dot_path is not None:
        emit_dot(g, report.trace_matched_scalings, dot_path)
    _status_exit(report.status)


@graph.command()
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--dot", "dot_path", type=click.Path(dir_okay=False), default=None,
              help="Also write the trace-matched reweighted graph as dot text.")
@click.pass_context
def condition(ctx, input_path, dot_path):
    """Reweight edges to minimize the Laplacian condition number."""
    _run_graph(ctx, input_path, dot_path, graph_condition)


@graph.command()
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--dot", "dot_path", type=click.Path(dir_okay=False), default=None)
@click.pass_context
def gap(ctx, input_path, dot_path):
    """Reweight edges to minimize the Laplacian spectral gap."""
    _run_graph(ctx, input_path, dot_path, graph_gap)


@graph.command()
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@click.pass_context
def resistance(ctx, input_path):
    """Total and average effective resistance, plus the pairwise table."""
    from .graphs import effective_resistance

    g = _load_graph(input_path)
    try:
        stats = resistance_summary(g)
        pairs = {
            f"{i}-{j}": effective_resistance(g, i, j)
            for i in range(g.vertex_count)
            for j in range(i + 1, g.vertex_count)
        }
    except DisconnectedGraphError as exc:
        _fail(EXIT_INFEASIBLE, str(exc))
    _write(ctx, stats, {"command": "graph resistance", "input": input_path,
                        "pairwise": pairs})
    sys.exit(0)


@main.group()
def experiment():
    """Empirical studies."""


@experiment.command()
@click.option("--generator", type=click.Choice(["erdos_renyi", "barbell", "random_regular"]),
              required=True)
@click.option("--trials", type=int, required=True)
@click.option("--n", type=int, default=12, show_default=True, help="Vertex count (erdos_renyi, random_regular).")
@click.option("--p", type=float, default=0.3, show_default=True, help="Edge probability (erdos_renyi).")
@click.option("--k", type=int, default=5, show_default=True, help="Clique size (barbell).")
@click.option("--d", type=int, default=3, show_default=True, help="Degree (random_regular).")
@click.pass_context
def conjecture(ctx, generator, trials, n, p, k, d):
    """Does conditioning reduce average effective resistance?"""
    params = {"erdos_renyi": {"n": n, "p": p}, "barbell": {"k": k},
              "random_regular": {"n": n, "d": d}}[generator]
    try:
        report = conjecture_experiment(generator, params, trials, ctx.obj["seed"], _options(ctx))
    except ValueError as exc:
        _fail(EXIT_PARSE, str(exc))
    _write(ctx, report, {"command": "experiment conjecture"})
    sys.exit(0)


if __name__ == "__main__":
    main()
