"""Command-line interface.

Exit codes: 0 success, 1 claim violation or invalid certificate, 2 usage
error, 3 input error.
"""

from __future__ import annotations

import json
import sys
import time
from pathlib import Path

import click

from . import bench as bench_mod
from .certificates import validate_certificate
from .constructive import PreconditionError, girth5_equalize, peel_removal
from .extremal import (
    build_extremal_forest,
    build_path,
    build_star,
    build_star_union,
)
from .forest_dp import compute_fk_forest, dp_size_guard
from .generators import GeneratorConfig, gen_random_forest, gen_random_girth5
from .graph import (
    Graph,
    GraphFormatError,
    degree_profile,
    girth,
    is_forest,
    parse_graph,
    to_edgelist,
)
from .bounds import (
    asymptotic_report,
    bound_corollary2,
    bound_theorem1,
    bound_theorem2,
    bound_theorem3,
    c_k,
    corollary1_check,
    minimal_t,
    theorem1_hypothesis,
    theorem2_hypothesis,
    corollary2_hypothesis,
    theorem3_hypothesis,
)
from .oracle import DEFAULT_ORDER_LIMIT, brute_force_fk
from .prng import instance_seed
from .verify import CLAIM_TAGS, run_verification

EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_INPUT = 3


def _load_graph(path: str) -> Graph:
    try:
        return parse_graph(Path(path).read_text(encoding="utf-8"))
    except (OSError, GraphFormatError, ValueError) as exc:
        click.echo(f"input error: {exc}", err=True)
        sys.exit(EXIT_INPUT)


def _result_payload(graph, k, value, cert, method, elapsed_ms) -> dict:
    return {
        "n": graph.n,
        "m": graph.m,
        "k": k,
        "f_k": value,
        "method": method,
        "X": list(cert.x),
        "residual_max_degree": cert.residual_max_degree,
        "witnesses": list(cert.witnesses),
        "order_below_k": cert.order_below_k,
        "elapsed_ms": round(elapsed_ms, 3),
    }


def _emit_result(payload: dict, fmt: str) -> None:
    if fmt == "json":
        click.echo(json.dumps(payload, indent=2))
    elif fmt == "csv":
        keys = list(payload)
        click.echo(",".join(keys))
        click.echo(
            ",".join(
                " ".join(map(str, payload[key]))
                if isinstance(payload[key], list)
                else str(payload[key])
                for key in keys
            )
        )
    else:
        click.echo(
            f"f_{payload['k']} = {payload['f_k']} (method {payload['method']}, "
            f"{payload['elapsed_ms']} ms)"
        )
        click.echo(f"X = {payload['X']}")
        if payload["order_below_k"]:
            click.echo(f"residual order below k = {payload['k']}")
        else:
            click.echo(
                f"residual max degree = {payload['residual_max_degree']}, "
                f"witnesses = {payload['witnesses']}"
            )


@click.group()
def main():
    """Solvers and checkers for equating k maximum degrees by deletion."""


@main.command()
@click.option("--input", "input_path", required=True, help="Edge-list file.")
@click.option("--k", "k", type=int, required=True)
@click.option(
    "--method",
    type=click.Choice(["dp", "brute", "auto"]),
    default="auto",
    show_default=True,
)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "json", "csv"]),
    default="text",
    show_default=True,
)
@click.option("--force", is_flag=True, help="Override the solver size guards.")
@click.option("--jobs", type=int, default=1, show_default=True)
def compute(input_path, k, method, fmt, force, jobs):
    """Exact equalization number of a graph."""
    if k < 2:
        click.echo("usage error: k must be at least 2", err=True)
        sys.exit(EXIT_USAGE)
    graph = _load_graph(input_path)
    forest = is_forest(graph)
    if method == "auto":
        method = "dp" if forest else "brute"
    if method == "dp" and not forest:
        click.echo("input error: the tree solver requires a forest", err=True)
        sys.exit(EXIT_INPUT)
    start = time.perf_counter()
    if method == "dp":
        try:
            dp_size_guard(graph.n, k, force)
        except ValueError as exc:
            click.echo(f"usage error: {exc}", err=True)
            sys.exit(EXIT_USAGE)
        value, cert = compute_fk_forest(graph, k, jobs=jobs)
    else:
        limit = graph.n if force else DEFAULT_ORDER_LIMIT
        try:
            value, cert = brute_force_fk(graph, k, limit=limit)
        except ValueError as exc:
            click.echo(f"usage error: {exc}", err=True)
            sys.exit(EXIT_USAGE)
    elapsed = (time.perf_counter() - start) * 1000.0
    if not validate_certificate(graph, cert, k):
        click.echo("internal error: produced certificate failed validation", err=True)
        sys.exit(EXIT_VIOLATION)
    _emit_result(_result_payload(graph, k, value, cert, cert.method, elapsed), fmt)


@main.command()
@click.option("--input", "input_path", required=True)
@click.option("--k", "k", type=int, required=True)
@click.option("--limit", type=int, default=DEFAULT_ORDER_LIMIT, show_default=True)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "json", "csv"]),
    default="text",
    show_default=True,
)
def brute(input_path, k, limit, fmt):
    """Ground-truth equalization number by subset enumeration."""
    if k < 2:
        click.echo("usage error: k must be at least 2", err=True)
        sys.exit(EXIT_USAGE)
    graph = _load_graph(input_path)
    start = time.perf_counter()
    try:
        value, cert = brute_force_fk(graph, k, limit=limit)
    except ValueError as exc:
        click.echo(f"usage error: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    elapsed = (time.perf_counter() - start) * 1000.0
    _emit_result(_result_payload(graph, k, value, cert, "brute", elapsed), fmt)


@main.command()
@click.option(
    "--family",
    type=click.Choice(["extremal-ft", "star", "path", "star-union"]),
    required=True,
)
@click.option("--t", "t", type=int, default=None, help="Extremal family parameter.")
@click.option("--n", "n", type=int, default=None, help="Order for star/path.")
@click.option("--sizes", default=None, help="Comma-separated star leaf counts.")
@click.option("--out", "out_path", default=None, help="Output file (default stdout).")
def construct(family, t, n, sizes, out_path):
    """Write a deterministic family member as an edge list."""
    try:
        if family == "extremal-ft":
            if t is None:
                raise ValueError("--t is required for extremal-ft")
            graph = build_extremal_forest(t)
        elif family == "star-union":
            if not sizes:
                raise ValueError("--sizes is required for star-union")
            graph = build_star_union([int(s) for s in sizes.split(",")])
        elif family == "star":
            if n is None:
                raise ValueError("--n is required for star")
            graph = build_star(n)
        else:
            if n is None:
                raise ValueError("--n is required for path")
            graph = build_path(n)
    except ValueError as exc:
        click.echo(f"usage error: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    text = to_edgelist(graph)
    if out_path:
        Path(out_path).write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)


@main.command()
@click.option(
    "--kind",
    type=click.Choice(["random-forest", "random-girth5"]),
    required=True,
)
@click.option("--n", "n", type=int, required=True)
@click.option("--m", "m", type=int, default=None)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--count", type=int, default=1, show_default=True)
@click.option("--out", "out_dir", required=True, help="Output directory.")
def gen(kind, n, m, seed, count, out_dir):
    """Generate seeded random instances into a directory."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for i in range(count):
        inst_seed = instance_seed(seed, i)
        try:
            if kind == "random-forest":
                graph = gen_random_forest(n, seed=inst_seed, m=m)
            else:
                graph = gen_random_girth5(n, m, seed=inst_seed)
        except ValueError as exc:
            click.echo(f"input error: instance {i}: {exc}", err=True)
            sys.exit(EXIT_INPUT)
        path = out / f"{kind}-n{n}-s{seed}-i{i:04d}.txt"
        path.write_text(to_edgelist(graph), encoding="utf-8")
        click.echo(str(path))


@main.command()
@click.option("--input", "input_path", required=True)
@click.option("--k", "k", type=int, default=None)
@click.option("--t", "t", type=int, default=None)
@click.option("--p", "p", type=int, default=None)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "json"]),
    default="text",
    show_default=True,
)
def bounds(input_path, k, t, p, fmt):
    """Print all applicable bound evaluations for one instance."""
    graph = _load_graph(input_path)
    profile = degree_profile(graph)
    g = girth(graph)
    forest = is_forest(graph)
    k = k or 3
    p = p or 2
    report: dict = {
        "n": graph.n,
        "m": graph.m,
        "girth": "inf" if g == float("inf") else g,
        "is_forest": forest,
        "degree_profile_head": list(profile.deltas[:10]),
        "constants": {"c_2": c_k(2), "c_3": c_k(3)},
    }
    if forest:
        t1 = minimal_t(lambda s: theorem1_hypothesis(graph, s), 1)
        t2 = minimal_t(lambda s: theorem2_hypothesis(profile, s), 2)
        t3 = minimal_t(lambda s: corollary2_hypothesis(graph, s), 2)
        report["forest_thresholds"] = {
            "two-max-degrees": {"t": t1, "edge_bound": bound_theorem1(t1)},
            "three-max-degrees-profile": {"t": t2, "bound": bound_theorem2(t2)},
            "three-max-degrees-size": {"t": t3, "bound": str(bound_corollary2(t3))},
        }
    if g >= 5:
        t_g5 = minimal_t(
            lambda s: theorem3_hypothesis(profile, k, s), (k - 1) ** 2
        )
        report["girth5_threshold"] = {
            "k": k,
            "t": t_g5,
            "bound": bound_theorem3(k, t_g5),
        }
    if t is not None and graph.n >= t + 1:
        report["degree_lower_bounds_at_t"] = corollary1_check(profile, t).to_dict()
    report["asymptotics"] = [
        e.to_dict() for e in asymptotic_report(graph, k, p)
    ]
    if fmt == "json":
        click.echo(json.dumps(report, indent=2, default=str))
    else:
        for key, value in report.items():
            click.echo(f"{key}: {value}")


@main.command()
@click.option("--claims", required=True, help="Comma-separated claim tags.")
@click.option("--corpus", "corpus_path", required=True, help="JSON corpus spec.")
@click.option("--jobs", type=int, default=1, show_default=True)
@click.option("--timeout", type=float, default=None, help="Seconds per instance.")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "json", "csv"]),
    default="text",
    show_default=True,
)
@click.option("--k-range", default="2,3", show_default=True)
def verify(claims, corpus_path, jobs, timeout, fmt, k_range):
    """Run claim checks over a generated corpus; exit 1 on any violation."""
    claim_list = [c.strip() for c in claims.split(",") if c.strip()]
    unknown = [c for c in claim_list if c not in CLAIM_TAGS]
    if unknown:
        click.echo(f"usage error: unknown claims {unknown}", err=True)
        sys.exit(EXIT_USAGE)
    try:
        ks = tuple(int(x) for x in k_range.split(","))
        if any(k < 2 for k in ks):
            raise ValueError("k values must be at least 2")
    except ValueError as exc:
        click.echo(f"usage error: bad --k-range: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    try:
        raw = json.loads(Path(corpus_path).read_text(encoding="utf-8"))
        if isinstance(raw, dict):
            raw = raw["configs"]
        configs = [GeneratorConfig.from_dict(item) for item in raw]
    except (OSError, KeyError, TypeError, ValueError) as exc:
        click.echo(f"input error: bad corpus spec: {exc}", err=True)
        sys.exit(EXIT_INPUT)
    report = run_verification(
        configs, claim_list, k_range=ks, jobs=jobs, timeout=timeout
    )
    if fmt == "json":
        click.echo(report.to_json(), nl=False)
    elif fmt == "csv":
        click.echo(report.to_csv(), nl=False)
    else:
        click.echo(report.to_text(), nl=False)
    if not report.ok:
        sys.exit(EXIT_VIOLATION)


@main.command("bench")
@click.option(
    "--suite",
    type=click.Choice(["small", "forest-dp", "oracle"]),
    required=True,
)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "json", "csv"]),
    default="text",
    show_default=True,
)
def bench(suite, fmt):
    """Time the solvers on fixed seeded instances."""
    rows = bench_mod.run_suite(suite)
    click.echo(bench_mod.render(rows, fmt), nl=False)


@main.command()
@click.option("--input", "input_path", required=True)
@click.option("--k", "k", type=int, required=True)
@click.option("--t", "t", type=int, required=True)
@click.option(
    "--procedure",
    type=click.Choice(["girth5", "peel"]),
    default="girth5",
    show_default=True,
)
def equalize(input_path, k, t, procedure):
    """Run a constructive procedure and print its certificate."""
    graph = _load_graph(input_path)
    try:
        if procedure == "peel":
            cert = peel_removal(graph, k)
        else:
            cert = girth5_equalize(graph, k, t)
    except PreconditionError as exc:
        click.echo(f"usage error: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    payload = cert.to_dict()
    payload["valid"] = validate_certificate(graph, cert, k)
    click.echo(json.dumps(payload, indent=2))
    if not payload["valid"]:
        sys.exit(EXIT_VIOLATION)


if __name__ == "__main__":
    main()
