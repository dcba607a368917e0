"""Timed benchmark suites over fixed seeded instances."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass

from .extremal import build_extremal_forest, build_path, build_star_union
from .forest_dp import compute_fk_forest
from .generators import gen_random_forest
from .oracle import brute_force_fk


@dataclass
class BenchRow:
    name: str
    n: int
    m: int
    k: int
    method: str
    value: int
    elapsed_ms: float


def _timed(fn, *args, **kwargs):
    start = time.perf_counter()
    value, _cert = fn(*args, **kwargs)
    return value, (time.perf_counter() - start) * 1000.0


def run_suite(suite: str) -> list[BenchRow]:
    rows: list[BenchRow] = []
    if suite == "small":
        cases = [
            ("path-4", build_path(4)),
            ("star-union-1-3", build_star_union([3, 1])),
            ("extremal-F3", build_extremal_forest(3)),
            ("forest-n12", gen_random_forest(12, seed=7)),
        ]
        for name, graph in cases:
            for k in (2, 3):
                value, ms = _timed(compute_fk_forest, graph, k)
                rows.append(BenchRow(name, graph.n, graph.m, k, "dp", value, ms))
    elif suite == "forest-dp":
        for k, sizes in ((2, (40, 70, 100)), (3, (30, 45, 60))):
            for n in sizes:
                graph = gen_random_forest(n, seed=1000 + n)
                value, ms = _timed(compute_fk_forest, graph, k)
                rows.append(
                    BenchRow(f"forest-n{n}", graph.n, graph.m, k, "dp", value, ms)
                )
    elif suite == "oracle":
        for n in (10, 12, 14, 16):
            graph = gen_random_forest(n, seed=2000 + n)
            for k in (2, 3):
                value, ms = _timed(brute_force_fk, graph, k)
                rows.append(
                    BenchRow(f"forest-n{n}", graph.n, graph.m, k, "brute", value, ms)
                )
    else:
        raise ValueError(f"unknown bench suite {suite!r}")
    return rows


def render(rows: list[BenchRow], fmt: str) -> str:
    if fmt == "json":
        return (
            json.dumps([row.__dict__ for row in rows], indent=2, default=str) + "\n"
        )
    if fmt == "csv":
        out = ["name,n,m,k,method,value,elapsed_ms"]
        out.extend(
            f"{r.name},{r.n},{r.m},{r.k},{r.method},{r.value},{r.elapsed_ms:.3f}"
            for r in rows
        )
        return "\n".join(out) + "\n"
    width = max(len(r.name) for r in rows)
    lines = [
        f"{r.name:<{width}}  n={r.n:>4} m={r.m:>4} k={r.k} "
        f"{r.method:<5} value={r.value:>3} {r.elapsed_ms:9.2f} ms"
        for r in rows
    ]
    return "\n".join(lines) + "\n"
