"""Corpus-scale claim verification.

Expands generator configs into seeded instances, computes exact equalization
numbers where feasible (tree program for forests, brute force for small
general graphs), evaluates the requested claims, and aggregates everything
into a deterministic report whose CSV form is byte-identical across runs and
job counts.
"""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import bounds
from .bounds import ClaimEntry, INAPPLICABLE, PASS, SKIP, VIOLATED
from .certificates import validate_certificate
from .constructive import PreconditionError, equalize3_forest, girth5_equalize
from .extremal import build_extremal_forest, build_path, build_star, build_star_union
from .forest_dp import DeadlineExceeded, compute_fk_forest, dp_size_guard
from .generators import GeneratorConfig, gen_random_forest, gen_random_girth5
from .graph import Graph, degree_profile, girth, is_forest
from .oracle import DEFAULT_ORDER_LIMIT, brute_force_fk
from .prng import instance_seed

CLAIM_TAGS = (
    "oracle-equiv",
    "thm1",
    "thm2",
    "cor1",
    "cor2",
    "thm3",
    "lemma2",
    "lemma3-cert",
    "thm2-cert",
    "moore",
)


@dataclass(frozen=True)
class InstanceSpec:
    index: int
    kind: str
    params: dict

    def label(self) -> str:
        inner = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.index}:{self.kind}({inner})"


def expand_corpus(configs: list[GeneratorConfig]) -> list[InstanceSpec]:
    specs: list[InstanceSpec] = []
    for config in configs:
        for i in range(config.count):
            params: dict = {}
            if config.kind == "random-forest":
                params = {
                    "n": config.n,
                    "m": config.m,
                    "seed": instance_seed(config.seed, i),
                    "split": config.split,
                }
            elif config.kind == "random-girth5":
                params = {
                    "n": config.n,
                    "m": config.m,
                    "seed": instance_seed(config.seed, i),
                }
            elif config.kind == "extremal-Ft":
                params = {"t": config.t + i}
            elif config.kind == "star-union":
                params = {"sizes": config.sizes}
            elif config.kind in ("path", "star"):
                params = {"n": config.n}
            specs.append(InstanceSpec(len(specs), config.kind, params))
    return specs


def realize(spec: InstanceSpec) -> Graph:
    p = spec.params
    if spec.kind == "random-forest":
        return gen_random_forest(p["n"], p["split"], p["seed"], p["m"])
    if spec.kind == "random-girth5":
        return gen_random_girth5(p["n"], p["m"], p["seed"])
    if spec.kind == "extremal-Ft":
        return build_extremal_forest(p["t"])
    if spec.kind == "star-union":
        return build_star_union(p["sizes"])
    if spec.kind == "path":
        return build_path(p["n"])
    if spec.kind == "star":
        return build_star(p["n"])
    raise ValueError(f"unknown kind {spec.kind!r}")


class _InstanceContext:
    """Lazily computed facts about one instance, shared by all claims."""

    def __init__(self, spec, graph, oracle_limit, deadline):
        self.spec = spec
        self.graph = graph
        self.oracle_limit = oracle_limit
        self.deadline = deadline
        self._profile = None
        self._girth = None
        self._forest = None
        self._fk: dict[int, tuple[int | None, str]] = {}
        self.certificates = {}

    @property
    def profile(self):
        if self._profile is None:
            self._profile = degree_profile(self.graph)
        return self._profile

    @property
    def girth(self):
        if self._girth is None:
            self._girth = girth(self.graph)
        return self._girth

    @property
    def forest(self) -> bool:
        if self._forest is None:
            self._forest = is_forest(self.graph)
        return self._forest

    def fk(self, k: int) -> tuple[int | None, str]:
        """(value, method) with value None when no exact solver applies."""
        if k not in self._fk:
            self._fk[k] = self._compute_fk(k)
        return self._fk[k]

    def _compute_fk(self, k: int):
        graph = self.graph
        if self.forest:
            try:
                dp_size_guard(graph.n, k)
            except ValueError:
                pass
            else:
                value, cert = compute_fk_forest(graph, k, deadline=self.deadline)
                self.certificates[k] = cert
                return value, "dp"
        if graph.n <= self.oracle_limit:
            value, cert = brute_force_fk(
                graph, k, limit=self.oracle_limit, deadline=self.deadline
            )
            self.certificates[k] = cert
            return value, "brute"
        return None, "none"


def _skip(claim: str, params: dict, note: str) -> ClaimEntry:
    return ClaimEntry(claim, params, {}, None, {}, None, note=f"skip: {note}")


def _inapplicable(claim: str, params: dict, hypothesis: dict) -> ClaimEntry:
    return ClaimEntry(claim, params, hypothesis, False, {}, True)


def _claim_oracle_equiv(ctx, k_range) -> list[ClaimEntry]:
    out = []
    for k in k_range:
        if not ctx.forest:
            out.append(_skip("oracle-equiv", {"k": k}, "not a forest"))
            continue
        if ctx.graph.n > ctx.oracle_limit:
            out.append(_skip("oracle-equiv", {"k": k}, "above oracle limit"))
            continue
        dp_value, dp_cert = compute_fk_forest(ctx.graph, k, deadline=ctx.deadline)
        bf_value, bf_cert = brute_force_fk(
            ctx.graph, k, limit=ctx.oracle_limit, deadline=ctx.deadline
        )
        certs_ok = validate_certificate(ctx.graph, dp_cert, k) and validate_certificate(
            ctx.graph, bf_cert, k
        )
        out.append(
            ClaimEntry(
                "oracle-equiv",
                {"k": k},
                {"n": ctx.graph.n},
                True,
                {"dp": dp_value, "brute": bf_value, "certificates_valid": certs_ok},
                dp_value == bf_value and certs_ok,
                fk=bf_value,
            )
        )
    return out


def _claim_thm1(ctx, k_range) -> list[ClaimEntry]:
    if not ctx.forest:
        return [_skip("thm1", {}, "not a forest")]
    t = bounds.minimal_t(lambda t: bounds.theorem1_hypothesis(ctx.graph, t), 1)
    value, method = ctx.fk(2)
    if value is None:
        return [_skip("thm1", {"t": t}, "no exact solver for f_2")]
    return [
        ClaimEntry(
            "thm1",
            {"k": 2, "t": t},
            {"m": ctx.graph.m, "bound": bounds.bound_theorem1(t)},
            True,
            {"f_2": value, "needs": f"<= {t}", "method": method},
            value <= t,
            fk=value,
        )
    ]


def _minimal_t_thm2(ctx) -> int:
    return bounds.minimal_t(lambda t: bounds.theorem2_hypothesis(ctx.profile, t), 2)


def _claim_thm2(ctx, k_range) -> list[ClaimEntry]:
    if not ctx.forest:
        return [_skip("thm2", {}, "not a forest")]
    t = _minimal_t_thm2(ctx)
    value, method = ctx.fk(3)
    if value is None:
        return [_skip("thm2", {"t": t}, "no exact solver for f_3")]
    d1 = ctx.profile.deltas[0] if ctx.graph.n else 0
    d2 = ctx.profile.deltas[1] if ctx.graph.n > 1 else 0
    return [
        ClaimEntry(
            "thm2",
            {"k": 3, "t": t},
            {"d1_plus_2d2": d1 + 2 * d2, "bound": bounds.bound_theorem2(t)},
            True,
            {"f_3": value, "needs": f"<= {t}", "method": method},
            value <= t,
            fk=value,
        )
    ]


def _claim_thm2_cert(ctx, k_range) -> list[ClaimEntry]:
    if not ctx.forest:
        return [_skip("thm2-cert", {}, "not a forest")]
    t = _minimal_t_thm2(ctx)
    try:
        cert = equalize3_forest(ctx.graph, t)
    except PreconditionError as exc:
        return [_skip("thm2-cert", {"t": t}, f"precondition: {exc}")]
    ok = validate_certificate(ctx.graph, cert, 3) and len(cert.x) <= t
    return [
        ClaimEntry(
            "thm2-cert",
            {"k": 3, "t": t},
            {"budget": t},
            True,
            {"x_size": len(cert.x), "certificate_valid": ok},
            ok,
        )
    ]


def _claim_cor1(ctx, k_range) -> list[ClaimEntry]:
    if not ctx.forest:
        return [_skip("cor1", {}, "not a forest")]
    value, _ = ctx.fk(3)
    if value is None:
        return [_skip("cor1", {}, "no exact solver for f_3")]
    if value <= 2:
        return [
            _inapplicable("cor1", {"t": 2}, {"f_3": value, "needs": "> 2"})
        ]
    return [
        bounds.corollary1_check(ctx.profile, t, fk=value)
        for t in range(2, value)
    ]


def _claim_cor2(ctx, k_range) -> list[ClaimEntry]:
    if not ctx.forest:
        return [_skip("cor2", {}, "not a forest")]
    t = bounds.minimal_t(lambda t: bounds.corollary2_hypothesis(ctx.graph, t), 2)
    value, method = ctx.fk(3)
    if value is None:
        return [_skip("cor2", {"t": t}, "no exact solver for f_3")]
    return [
        ClaimEntry(
            "cor2",
            {"k": 3, "t": t},
            {"m": ctx.graph.m, "bound": str(bounds.bound_corollary2(t))},
            True,
            {"f_3": value, "needs": f"<= {t}", "method": method},
            value <= t,
            fk=value,
        )
    ]


def _claim_thm3(ctx, k_range) -> list[ClaimEntry]:
    if ctx.girth < 5:
        return [
            _inapplicable("thm3", {"k": k}, {"girth": ctx.girth, "needs": ">= 5"})
            for k in k_range
        ]
    out = []
    for k in k_range:
        t = bounds.minimal_t(
            lambda s: bounds.theorem3_hypothesis(ctx.profile, k, s), (k - 1) ** 2
        )
        value, method = ctx.fk(k)
        if value is None:
            out.append(_skip("thm3", {"k": k, "t": t}, f"no exact solver for f_{k}"))
            continue
        out.append(
            ClaimEntry(
                "thm3",
                {"k": k, "t": t},
                {
                    "weighted_degrees": sum(
                        i * bounds.profile_value(ctx.profile, i)
                        for i in range(1, k)
                    ),
                    "bound": bounds.bound_theorem3(k, t),
                    "c_k": bounds.c_k(k),
                },
                True,
                {f"f_{k}": value, "needs": f"<= {t}", "method": method},
                value <= t,
                fk=value,
            )
        )
    return out


def _claim_lemma2(ctx, k_range) -> list[ClaimEntry]:
    if ctx.spec.kind != "extremal-Ft":
        return [_inapplicable("lemma2", {}, {"kind": ctx.spec.kind})]
    t = ctx.spec.params["t"]
    value, method = ctx.fk(3)
    if value is None:
        return [_skip("lemma2", {"t": t}, "no exact solver for f_3")]
    return [
        ClaimEntry(
            "lemma2",
            {"k": 3, "t": t},
            {"kind": "extremal-Ft"},
            True,
            {"f_3": value, "expected": t, "method": method},
            value == t,
            fk=value,
        )
    ]


def _claim_lemma3_cert(ctx, k_range) -> list[ClaimEntry]:
    if ctx.girth < 5:
        return [
            _inapplicable(
                "lemma3-cert", {"k": k}, {"girth": ctx.girth, "needs": ">= 5"}
            )
            for k in k_range
        ]
    out = []
    for k in k_range:
        if ctx.graph.n < k:
            out.append(
                _inapplicable("lemma3-cert", {"k": k}, {"n": ctx.graph.n})
            )
            continue
        deltas = ctx.profile.deltas
        surplus = sum(deltas[: k - 1]) - (k - 1) * deltas[k - 1]
        t = max((k - 1) ** 2, surplus)
        try:
            cert = girth5_equalize(ctx.graph, k, t)
        except PreconditionError as exc:
            out.append(_skip("lemma3-cert", {"k": k, "t": t}, f"precondition: {exc}"))
            continue
        ok = validate_certificate(ctx.graph, cert, k) and len(cert.x) <= t
        out.append(
            ClaimEntry(
                "lemma3-cert",
                {"k": k, "t": t},
                {"surplus": surplus, "budget": t},
                True,
                {"x_size": len(cert.x), "certificate_valid": ok},
                ok,
            )
        )
    return out


def _claim_moore(ctx, k_range) -> list[ClaimEntry]:
    out = []
    for p in (2, 3):
        holds = bounds.moore_edge_bound_ok(ctx.graph.n, ctx.graph.m, p)
        out.append(
            ClaimEntry(
                "moore",
                {"p": p},
                {"girth": ctx.girth, "needs": f"> {2 * p}"},
                ctx.girth > 2 * p,
                {
                    "m": ctx.graph.m,
                    "bound": 2 * ctx.graph.n ** ((p + 1) / p),
                },
                holds,
            )
        )
    return out


_CLAIM_FUNCS = {
    "oracle-equiv": _claim_oracle_equiv,
    "thm1": _claim_thm1,
    "thm2": _claim_thm2,
    "cor1": _claim_cor1,
    "cor2": _claim_cor2,
    "thm3": _claim_thm3,
    "lemma2": _claim_lemma2,
    "lemma3-cert": _claim_lemma3_cert,
    "thm2-cert": _claim_thm2_cert,
    "moore": _claim_moore,
}


@dataclass
class RunResult:
    spec: InstanceSpec
    n: int | None
    m: int | None
    entries: list[ClaimEntry] = field(default_factory=list)
    computed: dict = field(default_factory=dict)
    elapsed_ms: float = 0.0
    error: str | None = None

    def to_dict(self) -> dict:
        return {
            "instance": self.spec.label(),
            "kind": self.spec.kind,
            "params": {k: v for k, v in self.spec.params.items()},
            "n": self.n,
            "m": self.m,
            "entries": [e.to_dict() for e in self.entries],
            "computed": self.computed,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "error": self.error,
        }


def _run_instance(args) -> RunResult:
    spec, claims, k_range, timeout, oracle_limit = args
    start = time.monotonic()
    try:
        graph = realize(spec)
    except Exception as exc:  # generator failures must not abort the run
        return RunResult(spec, None, None, error=f"{type(exc).__name__}: {exc}")
    deadline = None if timeout is None else start + timeout
    ctx = _InstanceContext(spec, graph, oracle_limit, deadline)
    entries: list[ClaimEntry] = []
    for claim in claims:
        try:
            entries.extend(_CLAIM_FUNCS[claim](ctx, k_range))
        except DeadlineExceeded:
            entries.append(_skip(claim, {}, "timeout"))
    computed = {}
    for k, (value, method) in sorted(ctx._fk.items()):
        cert = ctx.certificates.get(k)
        cert_ok = None if cert is None else validate_certificate(graph, cert, k)
        computed[str(k)] = {
            "f_k": value,
            "method": method,
            "certificate": None if cert is None else cert.to_dict(),
            "certificate_valid": cert_ok,
        }
        if cert_ok is False:
            entries.append(
                ClaimEntry(
                    "certificate",
                    {"k": k},
                    {},
                    True,
                    {"certificate_valid": False},
                    False,
                )
            )
    elapsed = (time.monotonic() - start) * 1000.0
    return RunResult(spec, graph.n, graph.m, entries, computed, elapsed)


@dataclass
class VerificationReport:
    results: list[RunResult]
    claims: tuple[str, ...]
    k_range: tuple[int, ...]

    @property
    def summary(self) -> dict:
        counts = {PASS: 0, VIOLATED: 0, INAPPLICABLE: 0, SKIP: 0, "report": 0}
        for result in self.results:
            for entry in result.entries:
                counts[entry.status] = counts.get(entry.status, 0) + 1
        counts["instances"] = len(self.results)
        counts["errors"] = sum(1 for r in self.results if r.error)
        return counts

    @property
    def ok(self) -> bool:
        return self.summary[VIOLATED] == 0

    def to_json(self) -> str:
        payload = {
            "claims": list(self.claims),
            "k_range": list(self.k_range),
            "results": [r.to_dict() for r in self.results],
            "summary": self.summary,
            "ok": self.ok,
        }
        return json.dumps(payload, indent=2, default=str) + "\n"

    def to_csv(self) -> str:
        # No timing columns: identical (corpus, claims, seed) runs must be
        # byte-identical regardless of job count or machine.
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(
            [
                "instance",
                "kind",
                "n",
                "m",
                "claim",
                "k",
                "t",
                "p",
                "hypothesis_holds",
                "conclusion_holds",
                "status",
                "f_k",
                "note",
            ]
        )
        for result in self.results:
            if result.error:
                writer.writerow(
                    [
                        result.spec.label(),
                        result.spec.kind,
                        "",
                        "",
                        "generator",
                        "",
                        "",
                        "",
                        "",
                        "",
                        "error",
                        "",
                        result.error,
                    ]
                )
                continue
            for e in result.entries:
                writer.writerow(
                    [
                        result.spec.label(),
                        result.spec.kind,
                        result.n,
                        result.m,
                        e.claim,
                        e.params.get("k", ""),
                        e.params.get("t", ""),
                        e.params.get("p", ""),
                        "" if e.hypothesis_holds is None else e.hypothesis_holds,
                        "" if e.conclusion_holds is None else e.conclusion_holds,
                        e.status,
                        "" if e.fk is None else e.fk,
                        e.note,
                    ]
                )
        return buf.getvalue()

    def to_text(self) -> str:
        lines = []
        for result in self.results:
            if result.error:
                lines.append(f"{result.spec.label()}: ERROR {result.error}")
                continue
            statuses = {}
            for e in result.entries:
                statuses[e.status] = statuses.get(e.status, 0) + 1
            brief = " ".join(f"{k}={v}" for k, v in sorted(statuses.items()))
            lines.append(
                f"{result.spec.label()} n={result.n} m={result.m}: {brief}"
            )
            for e in result.entries:
                if e.status == VIOLATED:
                    lines.append(
                        f"  VIOLATED {e.claim} params={e.params} "
                        f"hyp={e.hypothesis} concl={e.conclusion}"
                    )
        summary = self.summary
        lines.append(
            "summary: "
            + " ".join(f"{k}={summary[k]}" for k in sorted(summary))
        )
        lines.append("RESULT: " + ("ok" if self.ok else "VIOLATIONS FOUND"))
        return "\n".join(lines) + "\n"


def run_verification(
    configs: list[GeneratorConfig],
    claims: list[str],
    k_range=(2, 3),
    jobs: int = 1,
    timeout: float | None = None,
    oracle_limit: int = DEFAULT_ORDER_LIMIT,
) -> VerificationReport:
    """Evaluate the requested claims on every instance of the corpus."""
    for claim in claims:
        if claim not in _CLAIM_FUNCS:
            raise ValueError(f"unknown claim {claim!r}")
    specs = expand_corpus(configs)
    work = [
        (spec, tuple(claims), tuple(k_range), timeout, oracle_limit)
        for spec in specs
    ]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_instance, work))
    else:
        results = [_run_instance(item) for item in work]
    return VerificationReport(results, tuple(claims), tuple(k_range))
