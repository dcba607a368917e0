"""Exact evaluators and instance checkers for the deletion-number bounds.

All thresholds are computed in exact integer or rational arithmetic so strict
inequalities at the boundary never suffer floating drift.  Checkers separate
hypothesis from conclusion: an entry is VIOLATED only when a decidable
hypothesis holds and a decidable conclusion fails; asymptotic statements are
report-only by construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .graph import DegreeProfile, Graph, girth


def bound_theorem1(t: int) -> int:
    """Forest edge threshold below which two maximum degrees cost at most t
    deletions: (t^3 + 6 t^2 + 17 t + 12) / 6."""
    if t < 1:
        raise ValueError("t must be positive")
    value = t**3 + 6 * t**2 + 17 * t + 12
    if value % 6:
        raise AssertionError("threshold is always divisible by 6")
    return value // 6


def bound_theorem2(t: int) -> int:
    """Threshold on d_1 + 2 d_2 for equalizing three maximum degrees in a
    forest with at most t deletions."""
    if t < 2:
        raise ValueError("t must be at least 2")
    return comb(t + 2, 2) + 2


def bound_corollary2(t: int) -> Fraction:
    """Forest edge threshold (strict) for three maximum degrees in at most t
    deletions: t^3/18 + t^2/3 + 11 t/18 + 1."""
    if t < 2:
        raise ValueError("t must be at least 2")
    return (
        Fraction(t**3, 18) + Fraction(t**2, 3) + Fraction(11 * t, 18) + 1
    )


def c_k(k: int) -> int:
    """Additive constant of the girth-5 weighted-degree bound, defined by
    C((k-1)^2 + 2, 2) + c_k = k - 1."""
    if k < 2:
        raise ValueError("k must be at least 2")
    return (k - 1) - comb((k - 1) ** 2 + 2, 2)


def bound_theorem3(k: int, t: int) -> int:
    """Threshold on sum_{i<k} i * d_i for girth-5 graphs: C(t+2, 2) + c_k."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if t < (k - 1) ** 2:
        raise ValueError(f"t must be at least (k-1)^2 = {(k - 1) ** 2}")
    return comb(t + 2, 2) + c_k(k)


def corollary1_threshold_iii(t: int) -> Fraction:
    return Fraction(t**3, 18) + Fraction(t**2, 3) + Fraction(29 * t, 18)


# ---------------------------------------------------------------------------
# Structured claim reporting


PASS = "pass"
VIOLATED = "violated"
INAPPLICABLE = "inapplicable"
REPORT = "report"
SKIP = "skip"


@dataclass(frozen=True)
class ClaimEntry:
    """One claim evaluated on one instance."""

    claim: str
    params: dict
    hypothesis: dict
    hypothesis_holds: bool | None
    conclusion: dict
    conclusion_holds: bool | None
    fk: int | None = None
    note: str = ""

    @property
    def status(self) -> str:
        if self.note.startswith("skip"):
            return SKIP
        if self.hypothesis_holds is None or self.conclusion_holds is None:
            return REPORT
        if not self.hypothesis_holds:
            return INAPPLICABLE
        return PASS if self.conclusion_holds else VIOLATED

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "params": dict(self.params),
            "hypothesis": dict(self.hypothesis),
            "hypothesis_holds": self.hypothesis_holds,
            "conclusion": dict(self.conclusion),
            "conclusion_holds": self.conclusion_holds,
            "f_k": self.fk,
            "status": self.status,
            "note": self.note,
        }


@dataclass
class BoundReport:
    """All claim entries evaluated on a single instance."""

    instance: str
    entries: list[ClaimEntry] = field(default_factory=list)

    @property
    def violated(self) -> bool:
        return any(e.status == VIOLATED for e in self.entries)


def profile_value(profile: DegreeProfile, i: int) -> int:
    """d_i with zero padding beyond the profile length."""
    return profile.deltas[i - 1] if i <= len(profile.deltas) else 0


def theorem1_hypothesis(graph: Graph, t: int) -> bool:
    return graph.m < bound_theorem1(t)


def theorem2_hypothesis(profile: DegreeProfile, t: int) -> bool:
    return (
        profile_value(profile, 1) + 2 * profile_value(profile, 2)
        <= bound_theorem2(t)
    )


def corollary2_hypothesis(graph: Graph, t: int) -> bool:
    return graph.m < bound_corollary2(t)


def lemma3_hypothesis(profile: DegreeProfile, k: int, t: int) -> bool:
    if t < (k - 1) ** 2:
        return False
    surplus = sum(profile_value(profile, i) for i in range(1, k)) - (
        k - 1
    ) * profile_value(profile, k)
    return surplus <= t


def theorem3_hypothesis(profile: DegreeProfile, k: int, t: int) -> bool:
    if t < (k - 1) ** 2:
        return False
    weighted = sum(i * profile_value(profile, i) for i in range(1, k))
    return weighted <= bound_theorem3(k, t)


def minimal_t(predicate, start: int, limit: int = 10_000) -> int | None:
    """Smallest t >= start satisfying a monotone hypothesis predicate."""
    for t in range(start, limit):
        if predicate(t):
            return t
    return None


def corollary1_check(
    profile: DegreeProfile, t: int, fk: int | None = None
) -> ClaimEntry:
    """Check the three degree lower bounds forced by needing more than t
    deletions to equalize three maximum degrees.

    The hypothesis is f_3 > t (decidable only when ``fk`` is supplied); the
    conclusion is the conjunction of clauses (i)-(iii).
    """
    if t < 2:
        raise ValueError("t must be at least 2")
    if len(profile.deltas) < t + 1:
        raise ValueError(f"profile too short: need at least {t + 1} entries")

    clause_i = profile.delta(t) >= 2
    clause_ii = True
    ii_values = []
    for i in range(2, t + 1):
        lhs = profile.delta(t + 1 - i) + 2 * profile.delta(t + 2 - i)
        rhs = comb(i + 2, 2) + 3
        ii_values.append((i, lhs, rhs))
        if lhs < rhs:
            clause_ii = False
    head_sum = sum(profile.deltas[:t])
    threshold = corollary1_threshold_iii(t)
    clause_iii = head_sum >= threshold

    return ClaimEntry(
        claim="cor1",
        params={"t": t},
        hypothesis={"f_3": fk, "needs": f"> {t}"},
        hypothesis_holds=None if fk is None else fk > t,
        conclusion={
            "i": clause_i,
            "ii": clause_ii,
            "ii_values": ii_values,
            "iii": clause_iii,
            "head_sum": head_sum,
            "iii_threshold": str(threshold),
        },
        conclusion_holds=clause_i and clause_ii and clause_iii,
        fk=fk,
    )


def moore_edge_bound_ok(n: int, m: int, p: int) -> bool:
    """Exact check of m <= 2 n^((p+1)/p), valid for graphs of girth > 2p."""
    if p < 1:
        raise ValueError("p must be positive")
    return m**p <= 2**p * n ** (p + 1)


def asymptotic_report(
    graph: Graph, k: int, p: int, fk: int | None = None
) -> list[ClaimEntry]:
    """Leading-constant values of the asymptotic consequences, plus the exact
    Moore edge bound for girth above 2p.

    Only the Moore inequality is pass/fail; the growth-rate statements carry
    unspecified lower-order terms and are reported without a verdict.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if p < 1:
        raise ValueError("p must be positive")
    g = girth(graph)
    entries = [
        ClaimEntry(
            claim="moore",
            params={"p": p},
            hypothesis={"girth": g, "needs": f"> {2 * p}"},
            hypothesis_holds=g > 2 * p,
            conclusion={
                "m": graph.m,
                "bound": 2 * graph.n ** ((p + 1) / p),
                "holds": moore_edge_bound_ok(graph.n, graph.m, p),
            },
            conclusion_holds=moore_edge_bound_ok(graph.n, graph.m, p),
            fk=fk,
        ),
        ClaimEntry(
            claim="cor3",
            params={"k": k},
            hypothesis={"girth": g, "needs": ">= 5"},
            hypothesis_holds=g >= 5,
            conclusion={
                "leading_divisor": 6 * comb(k, 2),
                "note": "size threshold t^3 / (6 C(k,2)) up to O(t^2)",
            },
            conclusion_holds=None,
            fk=fk,
        ),
        ClaimEntry(
            claim="cor4",
            params={"k": k, "p": p},
            hypothesis={"girth": g, "needs": f"> {2 * p}"},
            hypothesis_holds=g > 2 * p,
            conclusion={
                "constant": (12 * comb(k, 2)) ** (1 / 3),
                "value": (12 * comb(k, 2)) ** (1 / 3)
                * graph.n ** ((p + 1) / (3 * p)),
            },
            conclusion_holds=None,
            fk=fk,
        ),
        ClaimEntry(
            claim="cor5",
            params={"k": k},
            hypothesis={"girth": g, "needs": "forest (girth inf)"},
            hypothesis_holds=g == float("inf"),
            conclusion={
                "constant": (6 * comb(k, 2)) ** (1 / 3),
                "value": (6 * comb(k, 2)) ** (1 / 3) * graph.n ** (1 / 3),
            },
            conclusion_holds=None,
            fk=fk,
        ),
    ]
    return entries
