"""Deletion certificates: a vertex set X plus re-checkable evidence.

A certificate witnesses that deleting X from the input graph leaves either at
least k vertices of maximum degree (the witnesses) or fewer than k vertices.
All vertex ids refer to the original input graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, check_fk_condition, remove_vertices

METHODS = ("dp", "brute", "peel", "girth5", "theorem2")


class InvalidCertificateError(ValueError):
    pass


@dataclass(frozen=True)
class RemovalCertificate:
    x: tuple[int, ...]
    residual_max_degree: int | None
    witnesses: tuple[int, ...]
    order_below_k: bool
    method: str

    def to_dict(self) -> dict:
        return {
            "X": list(self.x),
            "residual_max_degree": self.residual_max_degree,
            "witnesses": list(self.witnesses),
            "order_below_k": self.order_below_k,
            "method": self.method,
        }


def make_certificate(graph: Graph, removed, k: int, method: str) -> RemovalCertificate:
    """Build a certificate for deletion set ``removed``, or raise if invalid.

    Witnesses are all maximum-degree vertices of the residual graph, in
    ascending original id.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method tag {method!r}")
    x = tuple(sorted(set(removed)))
    residual, old_to_new = remove_vertices(graph, x)
    if residual.n < k:
        return RemovalCertificate(x, None, (), True, method)
    max_deg = residual.max_degree()
    new_to_old = {new: old for old, new in old_to_new.items()}
    witnesses = tuple(
        sorted(new_to_old[v] for v in range(residual.n) if residual.degree(v) == max_deg)
    )
    if len(witnesses) < k:
        raise InvalidCertificateError(
            f"deletion set {x} leaves only {len(witnesses)} max-degree vertices"
        )
    return RemovalCertificate(x, max_deg, witnesses, False, method)


def validate_certificate(graph: Graph, cert: RemovalCertificate, k: int) -> bool:
    """Re-check a certificate against the graph it claims to equalize."""
    if not check_fk_condition(graph, cert.x, k):
        return False
    residual, old_to_new = remove_vertices(graph, cert.x)
    if cert.order_below_k:
        return residual.n < k
    if residual.n < k or cert.residual_max_degree is None:
        return False
    if residual.max_degree() != cert.residual_max_degree:
        return False
    if len(cert.witnesses) < k:
        return False
    xset = set(cert.x)
    for w in cert.witnesses:
        if w in xset or w not in old_to_new:
            return False
        if residual.degree(old_to_new[w]) != cert.residual_max_degree:
            return False
    return True
