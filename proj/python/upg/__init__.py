"""Unity product graphs of finite commutative rings."""

from ._upg import (
    FiniteRing,
    Graph,
    RingError,
    UnknownClaimError,
    VertexBoundError,
    analyze,
    boolean_ring,
    characteristic,
    claim_ids,
    direct_product,
    gf,
    graph,
    ring,
    run_cli,
    units,
    verify,
    zmod,
)

__all__ = [
    "FiniteRing",
    "Graph",
    "RingError",
    "UnknownClaimError",
    "VertexBoundError",
    "analyze",
    "boolean_ring",
    "characteristic",
    "claim_ids",
    "direct_product",
    "gf",
    "graph",
    "ring",
    "run_cli",
    "units",
    "verify",
    "zmod",
]
