"""
Supposer — Audit Package
Registry of every mechanically checked property, for lookup by name.
"""

from audit.axioms import (
    AxiomCheck,
    ConjunctiveRevision,
    ConsistencyPreservation,
    CoreDynamics,
    CoreInclusion,
    Cumulativity,
    E1,
    E2,
    E3,
    E4,
    Expansion,
    Fixity,
    GlobalSuccess,
    Preservation,
    ProbabilisticCumulativity,
    RestrictedConsistencyPreservation,
    Success,
)
from audit.base import BaseCheck
from audit.postulates import POSTULATES, PostulateCheck


# ── Check Registry ────────────────────────────
# The harness runs AXIOM_CHECKS in this order on every audited state.

AXIOM_CHECKS: tuple[type[AxiomCheck], ...] = (
    Expansion,
    Success,
    Preservation,
    RestrictedConsistencyPreservation,
    Fixity,
    Cumulativity,
    GlobalSuccess,
    CoreInclusion,
    CoreDynamics,
    ProbabilisticCumulativity,
    E1,
    E2,
    E3,
    E4,
    ConsistencyPreservation,
    ConjunctiveRevision,
)

CHECK_REGISTRY: dict[str, type[BaseCheck]] = {
    check.name: check for check in (*AXIOM_CHECKS, *POSTULATES)
}


def get_check(name: str) -> BaseCheck:
    """Instantiate a check by name from the registry."""
    if name not in CHECK_REGISTRY:
        raise ValueError(
            f"Unknown check '{name}'. Available: {list(CHECK_REGISTRY.keys())}"
        )
    return CHECK_REGISTRY[name]()


__all__ = [
    "BaseCheck",
    "AxiomCheck",
    "PostulateCheck",
    "AXIOM_CHECKS",
    "POSTULATES",
    "CHECK_REGISTRY",
    "get_check",
]
