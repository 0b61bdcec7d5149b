"""
Supposer — Revision Package
Core extraction, the supposition operator and nonmonotonic consequence.
"""

from revision.consequence import nm_follows, nm_follows_via_cores
from revision.cores import (
    cores_bruteforce,
    cores_of,
    expects,
    fully_believes,
    innermost,
    is_core_bruteforce,
    outermost,
)
from revision.supposition import (
    accepts_conditional,
    accepts_iterated,
    entertainable,
    is_consistent,
    is_universal,
    suppose,
    suppose_seq,
)

__all__ = [
    "cores_of",
    "innermost",
    "outermost",
    "expects",
    "fully_believes",
    "is_core_bruteforce",
    "cores_bruteforce",
    "suppose",
    "suppose_seq",
    "accepts_conditional",
    "accepts_iterated",
    "entertainable",
    "is_universal",
    "is_consistent",
    "nm_follows",
    "nm_follows_via_cores",
]
