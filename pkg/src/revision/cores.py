"""
Supposer — Core System
Extraction of the nested chain of probability cores, the innermost core
(expectations) and the outermost core (full beliefs), and an independent
brute-force oracle that tests the strong superiority condition directly.
"""

from __future__ import annotations

import logging
from itertools import combinations

from config.settings import BRUTEFORCE_MAX_WORLDS
from errors import UniverseTooLargeError
from logic.semantics import extension
from logic.syntax import Formula
from state.model import is_normal, popper_eval, powerset
from state.schemas import CoreSystem, EpistemicState, Proposition

logger = logging.getLogger(__name__)


def cores_of(state: EpistemicState) -> CoreSystem:
    """Cumulative unions of the rank supports, innermost first; empty for the abnormal state."""
    cores = []
    running: Proposition = frozenset()
    for rank in state.ranks:
        running = running | rank.support
        cores.append(running)
    return CoreSystem(cores=tuple(cores))


def innermost(state: EpistemicState) -> Proposition:
    """I(P): the heavy points; empty for the abnormal state."""
    return cores_of(state).innermost


def outermost(state: EpistemicState) -> Proposition:
    """F(P): the largest core; empty for the abnormal state."""
    return cores_of(state).outermost


def _entails(core: Proposition, f: Formula, state: EpistemicState) -> bool:
    return bool(core) and core <= extension(f, state.universe, state.atoms)


def expects(state: EpistemicState, f: Formula) -> bool:
    """The innermost core is nonempty and entails f."""
    return _entails(innermost(state), f, state)


def fully_believes(state: EpistemicState, f: Formula) -> bool:
    """The outermost core is nonempty and entails f."""
    return _entails(outermost(state), f, state)


# ──────────────────────────────────────────────
# Brute-Force Oracle
# ──────────────────────────────────────────────

def _check_bound(state: EpistemicState, max_worlds: int, operation: str) -> None:
    if len(state.universe) > max_worlds:
        raise UniverseTooLargeError(len(state.universe), max_worlds, operation)


def _nonempty_subsets(members: Proposition):
    ordered = sorted(members)
    for size in range(1, len(ordered) + 1):
        for combo in combinations(ordered, size):
            yield frozenset(combo)


def is_core_bruteforce(state: EpistemicState, k: Proposition, max_worlds: int = BRUTEFORCE_MAX_WORLDS) -> bool:
    """
    K is normal and satisfies the strong superiority condition: for every
    nonempty A within K and every B outside K, P(B | A u B) = 0.
    Enumerates all such pairs.
    """
    _check_bound(state, max_worlds, "is_core_bruteforce")
    k = frozenset(k)
    if not is_normal(state, k):
        return False
    outside = powerset(state.world_ids - k)
    for a in _nonempty_subsets(k):
        for b in outside:
            if popper_eval(state, b, a | b) != 0:
                return False
    return True


def cores_bruteforce(state: EpistemicState, max_worlds: int = BRUTEFORCE_MAX_WORLDS) -> CoreSystem:
    """Every subset of the universe that passes is_core_bruteforce, smallest first."""
    _check_bound(state, max_worlds, "cores_bruteforce")
    found = [k for k in powerset(state.world_ids) if is_core_bruteforce(state, k, max_worlds)]
    found.sort(key=len)
    logger.debug("[CORES] brute force found %d cores over %d worlds", len(found), len(state.universe))
    return CoreSystem(cores=tuple(found))
