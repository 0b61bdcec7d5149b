"""
Supposer — Epistemic Model
Construction and evaluation of two-place probability functions stored as
ranked stacks of exact measures with disjoint supports.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from itertools import combinations
from typing import Optional

from errors import (
    DuplicateWorldError,
    EmptyUniverseError,
    InvalidKappaError,
    NonPositiveWeightError,
    OverlappingSupportsError,
    RankOrderError,
    UnknownWorldError,
    ValuationError,
    WeightSumError,
)
from state.schemas import EpistemicState, Proposition, RankMeasure, World

logger = logging.getLogger(__name__)

ONE = Fraction(1)
ZERO = Fraction(0)


# ──────────────────────────────────────────────
# Construction
# ──────────────────────────────────────────────

def _check_universe(universe: Sequence[World], atoms: Sequence[str]) -> None:
    if not universe:
        raise EmptyUniverseError()
    declared = set(atoms)
    seen: set[str] = set()
    for w in universe:
        if w.id in seen:
            raise DuplicateWorldError(w.id)
        seen.add(w.id)
        keys = set(w.valuation)
        if keys != declared:
            raise ValuationError(w.id, declared - keys, keys - declared)


def _check_ranks(ranks: Sequence[RankMeasure], world_ids: frozenset[str]) -> None:
    owner: dict[str, int] = {}
    for position, rank in enumerate(ranks):
        if rank.rank_index != position:
            raise RankOrderError(position, rank.rank_index)
        unknown = rank.support - world_ids
        if unknown:
            raise UnknownWorldError(unknown)
        for world_id, weight in rank.weights.items():
            if weight <= 0:
                raise NonPositiveWeightError(rank.rank_index, world_id, weight)
            if world_id in owner:
                raise OverlappingSupportsError(world_id, owner[world_id], rank.rank_index)
            owner[world_id] = rank.rank_index
        total = sum(rank.weights.values(), ZERO)
        if total != ONE:
            raise WeightSumError(rank.rank_index, total)


def build_state(
    universe: Sequence[World],
    ranks: Sequence[RankMeasure],
    atoms: Optional[Sequence[str]] = None,
) -> EpistemicState:
    """
    Validate and assemble a state. Atoms default to the first world's valuation keys.

    Raises:
        ModelValidationError subclasses for every broken invariant: overlapping
        supports, weight sums other than 1 (with the exact sum), unknown worlds,
        non-positive weights, gaps in rank numbering, non-total valuations.
    """
    universe = tuple(universe)
    if atoms is None:
        atoms = tuple(universe[0].valuation) if universe else ()
    _check_universe(universe, atoms)
    _check_ranks(ranks, frozenset(w.id for w in universe))
    state = EpistemicState(atoms=tuple(atoms), universe=universe, ranks=tuple(ranks))
    logger.debug("[MODEL] built state: %d worlds, %d ranks", len(universe), len(state.ranks))
    return state


def abnormal_state(universe: Sequence[World], atoms: Optional[Sequence[str]] = None) -> EpistemicState:
    """The coreless state assigning 1 to every event. The empty universe is allowed here only."""
    universe = tuple(universe)
    if atoms is None:
        atoms = tuple(universe[0].valuation) if universe else ()
    return EpistemicState(atoms=tuple(atoms), universe=universe, ranks=())


def from_ranking(
    universe: Sequence[World],
    kappa: Mapping[str, int],
    cutoff: Optional[int] = None,
    weights: Optional[Mapping[str, Fraction | int | str]] = None,
    atoms: Optional[Sequence[str]] = None,
) -> EpistemicState:
    """
    Import a kappa ranking: one rank per occupied kappa value <= cutoff, in
    increasing order. Worlds above the cutoff, or absent from `kappa`, are
    non-entertainable. Within a rank weights are uniform unless `weights`
    gives relative weights, which are normalized per rank.

    Raises:
        InvalidKappaError: a kappa value is not a nonnegative integer.
    """
    world_ids = frozenset(w.id for w in universe)
    unknown = set(kappa) - world_ids
    if unknown:
        raise UnknownWorldError(unknown)
    for world_id, k in sorted(kappa.items()):
        if isinstance(k, bool) or not isinstance(k, int) or k < 0:
            raise InvalidKappaError(world_id, k)
    if weights is not None and set(weights) - world_ids:
        raise UnknownWorldError(set(weights) - world_ids)

    levels = sorted({k for k in kappa.values() if cutoff is None or k <= cutoff})
    ranks = []
    for index, level in enumerate(levels):
        members = sorted(w for w, k in kappa.items() if k == level)
        raw = {w: Fraction(weights[w]) if weights and w in weights else ONE for w in members}
        total = sum(raw.values(), ZERO)
        ranks.append(RankMeasure(rank_index=index, weights={w: v / total for w, v in raw.items()}))
    return build_state(universe, ranks, atoms=atoms)


def to_ranking(state: EpistemicState) -> dict[str, int]:
    """Kappa value of each entertainable world; non-entertainable worlds are left out."""
    return {w: rank.rank_index for rank in state.ranks for w in rank.weights}


# ──────────────────────────────────────────────
# Evaluation
# ──────────────────────────────────────────────

def _in_universe(state: EpistemicState, *propositions: Iterable[str]) -> None:
    ids = state.world_ids
    for p in propositions:
        stray = frozenset(p) - ids
        if stray:
            raise UnknownWorldError(stray)


def _first_rank(state: EpistemicState, a: Proposition) -> Optional[RankMeasure]:
    for rank in state.ranks:
        if rank.meets(a):
            return rank
    return None


def popper_eval(state: EpistemicState, b: Iterable[str], a: Iterable[str]) -> Fraction:
    """
    P(B|A): the conditional measure in the least rank that gives A positive
    measure, or 1 when A is abnormal (including every A of the abnormal state).
    """
    b, a = frozenset(b), frozenset(a)
    _in_universe(state, a, b)
    rank = _first_rank(state, a)
    if rank is None:
        return ONE
    return rank.mass(a & b) / rank.mass(a)


def is_normal(state: EpistemicState, a: Iterable[str]) -> bool:
    a = frozenset(a)
    _in_universe(state, a)
    return _first_rank(state, a) is not None


def is_apriori(state: EpistemicState, a: Iterable[str]) -> bool:
    """A is a priori iff its complement is abnormal."""
    a = frozenset(a)
    _in_universe(state, a)
    return not is_normal(state, state.world_ids - a)


def unconditional(state: EpistemicState, a: Iterable[str]) -> Fraction:
    """pr(A) = P(A|U)."""
    return popper_eval(state, a, state.world_ids)


def rank_of(state: EpistemicState, a: Iterable[str]) -> Optional[int]:
    """Kappa of a proposition: the lowest rank where it holds; None when abnormal."""
    a = frozenset(a)
    _in_universe(state, a)
    rank = _first_rank(state, a)
    return None if rank is None else rank.rank_index


def infinitesimal_form(state: EpistemicState, a: Iterable[str]) -> Optional[tuple[int, Fraction]]:
    """
    Leading term (k, c) of the nonstandard measure sum_i mu_i(A) * eps^i that
    the stack stands for: P*(A) = c * eps^k + higher orders. None when A is abnormal.
    """
    a = frozenset(a)
    _in_universe(state, a)
    rank = _first_rank(state, a)
    if rank is None:
        return None
    return rank.rank_index, rank.mass(a)


def powerset(world_ids: Iterable[str]) -> list[Proposition]:
    """All propositions over the given worlds, by increasing size then sorted members."""
    ids = sorted(world_ids)
    return [frozenset(c) for size in range(len(ids) + 1) for c in combinations(ids, size)]
