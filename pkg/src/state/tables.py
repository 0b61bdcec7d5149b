"""
Supposer — Conditional Tables
Explicit two-place tables P(B|A) over all pairs of propositions, the exact
validator for axioms (I) and (II), and the conversions between tables and
ranked states in both directions.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from config.settings import TABLE_MAX_WORLDS
from errors import InvalidTableError, UniverseTooLargeError
from state.model import ONE, ZERO, abnormal_state, build_state, popper_eval, powerset
from state.schemas import EpistemicState, Proposition, RankMeasure, World

logger = logging.getLogger(__name__)


class ConditionalTable(BaseModel):
    """
    Total map (B, A) -> P(B|A) over a finite universe. Construct through
    make_table, which validates axioms (I) and (II).
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    atoms: tuple[str, ...]
    universe: tuple[World, ...]
    entries: dict[tuple[Proposition, Proposition], Fraction] = Field(
        description="(B, A) -> P(B|A) for every pair of propositions"
    )

    @property
    def world_ids(self) -> Proposition:
        return frozenset(w.id for w in self.universe)

    def value(self, b: Proposition, a: Proposition) -> Fraction:
        return self.entries[(frozenset(b), frozenset(a))]


def _fmt(p: Proposition) -> str:
    return "{" + ",".join(sorted(p)) + "}"


# ──────────────────────────────────────────────
# Validation
# ──────────────────────────────────────────────

def _is_abnormal_row(table: ConditionalTable, a: Proposition, events: list[Proposition]) -> bool:
    return all(table.value(x, a) == ONE for x in events)


def validate_table(table: ConditionalTable) -> None:
    """
    Exact check of axioms (I) and (II).

    (I) is checked row by row. (II) is checked for all A, B and for C ranging
    over the empty event and the singletons: given (I), both sides of (II)
    are measures in C (or forced to 0 by C = {}), so these instances imply
    the full triple check.

    Raises:
        InvalidTableError: citing the first violated axiom instance.
    """
    ids = table.world_ids
    events = powerset(ids)
    missing = [(b, a) for a in events for b in events if (b, a) not in table.entries]
    if missing:
        b, a = missing[0]
        raise InvalidTableError("(I)", f"no entry for P({_fmt(b)}|{_fmt(a)})")

    for a in events:
        if _is_abnormal_row(table, a, events):
            continue
        for x in events:
            value = table.value(x, a)
            if not ZERO <= value <= ONE:
                raise InvalidTableError("(I)", f"P({_fmt(x)}|{_fmt(a)}) = {value} lies outside [0, 1]")
            pointwise = sum((table.value(frozenset((w,)), a) for w in x), ZERO)
            if value != pointwise:
                raise InvalidTableError("(I)", f"P({_fmt(x)}|{_fmt(a)}) = {value} but its points sum to {pointwise}")
        if table.value(ids, a) != ONE:
            raise InvalidTableError("(I)", f"P(U|{_fmt(a)}) = {table.value(ids, a)}, not 1")

    points = [frozenset()] + [frozenset((w,)) for w in sorted(ids)]
    for a in events:
        for b in events:
            p_b = table.value(b, a)
            for c in points:
                lhs = table.value(b & c, a)
                rhs = p_b * table.value(c, b & a)
                if lhs != rhs:
                    raise InvalidTableError(
                        "(II)",
                        f"P({_fmt(b & c)}|{_fmt(a)}) = {lhs} but "
                        f"P({_fmt(b)}|{_fmt(a)}) * P({_fmt(c)}|{_fmt(b & a)}) = {rhs}",
                    )


def make_table(
    universe: tuple[World, ...],
    entries: dict[tuple[Proposition, Proposition], Fraction],
    atoms: Optional[tuple[str, ...]] = None,
) -> ConditionalTable:
    if atoms is None:
        atoms = tuple(universe[0].valuation) if universe else ()
    table = ConditionalTable(atoms=tuple(atoms), universe=tuple(universe), entries=entries)
    validate_table(table)
    return table


# ──────────────────────────────────────────────
# Conversions
# ──────────────────────────────────────────────

def to_conditional_table(state: EpistemicState, max_worlds: int = TABLE_MAX_WORLDS) -> ConditionalTable:
    """
    Tabulate P(B|A) for every pair of propositions.

    Raises:
        UniverseTooLargeError: the table has 4^n entries.
    """
    n = len(state.universe)
    if n > max_worlds:
        raise UniverseTooLargeError(n, max_worlds, "to_conditional_table")
    events = powerset(state.world_ids)
    entries = {(b, a): popper_eval(state, b, a) for a in events for b in events}
    logger.debug("[MODEL] tabulated %d entries over %d worlds", len(entries), n)
    return make_table(state.universe, entries, state.atoms)


def from_conditional_table(table: ConditionalTable) -> EpistemicState:
    """
    Recover the ranked state. Rank 0 is the set of heavy points of P(.|U)
    with their weights; each further rank is the heavy points of P(.|rest)
    for the worlds not yet ranked. Stops when the rest is abnormal; whatever
    remains is non-entertainable.

    Raises:
        InvalidTableError: the table breaks axiom (I) or (II).
    """
    validate_table(table)
    events = powerset(table.world_ids)
    remaining = table.world_ids
    ranks = []
    while remaining and not _is_abnormal_row(table, remaining, events):
        weights = {}
        for w in sorted(remaining):
            weight = table.value(frozenset((w,)), remaining)
            if weight > 0:
                weights[w] = weight
        ranks.append(RankMeasure(rank_index=len(ranks), weights=weights))
        remaining = remaining - frozenset(weights)
    if not ranks:
        return abnormal_state(table.universe, table.atoms)
    return build_state(table.universe, ranks, atoms=table.atoms)
