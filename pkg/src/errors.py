"""
Supposer — Errors
Domain exception hierarchy. Everything here derives from SupposerError so the
CLI can map the whole family to exit status 1.

None of these subclass ValueError: pydantic only wraps ValueError and
AssertionError, so domain errors raised inside validators reach the caller
unchanged.
"""

from __future__ import annotations

from collections.abc import Iterable


class SupposerError(Exception):
    """Base class for every domain error raised by the engine."""


# ──────────────────────────────────────────────
# Formulas
# ──────────────────────────────────────────────

class FormulaSyntaxError(SupposerError):
    """Malformed formula text. Carries the offending position and what the grammar expected there."""

    def __init__(self, text: str, position: int, expected: Iterable[str]):
        self.text = text
        self.position = position
        self.expected = tuple(expected)
        pointer = " " * position + "^"
        super().__init__(
            f"syntax error at position {position}: expected one of "
            f"{', '.join(self.expected)}\n  {text}\n  {pointer}"
        )


class UnknownAtomError(SupposerError):
    def __init__(self, atom: str):
        self.atom = atom
        super().__init__(f"unknown atom '{atom}'")


# ──────────────────────────────────────────────
# Epistemic states
# ──────────────────────────────────────────────

class ModelValidationError(SupposerError):
    """A state violates one of the EpistemicState invariants."""


class EmptyUniverseError(ModelValidationError):
    def __init__(self) -> None:
        super().__init__("the universe must contain at least one world")


class DuplicateWorldError(ModelValidationError):
    def __init__(self, world_id: str):
        self.world_id = world_id
        super().__init__(f"world id '{world_id}' appears more than once")


class ValuationError(ModelValidationError):
    def __init__(self, world_id: str, missing: Iterable[str], extra: Iterable[str] = ()):
        self.world_id = world_id
        self.missing = tuple(sorted(missing))
        self.extra = tuple(sorted(extra))
        parts = []
        if self.missing:
            parts.append(f"missing {', '.join(self.missing)}")
        if self.extra:
            parts.append(f"undeclared {', '.join(self.extra)}")
        super().__init__(f"valuation of world '{world_id}' is not total: {'; '.join(parts)}")


class UnknownWorldError(ModelValidationError):
    def __init__(self, world_ids: Iterable[str]):
        self.world_ids = tuple(sorted(world_ids))
        super().__init__(f"unknown world(s): {', '.join(self.world_ids)}")


class OverlappingSupportsError(ModelValidationError):
    def __init__(self, world_id: str, first_rank: int, second_rank: int):
        self.world_id = world_id
        self.ranks = (first_rank, second_rank)
        super().__init__(
            f"world '{world_id}' lies in the supports of ranks {first_rank} and {second_rank}"
        )


class WeightSumError(ModelValidationError):
    def __init__(self, rank_index: int, total: object):
        self.rank_index = rank_index
        self.total = total
        super().__init__(f"weights of rank {rank_index} sum to {total}, not 1")


class NonPositiveWeightError(ModelValidationError):
    def __init__(self, rank_index: int, world_id: str, weight: object):
        self.rank_index = rank_index
        self.world_id = world_id
        super().__init__(f"rank {rank_index} gives world '{world_id}' weight {weight}; weights must be positive")


class RankOrderError(ModelValidationError):
    def __init__(self, position: int, rank_index: int):
        self.position = position
        self.rank_index = rank_index
        super().__init__(
            f"rank at position {position} has index {rank_index}; ranks must be numbered 0, 1, 2, ... without gaps"
        )


class InvalidKappaError(ModelValidationError):
    def __init__(self, world_id: str, kappa: object):
        self.world_id = world_id
        self.kappa = kappa
        super().__init__(f"world '{world_id}' has kappa {kappa!r}; kappa values must be nonnegative integers")


# ──────────────────────────────────────────────
# Tables, bounds and files
# ──────────────────────────────────────────────

class UniverseTooLargeError(SupposerError):
    def __init__(self, size: int, bound: int, operation: str):
        self.size = size
        self.bound = bound
        super().__init__(f"{operation} enumerates subsets; universe has {size} worlds, bound is {bound}")


class InvalidTableError(SupposerError):
    """A conditional table violates axiom (I) or the Multiplication Axiom (II)."""

    def __init__(self, axiom: str, instance: str):
        self.axiom = axiom
        self.instance = instance
        super().__init__(f"table violates axiom {axiom}: {instance}")


class ModelFileError(SupposerError):
    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")
