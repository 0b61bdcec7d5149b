"""
Supposer — Base Check
Abstract base class for every mechanically audited property. Each check
names itself, declares how many inputs an instance takes, and implements
`_evaluate` for a single instance; `run` enumerates instances from a pool
and collects counterexamples.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from collections.abc import Hashable, Sequence
from itertools import product
from typing import Generic, NamedTuple, Optional, TypeVar

from config.settings import MAX_STORED_FAILURES
from revision.cores import cores_of
from revision.supposition import suppose
from state.model_file import dump_model
from state.schemas import AxiomResult, CoreSystem, EpistemicState, Failure, Proposition

Item = TypeVar("Item", bound=Hashable)

INPUT_LABELS = ("A", "B", "C")


class Outcome(NamedTuple):
    holds: bool
    expected: str
    actual: str


def fmt(p: Proposition) -> str:
    return "{" + ",".join(sorted(p)) + "}"


class AuditContext(ABC, Generic[Item]):
    """Per-state evaluation context shared by every check of one audit run."""

    def __init__(self, state: EpistemicState):
        self.state = state
        self._serialized: Optional[str] = None

    @property
    def serialized(self) -> str:
        if self._serialized is None:
            self._serialized = dump_model(self.state)
        return self._serialized

    @abstractmethod
    def describe(self, item: Item) -> str:
        """Text rendering of one input for counterexample reports."""


class SuppositionCache(AuditContext[Proposition]):
    """
    Memoizes s, s*A, (s*A)*B and their core systems, keyed by the supposition path.
    One instance per state and audit run; not shared across threads.
    """

    def __init__(self, state: EpistemicState):
        super().__init__(state)
        self._states: dict[tuple[Proposition, ...], EpistemicState] = {(): state}
        self._cores: dict[tuple[Proposition, ...], CoreSystem] = {}

    def after(self, *path: Proposition) -> EpistemicState:
        if path not in self._states:
            self._states[path] = suppose(self.after(*path[:-1]), path[-1])
        return self._states[path]

    def cores(self, *path: Proposition) -> CoreSystem:
        if path not in self._cores:
            self._cores[path] = cores_of(self.after(*path))
        return self._cores[path]

    def inner(self, *path: Proposition) -> Proposition:
        return self.cores(*path).innermost

    def outer(self, *path: Proposition) -> Proposition:
        return self.cores(*path).outermost

    def describe(self, item: Proposition) -> str:
        return fmt(item)


class BaseCheck(ABC, Generic[Item]):
    """
    Abstract audited property.

    Subclasses must:
        1. Set `name` and `statement` class attributes.
        2. Set `arity`, the number of pool items per instance.
        3. Implement `_evaluate()`, returning None when the premises fail
           (a vacuous instance) and an Outcome otherwise.
        4. Optionally override `applies()` to restrict the states it runs on.
    """

    name: str = "base"
    statement: str = ""
    arity: int = 1

    def applies(self, ctx: AuditContext[Item]) -> bool:
        return True

    def run(
        self,
        ctx: AuditContext[Item],
        pool: Sequence[Item],
        max_failures: int = MAX_STORED_FAILURES,
    ) -> AxiomResult:
        result = AxiomResult(name=self.name)
        for items in product(pool, repeat=self.arity):
            result.instances_checked += 1
            outcome = self._evaluate(ctx, *items)
            if outcome is None:
                result.vacuous += 1
            elif not outcome.holds:
                result.failure_count += 1
                if len(result.failures) < max_failures:
                    result.failures.append(self._failure(ctx, items, outcome))
        return result

    def _failure(self, ctx: AuditContext[Item], items: Sequence[Item], outcome: Outcome) -> Failure:
        return Failure(
            axiom=self.name,
            state=ctx.serialized,
            inputs={label: ctx.describe(item) for label, item in zip(INPUT_LABELS, items)},
            expected=outcome.expected,
            actual=outcome.actual,
        )

    @abstractmethod
    def _evaluate(self, ctx: AuditContext[Item], *items: Item) -> Optional[Outcome]:
        ...
