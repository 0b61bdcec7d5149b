"""
Supposer — State Schemas
Centralized pydantic models: worlds, ranked measures, epistemic states,
core systems, supposition traces, generator parameters and audit reports.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, computed_field, field_validator

from config.settings import (
    GEN_ATOM_LIMIT,
    GEN_MAX_ATOMS,
    GEN_MAX_RANKS,
    GEN_NON_ENTERTAINABLE,
    GEN_WEIGHT_BOUND,
)
from logic.syntax import Formula

# A proposition is a set of world ids drawn from one universe.
Proposition = frozenset[str]


def _exact(value: object) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"exact rational expected, got {value!r}")
    return Fraction(value)


# ──────────────────────────────────────────────
# Worlds and Measures
# ──────────────────────────────────────────────

class World(BaseModel):
    """A point of the universe: an identifier plus a truth assignment to atoms."""
    model_config = ConfigDict(frozen=True)

    id: str = Field(description="Identifier, unique within a universe")
    valuation: dict[str, bool] = Field(description="Total truth assignment over the model's atoms")

    def __hash__(self) -> int:
        return hash((self.id, frozenset(self.valuation.items())))


class RankMeasure(BaseModel):
    """One layer of the ranked stack: an exact probability measure on its support."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    rank_index: int = Field(ge=0, description="Position in the stack, 0 = most plausible")
    weights: dict[str, Fraction] = Field(description="World id -> strictly positive exact weight")

    @field_validator("weights", mode="before")
    @classmethod
    def _coerce_weights(cls, value: object) -> dict[str, Fraction]:
        return {str(world_id): _exact(weight) for world_id, weight in dict(value).items()}

    @property
    def support(self) -> Proposition:
        return frozenset(self.weights)

    def mass(self, proposition: Proposition) -> Fraction:
        """Measure of a proposition under this layer."""
        return sum((self.weights[w] for w in proposition if w in self.weights), Fraction(0))

    def meets(self, proposition: Proposition) -> bool:
        """True iff the proposition has positive measure in this layer."""
        return any(w in self.weights for w in proposition)

    def __hash__(self) -> int:
        return hash((self.rank_index, frozenset(self.weights.items())))


class EpistemicState(BaseModel):
    """
    A two-place probability function, stored as a ranked stack of measures
    with pairwise-disjoint supports. An empty stack is the abnormal state.
    Build instances through state.model.build_state, which enforces the invariants.
    """
    model_config = ConfigDict(frozen=True)

    atoms: tuple[str, ...] = Field(description="Declared atoms, in file order")
    universe: tuple[World, ...] = Field(description="All worlds, entertainable or not")
    ranks: tuple[RankMeasure, ...] = Field(default=(), description="Ranked measures, innermost first")

    @computed_field
    @property
    def abnormal_flag(self) -> bool:
        return not self.ranks

    def __hash__(self) -> int:
        return hash((self.atoms, self.universe, self.ranks))

    @property
    def world_ids(self) -> Proposition:
        return frozenset(w.id for w in self.universe)

    def world(self, world_id: str) -> World:
        for w in self.universe:
            if w.id == world_id:
                return w
        raise KeyError(world_id)


# ──────────────────────────────────────────────
# Cores and Supposition
# ──────────────────────────────────────────────

class CoreSystem(BaseModel):
    """The nested chain of probability cores, innermost first; empty for the abnormal state."""
    model_config = ConfigDict(frozen=True)

    cores: tuple[Proposition, ...] = Field(default=())

    @property
    def innermost(self) -> Proposition:
        return self.cores[0] if self.cores else frozenset()

    @property
    def outermost(self) -> Proposition:
        return self.cores[-1] if self.cores else frozenset()

    def __len__(self) -> int:
        return len(self.cores)


class SuppositionStep(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    supposed: Proposition
    source_formula: Optional[Formula] = Field(default=None, description="Formula the proposition came from, if any")
    result: EpistemicState


class SuppositionTrace(BaseModel):
    """E, E*A1, (E*A1)*A2, ... recorded step by step."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    initial: EpistemicState
    steps: tuple[SuppositionStep, ...] = ()

    @property
    def final(self) -> EpistemicState:
        return self.steps[-1].result if self.steps else self.initial


class Verdict(BaseModel):
    """Outcome of a conditional query."""
    model_config = ConfigDict(frozen=True)

    accepted: bool = Field(description="Innermost core of the supposed state entails the consequent")
    coherent: bool = Field(description="The supposed state is not abnormal")


# ──────────────────────────────────────────────
# Generation and Audit
# ──────────────────────────────────────────────

class GeneratorParams(BaseModel):
    """Parameters of the seeded random state generator."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    seed: int = Field(default=0, ge=-(2**63), le=2**63 - 1)
    max_atoms: int = Field(default=GEN_MAX_ATOMS, ge=1, le=GEN_ATOM_LIMIT)
    max_ranks: int = Field(default=GEN_MAX_RANKS, ge=1)
    non_entertainable_fraction: Fraction = Field(default=GEN_NON_ENTERTAINABLE)
    weight_denominator_bound: int = Field(default=GEN_WEIGHT_BOUND, ge=1)

    @field_validator("non_entertainable_fraction", mode="before")
    @classmethod
    def _fraction_in_range(cls, value: object) -> Fraction:
        fraction = _exact(value)
        if not 0 <= fraction <= 1:
            raise ValueError(f"non_entertainable_fraction must lie in [0, 1], got {fraction}")
        return fraction


class Failure(BaseModel):
    """One failed axiom instance, replayable from the serialized state alone."""
    axiom: str
    state: str = Field(description="The state in model-file format")
    inputs: dict[str, str] = Field(default_factory=dict)
    expected: str
    actual: str


class AxiomResult(BaseModel):
    name: str
    instances_checked: int = 0
    vacuous: int = Field(default=0, description="Instances whose premises did not hold")
    failure_count: int = 0
    failures: list[Failure] = Field(default_factory=list, description="Stored counterexamples (capped)")
    conditional: bool = Field(default=False, description="Checked only on a restricted instance class")

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def merged(self, other: AxiomResult, max_failures: int) -> AxiomResult:
        return AxiomResult(
            name=self.name,
            instances_checked=self.instances_checked + other.instances_checked,
            vacuous=self.vacuous + other.vacuous,
            failure_count=self.failure_count + other.failure_count,
            failures=(self.failures + other.failures)[:max_failures],
            conditional=self.conditional or other.conditional,
        )


class AuditReport(BaseModel):
    """Per-axiom results. Merging is associative and commutative up to failure order."""
    results: list[AxiomResult] = Field(default_factory=list)
    mode: Literal["full", "restricted"] = "full"
    notes: list[str] = Field(default_factory=list)
    states_checked: int = 0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def result(self, name: str) -> AxiomResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def merge(self, other: AuditReport, max_failures: int = 50) -> AuditReport:
        by_name: dict[str, AxiomResult] = {}
        for r in [*self.results, *other.results]:
            by_name[r.name] = by_name[r.name].merged(r, max_failures) if r.name in by_name else r
        return AuditReport(
            results=sorted(by_name.values(), key=lambda r: r.name),
            mode="restricted" if "restricted" in (self.mode, other.mode) else "full",
            notes=sorted(set(self.notes) | set(other.notes)),
            states_checked=self.states_checked + other.states_checked,
        )
