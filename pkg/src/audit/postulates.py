"""
Supposer — Rational Postulates
Audit of the nonmonotonic consequence relation A |~ B against the seven
postulates of rational logic: Reflexivity, Left Logical Equivalence,
Right Weakening, And, Or, Cautious Monotonicity and Rational Monotonicity.

On states that are not universal and consistent the audit runs in
restricted mode: instances whose antecedents are not entertainable are
vacuous, and consistent antecedents that entail FALSE are noted.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from typing import Optional

from audit.base import AuditContext, BaseCheck, Outcome
from logic.semantics import dedupe_equivalent, extension
from logic.syntax import Formula, format_formula
from revision.cores import innermost, outermost
from revision.supposition import is_consistent, is_universal, suppose
from state.schemas import AuditReport, EpistemicState, Proposition

logger = logging.getLogger(__name__)


class ConsequenceContext(AuditContext[Formula]):
    """Caches formula extensions and the innermost core of every supposed antecedent."""

    def __init__(self, state: EpistemicState):
        super().__init__(state)
        self.restricted = not (is_universal(state) and is_consistent(state))
        self._outer = outermost(state)
        self._ext: dict[Formula, Proposition] = {}
        self._inner: dict[Proposition, Proposition] = {}

    def ext(self, f: Formula) -> Proposition:
        if f not in self._ext:
            self._ext[f] = extension(f, self.state.universe, self.state.atoms)
        return self._ext[f]

    def follows(self, a: Proposition, b: Proposition) -> bool:
        if a not in self._inner:
            self._inner[a] = innermost(suppose(self.state, a))
        return self._inner[a] <= b

    def entertainable(self, a: Proposition) -> bool:
        return bool(a & self._outer)

    def describe(self, item: Formula) -> str:
        return format_formula(item)


def _entails(holds: bool, a: str, b: str) -> Outcome:
    return Outcome(holds, f"{a} |~ {b}", f"{a} |~ {b}" if holds else f"not {a} |~ {b}")


class PostulateCheck(BaseCheck[Formula]):
    """
    Postulate instance over formulas. Subclasses implement `_check` on the
    extensions of the instance formulas and list the antecedents they suppose.
    """

    arity = 3

    def antecedents(self, *props: Proposition) -> tuple[Proposition, ...]:
        return props[:1]

    def _evaluate(self, ctx: ConsequenceContext, *formulas: Formula) -> Optional[Outcome]:
        props = tuple(ctx.ext(f) for f in formulas)
        if ctx.restricted and not all(ctx.entertainable(a) for a in self.antecedents(*props)):
            return None
        return self._check(ctx, *props)

    def _check(self, ctx: ConsequenceContext, *props: Proposition) -> Optional[Outcome]:
        raise NotImplementedError


class Reflexivity(PostulateCheck):
    name = "Reflexivity"
    statement = "A |~ A"
    arity = 1

    def _check(self, ctx, a):
        return _entails(ctx.follows(a, a), "A", "A")


class LeftLogicalEquivalence(PostulateCheck):
    name = "LeftLogicalEquivalence"
    statement = "A equivalent to B and A |~ C imply B |~ C"

    def antecedents(self, a, b, c):
        return a, b

    def _check(self, ctx, a, b, c):
        if a != b or not ctx.follows(a, c):
            return None
        return _entails(ctx.follows(b, c), "B", "C")


class RightWeakening(PostulateCheck):
    name = "RightWeakening"
    statement = "B entails C and A |~ B imply A |~ C"

    def _check(self, ctx, a, b, c):
        if not b <= c or not ctx.follows(a, b):
            return None
        return _entails(ctx.follows(a, c), "A", "C")


class And(PostulateCheck):
    name = "And"
    statement = "A |~ B and A |~ C imply A |~ B & C"

    def _check(self, ctx, a, b, c):
        if not (ctx.follows(a, b) and ctx.follows(a, c)):
            return None
        return _entails(ctx.follows(a, b & c), "A", "B & C")


class Or(PostulateCheck):
    name = "Or"
    statement = "A |~ C and B |~ C imply A | B |~ C"

    def antecedents(self, a, b, c):
        return a, b, a | b

    def _check(self, ctx, a, b, c):
        if not (ctx.follows(a, c) and ctx.follows(b, c)):
            return None
        return _entails(ctx.follows(a | b, c), "A | B", "C")


class CautiousMonotonicity(PostulateCheck):
    name = "CautiousMonotonicity"
    statement = "A |~ B and A |~ C imply A & B |~ C"

    def antecedents(self, a, b, c):
        return a, a & b

    def _check(self, ctx, a, b, c):
        if not (ctx.follows(a, b) and ctx.follows(a, c)):
            return None
        return _entails(ctx.follows(a & b, c), "A & B", "C")


class RationalMonotonicity(PostulateCheck):
    name = "RationalMonotonicity"
    statement = "A |~ C and not A |~ ~B imply A & B |~ C"

    def antecedents(self, a, b, c):
        return a, a & b

    def _check(self, ctx, a, b, c):
        not_b = ctx.state.world_ids - b
        if not ctx.follows(a, c) or ctx.follows(a, not_b):
            return None
        return _entails(ctx.follows(a & b, c), "A & B", "C")


POSTULATES: tuple[type[PostulateCheck], ...] = (
    Reflexivity,
    LeftLogicalEquivalence,
    RightWeakening,
    And,
    Or,
    CautiousMonotonicity,
    RationalMonotonicity,
)


# ──────────────────────────────────────────────
# Audit Entry Point
# ──────────────────────────────────────────────

def _contradictory_antecedents(ctx: ConsequenceContext, pool: Sequence[Formula]) -> list[str]:
    empty: Proposition = frozenset()
    notes = []
    for f in pool:
        a = ctx.ext(f)
        if a and ctx.follows(a, empty):
            notes.append(f"consistency-preservation-dependent: {format_formula(f)} |~ F")
    return notes


def rational_audit(state: EpistemicState, formula_pool: Sequence[Formula]) -> AuditReport:
    """
    Check every postulate on every instantiation from the pool, deduplicated
    up to logical equivalence. Returns a report in `full` mode on universal
    and consistent states and in `restricted` mode otherwise.
    """
    pool = dedupe_equivalent(formula_pool, state.atoms)
    ctx = ConsequenceContext(state)
    results = []
    for check_type in POSTULATES:
        result = check_type().run(ctx, pool)
        result.conditional = ctx.restricted
        results.append(result)

    mode = "restricted" if ctx.restricted else "full"
    notes = _contradictory_antecedents(ctx, pool) if ctx.restricted else []
    logger.info(
        "[AUDIT] rational postulates over %d formulas (%s mode): %d failures",
        len(pool), mode, sum(r.failure_count for r in results),
    )
    return AuditReport(
        results=sorted(results, key=lambda r: r.name),
        mode=mode,
        notes=notes,
        states_checked=1,
    )
