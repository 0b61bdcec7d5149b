"""
Supposer — Supposition Axioms
One check per property of hypothetical revision. I = innermost core,
F = outermost core, s*A = suppose(s, A). Every comparison is an exact set
or state equality.
"""

from __future__ import annotations

from typing import Optional

from audit.base import BaseCheck, Outcome, SuppositionCache, fmt
from revision.supposition import is_consistent, is_universal
from state.schemas import Proposition


class AxiomCheck(BaseCheck[Proposition]):
    """
    Check over propositions of one state. On the abnormal state only checks
    with `covers_abnormal` set are evaluated; every other instance is vacuous.
    """

    covers_abnormal: bool = False

    def _evaluate(self, ctx: SuppositionCache, *props: Proposition) -> Optional[Outcome]:
        if ctx.state.abnormal_flag and not self.covers_abnormal:
            return None
        return self._check(ctx, *props)

    def _check(self, ctx: SuppositionCache, *props: Proposition) -> Optional[Outcome]:
        raise NotImplementedError


def _equal(expected: Proposition, actual: Proposition) -> Outcome:
    return Outcome(expected == actual, fmt(expected), fmt(actual))


def _subset(sub: Proposition, sup: Proposition) -> Outcome:
    return Outcome(sub <= sup, f"subset of {fmt(sup)}", fmt(sub))


# ──────────────────────────────────────────────
# Hypothetical Revision
# ──────────────────────────────────────────────

class Expansion(AxiomCheck):
    name = "Expansion"
    statement = "F(s) n A = F(s*A)"

    def _check(self, ctx, a):
        return _equal(ctx.outer() & a, ctx.outer(a))


class Success(AxiomCheck):
    name = "Success"
    statement = "I(s*A) within A"

    def _check(self, ctx, a):
        return _subset(ctx.inner(a), a)


class Preservation(AxiomCheck):
    name = "Preservation"
    statement = "I(s) n A nonempty implies I(s) n A = I(s*A)"

    def _check(self, ctx, a):
        overlap = ctx.inner() & a
        if not overlap:
            return None
        return _equal(overlap, ctx.inner(a))


class RestrictedConsistencyPreservation(AxiomCheck):
    name = "RestrictedConsistencyPreservation"
    statement = "I(s) nonempty and F(s) n A nonempty imply I(s*A) nonempty"

    def _check(self, ctx, a):
        if not ctx.inner() or not ctx.outer() & a:
            return None
        return Outcome(bool(ctx.inner(a)), "nonempty", fmt(ctx.inner(a)))


class Fixity(AxiomCheck):
    name = "Fixity"
    statement = "s abnormal implies I(s*A) = F(s*A) = empty"
    covers_abnormal = True

    def _check(self, ctx, a):
        if not ctx.state.abnormal_flag:
            return None
        inner, outer = ctx.inner(a), ctx.outer(a)
        return Outcome(not inner and not outer, "{} / {}", f"{fmt(inner)} / {fmt(outer)}")


class Cumulativity(AxiomCheck):
    name = "Cumulativity"
    statement = "I((s*A)*B) = I(s*(A n B))"
    arity = 2

    def _check(self, ctx, a, b):
        return _equal(ctx.inner(a & b), ctx.inner(a, b))


class GlobalSuccess(AxiomCheck):
    name = "GlobalSuccess"
    statement = "I((s*A)*B) within A"
    arity = 2

    def _check(self, ctx, a, b):
        return _subset(ctx.inner(a, b), a)


class CoreInclusion(AxiomCheck):
    name = "CoreInclusion"
    statement = "I(s*A) within F(s*A)"

    def _check(self, ctx, a):
        return _subset(ctx.inner(a), ctx.outer(a))


class CoreDynamics(AxiomCheck):
    """The cores of s*A are exactly the nonempty traces C n A of the cores of s."""

    name = "CoreDynamics"
    statement = "A n F(s) nonempty implies cores(s*A) = {C n A : C in cores(s), C n A nonempty}"

    def _check(self, ctx, a):
        if not ctx.outer() & a:
            return None
        expected: list[Proposition] = []
        for core in ctx.cores().cores:
            trace = core & a
            if trace and trace not in expected:
                expected.append(trace)
        actual = list(ctx.cores(a).cores)
        return Outcome(
            expected == actual,
            " < ".join(fmt(c) for c in expected),
            " < ".join(fmt(c) for c in actual),
        )


class ProbabilisticCumulativity(AxiomCheck):
    name = "ProbabilisticCumulativity"
    statement = "(s*A)*B = s*(A n B) as two-place functions"
    arity = 2

    def _check(self, ctx, a, b):
        expected, actual = ctx.after(a & b), ctx.after(a, b)
        return Outcome(expected == actual, _ranks(expected), _ranks(actual))


def _ranks(state) -> str:
    if state.abnormal_flag:
        return "abnormal"
    return " ; ".join(
        ",".join(f"{w}={weight}" for w, weight in sorted(rank.weights.items())) for rank in state.ranks
    )


# ──────────────────────────────────────────────
# Derived Theorems (E1-E4)
# ──────────────────────────────────────────────

class E1(AxiomCheck):
    name = "E1"
    statement = "I(s*A) within A"

    def _check(self, ctx, a):
        return _subset(ctx.inner(a), a)


class E2(AxiomCheck):
    name = "E2"
    statement = "I(s) within A implies I(s) = I(s*A)"

    def _check(self, ctx, a):
        if not ctx.inner() <= a:
            return None
        return _equal(ctx.inner(), ctx.inner(a))


class E3(AxiomCheck):
    name = "E3"
    statement = "A within B and I(s*B) n A nonempty imply I(s*A) = I(s*B) n A"
    arity = 2

    def _check(self, ctx, a, b):
        if not a <= b or not ctx.inner(b) & a:
            return None
        return _equal(ctx.inner(b) & a, ctx.inner(a))


class E4(AxiomCheck):
    name = "E4"
    statement = "A within B and I(s*B) empty imply I(s*A) empty"
    arity = 2

    def _check(self, ctx, a, b):
        if not a <= b or ctx.inner(b):
            return None
        return Outcome(not ctx.inner(a), "{}", fmt(ctx.inner(a)))


# ──────────────────────────────────────────────
# Universal and Consistent States
# ──────────────────────────────────────────────

class UniversalAxiomCheck(AxiomCheck):
    """Holds only when the outermost core is the whole universe and the innermost core is nonempty."""

    def applies(self, ctx):
        return is_universal(ctx.state) and is_consistent(ctx.state)


class ConsistencyPreservation(UniversalAxiomCheck):
    name = "ConsistencyPreservation"
    statement = "A nonempty implies I(s*A) nonempty"

    def _check(self, ctx, a):
        if not a:
            return None
        return Outcome(bool(ctx.inner(a)), "nonempty", fmt(ctx.inner(a)))


class ConjunctiveRevision(UniversalAxiomCheck):
    name = "ConjunctiveRevision"
    statement = "I(s*A) n B nonempty implies I(s*A) n B = I(s*(A n B))"
    arity = 2

    def _check(self, ctx, a, b):
        overlap = ctx.inner(a) & b
        if not overlap:
            return None
        return _equal(overlap, ctx.inner(a & b))
