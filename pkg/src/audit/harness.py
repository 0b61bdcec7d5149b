"""
Supposer — Audit Harness
Runs the registered axiom checks over proposition pools, cross-checks core
extraction against the brute-force oracle, round-trips conditional tables,
and drives the exhaustive and randomized audits.
"""

from __future__ import annotations

import logging
import random
from collections.abc import Iterable, Sequence
from fractions import Fraction
from typing import Optional

from audit import AXIOM_CHECKS
from audit.base import SuppositionCache, fmt
from audit.generator import enumerate_states, random_propositions, random_state
from config.settings import (
    AUDIT_POOL_SIZE,
    AUDIT_SEEDS,
    BRUTEFORCE_MAX_WORLDS,
    EXHAUSTIVE_LIMIT,
    MAX_STORED_FAILURES,
    ORACLE_MAX_WORLDS,
)
from errors import InvalidTableError, UniverseTooLargeError
from revision.cores import cores_bruteforce, cores_of, innermost, outermost
from revision.supposition import is_universal, suppose
from state.model import powerset
from state.model_file import dump_model
from state.schemas import AuditReport, AxiomResult, EpistemicState, Failure, GeneratorParams, Proposition
from state.tables import from_conditional_table, to_conditional_table

logger = logging.getLogger(__name__)

SKIPPED_NOTE = "skipped on states that are not universal and consistent: {}"


def _single(name: str, state: EpistemicState, holds: bool, expected: str, actual: str,
            inputs: Optional[dict[str, str]] = None) -> AxiomResult:
    result = AxiomResult(name=name, instances_checked=1)
    if not holds:
        result.failure_count = 1
        result.failures.append(Failure(
            axiom=name, state=dump_model(state), inputs=inputs or {}, expected=expected, actual=actual,
        ))
    return result


def _cores_text(cores: Iterable[Proposition]) -> str:
    return " < ".join(fmt(c) for c in cores) or "none"


# ──────────────────────────────────────────────
# Per-State Checks
# ──────────────────────────────────────────────

def check_axioms(
    state: EpistemicState,
    proposition_pool: Sequence[Proposition],
    max_failures: int = MAX_STORED_FAILURES,
) -> AuditReport:
    """
    Evaluate every registered supposition axiom over all singletons or pairs
    from the pool. Checks that need a universal and consistent state report
    zero instances elsewhere, and the report is then in restricted mode.
    """
    if not proposition_pool:
        raise ValueError("proposition pool must be nonempty")
    ctx = SuppositionCache(state)
    results, skipped = [], []
    for check in (check_type() for check_type in AXIOM_CHECKS):
        if check.applies(ctx):
            results.append(check.run(ctx, proposition_pool, max_failures))
        else:
            results.append(AxiomResult(name=check.name, conditional=True))
            skipped.append(check.name)
    return AuditReport(
        results=sorted(results, key=lambda r: r.name),
        mode="restricted" if skipped else "full",
        notes=[SKIPPED_NOTE.format(", ".join(skipped))] if skipped else [],
        states_checked=1,
    )


def find_cp_violation(state: EpistemicState) -> Optional[Proposition]:
    """
    A nonempty A with I(s) nonempty and I(s*A) empty: the worlds outside the
    outermost core, if there are any. None for universal and abnormal states.
    """
    if state.abnormal_flag:
        return None
    witness = state.world_ids - outermost(state)
    return witness or None


def cp_witness_check(state: EpistemicState) -> AxiomResult:
    """A witness exists exactly when the state is not universal, and it really breaks consistency preservation."""
    witness = find_cp_violation(state)
    if state.abnormal_flag:
        return _single("CPWitness", state, witness is None, "none", fmt(witness or frozenset()))
    if witness is None:
        return _single("CPWitness", state, is_universal(state), "a witness", "none")
    breaks = bool(innermost(state)) and not innermost(suppose(state, witness))
    return _single(
        "CPWitness", state, breaks and not is_universal(state),
        "I(s*A) empty on a non-universal state", f"I(s*A) = {fmt(innermost(suppose(state, witness)))}",
        {"A": fmt(witness)},
    )


def core_oracle_check(state: EpistemicState, max_worlds: int = BRUTEFORCE_MAX_WORLDS) -> AxiomResult:
    """cores_of against an exhaustive strong-superiority search."""
    fast, oracle = cores_of(state), cores_bruteforce(state, max_worlds)
    return _single("CoreOracle", state, fast == oracle, _cores_text(oracle.cores), _cores_text(fast.cores))


def round_trip_check(state: EpistemicState) -> AxiomResult:
    """Tabulate, validate the table against both axioms, and recover the state from it."""
    try:
        recovered = from_conditional_table(to_conditional_table(state))
    except InvalidTableError as exc:
        return _single("RoundTrip", state, False, "a valid table", str(exc))
    return _single("RoundTrip", state, recovered == state, dump_model(state), dump_model(recovered))


def table_cumulativity_check(
    state: EpistemicState,
    pairs: Iterable[tuple[Proposition, Proposition]],
    max_failures: int = MAX_STORED_FAILURES,
) -> AxiomResult:
    """Entry-by-entry equality of the conditional tables of (s*A)*B and s*(A n B)."""
    result = AxiomResult(name="TableCumulativity")
    serialized = None
    for a, b in pairs:
        result.instances_checked += 1
        iterated = to_conditional_table(suppose(suppose(state, a), b)).entries
        joint = to_conditional_table(suppose(state, a & b)).entries
        differing = [key for key, value in joint.items() if iterated[key] != value]
        if not differing:
            continue
        result.failure_count += 1
        if len(result.failures) < max_failures:
            serialized = serialized or dump_model(state)
            b_event, a_event = differing[0]
            result.failures.append(Failure(
                axiom=result.name,
                state=serialized,
                inputs={"A": fmt(a), "B": fmt(b)},
                expected=f"P({fmt(b_event)}|{fmt(a_event)}) = {joint[differing[0]]}",
                actual=f"P({fmt(b_event)}|{fmt(a_event)}) = {iterated[differing[0]]}",
            ))
    return result


# ──────────────────────────────────────────────
# Audits
# ──────────────────────────────────────────────

def _with(report: AuditReport, *results: AxiomResult, max_failures: int = MAX_STORED_FAILURES) -> AuditReport:
    return report.merge(AuditReport(results=list(results)), max_failures)


def exhaustive_small_space_audit(max_worlds: int, max_failures: int = MAX_STORED_FAILURES) -> AuditReport:
    """
    Every rank structure over universes of 1..max_worlds worlds, each audited
    with the full powerset as pool and cross-checked against the core oracle.

    Raises:
        UniverseTooLargeError: max_worlds exceeds the all-propositions limit.
    """
    if max_worlds > EXHAUSTIVE_LIMIT:
        raise UniverseTooLargeError(max_worlds, EXHAUSTIVE_LIMIT, "exhaustive_small_space_audit")
    report = AuditReport()
    for n in range(1, max_worlds + 1):
        count = 0
        for state in enumerate_states(n):
            count += 1
            pool = powerset(state.world_ids)
            report = report.merge(check_axioms(state, pool, max_failures), max_failures)
            report = _with(report, core_oracle_check(state), cp_witness_check(state), max_failures=max_failures)
        logger.info("[AUDIT] exhaustive: %d states over %d worlds", count, n)
    return report


def random_audit(
    params: GeneratorParams,
    seeds: int = AUDIT_SEEDS,
    pool_size: int = AUDIT_POOL_SIZE,
    universal: bool = False,
    max_failures: int = MAX_STORED_FAILURES,
) -> AuditReport:
    """
    Seeds params.seed .. params.seed + seeds - 1: per seed a random state, a
    random proposition pool of up to `pool_size` members, the axiom checks,
    the consistency-preservation witness check and, on universes of at most
    ORACLE_MAX_WORLDS worlds, the core oracle. With `universal` every state
    is universal and consistent.
    """
    if universal:
        params = params.model_copy(update={"non_entertainable_fraction": Fraction(0)})
    report = AuditReport()
    for offset in range(seeds):
        seed = params.seed + offset
        state = random_state(params.model_copy(update={"seed": seed}))
        pool = random_propositions(random.Random(seed), sorted(state.world_ids), pool_size)
        report = report.merge(check_axioms(state, pool, max_failures), max_failures)
        extra = [cp_witness_check(state)]
        if len(state.universe) <= ORACLE_MAX_WORLDS:
            extra.append(core_oracle_check(state))
        report = _with(report, *extra, max_failures=max_failures)
    logger.info(
        "[AUDIT] random: %d seeds from %d, %s",
        seeds, params.seed, "passed" if report.passed else "FAILED",
    )
    return report
