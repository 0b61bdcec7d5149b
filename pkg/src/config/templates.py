"""
Supposer — Output Templates
All text renderings printed by the command line in one place: core systems,
supposition traces, verdicts, probabilities and audit reports.
"""

from __future__ import annotations

import json
from fractions import Fraction

from logic.syntax import format_formula
from revision.cores import cores_of
from state.schemas import AuditReport, AxiomResult, EpistemicState, Proposition, SuppositionTrace, Verdict

COHERENT = "COHERENT"
INCOHERENT = "INCOHERENT"
ABNORMAL_NOTE = "(antecedent abnormal)"


def render_set(p: Proposition) -> str:
    return "{" + ", ".join(sorted(p)) + "}"


# ──────────────────────────────────────────────
# States
# ──────────────────────────────────────────────

def render_ranks(state: EpistemicState) -> str:
    if state.abnormal_flag:
        return "  (abnormal: no ranks)"
    lines = []
    for rank in state.ranks:
        weights = ", ".join(f"{w}={weight}" for w, weight in sorted(rank.weights.items()))
        lines.append(f"  rank {rank.rank_index}: {weights}")
    return "\n".join(lines)


def render_cores(state: EpistemicState) -> str:
    """Output of `check`: the core count first, then each core, innermost first."""
    cores = cores_of(state).cores
    parts = [f"cores: {len(cores)}"]
    parts.extend(f"  core {i}: {render_set(core)}" for i, core in enumerate(cores))
    if cores:
        parts.append(f"expectations (innermost): {render_set(cores[0])}")
        parts.append(f"full beliefs (outermost): {render_set(cores[-1])}")
        outside = state.world_ids - cores[-1]
        if outside:
            parts.append(f"non-entertainable: {render_set(outside)}")
    else:
        parts.append("state is abnormal")
    return "\n".join(parts)


def render_trace(trace: SuppositionTrace) -> str:
    """One block per step: supposed proposition, ranks, both extreme cores and the coherence flag."""
    parts = ["initial:", render_ranks(trace.initial)]
    for i, step in enumerate(trace.steps, start=1):
        supposed = render_set(step.supposed)
        if step.source_formula is not None:
            supposed = f"{format_formula(step.source_formula)} = {supposed}"
        system = cores_of(step.result)
        parts.append(f"step {i}: suppose {supposed}")
        parts.append(render_ranks(step.result))
        parts.append(f"  innermost: {render_set(system.innermost)}")
        parts.append(f"  outermost: {render_set(system.outermost)}")
        parts.append(f"  {INCOHERENT if step.result.abnormal_flag else COHERENT}")
    return "\n".join(parts)


def render_verdict(verdict: Verdict) -> str:
    accepted = "accepted" if verdict.accepted else "not accepted"
    return f"{accepted} ({'coherent' if verdict.coherent else 'incoherent'})"


def render_probability(value: Fraction, antecedent_abnormal: bool) -> str:
    return f"{value} {ABNORMAL_NOTE}" if antecedent_abnormal else str(value)


# ──────────────────────────────────────────────
# Audit Reports
# ──────────────────────────────────────────────

def _status(result: AxiomResult) -> str:
    return "pass" if result.passed else "FAIL"


def render_report_text(report: AuditReport) -> str:
    parts = [f"audit over {report.states_checked} states ({report.mode} mode)"]
    width = max((len(r.name) for r in report.results), default=0)
    for r in report.results:
        flag = " [conditional]" if r.conditional else ""
        parts.append(
            f"  {r.name:<{width}}  {_status(r):<4}  instances={r.instances_checked}"
            f" vacuous={r.vacuous} failures={r.failure_count}{flag}"
        )
    for note in report.notes:
        parts.append(f"note: {note}")
    for r in report.results:
        for failure in r.failures:
            inputs = ", ".join(f"{k}={v}" for k, v in failure.inputs.items())
            parts.append(f"\n{failure.axiom} failed on {inputs or 'the state'}")
            parts.append(f"  expected: {failure.expected}")
            parts.append(f"  actual:   {failure.actual}")
            parts.append("  state:")
            parts.extend(f"    {line}" for line in failure.state.splitlines())
    parts.append("PASSED" if report.passed else "FAILED")
    return "\n".join(parts)


def render_report_lines(report: AuditReport) -> str:
    """
    One JSON object per line. Passing instances are summed per axiom into
    `"record": "axiom"` lines; every stored failed instance follows as its own
    `"record": "instance"` line carrying the inputs and the serialized state.
    """
    lines = [
        json.dumps({"record": "axiom", **r.model_dump(mode="json", exclude={"failures"})})
        for r in report.results
    ]
    lines.extend(
        json.dumps({"record": "instance", **f.model_dump(mode="json")})
        for r in report.results
        for f in r.failures
    )
    return "\n".join(lines)
