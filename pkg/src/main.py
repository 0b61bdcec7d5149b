"""
Supposer — Entry Point
Validate model files, evaluate two-place probabilities, run supposition
sequences, answer conditional and consequence queries, audit the axioms
and write the bundled fixtures.

Usage:
    python main.py examples kennedy
    python main.py check kennedy.model
    python main.py eval kennedy.model "S" "~O"
    python main.py suppose kennedy.model "~O" "J"
    python main.py query conditional kennedy.model "~O" "S"
    python main.py audit exhaustive --max-worlds 3

Exit codes: 0 success, 1 domain error, 2 usage error, 3 audit failure.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from typing import Optional

from audit.harness import exhaustive_small_space_audit, random_audit
from config.settings import (
    AUDIT_MAX_WORLDS,
    AUDIT_POOL_SIZE,
    AUDIT_SEEDS,
    COIN_DEPTH,
    GEN_ATOM_LIMIT,
    GEN_MAX_ATOMS,
    LOG_LEVEL,
)
from config.templates import (
    render_cores,
    render_probability,
    render_report_lines,
    render_report_text,
    render_trace,
    render_verdict,
)
from errors import SupposerError
from logic.parser import parse_formula
from logic.semantics import extension
from revision import (
    accepts_conditional,
    accepts_iterated,
    expects,
    fully_believes,
    nm_follows,
    suppose_seq,
)
from state.fixtures import coin_state, kennedy_state
from state.model import is_apriori, is_normal, popper_eval
from state.model_file import read_model, write_model
from state.schemas import GeneratorParams

logger = logging.getLogger("supposer")

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_AUDIT = 3

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

QUERY_ARITY = {"expects": 1, "believes": 1, "apriori": 1, "nm": 2}


# ──────────────────────────────────────────────
# Subcommands
# ──────────────────────────────────────────────

def cmd_check(args: argparse.Namespace) -> int:
    state = read_model(args.model)
    print(render_cores(state))
    return EXIT_OK


def cmd_eval(args: argparse.Namespace) -> int:
    state = read_model(args.model)
    b = extension(parse_formula(args.consequent), state.universe, state.atoms)
    a = extension(parse_formula(args.antecedent), state.universe, state.atoms)
    print(render_probability(popper_eval(state, b, a), not is_normal(state, a)))
    return EXIT_OK


def cmd_suppose(args: argparse.Namespace) -> int:
    state = read_model(args.model)
    formulas = [parse_formula(text) for text in args.formulas]
    inputs = [extension(f, state.universe, state.atoms) for f in formulas]
    print(render_trace(suppose_seq(state, inputs, formulas)))
    return EXIT_OK


def cmd_query(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.kind == "conditional":
        if len(args.formulas) < 2:
            parser.error("query conditional needs at least one antecedent and a consequent")
    elif len(args.formulas) != QUERY_ARITY[args.kind]:
        parser.error(f"query {args.kind} takes {QUERY_ARITY[args.kind]} formula(s)")

    state = read_model(args.model)
    formulas = [parse_formula(text) for text in args.formulas]
    if args.kind == "conditional":
        *antecedents, consequent = formulas
        if len(antecedents) == 1:
            verdict = accepts_conditional(state, antecedents[0], consequent)
        else:
            verdict = accepts_iterated(state, antecedents, consequent)
        print(render_verdict(verdict))
        return EXIT_OK

    if args.kind == "expects":
        answer = expects(state, formulas[0])
    elif args.kind == "believes":
        answer = fully_believes(state, formulas[0])
    elif args.kind == "apriori":
        answer = is_apriori(state, extension(formulas[0], state.universe, state.atoms))
    else:
        answer = nm_follows(state, formulas[0], formulas[1])
    print("true" if answer else "false")
    return EXIT_OK


def cmd_audit(args: argparse.Namespace) -> int:
    if args.mode == "exhaustive":
        report = exhaustive_small_space_audit(args.max_worlds)
    else:
        params = GeneratorParams(seed=args.seed, max_atoms=args.max_atoms)
        report = random_audit(params, seeds=args.seeds, pool_size=args.pool_size, universal=args.universal)
    print(render_report_lines(report) if args.format == "lines" else render_report_text(report))
    return EXIT_OK if report.passed else EXIT_AUDIT


def cmd_examples(args: argparse.Namespace) -> int:
    state = kennedy_state() if args.name == "kennedy" else coin_state(args.n)
    out = args.out or f"{args.name}.model"
    write_model(out, state)
    logger.info("[CLI] wrote %s fixture to %s", args.name, out)
    print(out)
    return EXIT_OK


# ──────────────────────────────────────────────
# Argument Parsing
# ──────────────────────────────────────────────

def _depth(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("truncation depth must be non-negative")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _atom_count(text: str) -> int:
    value = int(text)
    if not 1 <= value <= GEN_ATOM_LIMIT:
        raise argparse.ArgumentTypeError(f"must lie between 1 and {GEN_ATOM_LIMIT}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supposer",
        description="Belief revision by supposition over two-place probability functions.",
    )
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=LOG_LEVELS,
        default=LOG_LEVEL.upper(),
        help="logging level (default: %(default)s)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="validate a model file and print its cores")
    check.add_argument("model")

    evaluate = sub.add_parser("eval", help="print the exact value of P(B|A)")
    evaluate.add_argument("model")
    evaluate.add_argument("consequent", metavar="B")
    evaluate.add_argument("antecedent", metavar="A")

    sup = sub.add_parser("suppose", help="suppose a sequence of formulas and print the trace")
    sup.add_argument("model")
    sup.add_argument("formulas", nargs="*")

    query = sub.add_parser("query", help="conditional, expectation, belief, a priori or consequence queries")
    query.add_argument("kind", choices=["conditional", "expects", "believes", "apriori", "nm"])
    query.add_argument("model")
    query.add_argument("formulas", nargs="+")

    audit = sub.add_parser("audit", help="check the supposition axioms mechanically")
    audit.add_argument("mode", choices=["random", "exhaustive"])
    audit.add_argument("--seeds", type=_positive, default=AUDIT_SEEDS)
    audit.add_argument("--seed", type=int, default=0, help="first seed of a random audit")
    audit.add_argument("--pool-size", type=_positive, default=AUDIT_POOL_SIZE)
    audit.add_argument("--max-worlds", type=_positive, default=AUDIT_MAX_WORLDS)
    audit.add_argument("--max-atoms", type=_atom_count, default=GEN_MAX_ATOMS)
    audit.add_argument("--universal", action="store_true", help="generate universal and consistent states only")
    audit.add_argument("--format", choices=["text", "lines"], default="text")

    examples = sub.add_parser("examples", help="write a bundled fixture as a model file")
    examples.add_argument("name", choices=["kennedy", "coin"])
    examples.add_argument("out", nargs="?", help="output path (default: <name>.model)")
    examples.add_argument("--n", type=_depth, default=COIN_DEPTH, help="coin truncation depth")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=args.log_level.upper(),
        format="%(levelname)s %(name)s %(message)s",
        stream=sys.stderr,
    )
    handlers = {
        "check": cmd_check,
        "eval": cmd_eval,
        "suppose": cmd_suppose,
        "audit": cmd_audit,
        "examples": cmd_examples,
    }
    try:
        if args.command == "query":
            return cmd_query(args, parser)
        return handlers[args.command](args)
    except (SupposerError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
