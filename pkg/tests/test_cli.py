"""Command-line entry point: subcommand output and exit codes."""

import json

import pytest

from main import EXIT_AUDIT, EXIT_DOMAIN, EXIT_OK, main


@pytest.fixture
def kennedy_file(tmp_path, capsys):
    path = tmp_path / "kennedy.model"
    assert main(["examples", "kennedy", str(path)]) == EXIT_OK
    capsys.readouterr()
    return str(path)


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


# ──────────────────────────────────────────────
# examples / check
# ──────────────────────────────────────────────

def test_examples_writes_to_default_path(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    code, out, _ = _run(capsys, "examples", "coin", "--n", "2")
    assert code == EXIT_OK
    assert out == "coin.model"
    assert (tmp_path / "coin.model").read_text().startswith("atoms:")


def test_check_prints_cores(kennedy_file, tmp_path, capsys):
    code, out, _ = _run(capsys, "check", kennedy_file)
    assert code == EXIT_OK
    assert out.splitlines()[0] == "cores: 3"
    assert "non-entertainable: {w3}" in out

    coin = str(tmp_path / "coin.model")
    main(["examples", "coin", coin, "--n", "3"])
    capsys.readouterr()
    code, out, _ = _run(capsys, "check", coin)
    assert out.splitlines()[0] == "cores: 2"


def test_check_abnormal_model(tmp_path, capsys):
    path = tmp_path / "empty.model"
    path.write_text("atoms: p\nworld a: p=1\nworld b: p=0\n")
    code, out, _ = _run(capsys, "check", str(path))
    assert code == EXIT_OK
    assert "cores: 0" in out and "state is abnormal" in out


# ──────────────────────────────────────────────
# eval / suppose / query
# ──────────────────────────────────────────────

def test_eval(kennedy_file, tmp_path, capsys):
    assert _run(capsys, "eval", kennedy_file, "S", "~O")[:2] == (EXIT_OK, "1")
    assert _run(capsys, "eval", kennedy_file, "S", "~O & ~S")[1] == "1 (antecedent abnormal)"

    coin = str(tmp_path / "coin.model")
    main(["examples", "coin", coin, "--n", "1"])
    capsys.readouterr()
    assert _run(capsys, "eval", coin, "even", "T")[1] == "2/3"


def test_suppose_trace(kennedy_file, capsys):
    code, out, _ = _run(capsys, "suppose", kennedy_file, "~O")
    assert code == EXIT_OK
    assert "innermost: {w1}" in out
    assert out.endswith("COHERENT") and not out.endswith("INCOHERENT")

    _, out, _ = _run(capsys, "suppose", kennedy_file, "~O", "O")
    assert out.endswith("INCOHERENT")


def test_suppose_without_formulas_prints_initial_state(kennedy_file, capsys):
    code, out, _ = _run(capsys, "suppose", kennedy_file)
    assert code == EXIT_OK
    assert out.startswith("initial:") and "step" not in out


def test_conditional_queries(kennedy_file, capsys):
    assert _run(capsys, "query", "conditional", kennedy_file, "~O", "S")[1] == "accepted (coherent)"
    assert _run(capsys, "query", "conditional", kennedy_file, "~O", "O")[1] == "not accepted (coherent)"
    assert _run(capsys, "query", "conditional", kennedy_file, "~O & ~S", "J")[1] == "accepted (incoherent)"
    assert _run(capsys, "query", "conditional", kennedy_file, "~O", "S", "J")[1] == "accepted (coherent)"


@pytest.mark.parametrize(
    "kind, formulas, expected",
    [
        ("expects", ["O"], "true"),
        ("expects", ["S"], "false"),
        ("believes", ["O | S"], "true"),
        ("believes", ["O"], "false"),
        ("apriori", ["O | S"], "true"),
        ("apriori", ["O"], "false"),
        ("nm", ["~O", "S"], "true"),
        ("nm", ["T", "S"], "false"),
    ],
)
def test_single_answer_queries(kennedy_file, capsys, kind, formulas, expected):
    code, out, _ = _run(capsys, "query", kind, kennedy_file, *formulas)
    assert (code, out) == (EXIT_OK, expected)


@pytest.mark.parametrize(
    "argv",
    [
        ["query", "conditional", "{model}", "S"],
        ["query", "expects", "{model}", "O", "S"],
        ["query", "nm", "{model}", "O"],
    ],
)
def test_wrong_arity_is_a_usage_error(kennedy_file, argv):
    with pytest.raises(SystemExit) as exc:
        main([arg.format(model=kennedy_file) for arg in argv])
    assert exc.value.code == 2


# ──────────────────────────────────────────────
# Errors
# ──────────────────────────────────────────────

def test_domain_errors(kennedy_file, tmp_path, capsys):
    code, _, err = _run(capsys, "eval", kennedy_file, "S &", "T")
    assert code == EXIT_DOMAIN and err.startswith("error:")

    code, _, err = _run(capsys, "eval", kennedy_file, "Q", "T")
    assert code == EXIT_DOMAIN and "Q" in err

    code, _, _ = _run(capsys, "check", str(tmp_path / "missing.model"))
    assert code == EXIT_DOMAIN


@pytest.mark.parametrize(
    "text",
    [
        "atoms: p\nworld a: p=1\nrank 0: a=1/2\n",
        "atoms: p\nworld a: p=1\nworld b: p=0\nrank 0: a=1\nrank 1: a=1\n",
        "atoms: p\nworld a: p=1\nrank 1: a=1\n",
        "atoms: p\nworld a: p=1\nrank 0: b=1\n",
        "atoms: p\nworld a: q=1\n",
        "world a: p=1\n",
        "atoms: p\nworld a p=1\n",
    ],
)
def test_bad_models_are_rejected(tmp_path, capsys, text):
    path = tmp_path / "bad.model"
    path.write_text(text)
    code, _, err = _run(capsys, "check", str(path))
    assert code == EXIT_DOMAIN
    assert err.startswith("error:")


# ──────────────────────────────────────────────
# audit
# ──────────────────────────────────────────────

def test_exhaustive_audit(capsys):
    code, out, _ = _run(capsys, "audit", "exhaustive", "--max-worlds", "3")
    assert code == EXIT_OK
    assert out.startswith("audit over 45 states")
    assert out.endswith("PASSED")


def test_exhaustive_audit_bound(capsys):
    code, _, err = _run(capsys, "audit", "exhaustive", "--max-worlds", "6")
    assert code == EXIT_DOMAIN and "error:" in err


def test_random_audit_lines(capsys):
    code, out, _ = _run(capsys, "audit", "random", "--seeds", "5", "--pool-size", "8", "--format", "lines")
    assert code == EXIT_OK
    rows = [json.loads(line) for line in out.splitlines()]
    names = {row["name"] for row in rows}
    assert {"Cumulativity", "Fixity", "CPWitness"} <= names
    assert all(row["record"] == "axiom" for row in rows)
    assert all(row["failure_count"] == 0 for row in rows)


def test_audit_exit_code_on_failure(monkeypatch, capsys):
    from state.schemas import AuditReport, AxiomResult

    failing = AuditReport(results=[AxiomResult(name="Broken", instances_checked=1, failure_count=1)])
    monkeypatch.setattr("main.exhaustive_small_space_audit", lambda max_worlds: failing)
    code, out, _ = _run(capsys, "audit", "exhaustive")
    assert code == EXIT_AUDIT
    assert out.endswith("FAILED")


def test_failed_instances_get_their_own_lines(monkeypatch, capsys):
    from state.schemas import AuditReport, AxiomResult, Failure

    failure = Failure(axiom="Broken", state="atoms: p\nworld a: p=1\n", inputs={"A": "{a}"}, expected="x", actual="y")
    failing = AuditReport(results=[
        AxiomResult(name="Broken", instances_checked=4, failure_count=1, failures=[failure]),
    ])
    monkeypatch.setattr("main.exhaustive_small_space_audit", lambda max_worlds: failing)
    code, out, _ = _run(capsys, "audit", "exhaustive", "--format", "lines")
    assert code == EXIT_AUDIT
    summary, instance = [json.loads(line) for line in out.splitlines()]
    assert summary["record"] == "axiom" and summary["instances_checked"] == 4
    assert instance["record"] == "instance"
    assert instance["inputs"] == {"A": "{a}"}
    assert instance["state"].startswith("atoms: p")


# ──────────────────────────────────────────────
# Option validation
# ──────────────────────────────────────────────

@pytest.mark.parametrize(
    "argv",
    [
        ["--log-level", "bogus", "audit", "exhaustive"],
        ["audit", "random", "--max-atoms", "9"],
        ["audit", "random", "--max-atoms", "0"],
        ["audit", "random", "--seeds", "0"],
        ["examples", "coin", "--n", "-1"],
    ],
)
def test_bad_options_are_usage_errors(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_log_level_is_case_insensitive(kennedy_file, capsys):
    code, out, _ = _run(capsys, "--log-level", "debug", "check", kennedy_file)
    assert code == EXIT_OK
    assert out.startswith("cores: 3")


def test_largest_atom_count_is_accepted(capsys):
    code, out, _ = _run(capsys, "audit", "random", "--max-atoms", "6", "--seeds", "1", "--pool-size", "4")
    assert code == EXIT_OK
    assert out.endswith("PASSED")
