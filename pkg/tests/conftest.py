import pytest

from dratcheck import ADD, DELETE, Proof, ProofStep, normalize_clause, parse_dimacs, parse_plain_proof

# Worked example used throughout: 4 variables, 8 clauses, and the 4-step
# refutation of it (spacing kept as published).
PAPER_FORMULA = """p cnf 4 8
 1  2 -3 0
-1 -2  3 0
 2  3 -4 0
-2 -3  4 0
-1 -3 -4 0
 1  3  4 0
-1  2  4 0
 1 -2 -4 0
"""

PAPER_PROOF = """         -1 0
  d -1 2  4 0
          2 0
            0
"""

PAPER_CLAUSES = [
    (1, 2, -3),
    (-1, -2, 3),
    (2, 3, -4),
    (-2, -3, 4),
    (-1, -3, -4),
    (1, 3, 4),
    (-1, 2, 4),
    (1, -2, -4),
]

# Two-step conversion example: 26 bytes of plain text, 12 bytes binary.
CONVERSION_PLAIN = b"d -63 -8193 0\n129 -8191 0\n"
CONVERSION_BINARY = bytes.fromhex("64 7f 83 80 01 00 61 82 02 ff 7f 00".replace(" ", ""))


@pytest.fixture
def paper_formula():
    return parse_dimacs(PAPER_FORMULA)


@pytest.fixture
def paper_proof():
    return parse_plain_proof(PAPER_PROOF)


# -- random generators (plain random.Random for the bulk loops) --------------

def random_clause_lits(rng, max_var=8, min_len=1, max_len=4, magnitude=None):
    """Distinct-variable literal tuple in random order; magnitude overrides max_var."""
    top = magnitude if magnitude is not None else max_var
    size = rng.randint(min_len, min(max_len, top))
    variables = rng.sample(range(1, top + 1), size)
    return tuple(v if rng.random() < 0.5 else -v for v in variables)


def random_clause_list(rng, n_clauses, max_var=8, min_len=1, max_len=4):
    return [random_clause_lits(rng, max_var, min_len, max_len) for _ in range(n_clauses)]


def random_proof(rng, max_steps=8, max_var=2000, max_len=5, delete_ratio=0.3):
    steps = []
    for _ in range(rng.randint(0, max_steps)):
        lits = random_clause_lits(rng, max_var=max_var, min_len=0, max_len=max_len)
        kind = DELETE if rng.random() < delete_ratio else ADD
        steps.append(ProofStep(kind, normalize_clause(lits)))
    return Proof(steps)


def refutation_steps(clauses, rng=None, max_nodes=20000):
    """Clause sequence of a tree-shaped refutation, empty clause last.

    Runs DPLL with unit propagation and emits the negated decision set at
    every refuted node in post-order; each emitted clause is then derivable
    by unit propagation from the original formula, so the sequence forms a
    valid proof. Returns None if the formula turns out satisfiable (or the
    node budget runs out).
    """
    clauses = [tuple(c) for c in clauses]
    variables = sorted({abs(l) for c in clauses for l in c})
    steps = []
    budget = [max_nodes]

    def unit_propagate(values):
        while True:
            changed = False
            all_satisfied = True
            for clause in clauses:
                satisfied = False
                unassigned = []
                for lit in clause:
                    value = values.get(abs(lit))
                    if value is None:
                        unassigned.append(lit)
                    elif value == (lit > 0):
                        satisfied = True
                        break
                if satisfied:
                    continue
                if not unassigned:
                    return "conflict"
                all_satisfied = False
                if len(unassigned) == 1:
                    values[abs(unassigned[0])] = unassigned[0] > 0
                    changed = True
            if not changed:
                return "satisfied" if all_satisfied else "open"

    def refute(decisions, values):
        budget[0] -= 1
        if budget[0] < 0:
            return False
        outcome = unit_propagate(values)
        if outcome == "conflict":
            steps.append(tuple(-d for d in decisions))
            return True
        if outcome == "satisfied":
            return False
        var = next(v for v in variables if v not in values)
        signs = [var, -var]
        if rng is not None:
            rng.shuffle(signs)
        for lit in signs:
            child = dict(values)
            child[abs(lit)] = lit > 0
            if not refute(decisions + [lit], child):
                return False
        steps.append(tuple(-d for d in decisions))
        return True

    return steps if refute([], {}) else None


# -- acceptance summary: one line per criterion, printed unconditionally -----

def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, ()):
            if getattr(report, "when", "call") != "call":
                continue
            if "test_acceptance.py" in report.nodeid:
                name = report.nodeid.split("::")[-1]
                lines.append((name, "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, status in sorted(lines):
            terminalreporter.write_line("%s  %s" % (status, name))
