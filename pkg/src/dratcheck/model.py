"""Shared domain types: literals, clauses, formulas, proofs, check reports."""

from __future__ import annotations

from dataclasses import dataclass, field

# DIMACS variable indices fit in a signed 32-bit int; 0 is the clause terminator.
MAX_LITERAL = 2**31 - 1

ADD = "add"
DELETE = "delete"

VERIFIED = "verified"
REJECTED = "rejected"
NO_EMPTY_CLAUSE = "no-empty-clause"

WARN_DELETED_MISSING = "deleted-clause-missing"
WARN_UNIT_DELETION = "unit-deletion-ignored"


class ClauseError(ValueError):
    """A clause violates the syntax restrictions."""


class TautologyError(ClauseError):
    """Clause contains a literal and its negation."""


class DuplicateLiteralError(ClauseError):
    """Clause contains the same literal twice."""


class LiteralRangeError(ClauseError):
    """Literal is zero or outside the 31-bit variable range."""


def check_literal(lit: int) -> int:
    if lit == 0:
        raise LiteralRangeError("literal 0 is reserved as the clause terminator")
    if not -MAX_LITERAL <= lit <= MAX_LITERAL:
        raise LiteralRangeError("literal %d out of range" % lit)
    return lit


def canonical_key(lit: int):
    # ascending variable index, positive literal before negative at the same variable
    return (abs(lit), lit < 0)


@dataclass(frozen=True)
class SourceClause:
    """A clause as written, plus its canonical (sorted) form.

    The textual order matters to the checker: the first written literal is
    the resolution pivot. Everything else (deletion matching, formula
    storage) works on the canonical form.
    """

    literals: tuple[int, ...]
    canonical: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.literals)


def normalize_clause(literals) -> SourceClause:
    """Validate a literal sequence and attach its canonical form.

    Raises TautologyError or DuplicateLiteralError on the two clause syntax
    violations, LiteralRangeError on out-of-range literals.
    """
    original = tuple(literals)
    for lit in original:
        check_literal(lit)
    ordered = sorted(original, key=canonical_key)
    for a, b in zip(ordered, ordered[1:]):
        if a == b:
            raise DuplicateLiteralError("duplicate literal %d" % a)
        if a == -b:
            raise TautologyError("complementary literals %d and %d" % (a, b))
    return SourceClause(original, tuple(ordered))


def format_clause(literals) -> str:
    lits = tuple(literals)
    if not lits:
        return "(empty)"
    return "(" + " ".join(str(l) for l in lits) + ")"


class Formula:
    """A multiset of canonical clauses with a literal occurrence index.

    Duplicate clauses are distinct copies; deletion removes one copy. The
    occurrence index maps each literal to the distinct clauses containing
    it and is kept consistent on every mutation.
    """

    def __init__(self, declared_vars: int = 0, declared_clauses: int = 0):
        self.declared_vars = declared_vars
        self.declared_clauses = declared_clauses
        self._counts: dict[tuple[int, ...], int] = {}
        self._occ: dict[int, dict[tuple[int, ...], None]] = {}
        self._size = 0
        self._max_var = 0

    @classmethod
    def from_clauses(cls, clause_literals, declared_vars=None, declared_clauses=None) -> "Formula":
        formula = cls()
        for lits in clause_literals:
            formula.add_clause(normalize_clause(lits).canonical)
        formula.declared_vars = formula.max_variable() if declared_vars is None else declared_vars
        formula.declared_clauses = len(formula) if declared_clauses is None else declared_clauses
        return formula

    def add_clause(self, clause: tuple[int, ...]) -> None:
        count = self._counts.get(clause, 0)
        self._counts[clause] = count + 1
        self._size += 1
        if count == 0:
            for lit in clause:
                self._occ.setdefault(lit, {})[clause] = None
        for lit in clause:
            if abs(lit) > self._max_var:
                self._max_var = abs(lit)

    def remove_clause(self, clause: tuple[int, ...]) -> bool:
        """Remove one copy; False if the clause is not present."""
        count = self._counts.get(clause, 0)
        if count == 0:
            return False
        if count == 1:
            del self._counts[clause]
            for lit in clause:
                del self._occ[lit][clause]
        else:
            self._counts[clause] = count - 1
        self._size -= 1
        return True

    def count(self, clause: tuple[int, ...]) -> int:
        return self._counts.get(clause, 0)

    def __contains__(self, clause) -> bool:
        return tuple(clause) in self._counts

    def __len__(self) -> int:
        return self._size

    def distinct_clauses(self):
        return iter(self._counts)

    def clauses(self):
        """All clause copies, duplicates included."""
        for clause, count in self._counts.items():
            for _ in range(count):
                yield clause

    def clause_counts(self) -> dict[tuple[int, ...], int]:
        return dict(self._counts)

    def clauses_with(self, lit: int):
        """Distinct clauses containing lit, in insertion order."""
        return list(self._occ.get(lit, ()))

    def max_variable(self) -> int:
        return self._max_var

    def copy(self) -> "Formula":
        other = Formula(self.declared_vars, self.declared_clauses)
        other._counts = dict(self._counts)
        other._occ = {lit: dict(clauses) for lit, clauses in self._occ.items()}
        other._size = self._size
        other._max_var = self._max_var
        return other

    def __eq__(self, other) -> bool:
        if not isinstance(other, Formula):
            return NotImplemented
        return (
            self._counts == other._counts
            and self.declared_vars == other.declared_vars
            and self.declared_clauses == other.declared_clauses
        )

    def __repr__(self) -> str:
        return "Formula(%d vars, %d clauses)" % (self.declared_vars, self._size)


@dataclass(frozen=True)
class ProofStep:
    kind: str  # ADD or DELETE
    clause: SourceClause


def add_step(literals) -> ProofStep:
    return ProofStep(ADD, normalize_clause(literals))


def delete_step(literals) -> ProofStep:
    return ProofStep(DELETE, normalize_clause(literals))


@dataclass
class Proof:
    steps: list[ProofStep] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)


@dataclass(frozen=True)
class DeletionWarning:
    step: int  # 1-based proof line
    kind: str  # WARN_DELETED_MISSING or WARN_UNIT_DELETION
    clause: SourceClause


@dataclass
class CheckReport:
    """Outcome of checking a proof against a formula.

    verdict is VERIFIED, REJECTED or NO_EMPTY_CLAUSE. On rejection, step
    holds the 1-based index of the failing line and the remaining fields
    describe the failed check: the offending clause, the pivot literal and
    the first resolvent whose propagation check did not conflict.
    """

    verdict: str
    warnings: list[DeletionWarning] = field(default_factory=list)
    step: int | None = None
    reason: str | None = None
    clause: SourceClause | None = None
    pivot: int | None = None
    failed_resolvent: tuple[int, ...] | None = None

    @property
    def verified(self) -> bool:
        return self.verdict == VERIFIED
