"""Forward DRAT checking: unit propagation, AT/RAT tests, add/delete replay."""

from __future__ import annotations

from dataclasses import dataclass

from .model import (
    DELETE,
    NO_EMPTY_CLAUSE,
    REJECTED,
    VERIFIED,
    WARN_DELETED_MISSING,
    WARN_UNIT_DELETION,
    CheckReport,
    DeletionWarning,
    Formula,
    Proof,
    SourceClause,
    format_clause,
    normalize_clause,
)

TRUE, FALSE, UNASSIGNED = 1, -1, 0


@dataclass
class Rejection:
    step: int
    reason: str
    clause: SourceClause
    pivot: int | None = None
    failed_resolvent: tuple[int, ...] | None = None


class CheckerState:
    """Mutable checking state: the evolving formula plus propagation structures.

    Clauses of length >= 2 carry two watched literals; unit clauses live in
    a separate counter, and copies of the empty clause short-circuit every
    propagation into a conflict. Duplicate clause copies share one watch
    entry since propagation cannot distinguish them.
    """

    def __init__(self, formula: Formula, trace=None):
        self.formula = formula.copy()
        self.trace = trace
        self._values = [UNASSIGNED] * (self.formula.max_variable() + 1)
        self._trail: list[int] = []
        self._watched: dict[tuple[int, ...], list[int]] = {}
        self._watchlist: dict[int, list[tuple[int, ...]]] = {}
        self._units: dict[int, int] = {}
        self._empty_copies = 0
        for clause, count in self.formula.clause_counts().items():
            self._attach(clause, count)

    # -- clause bookkeeping ------------------------------------------------

    def _attach(self, clause: tuple[int, ...], copies: int = 1) -> None:
        if len(clause) == 0:
            self._empty_copies += copies
        elif len(clause) == 1:
            lit = clause[0]
            self._units[lit] = self._units.get(lit, 0) + copies
            self._ensure_var(abs(lit))
        elif clause not in self._watched:
            a, b = clause[0], clause[1]
            self._watched[clause] = [a, b]
            self._watchlist.setdefault(a, []).append(clause)
            self._watchlist.setdefault(b, []).append(clause)
            for lit in clause:
                self._ensure_var(abs(lit))

    def _detach_copy(self, clause: tuple[int, ...]) -> None:
        # one copy was removed from the formula; length-1 clauses never reach here
        if len(clause) == 0:
            self._empty_copies -= 1
        elif self.formula.count(clause) == 0 and clause in self._watched:
            a, b = self._watched.pop(clause)
            self._watchlist[a].remove(clause)
            self._watchlist[b].remove(clause)

    def _ensure_var(self, var: int) -> None:
        if var >= len(self._values):
            self._values.extend([UNASSIGNED] * (var + 1 - len(self._values)))

    # -- assignment --------------------------------------------------------

    def _value(self, lit: int) -> int:
        v = self._values[abs(lit)]
        return v if lit > 0 else -v

    def _assign(self, lit: int) -> None:
        self._values[abs(lit)] = TRUE if lit > 0 else FALSE
        self._trail.append(lit)

    def _undo_all(self) -> None:
        for lit in self._trail:
            self._values[abs(lit)] = UNASSIGNED
        self._trail.clear()

    # -- unit propagation ----------------------------------------------------

    def propagate(self, assumptions=()) -> bool:
        """Run unit propagation under the assumptions; True means conflict.

        The assignment is fully undone before returning, so the call has no
        observable effect on the state. Contradictory assumptions count as
        a conflict.
        """
        for lit in assumptions:
            self._ensure_var(abs(lit))
        conflict = False
        if self._empty_copies:
            conflict = True
        else:
            for lit in assumptions:
                v = self._value(lit)
                if v == FALSE:
                    conflict = True
                    break
                if v == UNASSIGNED:
                    self._assign(lit)
            if not conflict:
                for lit in self._units:
                    v = self._value(lit)
                    if v == FALSE:
                        conflict = True
                        break
                    if v == UNASSIGNED:
                        self._assign(lit)
        if not conflict:
            conflict = self._propagate_watches()
        self._undo_all()
        return conflict

    def _propagate_watches(self) -> bool:
        trail = self._trail
        watched = self._watched
        watchlist = self._watchlist
        head = 0
        while head < len(trail):
            falsified = -trail[head]
            head += 1
            watchers = watchlist.get(falsified)
            if not watchers:
                continue
            kept: list[tuple[int, ...]] = []
            for index, clause in enumerate(watchers):
                pair = watched[clause]
                other = pair[0] if pair[1] == falsified else pair[1]
                if self._value(other) == TRUE:
                    kept.append(clause)
                    continue
                for lit in clause:
                    if lit != other and lit != falsified and self._value(lit) != FALSE:
                        # move this watch from the falsified literal to lit
                        pair[0 if pair[0] == falsified else 1] = lit
                        watchlist.setdefault(lit, []).append(clause)
                        break
                else:
                    kept.append(clause)
                    if self._value(other) == FALSE:
                        kept.extend(watchers[index + 1 :])
                        watchlist[falsified] = kept
                        return True
                    self._assign(other)
            watchlist[falsified] = kept
        return False

    # -- redundancy checks ---------------------------------------------------

    def check_at(self, literals) -> bool:
        """Does propagating the clause's negation yield a conflict?"""
        return self.propagate([-lit for lit in literals])

    def check_rat(self, clause: SourceClause):
        """AT check first, then resolvents on the first written literal.

        Returns (ok, pivot, failed_resolvent): pivot and failed_resolvent
        are None unless the resolvent stage ran and failed.
        """
        if self.check_at(clause.canonical):
            self._note("AT check passed for %s" % format_clause(clause.literals))
            return True, None, None
        pivot = clause.literals[0]
        self._note(
            "AT failed for %s; RAT check with pivot %d"
            % (format_clause(clause.literals), pivot)
        )
        own = set(clause.canonical)
        for other in self.formula.clauses_with(-pivot):
            rest = [lit for lit in other if lit != -pivot]
            if any(-lit in own for lit in rest):
                self._note(
                    "resolvent with %s is a tautology, trivially redundant"
                    % format_clause(other)
                )
                continue
            resolvent = tuple(clause.literals) + tuple(
                lit for lit in rest if lit not in own
            )
            if self.check_at(resolvent):
                self._note(
                    "resolvent %s (with %s): AT passed"
                    % (format_clause(resolvent), format_clause(other))
                )
            else:
                self._note(
                    "resolvent %s (with %s): AT failed"
                    % (format_clause(resolvent), format_clause(other))
                )
                return False, pivot, resolvent
        return True, pivot, None

    # -- proof steps -----------------------------------------------------------

    def apply_add(self, clause: SourceClause, step: int) -> Rejection | None:
        """Check and add one clause; returns a Rejection instead of adding on failure."""
        if not clause.canonical:
            if not self.check_at(()):
                return Rejection(step, "empty clause not AT", clause)
            self._note("empty clause has AT")
        else:
            ok, pivot, resolvent = self.check_rat(clause)
            if not ok:
                return Rejection(step, "RAT check failed", clause, pivot, resolvent)
        self.formula.add_clause(clause.canonical)
        self._attach(clause.canonical)
        return None

    def apply_delete(self, clause: SourceClause, step: int) -> DeletionWarning | None:
        """Delete one copy; unit deletions and missing clauses warn instead."""
        canonical = clause.canonical
        if len(canonical) == 1:
            self._note("delete %s: unit clause, ignored" % format_clause(clause.literals))
            return DeletionWarning(step, WARN_UNIT_DELETION, clause)
        if not self.formula.remove_clause(canonical):
            self._note("delete %s: not in formula, ignored" % format_clause(clause.literals))
            return DeletionWarning(step, WARN_DELETED_MISSING, clause)
        if self.formula.count(canonical) == 0:
            self._detach(canonical)
        if clause.literals != canonical:
            self._note(
                "delete %s: matched stored clause %s up to literal order"
                % (format_clause(clause.literals), format_clause(canonical))
            )
        else:
            self._note("delete %s: removed one copy" % format_clause(clause.literals))
        return None

    def clause_counts(self):
        return self.formula.clause_counts()

    def _note(self, message: str) -> None:
        if self.trace is not None:
            self.trace(message)


def propagate(formula: Formula, assumptions=()) -> bool:
    """Unit propagation on a formula under assumptions; True means conflict."""
    return CheckerState(formula).propagate(list(assumptions))


def check_at(formula: Formula, literals) -> bool:
    """Asymmetric tautology test for a duplicate-free, non-tautological clause."""
    return CheckerState(formula).check_at(tuple(literals))


def check_rat(formula: Formula, clause) -> bool:
    """Resolution asymmetric tautology test; pivot is the first written literal."""
    if not isinstance(clause, SourceClause):
        clause = normalize_clause(clause)
    if not clause.canonical:
        raise ValueError("RAT is undefined for the empty clause; use check_at")
    ok, _, _ = CheckerState(formula).check_rat(clause)
    return ok


def check_proof(formula: Formula, proof: Proof, trace=None) -> CheckReport:
    """Replay a proof against a formula with forward checking.

    Steps are numbered from 1. The first accepted addition of the empty
    clause verifies the proof and later steps are ignored; the first failed
    addition rejects it. Deletions never fail but may emit warnings.
    """
    state = CheckerState(formula, trace=None)
    warnings: list[DeletionWarning] = []
    for index, step in enumerate(proof, start=1):
        if trace is not None:
            state.trace = lambda msg, i=index: trace("step %d: %s" % (i, msg))
        if step.kind == DELETE:
            warning = state.apply_delete(step.clause, index)
            if warning is not None:
                warnings.append(warning)
            continue
        rejection = state.apply_add(step.clause, index)
        if rejection is not None:
            return CheckReport(
                REJECTED,
                warnings=warnings,
                step=index,
                reason=rejection.reason,
                clause=rejection.clause,
                pivot=rejection.pivot,
                failed_resolvent=rejection.failed_resolvent,
            )
        if not step.clause.canonical:
            return CheckReport(VERIFIED, warnings=warnings, step=index)
    return CheckReport(NO_EMPTY_CLAUSE, warnings=warnings)
