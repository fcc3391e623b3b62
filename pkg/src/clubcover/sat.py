"""CNF formulas, double-satisfaction semantics, and the 3-SAT to
five-literal double-SAT instance transformation with assignment mappings
in both directions.

A clause is *double-satisfied* by an assignment when it contains a positive
literal set true AND a negative literal set false; this is strictly stronger
than ordinary satisfaction.  Double-SAT instances carry exactly five
literals per clause, each clause mixing polarities, and each variable
occurring with both polarities somewhere in the instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

#: Total truth assignment: variable index (1-based) -> bool.
Assignment = dict[int, bool]


@dataclass(frozen=True, order=True)
class Literal:
    """A variable occurrence: ``variable >= 1`` with a polarity."""

    variable: int
    positive: bool = True

    def __post_init__(self) -> None:
        if self.variable < 1:
            raise ValueError("variable index must be positive")

    def negated(self) -> "Literal":
        return Literal(self.variable, not self.positive)

    def to_int(self) -> int:
        """Signed-integer form used at the DIMACS boundary."""
        return self.variable if self.positive else -self.variable

    @staticmethod
    def from_int(code: int) -> "Literal":
        if code == 0:
            raise ValueError("literal code 0 is reserved as a terminator")
        return Literal(abs(code), code > 0)


Clause = tuple[Literal, ...]


@dataclass(frozen=True)
class CnfFormula:
    """Clause list over variables ``1..num_vars``.

    No clause may mention the same variable twice, in either polarity.
    """

    num_vars: int
    clauses: tuple[Clause, ...]

    def __post_init__(self) -> None:
        if self.num_vars < 0:
            raise ValueError("num_vars must be non-negative")
        for k, clause in enumerate(self.clauses):
            seen: set[int] = set()
            for lit in clause:
                if lit.variable > self.num_vars:
                    raise ValueError(
                        f"clause {k} uses variable {lit.variable} > num_vars={self.num_vars}"
                    )
                if lit.variable in seen:
                    raise ValueError(f"clause {k} mentions variable {lit.variable} twice")
                seen.add(lit.variable)

    def variables(self) -> range:
        return range(1, self.num_vars + 1)


def formula_from_ints(num_vars: int, clauses: list[list[int]]) -> CnfFormula:
    """Build a formula from DIMACS-style signed integer clauses."""
    return CnfFormula(
        num_vars,
        tuple(tuple(Literal.from_int(c) for c in clause) for clause in clauses),
    )


def _lookup(assignment: Assignment, variable: int) -> bool:
    try:
        return assignment[variable]
    except KeyError:
        raise ValueError(f"assignment does not define variable {variable}") from None


def clause_satisfied(clause: Clause, assignment: Assignment) -> bool:
    return any(_lookup(assignment, lit.variable) == lit.positive for lit in clause)


def clause_double_satisfied(clause: Clause, assignment: Assignment) -> bool:
    """True iff some positive literal is true AND some negative literal's
    variable is false under ``assignment``."""
    pos_ok = any(lit.positive and _lookup(assignment, lit.variable) for lit in clause)
    neg_ok = any(
        not lit.positive and not _lookup(assignment, lit.variable) for lit in clause
    )
    return pos_ok and neg_ok


def formula_satisfied(f: CnfFormula, assignment: Assignment) -> bool:
    return all(clause_satisfied(c, assignment) for c in f.clauses)


def formula_double_satisfied(f: CnfFormula, assignment: Assignment) -> bool:
    return all(clause_double_satisfied(c, assignment) for c in f.clauses)


@dataclass(frozen=True)
class FiveDSatInstance:
    """A formula checked (or constructed) to have exactly five literals per
    clause, mixed polarities in every clause, and each variable occurring
    with both polarities somewhere."""

    formula: CnfFormula


@dataclass(frozen=True)
class FiveDSatViolation:
    """First reason a formula fails the double-SAT instance shape."""

    reason: str
    clause_index: int | None = None
    variable: int | None = None

    def __str__(self) -> str:
        where = []
        if self.clause_index is not None:
            where.append(f"clause {self.clause_index}")
        if self.variable is not None:
            where.append(f"variable {self.variable}")
        suffix = f" ({', '.join(where)})" if where else ""
        return self.reason + suffix


def validate_5dsat(f: CnfFormula) -> FiveDSatInstance | FiveDSatViolation:
    """Check the double-SAT instance invariants, reporting the first defect.

    Violations are returned as data; nothing raises.
    """
    for k, clause in enumerate(f.clauses):
        if len(clause) != 5:
            return FiveDSatViolation("clause does not have exactly five literals", k)
        if not any(lit.positive for lit in clause):
            return FiveDSatViolation("clause has no positive literal", k)
        if not any(not lit.positive for lit in clause):
            return FiveDSatViolation("clause has no negative literal", k)
        # duplicate variables inside a clause are already rejected by CnfFormula
    pos_seen = {lit.variable for c in f.clauses for lit in c if lit.positive}
    neg_seen = {lit.variable for c in f.clauses for lit in c if not lit.positive}
    for v in f.variables():
        if v not in pos_seen:
            return FiveDSatViolation("variable never occurs positively", variable=v)
        if v not in neg_seen:
            return FiveDSatViolation("variable never occurs negatively", variable=v)
    return FiveDSatInstance(f)


def normalize_single_polarity(f: CnfFormula) -> tuple[CnfFormula, Assignment]:
    """Force single-polarity variables: only-positive variables become true,
    only-negative ones false.

    Clauses are left untouched (arity is preserved); the forcing is returned
    as a partial assignment for consumers to apply before search.  Variables
    that never occur are forced true as the degenerate case.
    """
    pos_seen = {lit.variable for c in f.clauses for lit in c if lit.positive}
    neg_seen = {lit.variable for c in f.clauses for lit in c if not lit.positive}
    forced: Assignment = {}
    for v in f.variables():
        in_pos = v in pos_seen
        in_neg = v in neg_seen
        if in_pos and in_neg:
            continue
        forced[v] = in_pos or not in_neg
    return f, forced


def has_two_variable_double_cover(inst: FiveDSatInstance) -> Assignment | None:
    """A partial assignment of at most two variables that already
    double-satisfies every clause regardless of the other variables, or None.

    Used as a gate: the club-cover construction assumes no such shortcut
    assignment exists.
    """
    f = inst.formula

    def covers_all(partial: Assignment) -> bool:
        for clause in f.clauses:
            pos_ok = any(
                lit.positive and partial.get(lit.variable) is True for lit in clause
            )
            neg_ok = any(
                not lit.positive and partial.get(lit.variable) is False
                for lit in clause
            )
            if not (pos_ok and neg_ok):
                return False
        return True

    if covers_all({}):
        return {}
    variables = list(f.variables())
    for v in variables:
        for val in (True, False):
            if covers_all({v: val}):
                return {v: val}
    for v, w in combinations(variables, 2):
        for val_v, val_w in product((True, False), repeat=2):
            partial = {v: val_v, w: val_w}
            if covers_all(partial):
                return partial
    return None


@dataclass(frozen=True)
class AuxVarMap:
    """Origin bookkeeping for the 3-SAT lift: which output variables are the
    source variables and which auxiliary pair belongs to each source clause."""

    num_base_vars: int
    clause_aux: tuple[tuple[int, int], ...]
    reduced: CnfFormula

    def is_auxiliary(self, variable: int) -> bool:
        return variable > self.num_base_vars


def reduce_3sat_to_5dsat(f3: CnfFormula) -> tuple[FiveDSatInstance, AuxVarMap]:
    """Turn a 3-literal-per-clause formula into a double-SAT instance.

    Each source clause (l1 v l2 v l3) becomes the pair

        (l1 v l2 v l3 v  a v ~b)
        (l1 v l2 v l3 v ~a v  b)

    over a fresh auxiliary variable pair (a, b), so the output has 2p
    clauses over q + 2p variables.  Satisfiability of the source is
    equivalent to double-satisfiability of the output.
    """
    for k, clause in enumerate(f3.clauses):
        if len(clause) != 3:
            raise ValueError(f"clause {k} does not have exactly three literals")
    q = f3.num_vars
    clauses: list[Clause] = []
    aux_pairs: list[tuple[int, int]] = []
    for i, clause in enumerate(f3.clauses):
        a = q + 2 * i + 1
        b = q + 2 * i + 2
        aux_pairs.append((a, b))
        clauses.append(clause + (Literal(a, True), Literal(b, False)))
        clauses.append(clause + (Literal(a, False), Literal(b, True)))
    reduced = CnfFormula(q + 2 * len(f3.clauses), tuple(clauses))
    return FiveDSatInstance(reduced), AuxVarMap(q, tuple(aux_pairs), reduced)


def lift_assignment(f3: CnfFormula, assignment: Assignment, aux: AuxVarMap) -> Assignment:
    """Extend a satisfying assignment of the source to one that
    double-satisfies the transformed instance.

    Per clause, the lowest-position satisfied literal decides the auxiliary
    pair: both false when it is positive, both true when negative.
    """
    if not formula_satisfied(f3, assignment):
        raise ValueError("assignment does not satisfy the source formula")
    lifted = dict(assignment)
    for clause, (a, b) in zip(f3.clauses, aux.clause_aux):
        witness = next(
            lit for lit in clause if _lookup(assignment, lit.variable) == lit.positive
        )
        value = not witness.positive
        lifted[a] = value
        lifted[b] = value
    return lifted


def restrict_assignment(a5: Assignment, aux: AuxVarMap) -> Assignment:
    """Drop the auxiliary variables from a double-satisfying assignment of
    the transformed instance; the rest satisfies the source."""
    if not formula_double_satisfied(aux.reduced, a5):
        raise ValueError("assignment does not double-satisfy the transformed instance")
    restricted = {v: _lookup(a5, v) for v in range(1, aux.num_base_vars + 1)}
    for clause in aux.reduced.clauses:
        base = clause[:3]
        if not clause_satisfied(base, restricted):
            raise RuntimeError(
                "double-satisfying assignment does not satisfy the source clause; "
                "transformation invariant broken"
            )
    return restricted
