"""Running evaluation strategies and measuring competitive ratios.

The harness owns the stopping rule: after every read it checks whether
the values seen so far already force the function, and stops the moment
they do.  A strategy only ever picks the next variable.  Ratios compare
what a run paid against the cheapest proof for the same assignment, with
the degenerate cases fixed as 0/0 = 1 and x/0 = infinity for x > 0.

``math.inf`` is the lone non-rational value in the package; it never
mixes with Fractions except through comparisons, which are exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Protocol, Sequence

from .core import (
    SEARCH_CAP,
    BooleanFunction,
    ContractViolation,
    CostVector,
    PartialAssignment,
    _require_cap,
    cheapest_proof,
    cheapest_proof_costs,
)

History = Sequence[tuple[int, int]]


class EvaluationAlgorithm(Protocol):
    """A strategy that names the next variable to read.

    ``next_query`` must depend only on the history it is handed, so one
    instance can be replayed across assignments.  It is only called while
    the history leaves the function undetermined, and must return an
    unread variable index.
    """

    def next_query(self, history: History) -> int: ...


class Adversary(Protocol):
    """An answer source that fixes the assignment as it is probed.

    ``finalize`` must extend the history to a full assignment that agrees
    with every answer already given.
    """

    def answer(self, variable: int, history: History) -> int: ...

    def finalize(self, history: History) -> PartialAssignment: ...


@dataclass(frozen=True)
class ReadRecord:
    variable: int
    value: int
    cost: Fraction


@dataclass(frozen=True)
class EvaluationTranscript:
    """One complete run: the reads in order, the forced value, the bill."""

    reads: tuple[ReadRecord, ...]
    final_value: int
    total_cost: Fraction

    def read_variables(self) -> tuple[int, ...]:
        return tuple(r.variable for r in self.reads)

    def assignment(self, n: int) -> PartialAssignment:
        return PartialAssignment.of(n, {r.variable: r.value for r in self.reads})


RatioValue = "Fraction | float"


@dataclass(frozen=True)
class RatioReport:
    """A measured ratio plus the assignment and costs that witness it."""

    ratio: object  # Fraction, or math.inf
    worst_assignment: Optional[PartialAssignment]
    algorithm_cost: Fraction
    proof_cost: Fraction
    per_assignment: Optional[tuple] = None

    def to_json(self) -> dict:
        out = {
            "ratio": ratio_string(self.ratio),
            "worst_assignment": self.worst_assignment.bit_string() if self.worst_assignment else None,
            "alg_cost": str(self.algorithm_cost),
            "proof_cost": str(self.proof_cost),
        }
        if self.per_assignment is not None:
            out["per_assignment"] = [
                {"assignment": a.bit_string(), "ratio": ratio_string(r)}
                for a, r in self.per_assignment
            ]
        return out


def ratio_of(algorithm_cost: Fraction, proof_cost: Fraction):
    """Cost ratio with the 0/0 = 1 and positive/0 = infinity conventions."""
    if proof_cost == 0:
        return Fraction(1) if algorithm_cost == 0 else math.inf
    return Fraction(algorithm_cost, proof_cost)


def ratio_string(r) -> str:
    return "inf" if r == math.inf else str(r)


def _check_query(f: BooleanFunction, seen: set, var) -> int:
    if not isinstance(var, int) or isinstance(var, bool) or not 0 <= var < f.n:
        raise ContractViolation(f"contract violation: bad query {var!r}")
    if var in seen:
        raise ContractViolation(f"contract violation: variable x{var} queried twice")
    return var


def run(algorithm: EvaluationAlgorithm, f: BooleanFunction,
        assignment: PartialAssignment, costs: CostVector) -> EvaluationTranscript:
    """Drive one strategy over a fixed full assignment until f is forced."""
    if not assignment.is_full:
        raise ValueError("run needs a full assignment")
    if costs.n != f.n or assignment.n != f.n:
        raise ValueError("mismatched sizes between function, costs, and assignment")
    history: list[tuple[int, int]] = []
    reads: list[ReadRecord] = []
    seen: set[int] = set()
    part = PartialAssignment(f.n)
    total = Fraction(0)
    value = f.is_determined(part)
    while value is None:
        var = _check_query(f, seen, algorithm.next_query(tuple(history)))
        val = assignment.value(var)
        seen.add(var)
        history.append((var, val))
        reads.append(ReadRecord(var, val, costs[var]))
        total += costs[var]
        part = part.bind(var, val)
        value = f.is_determined(part)
    return EvaluationTranscript(tuple(reads), value, total)


def verify_transcript(f: BooleanFunction, transcript: EvaluationTranscript) -> bool:
    """Check the stopping rule: determined at the end, not a single read earlier."""
    part = PartialAssignment(f.n)
    for record in transcript.reads[:-1]:
        part = part.bind(record.variable, record.value)
        if f.is_determined(part) is not None:
            return False
    if transcript.reads:
        last = transcript.reads[-1]
        part = part.bind(last.variable, last.value)
    return f.is_determined(part) == transcript.final_value


def competitive_ratio_exhaustive(algorithm: EvaluationAlgorithm, f: BooleanFunction,
                                 costs: CostVector, per_assignment: bool = False,
                                 cap: Optional[int] = None) -> RatioReport:
    """The exact worst-case ratio of a strategy over every assignment."""
    _require_cap(f.n, SEARCH_CAP if cap is None else cap, "exhaustive ratio sweep")
    proof_cost = cheapest_proof_costs(f, costs, cap=f.n)
    best = None
    table = []
    for index in range(1 << f.n):
        assignment = PartialAssignment.full_from_index(f.n, index)
        transcript = run(algorithm, f, assignment, costs)
        r = ratio_of(transcript.total_cost, proof_cost[index])
        entry = (r, assignment, transcript.total_cost, proof_cost[index])
        if per_assignment:
            table.append((assignment, r))
        if best is None or r > best[0]:
            best = entry
    r, assignment, alg_cost, p_cost = best
    return RatioReport(r, assignment, alg_cost, p_cost,
                       per_assignment=tuple(table) if per_assignment else None)


def adversarial_ratio(algorithm: EvaluationAlgorithm, f: BooleanFunction,
                      adversary: Adversary, costs: CostVector) -> RatioReport:
    """Play a strategy against an adversary; a lower-bound witness for the ratio."""
    history: list[tuple[int, int]] = []
    seen: set[int] = set()
    part = PartialAssignment(f.n)
    total = Fraction(0)
    while f.is_determined(part) is None:
        var = _check_query(f, seen, algorithm.next_query(tuple(history)))
        val = adversary.answer(var, tuple(history))
        if val not in (0, 1):
            raise ContractViolation(f"contract violation: adversary answered {val!r}")
        seen.add(var)
        history.append((var, val))
        total += costs[var]
        part = part.bind(var, val)
    full = adversary.finalize(tuple(history))
    if not full.is_full or full.n != f.n:
        raise ContractViolation("contract violation: finalize did not return a full assignment")
    for var, val in history:
        if full.value(var) != val:
            raise ContractViolation("contract violation: finalize contradicts an answer")
    _, proof_cost = cheapest_proof(f, full, costs, cap=f.n)
    return RatioReport(ratio_of(total, proof_cost), full, total, proof_cost)


def extremal_ratio_search(algorithm_factory: Callable[[CostVector], EvaluationAlgorithm],
                          f: BooleanFunction, cost_family: Iterable[CostVector],
                          per_assignment: bool = False) -> tuple[RatioReport, CostVector]:
    """Maximize the exhaustive ratio over a finite family of cost vectors."""
    best: Optional[tuple[RatioReport, CostVector]] = None
    for costs in cost_family:
        report = competitive_ratio_exhaustive(algorithm_factory(costs), f, costs,
                                              per_assignment=per_assignment)
        if best is None or report.ratio > best[0].ratio:
            best = (report, costs)
    if best is None:
        raise ValueError("extremal_ratio_search needs a nonempty cost family")
    return best


# ---------------------------------------------------------------------------
# basic strategies


class GreedyStrategy:
    """Read variables in nondecreasing cost order, ties by lowest index."""

    __slots__ = ("order",)

    def __init__(self, costs: CostVector):
        self.order = costs.sorted_order()

    def next_query(self, history: History) -> int:
        seen = {var for var, _ in history}
        for var in self.order:
            if var not in seen:
                return var
        raise ContractViolation("contract violation: every variable was already read")


def greedy_strategy(costs: CostVector) -> GreedyStrategy:
    return GreedyStrategy(costs)


class ReplayStrategy:
    """Re-issue a fixed variable order, e.g. from a recorded transcript."""

    __slots__ = ("order",)

    def __init__(self, order: Sequence[int]):
        self.order = tuple(order)

    def next_query(self, history: History) -> int:
        k = len(history)
        if k >= len(self.order):
            raise ContractViolation("contract violation: replayed transcript ran out of reads")
        return self.order[k]


def replay_strategy(order: Sequence[int]) -> ReplayStrategy:
    return ReplayStrategy(order)
