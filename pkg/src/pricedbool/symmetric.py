"""Symmetric functions: value profiles, blocks, and the exact ratio formula.

A symmetric function is determined by its profile, the map from the
number of ones to the output.  Maximal constant runs of the profile are
its blocks; the spread is the widest block.  For any cost vector the
competitive ratio has a closed form over the sorted costs, greedy
achieves it, and an adversary built from the widest block forces it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .core import (
    BooleanFunction,
    ConstantFunctionError,
    CostVector,
    PartialAssignment,
)
from .harness import History, ratio_of


@dataclass(frozen=True)
class Block:
    """A maximal interval of one-counts on which the profile is constant."""

    lower: int
    upper: int
    value: int

    @property
    def width(self) -> int:
        return self.upper - self.lower + 1


@dataclass(frozen=True)
class SymmetricProfile:
    """The output for each possible number of ones among the n variables."""

    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) < 2:
            raise ValueError("a profile needs n+1 entries with n >= 1")
        if any(v not in (0, 1) for v in self.values):
            raise ValueError("profile entries must be 0 or 1")

    @classmethod
    def from_string(cls, bits: str) -> "SymmetricProfile":
        if not bits or set(bits) - {"0", "1"}:
            raise ValueError(f"profile must be a 0/1 string, got {bits!r}")
        return cls(tuple(int(b) for b in bits))

    @property
    def n(self) -> int:
        return len(self.values) - 1

    def is_constant(self) -> Optional[int]:
        if all(v == self.values[0] for v in self.values):
            return self.values[0]
        return None

    def reversed(self) -> "SymmetricProfile":
        return SymmetricProfile(tuple(reversed(self.values)))

    def function(self) -> BooleanFunction:
        idx = np.arange(1 << self.n, dtype=np.int64)
        ones = np.zeros(1 << self.n, dtype=np.int64)
        for v in range(self.n):
            ones += (idx >> v) & 1
        table = np.array(self.values, dtype=bool)[ones]
        return BooleanFunction(table)

    def text(self) -> str:
        return "".join(str(v) for v in self.values)


def profile_of(f: BooleanFunction) -> Optional[SymmetricProfile]:
    """The profile of f, or None when f is not symmetric."""
    idx = np.arange(1 << f.n, dtype=np.int64)
    ones = np.zeros(1 << f.n, dtype=np.int64)
    for v in range(f.n):
        ones += (idx >> v) & 1
    values = []
    for k in range(f.n + 1):
        group = f.table[ones == k]
        if group.any() != group.all():
            return None
        values.append(int(group[0]))
    return SymmetricProfile(tuple(values))


def blocks(profile: SymmetricProfile) -> tuple[Block, ...]:
    out = []
    start = 0
    for k in range(1, profile.n + 2):
        if k > profile.n or profile.values[k] != profile.values[start]:
            out.append(Block(start, k - 1, profile.values[start]))
            start = k
    return tuple(out)


def spread(profile: SymmetricProfile) -> int:
    return max(b.width for b in blocks(profile))


def block_of(profile: SymmetricProfile, ones: int) -> Block:
    for b in blocks(profile):
        if b.lower <= ones <= b.upper:
            return b
    raise ValueError(f"one-count {ones} out of range 0..{profile.n}")


def determined_by_counts(profile: SymmetricProfile, zeros: int, ones: int) -> Optional[int]:
    """The forced value after seeing the given counts of zeros and ones.

    The function is pinned down exactly when the block holding the
    current one-count reaches past every count still achievable.
    """
    n = profile.n
    if zeros < 0 or ones < 0 or zeros + ones > n:
        raise ValueError(f"impossible counts: {zeros} zeros + {ones} ones on {n} variables")
    b = block_of(profile, ones)
    if b.upper >= n - zeros:
        return b.value
    return None


# ---------------------------------------------------------------------------
# the exact ratio formula


def _sorted_costs(costs: CostVector) -> list[Fraction]:
    return sorted(costs.values)


def ratio_formula(profile: SymmetricProfile, costs: CostVector):
    """The exact competitive ratio for a symmetric function under given costs.

    Maximizes d_k / (d_{n-s} + c_k) over k > n-s, where c is sorted
    nondecreasing, d_k sums the k cheapest costs, and s is the spread.
    Degenerate zero-cost instances follow the 0/0 = 1 convention.
    """
    if profile.is_constant() is not None:
        raise ConstantFunctionError("the ratio formula is undefined for a constant function")
    if costs.n != profile.n:
        raise ValueError("cost vector size does not match the profile")
    value, _ = _formula_max(profile, costs)
    return value


def _formula_max(profile: SymmetricProfile, costs: CostVector):
    n = profile.n
    s = spread(profile)
    cs = _sorted_costs(costs)
    prefix = [Fraction(0)]
    for c in cs:
        prefix.append(prefix[-1] + c)
    best = None
    best_k = None
    for k in range(n - s + 1, n + 1):
        denom = prefix[n - s] + cs[k - 1]
        num = prefix[k]
        term = ratio_of(num, denom)
        if best is None or term > best:
            best, best_k = term, k
    return best, best_k


def extremal_cost_vector(profile: SymmetricProfile) -> CostVector:
    """Costs witnessing the extremal ratio: spread ones, the rest free."""
    if profile.is_constant() is not None:
        raise ConstantFunctionError("no extremal costs for a constant function")
    n, s = profile.n, spread(profile)
    return CostVector.of([0] * (n - s) + [1] * s)


def cheapest_proof_by_counts(profile: SymmetricProfile, assignment: PartialAssignment,
                             costs: CostVector) -> Fraction:
    """Closed-form cheapest proof cost under a full assignment.

    A proof must exhibit n-u zeros and l ones, where [l, u] is the block
    holding the assignment's one-count; picking the cheapest of each kind
    is optimal.  Works directly on counts, so it scales past table caps.
    """
    if not assignment.is_full:
        raise ValueError("cheapest_proof_by_counts needs a full assignment")
    n = profile.n
    ones = [v for v in range(n) if assignment.value(v) == 1]
    zeros = [v for v in range(n) if assignment.value(v) == 0]
    b = block_of(profile, len(ones))
    need_zero, need_one = n - b.upper, b.lower
    zeros.sort(key=lambda v: (costs[v], v))
    ones.sort(key=lambda v: (costs[v], v))
    return costs.cost(zeros[:need_zero]) + costs.cost(ones[:need_one])


# ---------------------------------------------------------------------------
# the block adversary


class SymmetricAdversary:
    """Forces any strategy to pay the formula's worth before settling.

    Commits the cheapest n-u-1 variables to 0, hands out ones for the
    first k-n+u probes elsewhere, then zeros; the finalize step zeroes
    the cheapest untouched non-committed variable and raises the rest.
    """

    __slots__ = ("n", "committed", "others", "quota", "k_star", "block")

    def __init__(self, profile: SymmetricProfile, costs: CostVector,
                 block: Block, k_star: int):
        ranked = costs.sorted_order()
        self.n = profile.n
        self.block = block
        self.k_star = k_star
        head = self.n - block.upper - 1
        self.committed = frozenset(ranked[:head])
        self.others = ranked[head:]
        self.quota = k_star - (self.n - block.upper)

    def answer(self, variable: int, history: History) -> int:
        if variable in self.committed:
            return 0
        given = sum(1 for var, _ in history if var not in self.committed)
        return 1 if given < self.quota else 0

    def finalize(self, history: History) -> PartialAssignment:
        values = {var: val for var, val in history}
        for var in self.committed:
            values.setdefault(var, 0)
        unset = [var for var in self.others if var not in values]
        for i, var in enumerate(unset):
            values[var] = 0 if i == 0 else 1
        return PartialAssignment.of(self.n, values)


class _FlippedAdversary:
    """Play an adversary with every bit complemented, for mirrored profiles."""

    __slots__ = ("inner", "n")

    def __init__(self, inner, n: int):
        self.inner = inner
        self.n = n

    @staticmethod
    def _flip_history(history: History):
        return tuple((var, 1 - val) for var, val in history)

    def answer(self, variable: int, history: History) -> int:
        return 1 - self.inner.answer(variable, self._flip_history(history))

    def finalize(self, history: History) -> PartialAssignment:
        full = self.inner.finalize(self._flip_history(history))
        mask = (1 << self.n) - 1
        return PartialAssignment(self.n, mask, full.bits ^ mask)


def symmetric_adversary(profile: SymmetricProfile, costs: CostVector):
    """The lower-bound adversary for a non-constant symmetric function.

    Built from the widest block with the smallest upper end.  When that
    block touches the all-ones count the roles of 0 and 1 are exchanged:
    the adversary for the reversed profile plays with flipped answers.
    """
    if profile.is_constant() is not None:
        raise ConstantFunctionError("no adversary for a constant function")
    if costs.n != profile.n:
        raise ValueError("cost vector size does not match the profile")
    widest = max(b.width for b in blocks(profile))
    chosen = min((b for b in blocks(profile) if b.width == widest), key=lambda b: b.upper)
    if chosen.upper == profile.n:
        inner = symmetric_adversary(profile.reversed(), costs)
        return _FlippedAdversary(inner, profile.n)
    _, k_star = _formula_max(profile, costs)
    return SymmetricAdversary(profile, costs, chosen, k_star)
