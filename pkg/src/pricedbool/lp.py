"""The proof covering program and the strategies built on it.

Every inclusion-minimal proof variable set of a function becomes a
covering constraint: an evaluation weight vector s must put total weight
at least 1 on each.  The optimum of that program lower-bounds nothing
by itself, but its value maximized over all restrictions of f bounds
the competitive ratio of the weight-guided reader from above, and the
switch constructions below force matching lower bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional

import numpy as np

from .core import (
    PROOF_ENUM_CAP,
    SEARCH_CAP,
    BooleanFunction,
    ConstantFunctionError,
    ContractViolation,
    CostVector,
    Dnf,
    Literal,
    PartialAssignment,
    PricedBoolError,
    _mask_vars,
    _require_cap,
    _restriction_view,
    literal_set_key,
    max_proof_size,
    maxterms,
    minimal_witness_domains,
    minterms,
)
from .harness import History
from .simplex import simplex_max, simplex_min

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class ProofLp:
    """Covering constraints: one row per inclusion-minimal proof variable set."""

    n: int
    rows: tuple[frozenset, ...]

    def __post_init__(self):
        for row in self.rows:
            if not row:
                raise ValueError("empty covering row; constant functions get no rows")
            if any(not 0 <= v < self.n for v in row):
                raise ValueError("covering row variable out of range")


@dataclass(frozen=True)
class LpSolution:
    """An exact weight vector with its objective and how it was obtained."""

    values: tuple[Fraction, ...]
    objective: Fraction
    row_count: int
    status: str

    def to_json(self) -> dict:
        return {
            "s": {f"x{v}": str(value) for v, value in enumerate(self.values)},
            "objective": str(self.objective),
            "rows": self.row_count,
        }


def build_lp(f: BooleanFunction, cap: int = PROOF_ENUM_CAP) -> ProofLp:
    """The covering program of f over its minimal proof variable sets.

    Dominated rows are dropped: a superset row's sum can only be larger.
    A constant function gets the empty program with optimum 0.
    """
    if f.is_constant() is not None:
        return ProofLp(f.n, ())
    masks = minimal_witness_domains(f, cap)
    return ProofLp(f.n, tuple(frozenset(_mask_vars(m)) for m in masks))


def _certify(rows, values, objective) -> None:
    if any(x < 0 for x in values):
        raise PricedBoolError("covering program certification failed: negative weight")
    if sum(values) != objective:
        raise PricedBoolError("covering program certification failed: objective mismatch")
    for row in rows:
        if sum(values[v] for v in row) < 1:
            raise PricedBoolError("covering program certification failed: uncovered row")


def _optimal_value(n: int, rows) -> tuple[Fraction, list[Fraction]]:
    """The optimum of the covering program, with a certifying weight vector.

    Solved through the packing dual (one variable per row, one constraint
    per function variable); the dual prices of those constraints are an
    optimal primal vector, and matching objectives certify optimality.
    """
    m = len(rows)
    a = [[ONE if i in rows[j] else ZERO for j in range(m)] for i in range(n)]
    res = simplex_max(a, [ONE] * n, [ONE] * m)
    values = [Fraction(x) for x in res.duals]
    _certify(rows, values, res.value)
    return res.value, values


def _face_program(rows, objective, pins: dict, free: list) -> list:
    """Constraint triples carving the optimal face out over the free coordinates."""
    pos = {v: j for j, v in enumerate(free)}
    k = len(free)
    cons = []
    for row in rows:
        rhs = ONE - sum(pins[v] for v in row if v in pins)
        if rhs <= 0:
            continue
        coeffs = [ZERO] * k
        hit = False
        for v in row:
            if v in pos:
                coeffs[pos[v]] = ONE
                hit = True
        if not hit:
            raise PricedBoolError("covering program refinement lost feasibility")
        cons.append((coeffs, ">=", rhs))
    cons.append(([ONE] * k, "==", objective - sum(pins.values())))
    return cons


def _face_floor(rows, objective, pins: dict, free: list) -> tuple[Fraction, list]:
    """Highest common floor under the free coordinates, with a witness point."""
    k = len(free)
    cons = [(coeffs + [ZERO], rel, rhs)
            for coeffs, rel, rhs in _face_program(rows, objective, pins, free)]
    for j in range(k):
        gap = [ZERO] * (k + 1)
        gap[j] = ONE
        gap[k] = -ONE
        cons.append((gap, ">=", ZERO))
    res = simplex_min([ZERO] * k + [-ONE], cons)
    return -res.value, res.solution[:k]


def _face_ceiling(rows, objective, pins: dict, free: list, v: int,
                  floor: Fraction) -> Fraction:
    """Largest value coordinate v can take with every free coordinate >= floor."""
    k = len(free)
    cons = _face_program(rows, objective, pins, free)
    for j in range(k):
        lift = [ZERO] * k
        lift[j] = ONE
        cons.append((lift, ">=", floor))
    c = [ZERO] * k
    c[free.index(v)] = -ONE
    return -simplex_min(c, cons).value


def solve_lp(lp: ProofLp) -> LpSolution:
    """The most even optimal weight vector of the program.

    Among the optimal solutions, the returned point maximizes the
    smallest weight, then the next smallest, and so on.  It is found by
    raising a common floor under the not yet pinned coordinates as far
    as the rows and the optimal budget allow, pinning the coordinates
    that cannot rise above the floor, and repeating.  A single full row
    thus yields the uniform vector rather than a corner of the face.
    """
    n = lp.n
    rows = lp.rows
    if not rows:
        return LpSolution((ZERO,) * n, ZERO, 0, "optimal")
    objective, _ = _optimal_value(n, rows)
    pins: dict[int, Fraction] = {}
    free = list(range(n))
    while free:
        floor, witness = _face_floor(rows, objective, pins, free)
        blocked = [v for j, v in enumerate(free)
                   if witness[j] == floor
                   and _face_ceiling(rows, objective, pins, free, v, floor) == floor]
        if not blocked:
            raise PricedBoolError("covering program refinement failed to pin")
        for v in blocked:
            pins[v] = floor
        free = [v for v in free if v not in pins]
    values = [pins[v] for v in range(n)]
    _certify(rows, values, objective)
    return LpSolution(tuple(values), objective, len(rows), "optimal")


_OBJECTIVE_CACHE: dict = {}
_SOLUTION_CACHE: dict = {}


def _canonical_key(f: BooleanFunction) -> tuple[int, bytes]:
    # complementing f leaves every witness domain intact, so both share a key
    table = f.table.tobytes()
    other = (~f.table).tobytes()
    return (f.n, min(table, other))


def lp_solution(f: BooleanFunction) -> LpSolution:
    """The canonical optimal solution for f's covering program, cached."""
    key = _canonical_key(f)
    hit = _SOLUTION_CACHE.get(key)
    if hit is None:
        hit = solve_lp(build_lp(f))
        _SOLUTION_CACHE[key] = hit
        _OBJECTIVE_CACHE[key] = hit.objective
    return hit


def lp_objective(f: BooleanFunction) -> Fraction:
    """The covering program optimum for f, skipping the canonical tie-break."""
    key = _canonical_key(f)
    hit = _OBJECTIVE_CACHE.get(key)
    if hit is None:
        lp = build_lp(f)
        hit = _optimal_value(f.n, lp.rows)[0] if lp.rows else ZERO
        _OBJECTIVE_CACHE[key] = hit
    return hit


def max_restriction_objective(f: BooleanFunction, cap: int = SEARCH_CAP) -> Fraction:
    """The covering optimum maximized over every restriction of f.

    All partial assignments count, the empty one included; restrictions
    that collapse to a constant contribute 0.  Restrictions sharing a
    table (or complementary tables) are solved once.
    """
    _require_cap(f.n, cap, "the restriction sweep")
    n = f.n
    best = ZERO
    seen = set()
    if f.is_constant() is None:
        seen.add(_canonical_key(f))
        best = lp_objective(f)
    for mask in range(1, (1 << n) - 1):
        view = _restriction_view(f, mask)
        nonconstant = np.flatnonzero(view.any(axis=1) & ~view.all(axis=1))
        sub_n = n - mask.bit_count()
        for r in nonconstant:
            table = view[r]
            key = (sub_n, min(table.tobytes(), (~table).tobytes()))
            if key in seen:
                continue
            seen.add(key)
            value = lp_objective(BooleanFunction(table.copy()))
            if value > best:
                best = value
    return best


class LpGuidedStrategy:
    """Reads the unread variable with the best residual cost per weight.

    Each step solves the covering program of the current restriction and
    charges every unread variable in proportion to its weight, at the
    common rate that first drives some residual cost to zero; that
    variable is read.  Variables already paid off (zero-cost ones
    included) go first and cause no charge; variables the solution
    ignores are never charged.  Ties fall to the lowest index.

    Charging against the whole solution at once, rather than ranking by
    raw cost over weight, is what ties the strategy to the restriction
    sweep: every read is fully absorbed by charges, a step's charges
    total at most the sweep value times its rate, and the cheapest proof
    of the hidden assignment soaks up the full rate every step because
    its unread part always covers some row.  Ranking by raw ratios
    forgets the charges between steps and can be lured past the sweep
    value by a chain of fresh cheap variables.
    """

    __slots__ = ("f", "costs", "_states")

    def __init__(self, f: BooleanFunction, costs: CostVector):
        if costs.n != f.n:
            raise ValueError("cost vector size does not match the function")
        self.f = f
        self.costs = costs
        # (mask, bits) -> (variable read there, residuals after its charge)
        self._states: dict = {}

    def next_query(self, history: History) -> int:
        keys = [(0, 0)]
        mask = bits = 0
        for var, value in history:
            mask |= 1 << var
            if value:
                bits |= 1 << var
            keys.append((mask, bits))
        cached = self._states.get(keys[-1])
        if cached is not None:
            return cached[0]
        # replay forward from the deepest prefix already charged
        depth = len(keys) - 1
        while depth > 0 and keys[depth - 1] not in self._states:
            depth -= 1
        if depth == 0:
            residuals = [Fraction(self.costs[v]) for v in range(self.f.n)]
        else:
            residuals = list(self._states[keys[depth - 1]][1])
        for key in keys[depth:]:
            entry = self._states.get(key)
            if entry is None:
                entry = self._charge(key, residuals)
                self._states[key] = entry
            residuals = list(entry[1])
        return self._states[keys[-1]][0]

    def _charge(self, key: tuple, residuals: list) -> tuple:
        mask, bits = key
        if mask == 0:
            g, kept = self.f, tuple(range(self.f.n))
        else:
            g, kept = self.f.restrict(PartialAssignment(self.f.n, mask, bits))
        if not kept or g.is_constant() is not None:
            raise ContractViolation("contract violation: no variable left to read")
        for v in kept:
            if residuals[v] == 0:
                return v, tuple(residuals)
        sol = lp_solution(g)
        rate = None
        for j, v in enumerate(kept):
            s = sol.values[j]
            if s > 0:
                ratio = residuals[v] / s
                if rate is None or ratio < rate:
                    rate = ratio
        if rate is None:
            raise ContractViolation("contract violation: the covering solution is empty")
        after = list(residuals)
        choice = None
        for j, v in enumerate(kept):
            s = sol.values[j]
            if s > 0:
                after[v] -= rate * s
                if after[v] == 0 and choice is None:
                    choice = v
        return choice, tuple(after)


def lp_guided_strategy(f: BooleanFunction, costs: CostVector) -> LpGuidedStrategy:
    return LpGuidedStrategy(f, costs)


# ---------------------------------------------------------------------------
# switch families: k steering variables select one of 2^k plain restrictions


@dataclass(frozen=True)
class FamilySpec:
    """t groups of 2^k pick-one variables steered by k switch variables.

    Group i occupies indices i*2^k .. i*2^k + 2^k - 1 and the switches
    come last.  A switch setting a selects slot j(a) = sum a_s 2^s, and
    the function is the OR over groups of the selected slot's variable,
    so every setting leaves a plain OR of t variables.
    """

    switches: int
    groups: int

    def __post_init__(self):
        if self.switches < 1 or self.groups < 1:
            raise ValueError("the switch family needs at least one switch and one group")

    @property
    def slot_count(self) -> int:
        return 1 << self.switches

    @property
    def n(self) -> int:
        return self.groups * self.slot_count + self.switches

    def slot_index(self, group: int, slot: int) -> int:
        return group * self.slot_count + slot

    @property
    def switch_variables(self) -> tuple[int, ...]:
        first = self.groups * self.slot_count
        return tuple(range(first, first + self.switches))

    def dnf(self) -> Dnf:
        terms = []
        for i in range(self.groups):
            for j in range(self.slot_count):
                lits = {Literal(self.slot_index(i, j))}
                for s, z in enumerate(self.switch_variables):
                    lits.add(Literal(z, negated=not j >> s & 1))
                terms.append(frozenset(lits))
        return Dnf(self.n, tuple(terms))

    def function(self) -> BooleanFunction:
        return self.dnf().function()


def make_switch_family(switches: int, groups: int) -> FamilySpec:
    return FamilySpec(switches, groups)


def switch_example() -> tuple[Dnf, frozenset]:
    """Five variables, one switch: the two settings want disjoint pairs.

    The covering sweep tops out at 3 while the largest proof has all
    four plain variables, so the two gauges genuinely differ here.
    """
    high = frozenset({Literal(4), Literal(2), Literal(3)})
    low = frozenset({Literal(4, True), Literal(0), Literal(1)})
    return Dnf(5, (high, low)), frozenset({4})


def _polarity_map(dnf: Dnf, switches: Iterable[int]) -> tuple[frozenset, dict]:
    """Check the switch hypothesis; map plain variables to their pure polarity.

    Switch variables must occur both plain and negated; every other
    variable must stick to one polarity.  The returned dict marks the
    plain variables that occur only negated (their certifying value 0).
    """
    switch_set = frozenset(switches)
    for z in switch_set:
        if not 0 <= z < dnf.n:
            raise ValueError(f"switch variable x{z} out of range")
    pos = set()
    neg = set()
    for term in dnf.terms:
        for lit in term:
            (neg if lit.negated else pos).add(lit.variable)
    for z in sorted(switch_set):
        if z not in pos or z not in neg:
            raise PricedBoolError(f"switch variable x{z} must appear both plain and negated")
    flips = {}
    for v in sorted((pos | neg) - switch_set):
        if v in pos and v in neg:
            raise PricedBoolError(f"variable x{v} appears both plain and negated but is not a switch")
        flips[v] = v in neg
    return switch_set, flips


def _branches(f: BooleanFunction, switch_list: list[int]):
    """Per switch setting (bit s of the code is the s-th switch's value):
    the setting tuple, the induced function, and its variable map."""
    k = len(switch_list)
    out = []
    for code in range(1 << k):
        setting = tuple(code >> s & 1 for s in range(k))
        assignment = PartialAssignment.of(f.n, dict(zip(switch_list, setting)))
        if assignment.is_full:
            out.append((setting, BooleanFunction.constant(0, f.evaluate(assignment)), ()))
        else:
            g, kept = f.restrict(assignment)
            out.append((setting, g, kept))
    return out


def _check_branch_monotone(setting, g: BooleanFunction, kept, flips: dict) -> None:
    if g.n == 0:
        return
    flip_mask = 0
    for j, v in enumerate(kept):
        if flips.get(v, False):
            flip_mask |= 1 << j
    if flip_mask:
        g = BooleanFunction(g.table[np.arange(g.table.size) ^ flip_mask])
    if not g.is_monotone():
        raise PricedBoolError(f"switch setting {setting} leaves a non-monotone function "
                              "after polarity normalization")


class BranchProofs(NamedTuple):
    size: int
    argmax: tuple


def branch_proof_size(dnf: Dnf, switches: Iterable[int]) -> BranchProofs:
    """The largest proof size over all switch settings, with its argmax set."""
    switch_set, flips = _polarity_map(dnf, switches)
    switch_list = sorted(switch_set)
    f = dnf.function()
    sizes = []
    for setting, g, kept in _branches(f, switch_list):
        _check_branch_monotone(setting, g, kept, flips)
        sizes.append((setting, max_proof_size(g)))
    top = max(size for _, size in sizes)
    return BranchProofs(top, tuple(setting for setting, size in sizes if size == top))


def _branch_certificates(g: BooleanFunction, kept, side: str) -> list[frozenset]:
    if g.is_constant() is not None:
        return []
    terms = minterms(g) if side == "minterm" else maxterms(g)
    return [frozenset(Literal(kept[lit.variable], lit.negated) for lit in term)
            for term in terms]


class SwitchAdversary:
    """Makes every read of the switches and the certificate necessary.

    Certificate variables answer toward their certificate, plain
    variables outside it answer away from every same-side certificate,
    and switches answer the chosen setting.  The one exception is the
    last unread variable among switches plus certificate, whose answer
    inverts, spoiling whatever the algorithm was building.
    """

    __slots__ = ("n", "base", "tracked")

    def __init__(self, n: int, base: dict, tracked: frozenset):
        self.n = n
        self.base = base
        self.tracked = tracked

    def answer(self, variable: int, history: History) -> int:
        if variable in self.tracked:
            unread = self.tracked - {var for var, _ in history}
            if unread == {variable}:
                return 1 - self.base[variable]
        return self.base[variable]

    def finalize(self, history: History) -> PartialAssignment:
        values = dict(history)
        for v, b in self.base.items():
            values.setdefault(v, b)
        return PartialAssignment.of(self.n, values)


def _coerce_certificate(certificate: Iterable, flips: dict) -> frozenset:
    lits = set()
    for item in certificate:
        if isinstance(item, Literal):
            lits.add(item)
        else:
            v = int(item)
            lits.add(Literal(v, negated=flips.get(v, False)))
    return frozenset(lits)


def switch_adversary(dnf: Dnf, switches: Iterable[int], setting, certificate,
                     side: str = "minterm") -> tuple[CostVector, SwitchAdversary]:
    """Unit costs on switches plus certificate, and the adversary that
    forces paying all of them.

    ``setting`` gives each switch's value in increasing variable order;
    ``certificate`` (variable indices or literals) must be a minterm or
    maxterm, per ``side``, of the function that setting leaves.  No
    other setting may certify the same way inside its variables; that
    condition is what keeps the final inverted answer unpredictable.
    """
    if side not in ("minterm", "maxterm"):
        raise ValueError("side must be 'minterm' or 'maxterm'")
    switch_set, flips = _polarity_map(dnf, switches)
    switch_list = sorted(switch_set)
    k = len(switch_list)
    setting = tuple(int(b) for b in setting)
    if len(setting) != k or any(b not in (0, 1) for b in setting):
        raise ValueError(f"the setting needs one bit per switch ({k})")
    f = dnf.function()
    branches = _branches(f, switch_list)
    for branch_setting, g, kept in branches:
        _check_branch_monotone(branch_setting, g, kept, flips)
    code = sum(bit << s for s, bit in enumerate(setting))
    _, chosen, chosen_kept = branches[code]
    if chosen.is_constant() is not None:
        raise ConstantFunctionError("the chosen switch setting leaves a constant function, "
                                    "which has no certificates")
    cert = _coerce_certificate(certificate, flips)
    if cert not in set(_branch_certificates(chosen, chosen_kept, side)):
        raise PricedBoolError(f"the certificate is not a {side} of the chosen setting")
    cert_vars = frozenset(lit.variable for lit in cert)
    for other_code, (_, g, kept) in enumerate(branches):
        if other_code == code:
            continue
        for term in _branch_certificates(g, kept, side):
            if {lit.variable for lit in term} <= cert_vars:
                raise PricedBoolError("switch certification hypothesis not met: another "
                                      "setting certifies inside the chosen variables")
    toward = 1 if side == "minterm" else 0
    base = {z: setting[s] for s, z in enumerate(switch_list)}
    for lit in cert:
        base[lit.variable] = lit.value_when_true if toward else 1 - lit.value_when_true
    away = 1 - toward
    for v in range(f.n):
        if v not in base:
            base[v] = 1 - away if flips.get(v, False) else away
    tracked = frozenset(switch_list) | cert_vars
    costs = CostVector.of([1 if v in tracked else 0 for v in range(f.n)])
    return costs, SwitchAdversary(f.n, base, tracked)


def find_certified_switch(dnf: Dnf, switches: Iterable[int]) -> tuple[tuple, tuple, str]:
    """A (setting, certificate, side) triple passing the certification check.

    Scans the settings with the largest proofs in binary order, minterms
    before maxterms, certificates of that largest size in literal order,
    and returns the first combination the adversary construction
    accepts.  Raises when none qualifies.
    """
    proofs = branch_proof_size(dnf, switches)
    if proofs.size == 0:
        raise PricedBoolError("every switch setting leaves a constant function")
    switch_list = sorted(frozenset(switches))
    f = dnf.function()
    by_setting = {setting: (g, kept) for setting, g, kept in _branches(f, switch_list)}
    for setting in proofs.argmax:
        g, kept = by_setting[setting]
        for side in ("minterm", "maxterm"):
            terms = [term for term in _branch_certificates(g, kept, side)
                     if len(term) == proofs.size]
            for term in sorted(terms, key=literal_set_key):
                certificate = tuple(sorted(lit.variable for lit in term))
                try:
                    switch_adversary(dnf, switches, setting, certificate, side)
                except PricedBoolError:
                    continue
                return setting, certificate, side
    raise PricedBoolError("switch certification hypothesis not met: no largest "
                          "certificate qualifies")


def mixed_branch_solution(dnf: Dnf, switches: Iterable[int]) -> LpSolution:
    """Averaging the per-setting optima gives a feasible full-program vector.

    Switches get weight 1.  A proof that avoids every switch restricts
    to a proof under each setting, so the averaged cover still reaches
    1; proofs reading a switch are covered by its unit weight.  The
    objective is at most the switch count plus the largest setting
    optimum, which never exceeds the largest branch proof.
    """
    switch_set, flips = _polarity_map(dnf, switches)
    switch_list = sorted(switch_set)
    k = len(switch_list)
    f = dnf.function()
    values = [ZERO] * f.n
    for z in switch_list:
        values[z] = ONE
    share = Fraction(1, 1 << k)
    largest = 0
    for setting, g, kept in _branches(f, switch_list):
        _check_branch_monotone(setting, g, kept, flips)
        largest = max(largest, max_proof_size(g))
        if g.is_constant() is not None:
            continue
        sol = lp_solution(g)
        for j, v in enumerate(kept):
            values[v] += share * sol.values[j]
    rows = build_lp(f).rows
    for row in rows:
        if sum(values[v] for v in row) < 1:
            raise PricedBoolError("the averaged branch vector misses a covering row")
    objective = sum(values)
    if objective > k + largest:
        raise PricedBoolError("the averaged branch vector exceeds its intended bound")
    return LpSolution(tuple(values), objective, len(rows), "feasible")
