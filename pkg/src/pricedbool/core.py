"""Boolean functions with priced variables.

Truth-table functions, partial assignments, exact rational cost vectors,
and the certificate machinery on top of them: proofs (variable sets that
pin the function value down for some witness), minterms and maxterms,
cheapest-proof search, and crossing certificates for monotone functions.

Conventions used throughout the package:

* A function on n variables is a numpy bool table of length 2**n indexed
  little-endian: bit i of the table index is the value of variable i.
* All costs and derived quantities are `fractions.Fraction`; no floats
  enter any comparison.  The only float permitted anywhere is the
  ``math.inf`` sentinel for infinite ratios.
* Everything is immutable and safe to share.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Mapping, NamedTuple, Optional, Sequence

import numpy as np

TABLE_CAP = 24
PROOF_ENUM_CAP = 14
SEARCH_CAP = 12


class PricedBoolError(Exception):
    """Base class for all package errors."""


class CapExceeded(PricedBoolError):
    """An operation was asked to sweep an instance above its size guard."""


class ConstantFunctionError(PricedBoolError):
    """The operation is undefined for constant functions."""


class ContractViolation(PricedBoolError):
    """An algorithm or adversary broke the interaction contract."""


class ParseError(PricedBoolError):
    def __init__(self, message: str, token: int | None = None):
        if token is not None:
            message = f"parse error at token {token}: {message}"
        super().__init__(message)
        self.token = token


def _require_cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise CapExceeded(f"instance too large for {what}: n={n} exceeds cap {cap}")


# ---------------------------------------------------------------------------
# assignments


@dataclass(frozen=True)
class PartialAssignment:
    """Values for a subset of the variables, stored as two bitmasks.

    ``mask`` has bit v set when variable v is bound; ``bits`` carries the
    bound values (and is zero outside ``mask``).
    """

    n: int
    mask: int = 0
    bits: int = 0

    def __post_init__(self):
        if not 0 <= self.mask < (1 << self.n):
            raise ValueError("assignment mask out of range")
        if self.bits & ~self.mask:
            raise ValueError("assignment has values outside its domain")

    @classmethod
    def of(cls, n: int, values: Mapping[int, int]) -> "PartialAssignment":
        mask = bits = 0
        for var, val in values.items():
            if not 0 <= var < n:
                raise ValueError(f"variable x{var} out of range for n={n}")
            if val not in (0, 1):
                raise ValueError(f"value for x{var} must be 0 or 1")
            mask |= 1 << var
            bits |= val << var
        return cls(n, mask, bits)

    @classmethod
    def full_from_index(cls, n: int, index: int) -> "PartialAssignment":
        return cls(n, (1 << n) - 1, index)

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    @property
    def is_full(self) -> bool:
        return self.mask == (1 << self.n) - 1

    @property
    def is_empty(self) -> bool:
        return self.mask == 0

    def value(self, var: int) -> Optional[int]:
        if self.mask >> var & 1:
            return self.bits >> var & 1
        return None

    def domain(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if self.mask >> v & 1)

    def items(self) -> Iterator[tuple[int, int]]:
        for v in self.domain():
            yield v, self.bits >> v & 1

    def bind(self, var: int, value: int) -> "PartialAssignment":
        if self.mask >> var & 1:
            raise ValueError(f"variable x{var} is already bound")
        if value not in (0, 1):
            raise ValueError("value must be 0 or 1")
        return PartialAssignment(self.n, self.mask | 1 << var, self.bits | value << var)

    def union(self, other: "PartialAssignment") -> "PartialAssignment":
        """Combine two assignments; they must agree where they overlap."""
        if self.n != other.n:
            raise ValueError("assignments over different variable counts")
        common = self.mask & other.mask
        if (self.bits ^ other.bits) & common:
            raise ValueError("assignments disagree on a shared variable")
        return PartialAssignment(self.n, self.mask | other.mask, self.bits | other.bits)

    def restrict_to(self, variables: Iterable[int]) -> "PartialAssignment":
        keep = 0
        for v in variables:
            keep |= 1 << v
        keep &= self.mask
        return PartialAssignment(self.n, keep, self.bits & keep)

    def key(self) -> tuple[int, int, int]:
        return (self.n, self.mask, self.bits)

    def bit_string(self) -> str:
        """Render a full assignment as the values of x0, x1, ... left to right."""
        if not self.is_full:
            raise ValueError("bit_string requires a full assignment")
        return "".join(str(self.bits >> v & 1) for v in range(self.n))

    def __repr__(self):
        inner = ", ".join(f"x{v}={b}" for v, b in self.items())
        return f"PartialAssignment({self.n}; {inner})"


# ---------------------------------------------------------------------------
# costs


@dataclass(frozen=True)
class CostVector:
    """Nonnegative exact rational cost per variable."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        for c in self.values:
            if not isinstance(c, Fraction):
                raise TypeError("costs must be Fractions; use CostVector.of")
            if c < 0:
                raise ValueError("costs must be nonnegative")

    @classmethod
    def of(cls, values: Iterable) -> "CostVector":
        return cls(tuple(Fraction(v) for v in values))

    @property
    def n(self) -> int:
        return len(self.values)

    def cost(self, variables: Iterable[int]) -> Fraction:
        total = Fraction(0)
        for v in variables:
            total += self.values[v]
        return total

    def cost_of_mask(self, mask: int) -> Fraction:
        total = Fraction(0)
        v = 0
        while mask:
            if mask & 1:
                total += self.values[v]
            mask >>= 1
            v += 1
        return total

    def sorted_order(self) -> tuple[int, ...]:
        """Variable indices in nondecreasing cost order, ties by index."""
        return tuple(sorted(range(self.n), key=lambda v: (self.values[v], v)))

    def __getitem__(self, v: int) -> Fraction:
        return self.values[v]


def unit_costs(n: int) -> CostVector:
    return CostVector.of([1] * n)


def random_cost_vector(n: int, rng, positive: bool = False) -> CostVector:
    """Draw per-variable costs p/q with p in [0,100] (or [1,100]) and q in [1,10]."""
    lo = 1 if positive else 0
    return CostVector(tuple(Fraction(rng.randint(lo, 100), rng.randint(1, 10)) for _ in range(n)))


def parse_cost_json(text: str, n: int) -> CostVector:
    import json

    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"cost file is not valid JSON: {e}") from None
    if not isinstance(data, dict):
        raise ParseError("cost file must be a JSON object")
    values = []
    for v in range(n):
        key = f"x{v}"
        if key not in data:
            raise ParseError(f"cost file is missing {key}")
        try:
            values.append(Fraction(str(data[key])))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"cost for {key} is not a rational: {data[key]!r}") from None
    extra = set(data) - {f"x{v}" for v in range(n)}
    if extra:
        raise ParseError(f"cost file has unknown keys: {sorted(extra)}")
    return CostVector(tuple(values))


def cost_json(costs: CostVector) -> dict:
    return {f"x{v}": str(c) for v, c in enumerate(costs.values)}


# ---------------------------------------------------------------------------
# literals and DNF terms


@dataclass(frozen=True, order=True)
class Literal:
    variable: int
    negated: bool = False

    def __invert__(self) -> "Literal":
        return Literal(self.variable, not self.negated)

    @property
    def value_when_true(self) -> int:
        """The variable value that makes this literal 1."""
        return 0 if self.negated else 1

    def text(self) -> str:
        return ("!" if self.negated else "") + f"x{self.variable}"

    def __repr__(self):
        return self.text()


def term_text(term: frozenset) -> str:
    return " & ".join(lit.text() for lit in sorted(term))


@dataclass(frozen=True)
class Dnf:
    """A disjunction of terms, each a conjunction of literals over n variables."""

    n: int
    terms: tuple[frozenset, ...]

    def __post_init__(self):
        if not self.terms:
            raise ValueError("a DNF needs at least one term")
        for term in self.terms:
            if not term:
                raise ValueError("empty term in DNF")
            seen = set()
            for lit in term:
                if not 0 <= lit.variable < self.n:
                    raise ValueError(f"literal {lit.text()} out of range for n={self.n}")
                if lit.variable in seen:
                    raise ValueError(f"variable x{lit.variable} appears twice in one term")
                seen.add(lit.variable)

    def function(self) -> "BooleanFunction":
        idx = np.arange(1 << self.n, dtype=np.int64)
        table = np.zeros(1 << self.n, dtype=bool)
        for term in self.terms:
            hit = np.ones(1 << self.n, dtype=bool)
            for lit in term:
                hit &= ((idx >> lit.variable) & 1) == lit.value_when_true
            table |= hit
        return BooleanFunction(table)

    def variables(self) -> frozenset[int]:
        return frozenset(lit.variable for term in self.terms for lit in term)

    def text(self) -> str:
        return " | ".join(term_text(t) for t in self.terms)


_TOKEN = re.compile(r"\s*(!?x\d+|[|&]|\S)")


def parse_dnf(text: str, n: int | None = None) -> Dnf:
    """Parse ``x1 & !x2 | x3`` style DNF text.

    Terms are separated by ``|`` and literals inside a term by ``&``.
    Variable count defaults to one past the largest index seen.
    """
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        tokens.append(m.group(1))
        pos = m.end()
    if not tokens:
        raise ParseError("empty DNF")
    terms: list[frozenset] = []
    current: list[Literal] = []
    expect_literal = True
    for i, tok in enumerate(tokens, start=1):
        if expect_literal:
            m = re.fullmatch(r"(!?)x(\d+)", tok)
            if m is None:
                raise ParseError(f"expected literal, found {tok!r}", token=i)
            current.append(Literal(int(m.group(2)), negated=bool(m.group(1))))
            expect_literal = False
        else:
            if tok == "&":
                expect_literal = True
            elif tok == "|":
                terms.append(frozenset(current))
                current = []
                expect_literal = True
            else:
                raise ParseError(f"expected '&' or '|', found {tok!r}", token=i)
    if expect_literal:
        raise ParseError("expected literal", token=len(tokens) + 1)
    terms.append(frozenset(current))
    if n is None:
        n = 1 + max(lit.variable for t in terms for lit in t)
    try:
        return Dnf(n, tuple(terms))
    except ValueError as e:
        raise ParseError(str(e)) from None


# ---------------------------------------------------------------------------
# truth tables


class Restriction(NamedTuple):
    function: "BooleanFunction"
    variables: tuple[int, ...]  # variables[i] = original index of new variable i


class BooleanFunction:
    """An n-variable Boolean function as an immutable truth table."""

    __slots__ = ("n", "table", "_key")

    def __init__(self, table, n: int | None = None):
        arr = np.array(table, dtype=bool).ravel()
        size = arr.size
        if size == 0 or size & (size - 1):
            raise ValueError("truth table length must be a power of two")
        bits = size.bit_length() - 1
        if n is not None and n != bits:
            raise ValueError(f"table of length {size} does not match n={n}")
        if bits > TABLE_CAP:
            raise CapExceeded(f"instance too large: n={bits} exceeds table cap {TABLE_CAP}")
        arr.setflags(write=False)
        self.n = bits
        self.table = arr
        self._key = (bits, arr.tobytes())

    @classmethod
    def constant(cls, n: int, value: int) -> "BooleanFunction":
        return cls(np.full(1 << n, bool(value)))

    @classmethod
    def from_bits(cls, bits: str | Sequence[int]) -> "BooleanFunction":
        return cls([int(b) for b in bits])

    def key(self) -> tuple[int, bytes]:
        return self._key

    def __eq__(self, other):
        return isinstance(other, BooleanFunction) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        if self.n <= 5:
            bits = "".join(str(int(b)) for b in self.table)
            return f"BooleanFunction({self.n}; {bits})"
        return f"BooleanFunction(n={self.n})"

    def value_at(self, index: int) -> int:
        return int(self.table[index])

    def evaluate(self, assignment: PartialAssignment) -> int:
        if assignment.n != self.n:
            raise ValueError("assignment is over a different variable count")
        if not assignment.is_full:
            raise PricedBoolError("incomplete assignment: bind every variable or use is_determined")
        return int(self.table[assignment.bits])

    def is_constant(self) -> Optional[int]:
        if self.table.all():
            return 1
        if not self.table.any():
            return 0
        return None

    def is_determined(self, assignment: PartialAssignment) -> Optional[int]:
        """The forced value of f under the partial assignment, or None."""
        if assignment.n != self.n:
            raise ValueError("assignment is over a different variable count")
        if assignment.is_full:
            return int(self.table[assignment.bits])
        sub = self.table[assignment.bits + _free_offsets(self.n, assignment.mask)]
        first = bool(sub[0])
        if ((sub == first).all()):
            return int(first)
        return None

    def restrict(self, assignment: PartialAssignment) -> Restriction:
        """The function induced on the unbound variables, with the index map back."""
        if assignment.n != self.n:
            raise ValueError("assignment is over a different variable count")
        if assignment.is_empty:
            raise ValueError("empty restriction: binding nothing changes nothing")
        if assignment.is_full:
            raise ValueError("full restriction: use evaluate")
        table = self.table[assignment.bits + _free_offsets(self.n, assignment.mask)]
        kept = tuple(v for v in range(self.n) if not assignment.mask >> v & 1)
        return Restriction(BooleanFunction(table), kept)

    def is_monotone(self) -> bool:
        idx = np.arange(1 << self.n, dtype=np.int64)
        for v in range(self.n):
            low = (idx >> v & 1) == 0
            if (self.table[idx[low]] > self.table[idx[low] | 1 << v]).any():
                return False
        return True


@lru_cache(maxsize=None)
def _free_offsets(n: int, bound_mask: int) -> np.ndarray:
    """Flat table offsets of the subcube where the bound variables are zero."""
    free = [v for v in range(n) if not bound_mask >> v & 1]
    r = np.arange(1 << len(free), dtype=np.int64)
    idx = np.zeros_like(r)
    for t, pos in enumerate(free):
        idx |= ((r >> t) & 1) << pos
    return idx


def _group_index(n: int, mask: int) -> np.ndarray:
    """For every assignment index, the values of the masked variables, packed."""
    if n <= 10:
        return _group_index_cached(n, mask)
    return _group_index_raw(n, mask)


@lru_cache(maxsize=None)
def _group_index_cached(n: int, mask: int) -> np.ndarray:
    return _group_index_raw(n, mask)


def _group_index_raw(n: int, mask: int) -> np.ndarray:
    idx = np.arange(1 << n, dtype=np.int64)
    out = np.zeros_like(idx)
    t = 0
    for v in range(n):
        if mask >> v & 1:
            out |= ((idx >> v) & 1) << t
            t += 1
    return out


def _mask_vars(mask: int) -> list[int]:
    return [v for v in range(mask.bit_length()) if mask >> v & 1]


def _restriction_view(f: BooleanFunction, mask: int) -> np.ndarray:
    """Sub-tables of f, one row per value-combo of the masked variables.

    Row combo bit t is the value of the t-th masked variable in
    increasing variable order; each row is the table of the induced
    function on the free variables, again in increasing variable order.
    """
    n = f.n
    variables = _mask_vars(mask)
    k = len(variables)
    arr = f.table.reshape((2,) * n)
    axes = [n - 1 - v for v in reversed(variables)]
    return np.moveaxis(arr, axes, range(k)).reshape(1 << k, -1)


def _det_arrays(f: BooleanFunction, mask: int) -> tuple[np.ndarray, np.ndarray]:
    """Per value-combo of the masked variables: is f constant, and its value."""
    if mask == 0:
        c = f.is_constant()
        return np.array([c is not None]), np.array([bool(c)])
    view = _restriction_view(f, mask)
    const = (view == view[:, :1]).all(axis=1)
    return const, view[:, 0].copy()


def _drop_bit_index(k: int, pos: int) -> np.ndarray:
    """Map each k-bit combo to the (k-1)-bit combo with bit `pos` removed."""
    i = np.arange(1 << k, dtype=np.int64)
    return (i & ((1 << pos) - 1)) | ((i >> (pos + 1)) << pos)


def _sweep_minimal(f: BooleanFunction, select: Callable[[np.ndarray, np.ndarray], np.ndarray]):
    """Yield (mask, combo flags) for combos minimal under the selection.

    ``select(const, value)`` marks the eligible combos of each variable
    mask; a combo is minimal when no single-variable removal stays
    eligible.  Masks are visited in increasing popcount order.
    """
    n = f.n
    eligible: dict[int, np.ndarray] = {}
    masks = sorted(range(1 << n), key=lambda m: (m.bit_count(), m))
    for mask in masks:
        const, val = _det_arrays(f, mask)
        sel = select(const, val)
        eligible[mask] = sel
        if not sel.any():
            continue
        minimal = sel.copy()
        variables = _mask_vars(mask)
        k = len(variables)
        for pos, v in enumerate(variables):
            sub = eligible[mask ^ (1 << v)]
            minimal &= ~sub[_drop_bit_index(k, pos)]
            if not minimal.any():
                break
        if minimal.any():
            yield mask, minimal


def _combo_assignment(n: int, mask: int, combo: int) -> PartialAssignment:
    bits = 0
    for t, v in enumerate(_mask_vars(mask)):
        bits |= ((combo >> t) & 1) << v
    return PartialAssignment(n, mask, bits)


# ---------------------------------------------------------------------------
# proofs


@dataclass(frozen=True)
class Proof:
    """A set of variables whose values under the witness force f."""

    variables: frozenset[int]
    witness: PartialAssignment

    def check(self, f: BooleanFunction) -> bool:
        part = self.witness.restrict_to(self.variables)
        if part.size != len(self.variables):
            return False
        if f.is_determined(part) is None:
            return False
        for v in self.variables:
            trimmed = part.restrict_to(self.variables - {v})
            if f.is_determined(trimmed) is not None:
                return False
        return True


def enumerate_proofs(f: BooleanFunction, cap: int = PROOF_ENUM_CAP) -> tuple[Proof, ...]:
    """All proofs of f: minimal variable sets with a forcing witness.

    A constant function has exactly one proof, the empty one.
    """
    _require_cap(f.n, cap, "proof enumeration")
    out = []
    for mask, flags in _sweep_minimal(f, lambda const, val: const.copy()):
        variables = frozenset(_mask_vars(mask))
        for combo in np.flatnonzero(flags):
            out.append(Proof(variables, _combo_assignment(f.n, mask, int(combo))))
    return tuple(out)


def proof_variable_sets(f: BooleanFunction, cap: int = PROOF_ENUM_CAP) -> tuple[frozenset, ...]:
    """The deduplicated variable sets of all proofs, sorted by size then mask."""
    _require_cap(f.n, cap, "proof enumeration")
    masks = [mask for mask, _ in _sweep_minimal(f, lambda const, val: const.copy())]
    return tuple(frozenset(_mask_vars(m)) for m in masks)


def max_proof_size(f: BooleanFunction, cap: int = PROOF_ENUM_CAP) -> int:
    """The largest proof size; 0 exactly for constant functions."""
    _require_cap(f.n, cap, "proof enumeration")
    best = 0
    for mask, _ in _sweep_minimal(f, lambda const, val: const.copy()):
        best = max(best, mask.bit_count())
    return best


def minimal_witness_domains(f: BooleanFunction, cap: int = PROOF_ENUM_CAP) -> tuple[int, ...]:
    """Minimal variable masks that admit some forcing witness.

    These are the inclusion-minimal proof variable sets; supersets are
    redundant as covering constraints since their row sums dominate.
    """
    _require_cap(f.n, cap, "proof enumeration")
    n = f.n
    ok: dict[int, bool] = {}
    out = []
    for mask in sorted(range(1 << n), key=lambda m: (m.bit_count(), m)):
        const, _ = _det_arrays(f, mask)
        ok[mask] = bool(const.any())
        if ok[mask] and all(not ok[mask ^ (1 << v)] for v in _mask_vars(mask)):
            out.append(mask)
    return tuple(out)


# ---------------------------------------------------------------------------
# minterms and maxterms


def minterms(f: BooleanFunction, cap: int = PROOF_ENUM_CAP) -> tuple[frozenset, ...]:
    """Minimal literal sets that force f to 1 when all are made true."""
    _require_cap(f.n, cap, "certificate enumeration")
    if f.is_constant() is not None:
        raise ConstantFunctionError(f"constant function (value {f.is_constant()}) has no certificates")
    out = []
    for mask, flags in _sweep_minimal(f, lambda const, val: const & val):
        variables = _mask_vars(mask)
        for combo in np.flatnonzero(flags):
            out.append(frozenset(
                Literal(v, negated=not (int(combo) >> t & 1))
                for t, v in enumerate(variables)))
    return tuple(out)


def maxterms(f: BooleanFunction, cap: int = PROOF_ENUM_CAP) -> tuple[frozenset, ...]:
    """Minimal literal sets that force f to 0 when all are made false."""
    _require_cap(f.n, cap, "certificate enumeration")
    if f.is_constant() is not None:
        raise ConstantFunctionError(f"constant function (value {f.is_constant()}) has no certificates")
    out = []
    for mask, flags in _sweep_minimal(f, lambda const, val: const & ~val):
        variables = _mask_vars(mask)
        for combo in np.flatnonzero(flags):
            # literal is made false: variable value 1 means the literal was negated
            out.append(frozenset(
                Literal(v, negated=bool(int(combo) >> t & 1))
                for t, v in enumerate(variables)))
    return tuple(out)


def literal_set_key(term: Iterable[Literal]) -> tuple:
    return tuple(sorted((lit.variable, lit.negated) for lit in term))


def crossing_certificate(f: BooleanFunction, certificate: Iterable, variable: int,
                         certificate_kind: str = "minterm") -> frozenset:
    """For monotone f, the opposite-side certificate meeting the given one only at `variable`.

    Certificates of a monotone function carry positive literals only, so
    plain variable sets are accepted too.  The lexicographically least
    qualifying certificate is returned as a set of literals.
    """
    if not f.is_monotone():
        raise PricedBoolError("crossing certificates require a monotone function")
    cert_vars = set()
    for item in certificate:
        if isinstance(item, Literal):
            if item.negated:
                raise PricedBoolError("monotone certificates cannot contain negated literals")
            cert_vars.add(item.variable)
        else:
            cert_vars.add(int(item))
    if variable not in cert_vars:
        raise ValueError(f"x{variable} is not in the given certificate")
    if certificate_kind == "minterm":
        own, other = minterms(f), maxterms(f)
    elif certificate_kind == "maxterm":
        own, other = maxterms(f), minterms(f)
    else:
        raise ValueError("certificate_kind must be 'minterm' or 'maxterm'")
    if frozenset(Literal(v) for v in cert_vars) not in own:
        raise ValueError(f"the given set is not a {certificate_kind} of f")
    candidates = [c for c in other
                  if {lit.variable for lit in c} & cert_vars == {variable}]
    if not candidates:
        raise PricedBoolError("no crossing certificate found")
    return min(candidates, key=literal_set_key)


# ---------------------------------------------------------------------------
# cheapest proofs


def _subset_costs(n: int, costs: CostVector) -> list[Fraction]:
    total = [Fraction(0)] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        total[mask] = total[mask ^ low] + costs.values[low.bit_length() - 1]
    return total


def _subset_order(n: int, costs: CostVector) -> list[int]:
    total = _subset_costs(n, costs)
    return sorted(range(1 << n), key=lambda m: (total[m], m.bit_count(), m))


def cheapest_proof(f: BooleanFunction, assignment: PartialAssignment,
                   costs: CostVector, cap: int = SEARCH_CAP) -> tuple[Proof, Fraction]:
    """The cheapest proof consistent with a full assignment.

    Scans variable subsets in nondecreasing cost order and minimalizes the
    first hit by dropping removable variables in ascending index order
    (only zero-cost variables can ever be removable).
    """
    _require_cap(f.n, cap, "cheapest-proof search")
    if not assignment.is_full:
        raise PricedBoolError("incomplete assignment: cheapest_proof needs every value")
    total = _subset_costs(f.n, costs)
    for mask in sorted(range(1 << f.n), key=lambda m: (total[m], m.bit_count(), m)):
        part = PartialAssignment(f.n, mask, assignment.bits & mask)
        if f.is_determined(part) is None:
            continue
        keep = mask
        for v in _mask_vars(mask):
            trimmed = keep ^ (1 << v)
            if f.is_determined(PartialAssignment(f.n, trimmed, assignment.bits & trimmed)) is not None:
                keep = trimmed
        part = PartialAssignment(f.n, keep, assignment.bits & keep)
        return Proof(frozenset(_mask_vars(keep)), part), total[keep]
    raise PricedBoolError("unreachable: the full variable set always determines f")


def cheapest_proof_costs(f: BooleanFunction, costs: CostVector,
                         cap: int = SEARCH_CAP) -> list[Fraction]:
    """Cheapest proof cost for every assignment index at once."""
    _require_cap(f.n, cap, "cheapest-proof search")
    n = f.n
    size = 1 << n
    out: list[Optional[Fraction]] = [None] * size
    remaining = size
    total = _subset_costs(n, costs)
    for mask in sorted(range(size), key=lambda m: (total[m], m.bit_count(), m)):
        const, _ = _det_arrays(f, mask)
        if not const.any():
            continue
        decided = const[_group_index(n, mask)]
        for idx in np.flatnonzero(decided):
            if out[idx] is None:
                out[idx] = total[mask]
                remaining -= 1
        if remaining == 0:
            break
    return out  # type: ignore[return-value]


# ---------------------------------------------------------------------------
# named functions and generators


def parity(n: int) -> BooleanFunction:
    idx = np.arange(1 << n, dtype=np.int64)
    ones = np.zeros(1 << n, dtype=np.int64)
    for v in range(n):
        ones += (idx >> v) & 1
    return BooleanFunction((ones & 1).astype(bool))


def majority(n: int) -> BooleanFunction:
    idx = np.arange(1 << n, dtype=np.int64)
    ones = np.zeros(1 << n, dtype=np.int64)
    for v in range(n):
        ones += (idx >> v) & 1
    return BooleanFunction(ones * 2 > n)


def random_function(rng, n: int, nonconstant: bool = True) -> BooleanFunction:
    while True:
        bits = [rng.randint(0, 1) for _ in range(1 << n)]
        f = BooleanFunction(bits)
        if not nonconstant or f.is_constant() is None:
            return f


# ---------------------------------------------------------------------------
# file formats


def table_to_text(f: BooleanFunction) -> str:
    """Two lines: the variable count, then the 2**n table bits packed as hex.

    Bit b of the hex integer is the table entry at assignment index b.
    """
    value = 0
    for b in np.flatnonzero(f.table):
        value |= 1 << int(b)
    width = max(1, (1 << f.n) + 3 >> 2)
    return f"{f.n}\n{value:0{width}x}\n"


def parse_table_text(text: str) -> BooleanFunction:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) != 2:
        raise ParseError("truth-table input needs two lines: n, then hex bits")
    try:
        n = int(lines[0])
    except ValueError:
        raise ParseError(f"bad variable count: {lines[0]!r}") from None
    if not 1 <= n <= TABLE_CAP:
        raise ParseError(f"variable count {n} out of range 1..{TABLE_CAP}")
    try:
        value = int(lines[1], 16)
    except ValueError:
        raise ParseError("table bits are not hex") from None
    if value >> (1 << n):
        raise ParseError(f"table has more than 2**{n} bits")
    table = [(value >> b) & 1 for b in range(1 << n)]
    return BooleanFunction(table)


def looks_like_table_text(text: str) -> bool:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    return len(lines) == 2 and lines[0].isdigit()
