"""Cumulative correlation measure (CCM).

For a state rho on n >= 2 qubits the measure is defined recursively over
bipartitions (A, B) of the register:

    C(rho) = min_(A,B) [ 2^(n-2) * D(rho, rho_A x rho_B) + C(rho_A) + C(rho_B) ]

with C = 0 on single qubits.  D is the relative entropy, which for the
product of a state's own marginals reduces to the mutual information
S(rho_A) + S(rho_B) - S(rho); the engine always evaluates it in that form.

`ccm` runs a dynamic program over all subsets of the register: each subset's
reduced entropy is computed once, and subset values are combined in ascending
size order, so every bipartition term costs three table lookups.  `ccm_naive`
is an intentionally independent re-implementation by literal recursion (fresh
reduced matrices at every level, no caching) kept as a cross-check oracle.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .entropy import DistanceUnit, mutual_information, von_neumann_entropy
from .errors import BadArity, InvalidBipartition, OutOfRange, TooLarge
from .states import DensityOperator, check_subset, full_mask, partial_trace

MAX_QUBITS_DP = 14
MAX_QUBITS_NAIVE = 6


@dataclass
class CcmStats:
    """Work counters for one `ccm` evaluation."""

    subsets_evaluated: int = 0
    entropies_computed: int = 0
    cache_hits: int = 0

    def to_dict(self) -> dict:
        return {
            "subsets_evaluated": self.subsets_evaluated,
            "entropies_computed": self.entropies_computed,
            "cache_hits": self.cache_hits,
        }


@dataclass
class CcmTreeNode:
    """Minimizing bipartition of one subset.

    `distance_term` already carries the 2^(m-2) weight of the subset's size m
    and is expressed in the report's unit.  Children of single-qubit blocks
    are None (their value is identically zero).
    """

    subset: int
    mask_a: int
    mask_b: int
    distance_term: float
    value: float
    left: "CcmTreeNode | None"
    right: "CcmTreeNode | None"

    def to_dict(self) -> dict:
        return {
            "subset": self.subset,
            "mask_a": self.mask_a,
            "mask_b": self.mask_b,
            "distance_term": self.distance_term,
            "value": self.value,
            "left": self.left.to_dict() if self.left is not None else None,
            "right": self.right.to_dict() if self.right is not None else None,
        }


@dataclass
class CcmReport:
    value: float
    unit: DistanceUnit
    tree: CcmTreeNode | None
    stats: CcmStats = field(default_factory=CcmStats)

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "unit": self.unit.value,
            "tree": self.tree.to_dict() if self.tree is not None else None,
            "stats": self.stats.to_dict(),
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def _ascending_submasks(rest: int):
    """All submasks of `rest` in ascending numeric order, including 0 and rest."""
    sub = 0
    while True:
        yield sub
        if sub == rest:
            return
        sub = (sub - rest) & rest


def ccm(rho: DensityOperator, unit: DistanceUnit = DistanceUnit.NORMALIZED) -> CcmReport:
    """Cumulative correlation measure of `rho`, with the minimizing tree.

    Bipartitions are canonicalized by keeping the subset's lowest qubit index
    in block A; ties in cost go to the numerically smallest A mask.
    """
    n = rho.num_qubits
    if n > MAX_QUBITS_DP:
        raise TooLarge(f"ccm supports at most {MAX_QUBITS_DP} qubits, got {n}")
    stats = CcmStats()
    if n == 1:
        stats.subsets_evaluated = 1
        return CcmReport(0.0, unit, None, stats)

    full = full_mask(n)
    entropy_bits: dict[int, float] = {}
    value_bits: dict[int, float] = {}
    best_a: dict[int, int] = {}
    best_dist_bits: dict[int, float] = {}  # weighted by 2^(m-2)

    for size in range(1, n + 1):
        weight = float(1 << (size - 2)) if size >= 2 else 0.0
        for qubits in itertools.combinations(range(n), size):
            mask = 0
            for q in qubits:
                mask |= 1 << q
            reduced = rho if mask == full else partial_trace(rho, mask)
            entropy_bits[mask] = von_neumann_entropy(reduced)
            stats.entropies_computed += 1
            stats.subsets_evaluated += 1
            if size == 1:
                value_bits[mask] = 0.0
                continue
            low = mask & -mask
            rest = mask ^ low
            h_s = entropy_bits[mask]
            best_cost = None
            for sub in _ascending_submasks(rest):
                if sub == rest:
                    continue  # block B may not be empty
                a = low | sub
                b = mask ^ a
                dist = entropy_bits[a] + entropy_bits[b] - h_s
                stats.cache_hits += 3
                if dist < 0.0:
                    dist = 0.0  # mutual information is non-negative; round-off only
                cost = weight * dist + value_bits[a] + value_bits[b]
                if best_cost is None or cost < best_cost:
                    best_cost = cost
                    best_a[mask] = a
                    best_dist_bits[mask] = weight * dist
            value_bits[mask] = best_cost

    scale = unit.factor

    def build(mask: int) -> CcmTreeNode | None:
        if mask & (mask - 1) == 0:  # single qubit
            return None
        a = best_a[mask]
        b = mask ^ a
        return CcmTreeNode(
            subset=mask,
            mask_a=a,
            mask_b=b,
            distance_term=best_dist_bits[mask] * scale,
            value=value_bits[mask] * scale,
            left=build(a),
            right=build(b),
        )

    return CcmReport(value_bits[full] * scale, unit, build(full), stats)


def ccm_naive(rho: DensityOperator, unit: DistanceUnit = DistanceUnit.NORMALIZED) -> float:
    """Reference evaluation of the measure by direct recursion.

    No memoization, no shared entropy table: reduced states are rebuilt at
    every level and their entropies recomputed.  Exponentially slower than
    `ccm` and capped at 6 qubits; exists to cross-check the dynamic program.
    """
    if rho.num_qubits > MAX_QUBITS_NAIVE:
        raise TooLarge(f"ccm_naive supports at most {MAX_QUBITS_NAIVE} qubits")

    def rec(r: DensityOperator) -> float:
        n = r.num_qubits
        if n == 1:
            return 0.0
        weight = float(1 << (n - 2))
        rest = full_mask(n) ^ 1
        h_full = von_neumann_entropy(r)
        best = None
        for sub in _ascending_submasks(rest):
            if sub == rest:
                continue
            a = 1 | sub
            b = full_mask(n) ^ a
            ra = partial_trace(r, a)
            rb = partial_trace(r, b)
            dist = max(von_neumann_entropy(ra) + von_neumann_entropy(rb) - h_full, 0.0)
            cost = weight * dist + rec(ra) + rec(rb)
            if best is None or cost < best:
                best = cost
        return best

    return rec(rho) * unit.factor


def ccm_distance_term(rho: DensityOperator, part_a: int,
                      unit: DistanceUnit = DistanceUnit.NORMALIZED) -> float:
    """The weighted distance 2^(n-2) * D(rho, rho_A x rho_B) of one bipartition."""
    n = rho.num_qubits
    check_subset(part_a, n, allow_empty=True)
    if part_a == 0 or part_a == full_mask(n):
        raise InvalidBipartition("both blocks of a bipartition must be non-empty")
    return float(1 << (n - 2)) * mutual_information(rho, part_a, unit)


@lru_cache(maxsize=None)
def _ghz_value(x: Fraction, n: int, d: Fraction) -> Fraction:
    if n == 2:
        return x
    if n == 3:
        return 2 * x + d
    top = (1 << (n - 2)) * x
    if n % 2 == 0:
        return top + 2 * _ghz_value(d, n // 2, d)
    return top + _ghz_value(d, n // 2, d) + _ghz_value(d, n // 2 + 1, d)


def ghz_closed_form(num_qubits: int, d: float = 0.5) -> float:
    """CCM of the n-qubit GHZ state, in normalized units, evaluated exactly.

    The minimum always splits a block as evenly as possible; with D = 1 for
    the full GHZ state and d the distance of its dephased sub-blocks this
    telescopes to

        F(x, 2) = x
        F(x, 3) = 2x + d
        F(x, n) = 2^(n-2) x + 2 F(d, n/2)                      (n even)
        F(x, n) = 2^(n-2) x + F(d, (n-1)/2) + F(d, (n+1)/2)    (n odd)

    evaluated here in exact rational arithmetic before conversion to float.
    """
    if num_qubits < 2:
        raise BadArity("the closed form needs at least two qubits")
    if not d >= 0.0:
        raise OutOfRange(f"sub-block distance must be non-negative, got {d!r}")
    return float(_ghz_value(Fraction(1), num_qubits, Fraction(d)))
