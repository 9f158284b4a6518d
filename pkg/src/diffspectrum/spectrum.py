"""Whole-field analysis of the derivative equation x^d + (x+1)^d = b.

This module provides the exhaustive oracle (a vectorised single pass over
all of GF(2^(4n)) tallying solutions per b), the closed-form solution-count
histogram, enumeration of the two-solution family, differential-table rows
for arbitrary nonzero a, and a verifier that cross-checks the constructive
solver against the oracle element by element.

Exhaustive passes are capped at fields of ``DEFAULT_BRUTEFORCE_BITS`` bits
(override with the ``GF2_MAX_BRUTEFORCE_BITS`` environment variable); the
closed-form histogram has no cap.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dataclass_field
from typing import Dict, Iterator, List, Tuple

import numpy as np

from .errors import (
    FieldTooLarge,
    InternalDegenerate,
    OutOfRange,
    PreconditionViolated,
    ZeroElement,
)
from .field import Element, Field
from .solver import (
    CASE_GENERIC_TWO,
    classify,
    solve,
    verify_solution,
)

__all__ = [
    "DEFAULT_BRUTEFORCE_BITS",
    "ENV_BRUTEFORCE_BITS",
    "METHOD_BRUTEFORCE",
    "METHOD_FORMULA",
    "SpectrumHistogram",
    "VerificationReport",
    "bruteforce_cap_bits",
    "bruteforce_counts",
    "bruteforce_histogram",
    "ddt_row",
    "eval_derivative",
    "formula_histogram",
    "s2_enumerate",
    "s2_members",
    "verify_conjecture",
]

METHOD_FORMULA = "formula"
METHOD_BRUTEFORCE = "bruteforce"

DEFAULT_BRUTEFORCE_BITS = 24
ENV_BRUTEFORCE_BITS = "GF2_MAX_BRUTEFORCE_BITS"


def bruteforce_cap_bits() -> int:
    """Current exhaustive-pass cap in bits (env override included)."""
    raw = os.environ.get(ENV_BRUTEFORCE_BITS)
    if raw is None:
        return DEFAULT_BRUTEFORCE_BITS
    try:
        return int(raw)
    except ValueError:
        raise OutOfRange(
            f"{ENV_BRUTEFORCE_BITS} must be an integer, got {raw!r}"
        ) from None


def _require_within_cap(field: Field, what: str) -> None:
    cap = bruteforce_cap_bits()
    if field.degree > cap:
        raise FieldTooLarge(
            f"{what} over GF(2^{field.degree}) exceeds the {cap}-bit cap; "
            f"set {ENV_BRUTEFORCE_BITS} to raise it"
        )


def eval_derivative(field: Field, x: Element) -> Element:
    """x^d + (x+1)^d, the quantity whose level sets the histogram counts."""
    d = field.d
    return field.pow(x, d) ^ field.pow(x ^ 1, d)


# ---------------------------------------------------------------------
# Vectorised field sweep.
# ---------------------------------------------------------------------

_EXP_BLOCK = 1 << 12


def _vec_mul_const(arr: np.ndarray, c: int, field: Field) -> np.ndarray:
    """Carry-less multiply every entry of arr by the constant c, reduced.

    Products of two degree-<m polynomials fit in 2m-1 <= 47 bits, so the
    accumulation runs in int64; reduction clears the high bits one at a
    time with the modulus.
    """
    m, modulus = field.degree, field.modulus
    a = arr.astype(np.int64)
    acc = np.zeros(arr.shape, dtype=np.int64)
    shift = 0
    while c:
        if c & 1:
            acc ^= a << shift
        c >>= 1
        shift += 1
    for k in range(2 * m - 2, m - 1, -1):
        acc ^= ((acc >> k) & 1) * (modulus << (k - m))
    return acc.astype(np.uint32)


def _exp_array(field: Field) -> np.ndarray:
    """numpy exponential table: exp[i] = g^i for the primitive g.

    The first block is filled scalar-by-scalar; every later block is the
    previous block times g^block, computed vectorised, so the build costs
    one full-array constant multiply regardless of field size.
    """
    order = field.group_order
    g = field.primitive_element()
    exp = np.zeros(order, dtype=np.uint32)
    block = min(order, _EXP_BLOCK)
    e = 1
    for i in range(block):
        exp[i] = e
        e = field.mul(e, g)
    g_block = e  # g^block
    filled = block
    while filled < order:
        nxt = min(filled + block, order)
        exp[filled:nxt] = _vec_mul_const(
            exp[filled - block : nxt - block], g_block, field
        )
        filled = nxt
    return exp


def _power_map(field: Field, exponent: int) -> np.ndarray:
    """Array P with P[x] = x^exponent for every field element x."""
    order = field.group_order
    exp = _exp_array(field)
    table = np.zeros(1 << field.degree, dtype=np.uint32)
    indices = np.arange(order, dtype=np.int64)
    table[exp] = exp[(exponent % order) * indices % order]
    return table


def _chunk_ranges(total: int, workers: int) -> List[Tuple[int, int]]:
    step = -(-total // max(1, workers))
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def bruteforce_counts(field: Field, workers: int = 1) -> np.ndarray:
    """Per-b solution tally of x^d + (x+1)^d = b over the whole field.

    Returns an integer array of length 2^(4n) indexed by b.  The tally is
    a sum of per-chunk bincounts, so the result is identical for every
    worker count.
    """
    _require_within_cap(field, "exhaustive tally")
    size = 1 << field.degree
    power = _power_map(field, field.d)

    def tally(bounds: Tuple[int, int]) -> np.ndarray:
        lo, hi = bounds
        xs = np.arange(lo, hi, dtype=np.int64)
        values = power[xs] ^ power[xs ^ 1]
        return np.bincount(values, minlength=size)

    if workers <= 1:
        return tally((0, size))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(tally, _chunk_ranges(size, workers)))
    return np.sum(parts, axis=0)


# ---------------------------------------------------------------------
# Histograms.
# ---------------------------------------------------------------------


@dataclass(frozen=True)
class SpectrumHistogram:
    """Map from solution count to the number of b values attaining it.

    Both mass invariants are enforced on construction: multiplicities sum
    to q^4 (every b appears once) and count-weighted multiplicities sum to
    q^4 (every x solves the equation for exactly one b).
    """

    n: int
    method: str
    entries: Dict[int, int]

    def __post_init__(self) -> None:
        size = 1 << (4 * self.n)
        total_b = sum(self.entries.values())
        total_x = sum(count * mult for count, mult in self.entries.items())
        if total_b != size or total_x != size:
            raise PreconditionViolated(
                f"histogram mass invariants violated: sum of multiplicities "
                f"{total_b} and weighted sum {total_x} must both equal {size}"
            )
        object.__setattr__(
            self,
            "entries",
            {count: self.entries[count] for count in sorted(self.entries, reverse=True)},
        )

    def as_dict(self) -> Dict[str, object]:
        return {
            "n": self.n,
            "method": self.method,
            "entries": {str(count): mult for count, mult in self.entries.items()},
        }

    def to_json(self) -> str:
        """JSON object with entries keyed by count, descending."""
        return json.dumps(self.as_dict())

    def to_csv(self) -> str:
        """CSV rows `count,multiplicity`, descending by count."""
        lines = ["count,multiplicity"]
        lines += [f"{count},{mult}" for count, mult in self.entries.items()]
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        """Compact one-line rendering like {4:1,2:6,0:9}."""
        body = ",".join(f"{count}:{mult}" for count, mult in self.entries.items())
        return "{" + body + "}"


def _histogram_from_counts(
    field: Field, counts: np.ndarray, method: str
) -> SpectrumHistogram:
    tallies = np.bincount(counts)
    entries = {
        int(count): int(mult) for count, mult in enumerate(tallies) if mult > 0
    }
    return SpectrumHistogram(n=field.n, method=method, entries=entries)


def bruteforce_histogram(field: Field, workers: int = 1) -> SpectrumHistogram:
    """Histogram of per-b solution counts from the exhaustive sweep."""
    counts = bruteforce_counts(field, workers=workers)
    return _histogram_from_counts(field, counts, METHOD_BRUTEFORCE)


def formula_histogram(n: int) -> SpectrumHistogram:
    """The predicted histogram, directly from the classification counts.

    One b (namely 1) attains q^2; the q elements of mu_{q+1} minus 1
    attain q^2 - q; q^3(q-1)/2 elements attain 2; everything else attains
    0.  Colliding count keys merge additively (at n=1 the q^2 - q = 2
    family collides with the two-solution family).
    """
    if n < 1:
        raise OutOfRange(f"n must be a positive integer, got {n}")
    q = 1 << n
    s2_count = q**3 * (q - 1) // 2
    zero_count = q**4 - 1 - q - s2_count
    entries: Dict[int, int] = {}
    for count, mult in ((q**2, 1), (q**2 - q, q), (2, s2_count), (0, zero_count)):
        entries[count] = entries.get(count, 0) + mult
    return SpectrumHistogram(n=n, method=METHOD_FORMULA, entries=entries)


# ---------------------------------------------------------------------
# Two-solution family enumeration.
# ---------------------------------------------------------------------


def s2_members(field: Field) -> Iterator[Element]:
    """Yield every b with exactly two solutions, in ascending order."""
    _require_within_cap(field, "two-solution family enumeration")
    from .solver import is_in_s2

    for b in range(1 << field.degree):
        if is_in_s2(field, b):
            yield b


def s2_enumerate(field: Field) -> Tuple[int, Tuple[Element, ...]]:
    """(count, members) of the two-solution family, one full scan."""
    members = tuple(s2_members(field))
    return len(members), members


# ---------------------------------------------------------------------
# Differential-table rows.
# ---------------------------------------------------------------------


def ddt_row(
    field: Field, a: Element, method: str = METHOD_FORMULA, workers: int = 1
) -> np.ndarray:
    """Per-b solution counts of x^d + (x+a)^d = b, as an array indexed by b.

    The substitution y = x/a turns the equation into y^d + (y+1)^d =
    b/a^d, so the a-row is the a=1 row relabelled by b -> a^d * b.  The
    formula path classifies every b once and applies the relabelling; the
    bruteforce path tallies the derivative directly.  Both paths agree.
    """
    if a == 0:
        raise ZeroElement("differential rows are defined for nonzero a only")
    if not 0 < a < (1 << field.degree):
        raise OutOfRange(f"a = {a:#x} is outside the field")
    if method not in (METHOD_FORMULA, METHOD_BRUTEFORCE):
        raise OutOfRange(f"unknown ddt_row method {method!r}")
    _require_within_cap(field, "differential-table row")
    size = 1 << field.degree
    if method == METHOD_BRUTEFORCE:
        power = _power_map(field, field.d)

        def tally(bounds: Tuple[int, int]) -> np.ndarray:
            lo, hi = bounds
            xs = np.arange(lo, hi, dtype=np.int64)
            values = power[xs] ^ power[xs ^ a]
            return np.bincount(values, minlength=size)

        if workers <= 1:
            return tally((0, size))
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(tally, _chunk_ranges(size, workers)))
        return np.sum(parts, axis=0)

    row_one = np.zeros(size, dtype=np.int64)
    for b in range(size):
        row_one[b] = classify(field, b).predicted_count
    scale = field.pow(a, field.d)
    positions = _vec_mul_const(np.arange(size, dtype=np.uint32), scale, field)
    row = np.zeros(size, dtype=np.int64)
    row[positions] = row_one
    return row


# ---------------------------------------------------------------------
# The verifier.
# ---------------------------------------------------------------------


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of the exhaustive solver-vs-oracle cross-check.

    ``mismatches`` groups failures by case tag (plus the synthetic tag
    ``root_verification`` for solutions that do not satisfy the equation
    when re-checked); a clean run has every list empty, equal histograms,
    and matching two-solution-family counts, summarised in ``passed``.
    """

    n: int
    modulus: int
    formula_histogram: SpectrumHistogram
    bruteforce_histogram: SpectrumHistogram
    mismatches: Dict[str, List[dict]]
    s2_formula_count: int
    s2_enumerated_count: int
    elapsed: Dict[str, float] = dataclass_field(repr=False, default_factory=dict)

    @property
    def passed(self) -> bool:
        return (
            not any(self.mismatches.values())
            and self.s2_formula_count == self.s2_enumerated_count
            and self.formula_histogram.entries == self.bruteforce_histogram.entries
        )

    def as_dict(self, include_timings: bool = False) -> Dict[str, object]:
        payload: Dict[str, object] = {
            "pass": self.passed,
            "n": self.n,
            "modulus": format(self.modulus, "#x"),
            "formula_histogram": self.formula_histogram.as_dict(),
            "bruteforce_histogram": self.bruteforce_histogram.as_dict(),
            "mismatches": {
                tag: rows for tag, rows in sorted(self.mismatches.items())
            },
            "s2_formula_count": self.s2_formula_count,
            "s2_enumerated_count": self.s2_enumerated_count,
        }
        if include_timings:
            payload["elapsed_seconds"] = dict(self.elapsed)
        return payload

    def to_json(self, include_timings: bool = False) -> str:
        """JSON with a top-level "pass"; timings off by default so output
        is byte-identical across runs and worker counts."""
        return json.dumps(self.as_dict(include_timings=include_timings), indent=2)


def _check_range(
    field: Field, counts: np.ndarray, bounds: Tuple[int, int]
) -> Tuple[Dict[str, List[dict]], int]:
    """Classify, solve, and re-verify every b in [lo, hi) against the tally."""
    lo, hi = bounds
    mismatches: Dict[str, List[dict]] = {}
    s2_seen = 0

    def record(tag: str, row: dict) -> None:
        mismatches.setdefault(tag, []).append(row)

    for b in range(lo, hi):
        classification = classify(field, b)
        if classification.case == CASE_GENERIC_TWO:
            s2_seen += 1
        actual = int(counts[b])
        if classification.predicted_count != actual:
            record(
                classification.case,
                {
                    "b": field.encode_hex(b),
                    "predicted": classification.predicted_count,
                    "actual": actual,
                },
            )
            continue
        try:
            _, solutions = solve(field, b)
        except InternalDegenerate as exc:
            record(
                classification.case,
                {"b": field.encode_hex(b), "error": str(exc)},
            )
            continue
        if len(solutions) != actual:
            record(
                classification.case,
                {
                    "b": field.encode_hex(b),
                    "predicted": actual,
                    "actual": len(solutions),
                },
            )
        for x in solutions:
            if not verify_solution(field, x, b):
                record(
                    "root_verification",
                    {"b": field.encode_hex(b), "x": field.encode_hex(x)},
                )
    return mismatches, s2_seen


def verify_conjecture(field: Field, workers: int = 1) -> VerificationReport:
    """Exhaustively cross-check the solver against the brute-force oracle.

    Four phases: the vectorised tally, the closed-form histogram, a per-b
    classify/solve/re-verify pass, and the two-solution-family count
    comparison.  Chunk results merge in index order, so the report is
    independent of the worker count.
    """
    _require_within_cap(field, "exhaustive verification")
    size = 1 << field.degree
    elapsed: Dict[str, float] = {}

    start = time.perf_counter()
    counts = bruteforce_counts(field, workers=workers)
    brute = _histogram_from_counts(field, counts, METHOD_BRUTEFORCE)
    elapsed["bruteforce"] = time.perf_counter() - start

    start = time.perf_counter()
    formula = formula_histogram(field.n)
    elapsed["formula"] = time.perf_counter() - start

    start = time.perf_counter()
    field.ensure_tables()
    ranges = _chunk_ranges(size, workers)
    if workers <= 1:
        partials = [_check_range(field, counts, ranges[0])]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partials = list(
                pool.map(lambda bounds: _check_range(field, counts, bounds), ranges)
            )
    mismatches: Dict[str, List[dict]] = {}
    s2_enumerated = 0
    for part, s2_part in partials:
        s2_enumerated += s2_part
        for tag, rows in part.items():
            mismatches.setdefault(tag, []).extend(rows)
    elapsed["per_b_check"] = time.perf_counter() - start

    q = field.q
    return VerificationReport(
        n=field.n,
        modulus=field.modulus,
        formula_histogram=formula,
        bruteforce_histogram=brute,
        mismatches=mismatches,
        s2_formula_count=q**3 * (q - 1) // 2,
        s2_enumerated_count=s2_enumerated,
        elapsed=elapsed,
    )
