"""Record scanning and structural checks for the run-padding transforms.

A record index n is one where the transform value beats every earlier value.
The scanner brute-forces a range; the structural side enumerates or tests the
characterized shapes (alternating binary strings, optionally with one doubled
zero) so the two code paths cross-validate each other.
"""

from dataclasses import dataclass

from .bitcore import runs, to_bitstring, to_nat
from .transforms import (
    APPEND,
    TransformSpec,
    append_transform,
    appended_bit_length,
    prepended_bit_length,
    transform_value,
)


@dataclass(frozen=True)
class RecordEntry:
    index: int
    value: int
    value_bits: int


@dataclass(frozen=True)
class ScanConfig:
    spec: TransformSpec
    limit: int
    chunk: int = 4096

    def __post_init__(self):
        if self.limit < 1:
            raise ValueError(f"limit must be >= 1, got {self.limit}")
        if self.chunk < 1:
            raise ValueError(f"chunk must be >= 1, got {self.chunk}")


def _bit_length_predictor(spec: TransformSpec):
    """Cheap exact output-bit-length formula, when one applies.

    Only valid for nonempty equal-length pads; a longer canonical output
    always encodes a larger value, so the scanner can skip most candidates
    without materializing them.
    """
    if len(spec.d0) != len(spec.d1) or not spec.d0:
        return None
    if spec.mode == APPEND:
        return lambda n: appended_bit_length(n, spec)
    return lambda n: prepended_bit_length(n, spec)


def _chunk_candidates(spec: TransformSpec, lo: int, hi: int, floor_bits: int):
    """Local record candidates over [lo, hi], seeded at floor_bits.

    Returns every n in the range whose value beats the chunk-local running
    maximum; a later merge pass re-filters against the global maximum, so
    the result set is independent of how the range was chunked.
    """
    predictor = _bit_length_predictor(spec)
    best = -1
    best_bits = floor_bits
    out = []
    for n in range(lo, hi + 1):
        if predictor is not None:
            nbits = predictor(n)
            if nbits < best_bits:
                continue
            value = transform_value(n, spec)
        else:
            value = transform_value(n, spec)
            nbits = value.bit_length()
        if value > best:
            best = value
            best_bits = nbits
            out.append(RecordEntry(n, value, nbits))
    return out


def scan_records(cfg: ScanConfig) -> list[RecordEntry]:
    """All record entries for n in [1, limit], in increasing order.

    The range is processed in chunks; each chunk yields local candidates and
    a sequential merge keeps only true global records.  Deterministic for
    any chunk size.
    """
    candidates: list[RecordEntry] = []
    lo = 1
    while lo <= cfg.limit:
        hi = min(lo + cfg.chunk - 1, cfg.limit)
        # floor_bits lets the predictor skip values already dominated
        floor = candidates[-1].value_bits if candidates else 0
        for entry in _chunk_candidates(cfg.spec, lo, hi, floor):
            if not candidates or entry.value > candidates[-1].value:
                candidates.append(entry)
        lo = hi + 1
    return candidates


def enumerate_record_shapes(count: int) -> list[int]:
    """First `count` integers whose binary form is alternating 10-style or
    alternating with exactly one 0 doubled, in increasing order.

    Generated structurally per bit length: the doubled-zero variants of the
    next-shorter alternating string, then the alternating string itself.
    Independent of has_record_shape by construction.
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    out: list[int] = []
    length = 1
    while len(out) < count:
        shorter = "".join("10"[i % 2] for i in range(length - 1))
        for i, ch in enumerate(shorter):
            if ch == "0":
                out.append(to_nat(shorter[: i + 1] + "0" + shorter[i + 1 :]))
        out.append(to_nat("".join("10"[i % 2] for i in range(length))))
        length += 1
    return out[:count]


def enumerate_record_shapes_upto(limit: int) -> list[int]:
    """All structurally enumerated record-shape integers <= limit."""
    out: list[int] = []
    count = 16
    while True:
        members = enumerate_record_shapes(count)
        if members[-1] > limit:
            return [m for m in members if m <= limit]
        count *= 2


def has_record_shape(n: int) -> bool:
    """True iff the binary form of n alternates 1,0,1,... with at most one
    0-run doubled to 00 (the record-index characterization)."""
    rs = runs(to_bitstring(n))
    doubled = 0
    for bit, length in rs:
        if bit == 1 and length != 1:
            return False
        if bit == 0:
            if length > 2:
                return False
            if length == 2:
                doubled += 1
    return doubled <= 1


def is_fibbinary(n: int) -> bool:
    """True iff the binary form of n has no two adjacent 1's."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return n & (n >> 1) == 0


def max_zero_run(n: int) -> int:
    """Length of the longest 0-run in the binary form of n (0 if none)."""
    return max((length for bit, length in runs(to_bitstring(n)) if bit == 0), default=0)


def double_zero_blocks(n: int) -> int:
    """Number of maximal 0-runs of length exactly 2 in the binary form of n."""
    return sum(1 for bit, length in runs(to_bitstring(n)) if bit == 0 and length == 2)


def has_record_value_shape(v: int) -> bool:
    """True iff the binary form of v alternates 11,00,11,... with at most one
    00 widened to 000 (the record-value characterization for pads "0","1")."""
    rs = runs(to_bitstring(v))
    widened = 0
    if rs[0][0] != 1:
        return False
    for bit, length in rs:
        if bit == 1 and length != 2:
            return False
        if bit == 0:
            if length not in (2, 3):
                return False
            if length == 3:
                widened += 1
    return widened <= 1


@dataclass(frozen=True)
class TheoremReport:
    spec: TransformSpec
    limit: int
    scanned_indices: list[int]
    expected_indices: list[int]
    shape_agreement: list[bool]
    verdict: bool

    def lines(self) -> list[str]:
        out = [
            f"mode={self.spec.mode} d0={self.spec.d0} d1={self.spec.d1} limit={self.limit}",
            "scanned:  " + " ".join(map(str, self.scanned_indices)),
            "expected: " + " ".join(map(str, self.expected_indices)),
            f"shape predicate agrees on all indices: {all(self.shape_agreement)}",
            f"RESULT: {'PASS' if self.verdict else 'FAIL'}",
        ]
        return out


def check_theorem(cfg: ScanConfig) -> TheoremReport:
    """Compare brute-force record indices against the structural enumeration.

    Requires nonempty equal-length pads (the theorem hypothesis); anything
    else is a precondition error, not a verification failure.
    """
    if not cfg.spec.d0 or not cfg.spec.d1:
        raise ValueError("theorem check requires nonempty pads")
    cfg.spec.equal_length()
    scanned = [entry.index for entry in scan_records(cfg)]
    expected = enumerate_record_shapes_upto(cfg.limit)
    agreement = [has_record_shape(n) for n in scanned]
    verdict = scanned == expected and all(agreement)
    return TheoremReport(cfg.spec, cfg.limit, scanned, expected, agreement, verdict)


@dataclass(frozen=True)
class BoundReport:
    max_n: int
    violations: list[int]
    equality_set: list[int]
    expected_equality: list[int]
    verdict: bool

    def lines(self) -> list[str]:
        return [
            f"max_n={self.max_n}",
            f"violations: {self.violations}",
            "equality set: " + " ".join(map(str, self.equality_set)),
            "expected:     " + " ".join(map(str, self.expected_equality)),
            f"RESULT: {'PASS' if self.verdict else 'FAIL'}",
        ]


def _alternating_equality_indices(max_n: int) -> list[int]:
    """n of the form (2/3)(4^k - 1), k >= 1, up to max_n: binary 1010...10."""
    out = []
    k = 1
    while True:
        n = 2 * (4**k - 1) // 3
        if n > max_n:
            return out
        out.append(n)
        k += 1


def check_bound(max_n: int) -> BoundReport:
    """Verify 5*a(n) <= 9n^2 + 12n for the ("0","1") append transform.

    Exact integer arithmetic throughout; equality must occur precisely at
    the alternating-binary indices.
    """
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    violations = []
    equality = []
    for n in range(1, max_n + 1):
        lhs = 5 * append_transform(n, "0", "1")
        rhs = 9 * n * n + 12 * n
        if lhs > rhs:
            violations.append(n)
        elif lhs == rhs:
            equality.append(n)
    expected = _alternating_equality_indices(max_n)
    verdict = not violations and equality == expected
    return BoundReport(max_n, violations, equality, expected, verdict)
