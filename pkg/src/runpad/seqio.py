"""OEIS-style b-file emission, parsing, and comparison.

A b-file is plain ASCII, one "index value" pair per line, consecutive
indices starting at the file's offset; "#" lines and blank lines are
ignored on input.  The registry binds short keys to sequence generators
so the CLI can emit any of the families studied here.  OEIS IDs are
carried as annotations only and never used for lookups.
"""

from dataclasses import dataclass
from typing import Callable

from .records import RecordEntry, ScanConfig, scan_records
from .transforms import (
    APPEND,
    PREPEND,
    TransformSpec,
    append_transform,
    prepend_transform,
    shrink_runs,
)


@dataclass(frozen=True)
class BFile:
    entries: list[tuple[int, int]]
    offset: int = 1

    def __post_init__(self):
        for pos, (index, _) in enumerate(self.entries):
            if index != self.offset + pos:
                raise ValueError(
                    f"non-consecutive index {index} at position {pos} (offset {self.offset})"
                )

    def values(self) -> list[int]:
        return [value for _, value in self.entries]

    def render(self) -> str:
        """Exactly one space per pair, one trailing newline per line."""
        return "".join(f"{index} {value}\n" for index, value in self.entries)


@dataclass(frozen=True)
class SequenceDescriptor:
    key: str
    generator: Callable[[int], list[int]]
    offset: int
    oeis_ids: tuple[str, ...]
    notes: str


def _transform_values(spec: TransformSpec):
    def gen(count: int) -> list[int]:
        return [
            append_transform(n, spec.d0, spec.d1)
            if spec.mode == APPEND
            else prepend_transform(n, spec.d0, spec.d1)
            for n in range(1, count + 1)
        ]

    return gen


def _records(mode: str, pick: Callable[[RecordEntry], int]):
    def gen(count: int) -> list[int]:
        spec = TransformSpec("0", "1", mode)
        limit = 1024
        while True:
            entries = scan_records(ScanConfig(spec, limit))
            if len(entries) >= count:
                return [pick(e) for e in entries[:count]]
            limit *= 4

    return gen


def _shrink_values(count: int) -> list[int]:
    # the empty-string outcome (all runs singletons) is emitted as 0
    return [(shrink_runs(n) or 0) for n in range(1, count + 1)]


REGISTRY: dict[str, SequenceDescriptor] = {
    d.key: d
    for d in [
        SequenceDescriptor(
            "append-values-01",
            _transform_values(TransformSpec("0", "1", APPEND)),
            offset=1,
            oeis_ids=("A175046", "A156064"),
            notes="append transform with pads 0/1; both OEIS IDs appear in the "
            "literature for this construction with differing offset conventions",
        ),
        SequenceDescriptor(
            "prepend-values-01",
            _transform_values(TransformSpec("0", "1", PREPEND)),
            offset=1,
            oeis_ids=(),
            notes="prepend transform with pads 0/1; equals append-values-01",
        ),
        SequenceDescriptor(
            "record-indices-01",
            _records(APPEND, lambda e: e.index),
            offset=1,
            oeis_ids=("A319423",),
            notes="record-setting indices; independent of the pads",
        ),
        SequenceDescriptor(
            "append-record-values-01",
            _records(APPEND, lambda e: e.value),
            offset=1,
            oeis_ids=("A319422",),
            notes="record values of the append transform with pads 0/1",
        ),
        SequenceDescriptor(
            "prepend-record-values-01",
            _records(PREPEND, lambda e: e.value),
            offset=1,
            oeis_ids=("A319424",),
            notes="record values of the prepend transform with pads 0/1",
        ),
        SequenceDescriptor(
            "shrink-01",
            _shrink_values,
            offset=1,
            oeis_ids=("A318921",),
            notes="run-shrink left inverse; empty-string outcome emitted as 0",
        ),
    ]
}


def emit_bfile(key: str, count: int) -> BFile:
    """First `count` terms of a registered sequence as a b-file."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    try:
        desc = REGISTRY[key]
    except KeyError:
        raise KeyError(f"unknown sequence key {key!r}; known: {sorted(REGISTRY)}") from None
    values = desc.generator(count)
    return BFile(list(enumerate(values, start=desc.offset)), offset=desc.offset)


def parse_bfile(text: str) -> BFile:
    """Parse b-file text; malformed lines report their line number."""
    entries = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'index value', got {line!r}")
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer field in {line!r}") from None
        entries.append((index, value))
    if not entries:
        raise ValueError("no entries found")
    return BFile(entries, offset=entries[0][0])


@dataclass(frozen=True)
class DiffReport:
    offset_mismatch: bool
    overlap: int
    first_divergence: int | None
    len_a: int
    len_b: int

    @property
    def match(self) -> bool:
        return not self.offset_mismatch and self.first_divergence is None

    def lines(self) -> list[str]:
        if self.offset_mismatch:
            return ["offset mismatch", "RESULT: FAIL"]
        out = [f"entries: a={self.len_a} b={self.len_b} overlap={self.overlap}"]
        if self.first_divergence is None:
            out.append(f"match through {self.overlap}")
            out.append("RESULT: PASS")
        else:
            out.append(f"first divergence at index {self.first_divergence}")
            out.append("RESULT: FAIL")
        return out


def diff_bfiles(a: BFile, b: BFile) -> DiffReport:
    """Compare two b-files over their overlapping index range."""
    if a.offset != b.offset:
        return DiffReport(True, 0, None, len(a.entries), len(b.entries))
    overlap = min(len(a.entries), len(b.entries))
    divergence = None
    for i in range(overlap):
        if a.entries[i][1] != b.entries[i][1]:
            divergence = a.entries[i][0]
            break
    return DiffReport(False, overlap, divergence, len(a.entries), len(b.entries))
