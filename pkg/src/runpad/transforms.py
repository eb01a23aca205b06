"""Run-padding transforms on binary representations.

append_transform pads each maximal run of bit i with the string d_i placed
after the run; prepend_transform places the pad before the run.  Values are
exact Python ints, so output size is unbounded.  The raw expanded string is
available separately because prepend pads can introduce leading zeros that
matter for string identities but vanish on integer conversion.
"""

from dataclasses import dataclass

from .bitcore import bit_count, check_bits, run_count, runs, to_bitstring, to_nat

APPEND = "append"
PREPEND = "prepend"


@dataclass(frozen=True)
class TransformSpec:
    """Pad pair plus placement mode.  d0 pads 0-runs, d1 pads 1-runs."""

    d0: str
    d1: str
    mode: str = APPEND

    def __post_init__(self):
        check_bits(self.d0, "d0")
        check_bits(self.d1, "d1")
        if self.mode not in (APPEND, PREPEND):
            raise ValueError(f"mode must be '{APPEND}' or '{PREPEND}', got {self.mode!r}")

    def equal_length(self) -> int:
        """Common pad length k; error if the pads differ in length."""
        if len(self.d0) != len(self.d1):
            raise ValueError(
                f"pads must have equal length, got {len(self.d0)} and {len(self.d1)}"
            )
        return len(self.d0)


def expand_bits(bs: str, spec: TransformSpec) -> str:
    """Raw expanded string for a canonical input bitstring.

    May carry leading zeros in prepend mode; never normalized here.
    """
    if not bs or bs[0] != "1":
        raise ValueError(f"input must be canonical (nonempty, leading 1), got {bs!r}")
    pads = (spec.d0, spec.d1)
    parts = []
    for bit, length in runs(bs):
        run = str(bit) * length
        if spec.mode == APPEND:
            parts.append(run + pads[bit])
        else:
            parts.append(pads[bit] + run)
    return "".join(parts)


def transform_value(n: int, spec: TransformSpec) -> int:
    """Integer value of the expanded string (leading zeros drop)."""
    return to_nat(expand_bits(to_bitstring(n), spec))


def append_transform(n: int, d0: str, d1: str) -> int:
    return transform_value(n, TransformSpec(d0, d1, APPEND))


def prepend_transform(n: int, d0: str, d1: str) -> int:
    return transform_value(n, TransformSpec(d0, d1, PREPEND))


def shrink_runs(n: int) -> int | None:
    """Delete one symbol from each maximal run of the binary form of n.

    Left inverse of append_transform(., "0", "1").  If every run has length
    1 the result is the empty string; that outcome is returned as None, never
    conflated with 0.
    """
    shrunk = "".join(str(bit) * (length - 1) for bit, length in runs(to_bitstring(n)))
    if not shrunk:
        return None
    return to_nat(shrunk)


def appended_bit_length(n: int, spec: TransformSpec) -> int:
    """Closed-form output bit length for append mode with equal-length pads."""
    k = spec.equal_length()
    return run_count(n) * k + bit_count(n)


def prepended_bit_length(n: int, spec: TransformSpec) -> int:
    """Closed-form output bit length for prepend mode with equal-length pads.

    Leading zeros of d1 end up in front of the output and drop on integer
    conversion, hence the subtraction.
    """
    k = spec.equal_length()
    leading_zeros = len(spec.d1) - len(spec.d1.lstrip("0"))
    return run_count(n) * k + bit_count(n) - leading_zeros


def check_swap_identity(n: int, d0: str, d1: str) -> bool:
    """String identity tying prepend with swapped pads to a shifted append.

    The raw prepend expansion that places d0 before 1-runs and d1 before
    0-runs must equal d0 followed by the canonical bitstring of the append
    output shifted right by the pad length.  When d0 has no 1's this also
    forces the corresponding integer identity, which is checked as well.
    """
    swapped = TransformSpec(d0=d1, d1=d0, mode=PREPEND)
    k = swapped.equal_length()
    if k == 0:
        raise ValueError("pads must be nonempty")
    raw = expand_bits(to_bitstring(n), swapped)
    shifted = append_transform(n, d0, d1) >> k
    ok = raw == d0 + to_bitstring(shifted)
    if ok and "1" not in d0:
        ok = prepend_transform(n, d1, d0) == shifted
    return ok
