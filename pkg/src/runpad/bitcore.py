"""Base-2 plumbing: bitstrings, run encodings, and counting helpers.

Bitstrings are plain ASCII strings of "0"/"1", most significant bit first.
A *canonical* bitstring is nonempty and starts with "1"; raw strings (e.g.
prepend-transform output) may carry leading zeros.  Run encodings are lists
of (bit, length) pairs with bit in {0, 1} and length >= 1.
"""

from itertools import groupby

Run = tuple[int, int]


def check_bits(bs: str, name: str = "bitstring") -> None:
    """Reject anything that is not a pure 0/1 string."""
    if any(ch not in "01" for ch in bs):
        raise ValueError(f"{name} must contain only '0'/'1', got {bs!r}")


def to_bitstring(n: int) -> str:
    """Canonical binary representation of n >= 1 (no leading zeros)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return format(n, "b")


def to_nat(bs: str) -> int:
    """Integer value of a bitstring; leading zeros are ignored."""
    if not bs:
        raise ValueError("cannot convert empty bitstring")
    check_bits(bs)
    return int(bs, 2)


def runs(bs: str) -> list[Run]:
    """Maximal-run decomposition of a nonempty bitstring, in order."""
    if not bs:
        raise ValueError("cannot decompose empty bitstring")
    check_bits(bs)
    return [(int(bit), len(list(grp))) for bit, grp in groupby(bs)]


def from_runs(re: list[Run]) -> str:
    """Concatenate a run encoding back into a bitstring."""
    prev = None
    for bit, length in re:
        if bit not in (0, 1):
            raise ValueError(f"run bit must be 0 or 1, got {bit}")
        if length < 1:
            raise ValueError(f"run length must be >= 1, got {length}")
        if bit == prev:
            raise ValueError("adjacent runs must have distinct bits")
        prev = bit
    return "".join(str(bit) * length for bit, length in re)


def complement(bs: str) -> str:
    """1's complement: flip every bit, length preserved.  Empty maps to empty."""
    check_bits(bs)
    return bs.translate(str.maketrans("01", "10"))


def run_count(n: int) -> int:
    """Total number of runs (of both 0's and 1's) in the binary form of n."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    # bits of n ^ (n >> 1) mark run starts
    return (n ^ (n >> 1)).bit_count()


def bit_count(n: int) -> int:
    """Number of bits in the binary form of n (floor(log2 n) + 1)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return n.bit_length()
