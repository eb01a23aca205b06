"""Run-padding bitstring transforms, their record values, and b-file tools."""

from .bitcore import (
    bit_count,
    complement,
    from_runs,
    run_count,
    runs,
    to_bitstring,
    to_nat,
)
from .transforms import (
    APPEND,
    PREPEND,
    TransformSpec,
    append_transform,
    appended_bit_length,
    check_swap_identity,
    expand_bits,
    prepend_transform,
    prepended_bit_length,
    shrink_runs,
    transform_value,
)
from .records import (
    RecordEntry,
    ScanConfig,
    check_bound,
    check_theorem,
    double_zero_blocks,
    enumerate_record_shapes,
    enumerate_record_shapes_upto,
    has_record_shape,
    has_record_value_shape,
    is_fibbinary,
    max_zero_run,
    scan_records,
)
from .seqio import BFile, DiffReport, REGISTRY, diff_bfiles, emit_bfile, parse_bfile

__all__ = [
    "APPEND",
    "PREPEND",
    "BFile",
    "DiffReport",
    "REGISTRY",
    "RecordEntry",
    "ScanConfig",
    "TransformSpec",
    "append_transform",
    "appended_bit_length",
    "bit_count",
    "check_bound",
    "check_swap_identity",
    "check_theorem",
    "complement",
    "diff_bfiles",
    "double_zero_blocks",
    "emit_bfile",
    "enumerate_record_shapes",
    "enumerate_record_shapes_upto",
    "expand_bits",
    "from_runs",
    "has_record_shape",
    "has_record_value_shape",
    "is_fibbinary",
    "max_zero_run",
    "parse_bfile",
    "prepend_transform",
    "prepended_bit_length",
    "run_count",
    "runs",
    "scan_records",
    "shrink_runs",
    "to_bitstring",
    "to_nat",
    "transform_value",
]
