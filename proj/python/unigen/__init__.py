from ._unigen import (
    CapExceeded,
    UnigenError,
    analyze,
    chains,
    classify,
    csv_header,
    csv_row,
    export_lattice,
    parse_spec,
    verify,
)

__all__ = [
    "CapExceeded",
    "UnigenError",
    "analyze",
    "chains",
    "classify",
    "csv_header",
    "csv_row",
    "export_lattice",
    "parse_spec",
    "verify",
]
