"""Model and signal file formats."""

from lpvkit_core.io.model_file import (
    AlpvFile,
    LfrFile,
    dump_model,
    parse_model,
    read_model,
    to_document,
    write_model,
)
from lpvkit_core.io.signals import format_table, read_table, write_table

__all__ = [
    "AlpvFile",
    "LfrFile",
    "dump_model",
    "format_table",
    "parse_model",
    "read_model",
    "read_table",
    "to_document",
    "write_model",
    "write_table",
]
