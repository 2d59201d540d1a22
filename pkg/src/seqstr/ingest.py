"""Decode raw input into SymbolSequence values.

Sources: inline literal, file path, or stdin ("-").  Formats: plain bytes
or FASTA.  Symbol modes: one symbol per byte (total, the default) or one
symbol per UTF-8 code point (strict; malformed input is an error).
Case is preserved everywhere; normalization is the caller's job.
"""

import sys
from dataclasses import dataclass
from typing import Optional

from .core import SymbolSequence


class IngestError(Exception):
    """Base class for input decoding failures."""


class InvalidEncoding(IngestError):
    """Input is not valid UTF-8 (codepoint mode only)."""


class FastaError(IngestError):
    pass


class EmptyFasta(FastaError):
    """FASTA input contains no records."""


class RecordNotFound(FastaError):
    """Requested FASTA record id is absent."""


@dataclass
class InputSpec:
    """Where a sequence comes from and how to decode it.

    Exactly one of `text` (inline literal) or `path` must be set;
    path "-" reads stdin.
    """

    text: Optional[str] = None
    path: Optional[str] = None
    format: str = "plain"  # "plain" | "fasta"
    symbol_mode: str = "byte"  # "byte" | "codepoint"
    fasta_record: Optional[str] = None
    strip_trailing_newline: bool = True

    def __post_init__(self):
        if (self.text is None) == (self.path is None):
            raise ValueError("InputSpec needs exactly one of text or path")
        if self.format not in ("plain", "fasta"):
            raise ValueError(f"unknown format: {self.format!r}")
        if self.symbol_mode not in ("byte", "codepoint"):
            raise ValueError(f"unknown symbol mode: {self.symbol_mode!r}")


@dataclass(frozen=True)
class FastaRecord:
    id: str
    description: str
    sequence: bytes  # concatenated sequence lines, ASCII whitespace removed


def decode(data: bytes, mode: str) -> SymbolSequence:
    """Map raw bytes to symbols: one per byte, or one per UTF-8 code point."""
    if mode == "byte":
        return SymbolSequence.from_bytes(data)
    if mode == "codepoint":
        try:
            return SymbolSequence.from_text(data.decode("utf-8"))
        except UnicodeDecodeError as exc:
            raise InvalidEncoding(str(exc)) from None
    raise ValueError(f"unknown symbol mode: {mode!r}")


def _raw_bytes(spec: InputSpec) -> bytes:
    if spec.text is not None:
        return spec.text.encode("utf-8")
    if spec.path == "-":
        return sys.stdin.buffer.read()
    try:
        with open(spec.path, "rb") as fp:
            return fp.read()
    except OSError as exc:
        raise IngestError(f"cannot read {spec.path}: {exc}") from exc


def _strip_terminator(data: bytes) -> bytes:
    if data.endswith(b"\r\n"):
        return data[:-2]
    if data.endswith(b"\n") or data.endswith(b"\r"):
        return data[:-1]
    return data


def parse_fasta(data: bytes) -> list[FastaRecord]:
    """Parse '>'-headed records; sequence lines are joined with ASCII
    whitespace removed."""
    records = []
    header: Optional[bytes] = None
    chunks: list[bytes] = []

    def emit():
        if header is None:
            return
        fields = header.split(None, 1)
        if not fields:
            raise FastaError("FASTA header with empty record id")
        rec_id = fields[0].decode("utf-8", errors="replace")
        desc = fields[1].decode("utf-8", errors="replace") if len(fields) > 1 else ""
        seq = b"".join(b"".join(chunk.split()) for chunk in chunks)
        records.append(FastaRecord(rec_id, desc, seq))

    for line in data.splitlines():
        if line.startswith(b">"):
            emit()
            header = line[1:]
            chunks = []
        elif header is not None:
            chunks.append(line)
        elif line.strip():
            raise FastaError("sequence data before first FASTA header")
    emit()
    return records


def read_plain(spec: InputSpec) -> SymbolSequence:
    data = _raw_bytes(spec)
    if spec.strip_trailing_newline:
        data = _strip_terminator(data)
    return decode(data, spec.symbol_mode)


def read_fasta(spec: InputSpec) -> SymbolSequence:
    records = parse_fasta(_raw_bytes(spec))
    if not records:
        raise EmptyFasta("no FASTA records in input")
    if spec.fasta_record is None:
        chosen = records[0]
    else:
        for rec in records:
            if rec.id == spec.fasta_record:
                chosen = rec
                break
        else:
            raise RecordNotFound(f"FASTA record {spec.fasta_record!r} not found")
    return decode(chosen.sequence, spec.symbol_mode)


def load(spec: InputSpec) -> SymbolSequence:
    """Dispatch on spec.format."""
    if spec.format == "fasta":
        return read_fasta(spec)
    return read_plain(spec)
