"""graph6 parsing/emission, DOT export, corpus streaming, and JSON reports.

graph6 records: N(n) is one byte n+63 for n < 63, else '~' followed by three
bytes carrying n in 18 bits (6 bits each, value+63).  The upper triangle is
listed in column order x(0,1), x(0,2), x(1,2), x(0,3), ..., packed into 6-bit
groups (MSB first), zero-padded, each group stored as value+63.
"""

from __future__ import annotations

import io
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, IO, Iterable, Iterator

from .core import Graph
from .errors import CapacityError, FormatError

HEADER = ">>graph6<<"
_N_CAP = 258048  # largest n for the 4-byte N(n) form


def _check_bytes(text: str) -> None:
    for i, ch in enumerate(text):
        code = ord(ch)
        if not 63 <= code <= 126:
            raise FormatError(f"byte {code!r} outside graph6 range 63..126", offset=i)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 record (optional '>>graph6<<' header allowed)."""
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise FormatError("empty record")
    _check_bytes(s)
    if s[0] == "~":
        if len(s) < 4:
            raise FormatError("truncated long-form vertex count", offset=len(s))
        if s[1] == "~":
            raise FormatError("8-byte vertex counts unsupported", offset=1)
        n = 0
        for ch in s[1:4]:
            n = n << 6 | (ord(ch) - 63)
        body = s[4:]
        pos = 4
    else:
        n = ord(s[0]) - 63
        body = s[1:]
        pos = 1
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(body) < nbytes:
        raise FormatError(
            f"bit vector truncated: need {nbytes} bytes, got {len(body)}",
            offset=pos + len(body),
        )
    if len(body) > nbytes:
        raise FormatError("trailing garbage after bit vector", offset=pos + nbytes)
    rows = [0] * n
    bit = 0
    for k, ch in enumerate(body):
        group = ord(ch) - 63
        for shift in range(5, -1, -1):
            if bit >= nbits:
                if group >> shift & 1:
                    raise FormatError("nonzero padding bits", offset=pos + k)
                continue
            if group >> shift & 1:
                j = _col_of(bit)
                i = bit - j * (j - 1) // 2
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
    return Graph(n, rows)


def _col_of(bit: int) -> int:
    # column j owns bits j(j-1)/2 .. j(j+1)/2 - 1 of the upper triangle
    j = 1
    while j * (j + 1) // 2 <= bit:
        j += 1
    return j


def emit_graph6(g: Graph) -> str:
    """Canonical graph6 encoding: shortest N(n) form, zero padding."""
    n = g.n
    if n >= _N_CAP:
        raise CapacityError(f"graph6 emission capped below {_N_CAP} vertices")
    if n < 63:
        out = [chr(n + 63)]
    else:
        out = ["~", chr((n >> 12 & 63) + 63), chr((n >> 6 & 63) + 63), chr((n & 63) + 63)]
    group = 0
    nbits = 0
    for j in range(1, n):
        col = g.row(j)
        for i in range(j):
            group = group << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(group + 63))
                group = 0
                nbits = 0
    if nbits:
        out.append(chr((group << (6 - nbits)) + 63))
    return "".join(out)


def emit_dot(g: Graph, labels: dict[int, str] | None = None) -> str:
    """Render as a DOT ``graph`` block with deterministic edge order."""

    def name(v: int) -> str:
        return f'"{labels[v]}"' if labels and v in labels else str(v)

    lines = ["graph {"]
    for v in range(g.n):
        lines.append(f"  {name(v)};")
    for u, v in g.edges():
        lines.append(f"  {name(u)} -- {name(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def stream_corpus(
    source: str | Path | IO[str] | Iterable[str], lenient: bool = False
) -> Iterator[tuple[int, Graph]]:
    """Yield (record_number, Graph) for each non-blank graph6 line.

    Record numbers are 1-based.  Malformed records raise a positioned
    FormatError unless ``lenient`` is set, in which case they are skipped.
    """
    if isinstance(source, (str, Path)):
        lines: Iterable[str] = io.StringIO(Path(source).read_text())
    else:
        lines = source
    record = 0
    for line in lines:
        line = line.strip()
        if not line:
            continue
        record += 1
        try:
            yield record, parse_graph6(line)
        except FormatError as exc:
            if lenient:
                continue
            raise FormatError(exc.message, offset=exc.offset, record=record) from exc


_STATUSES = ("checked", "vacuous", "error")


@dataclass
class Report:
    """Structured outcome of one check, serializable to JSON.

    Invariants: ``passed`` may only be True when status is "checked", and a
    counterexample is present exactly when a checked run failed.
    """

    check_id: str
    params: dict[str, Any] = field(default_factory=dict)
    passed: bool = False
    status: str = "checked"
    witness: Any = None
    counterexample: str | None = None
    runtime_ms: int = 0

    def __post_init__(self) -> None:
        if self.status not in _STATUSES:
            raise ValueError(f"status must be one of {_STATUSES}")
        if self.passed and self.status != "checked":
            raise ValueError("pass=true requires status=checked")
        failed_checked = not self.passed and self.status == "checked"
        if (self.counterexample is not None) != failed_checked:
            raise ValueError("counterexample present iff a checked run failed")

    @property
    def is_failure(self) -> bool:
        return self.status == "checked" and not self.passed

    def to_dict(self) -> dict[str, Any]:
        return {
            "check_id": self.check_id,
            "params": self.params,
            "pass": self.passed,
            "status": self.status,
            "witness": self.witness,
            "counterexample": self.counterexample,
            "runtime_ms": self.runtime_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)
