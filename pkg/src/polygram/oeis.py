"""OEIS b-file reading and offset-free alignment of computed sequences."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Sequence


class BFileError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass
class OeisSequence:
    id: str
    entries: dict[int, int]

    @property
    def offset(self) -> int:
        return min(self.entries)

    @property
    def values(self) -> list[int]:
        return [self.entries[i] for i in sorted(self.entries)]

    def to_bfile(self) -> str:
        return "".join(f"{i} {self.entries[i]}\n" for i in sorted(self.entries))


def parse_bfile_text(text: str, seq_id: str = "") -> OeisSequence:
    """Parse ``index value`` lines; ``#`` comments and blank lines are skipped."""
    entries: dict[int, int] = {}
    previous = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise BFileError(f"expected 'index value', got {raw!r}", lineno)
        try:
            index, value = int(fields[0]), int(fields[1])
        except ValueError:
            raise BFileError(f"non-integer field in {raw!r}", lineno) from None
        if previous is not None and index != previous + 1:
            raise BFileError(f"index {index} does not follow {previous}", lineno)
        entries[index] = value
        previous = index
    if not entries:
        raise BFileError("b-file has no entries")
    return OeisSequence(seq_id, entries)


def parse_bfile(path: str | Path) -> OeisSequence:
    path = Path(path)
    seq_id = path.stem
    if seq_id.startswith("b") and seq_id[1:].isdigit():
        seq_id = "A" + seq_id[1:]
    return parse_bfile_text(path.read_text(encoding="ascii"), seq_id)


def find_bfile(directory: str | Path, seq_id: str) -> Path | None:
    """Locate ``bNNNNNN.txt`` (or ``ANNNNNN.txt``) for an A-number in ``directory``."""
    digits = seq_id.lstrip("Aa")
    for name in (f"b{digits}.txt", f"A{digits}.txt"):
        candidate = Path(directory) / name
        if candidate.is_file():
            return candidate
    return None


@dataclass
class Alignment:
    seq_id: str
    start: int | None  # b-file index matched to our first term
    shared: int
    mismatch: tuple[int, int, int] | None  # (our position, expected, got)
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.start is not None and self.mismatch is None


def align(ours: Sequence[int], seq: OeisSequence, window: int = 5, min_shared: int = 0) -> Alignment:
    """Place ``ours`` inside ``seq`` by matching its first ``window`` terms.

    The placement must be unique. Every overlapping term is then compared;
    the first disagreement is reported.
    """
    ours = list(ours)
    if len(ours) < window:
        return Alignment(seq.id, None, 0, None, f"need at least {window} computed terms")
    indices = sorted(seq.entries)
    values = [seq.entries[i] for i in indices]
    head = ours[:window]
    starts = [j for j in range(len(values) - window + 1) if values[j:j + window] == head]
    if len(starts) != 1:
        what = "no" if not starts else f"{len(starts)} ambiguous"
        return Alignment(seq.id, None, 0, None, f"{what} alignments of {head}")
    j = starts[0]
    shared = min(len(ours), len(values) - j)
    for pos in range(shared):
        if ours[pos] != values[j + pos]:
            return Alignment(seq.id, indices[j], shared, (pos, values[j + pos], ours[pos]),
                             f"term {pos} is {ours[pos]}, b-file index {indices[j + pos]} has {values[j + pos]}")
    if shared < min_shared:
        return Alignment(seq.id, None, shared, None, f"only {shared} shared terms, need {min_shared}")
    return Alignment(seq.id, indices[j], shared, None, f"aligned at index {indices[j]}, {shared} terms agree")
