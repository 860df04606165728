"""Rectangular count tables and their CSV / JSON serializations.

A table has one or more *index* axes (e.g. ``k``) labelling its rows and a
single *value* axis (e.g. ``n``) spread across the columns ``n=1..N``.
Counts are serialized as decimal strings in JSON since they outgrow 64 bits.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field


@dataclass
class CountTable:
    name: str
    index_axes: tuple[str, ...]
    value_axis: str
    value_range: tuple[int, ...]
    rows: dict[tuple[int, ...], tuple[int, ...]]
    params: dict[str, int] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def __post_init__(self):
        width = len(self.value_range)
        for key, values in self.rows.items():
            if len(key) != len(self.index_axes):
                raise ValueError(f"row key {key} does not match axes {self.index_axes}")
            if len(values) != width:
                raise ValueError(f"row {key} has {len(values)} cells, expected {width}")

    def __getitem__(self, cell: tuple[int, ...]) -> int:
        *key, v = cell
        return self.rows[tuple(key)][self.value_range.index(v)]

    def row_keys(self) -> list[tuple[int, ...]]:
        return sorted(self.rows)

    def cells(self):
        """Yield ((index..., value_coord), count) in row-major order."""
        for key in self.row_keys():
            for v, count in zip(self.value_range, self.rows[key]):
                yield key + (v,), count

    def column_sums(self) -> dict[int, int]:
        return {
            v: sum(self.rows[key][j] for key in self.rows)
            for j, v in enumerate(self.value_range)
        }

    def same_entries(self, other: "CountTable") -> bool:
        return (
            self.index_axes == other.index_axes
            and self.value_axis == other.value_axis
            and self.value_range == other.value_range
            and self.rows == other.rows
        )

    # -- CSV ---------------------------------------------------------------

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(list(self.index_axes) + [f"{self.value_axis}={v}" for v in self.value_range])
        for key in self.row_keys():
            writer.writerow(list(key) + list(self.rows[key]))
        for note in self.notes:
            buf.write(f"# {note}\n")
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str, name: str = "") -> "CountTable":
        data_lines, notes = [], []
        for line in text.splitlines():
            if line.startswith("#"):
                notes.append(line[1:].strip())
            elif line.strip():
                data_lines.append(line)
        reader = csv.reader(data_lines)
        header = next(reader)
        index_axes = tuple(h for h in header if "=" not in h)
        value_cols = [h for h in header if "=" in h]
        if not value_cols:
            raise ValueError("CSV header has no value columns")
        value_axis = value_cols[0].split("=", 1)[0]
        value_range = tuple(int(h.split("=", 1)[1]) for h in value_cols)
        ni = len(index_axes)
        rows = {}
        for record in reader:
            rows[tuple(int(x) for x in record[:ni])] = tuple(int(x) for x in record[ni:])
        return cls(name, index_axes, value_axis, value_range, rows, notes=notes)

    # -- JSON --------------------------------------------------------------

    def to_json(self) -> str:
        entries = []
        for cell, count in self.cells():
            record = dict(zip(self.index_axes + (self.value_axis,), cell))
            record["value"] = str(count)
            entries.append(record)
        doc = {
            "table": self.name,
            "params": self.params,
            "axes": {"index": list(self.index_axes), "value": self.value_axis},
            "entries": entries,
            "notes": self.notes,
        }
        return json.dumps(doc, indent=1) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "CountTable":
        doc = json.loads(text)
        index_axes = tuple(doc["axes"]["index"])
        value_axis = doc["axes"]["value"]
        grid: dict[tuple[int, ...], dict[int, int]] = {}
        for record in doc["entries"]:
            key = tuple(int(record[a]) for a in index_axes)
            grid.setdefault(key, {})[int(record[value_axis])] = int(record["value"])
        value_range = tuple(sorted({v for row in grid.values() for v in row}))
        rows = {key: tuple(row[v] for v in value_range) for key, row in grid.items()}
        return cls(
            doc["table"], index_axes, value_axis, value_range, rows,
            params=dict(doc.get("params", {})), notes=list(doc.get("notes", [])),
        )
