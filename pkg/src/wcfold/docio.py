"""File formats and structured result documents.

Folding files hold one "x y" integer pair per line in chain-index order;
blank lines and '#' comments are ignored.  Move strings over {R, L, U, D}
are the compact single-line alternative, with the first node implicit at
the origin.

A ResultDocument is the CLI's output unit: command echo, input digest,
outputs, and diagnostics, emitted either as line-oriented "key: value" text
with a stable field order or as JSON.  Wall-clock timing is deliberately
kept out of both encodings (it goes to stderr) so that identical inputs and
flags always produce identical documents.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Any

from .model import Folding
from .walks import moves_to_points, points_to_moves


def write_folding_file(path, folding: Folding, comment: str | None = None) -> None:
    lines = []
    if comment:
        for part in comment.splitlines():
            lines.append(f"# {part}")
    lines.extend(f"{x} {y}" for x, y in folding.points)
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def read_folding_points(path) -> tuple[tuple[int, int], ...]:
    """Read a folding file (or a single move-string line) into points."""
    points: list[tuple[int, int]] = []
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) == 1 and not _is_int(parts[0]):
                return moves_to_points(parts[0])
            if len(parts) != 2 or not (_is_int(parts[0]) and _is_int(parts[1])):
                raise ValueError(f"bad folding line: {raw.rstrip()!r}")
            points.append((int(parts[0]), int(parts[1])))
    return tuple(points)


def _is_int(token: str) -> bool:
    try:
        int(token)
        return True
    except ValueError:
        return False


def sequence_digest(seq: str) -> str:
    return hashlib.sha256(seq.encode()).hexdigest()[:12]


@dataclass
class ResultDocument:
    """Structured result of one CLI invocation.

    timing_ms is populated for library callers but excluded from both text
    and JSON encodings; see the module docstring.
    """

    command: str
    inputs: dict[str, Any] = field(default_factory=dict)
    outputs: dict[str, Any] = field(default_factory=dict)
    diagnostics: dict[str, Any] = field(default_factory=dict)
    timing_ms: float | None = None

    def to_text(self) -> str:
        lines = [f"command: {self.command}"]
        for section, data in (
            ("input", self.inputs),
            ("output", self.outputs),
            ("diag", self.diagnostics),
        ):
            for key, value in data.items():
                lines.append(f"{section}.{key}: {_fmt(value)}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "ResultDocument":
        doc = cls(command="")
        for raw in text.splitlines():
            line = raw.strip()
            if not line:
                continue
            key, _, value = line.partition(": ")
            if key == "command":
                doc.command = value
            elif key.startswith("input."):
                doc.inputs[key[6:]] = value
            elif key.startswith("output."):
                doc.outputs[key[7:]] = value
            elif key.startswith("diag."):
                doc.diagnostics[key[5:]] = value
            else:
                raise ValueError(f"bad document line: {raw!r}")
        return doc

    def to_json(self) -> str:
        obj = {
            "command": self.command,
            "input": self.inputs,
            "output": self.outputs,
            "diag": self.diagnostics,
        }
        return json.dumps(obj, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ResultDocument":
        obj = json.loads(text)
        return cls(
            command=obj["command"],
            inputs=dict(obj.get("input", {})),
            outputs=dict(obj.get("output", {})),
            diagnostics=dict(obj.get("diag", {})),
        )

    def render(self, fmt: str) -> str:
        if fmt == "text":
            return self.to_text()
        if fmt == "structured":
            return self.to_json()
        raise ValueError(f"unknown format {fmt!r}")


def _fmt(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Folding):
        return points_to_moves(value.points)
    if isinstance(value, (list, tuple)):
        return " ".join(_fmt(v) for v in value)
    return str(value)
