"""Workspace documents: a space, a process, a filtration and optional stakes.

A workspace is one JSON object::

    {
      "dimension": 1,
      "space": {"outcomes": ["HH", "HT", "TH", "TT"], "weights": ["1/4", "1/4", "1/4", "1/4"]},
      "process": {"times": 3, "values": [[["0"], ["0"], ["0"], ["0"]], ...]},
      "filtration": {"type": "natural"},
      "transform": {"times": 3, "values": [...]}
    }

Rationals are strings (``"-3/4"``, ``"2"``).  The filtration is
``{"type": "natural"}``, ``{"type": "constant", "partition": [[...], ...]}``
or ``{"type": "explicit", "partitions": [[[...], ...], ...]}``.
``transform`` is optional.

:func:`dumps` writes the canonical form: one top-level key per line in
the order above, each value compact on its line.  Canonical files
round-trip byte for byte through :func:`loads` and :func:`dumps`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .measure import MeasureSpace
from .numeric import as_rat
from .process import Filtration, ProcessTable, natural_filtration
from .sigma import Partition

__all__ = ["Workspace", "WorkspaceError", "loads", "dumps", "load", "dump"]

_KEYS = ("dimension", "space", "process", "filtration", "transform")


class WorkspaceError(ValueError):
    """The document is malformed or its parts do not fit together."""


@dataclass(frozen=True)
class Workspace:
    dimension: int
    space: MeasureSpace
    process: ProcessTable
    filtration_spec: dict
    transform: Optional[ProcessTable] = None

    def filtration(self) -> Filtration:
        """Resolve the filtration spec against the process."""
        kind = self.filtration_spec["type"]
        if kind == "natural":
            return natural_filtration(self.process)
        if kind == "constant":
            return Filtration.constant(self.process.horizon, _partition(self.space.n, self.filtration_spec["partition"], "filtration.partition"))
        return Filtration(
            _partition(self.space.n, p, f"filtration.partitions[{t}]")
            for t, p in enumerate(self.filtration_spec["partitions"])
        )

    def to_json(self) -> dict:
        doc = {
            "dimension": self.dimension,
            "space": self.space.to_json(),
            "process": self.process.to_json(),
            "filtration": self.filtration_spec,
        }
        if self.transform is not None:
            doc["transform"] = self.transform.to_json()
        return doc


def _partition(n: int, atoms, where: str) -> Partition:
    if not isinstance(atoms, list) or not all(isinstance(a, list) for a in atoms):
        raise WorkspaceError(f"{where}: expected an array of arrays of outcome indices")
    try:
        return Partition(n, atoms)
    except (ValueError, TypeError) as exc:
        raise WorkspaceError(f"{where}: {exc}") from None


def _rat(value, where: str):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise WorkspaceError(f"{where}: expected a rational string such as \"3/4\", got {value!r}")
    try:
        return as_rat(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise WorkspaceError(f"{where}: invalid rational {value!r} ({exc})") from None


def _process(doc, where: str, n: int, d: int) -> ProcessTable:
    if not isinstance(doc, dict) or "values" not in doc or "times" not in doc:
        raise WorkspaceError(f"{where}: expected an object with \"times\" and \"values\"")
    values = doc["values"]
    if not isinstance(values, list) or len(values) != doc["times"]:
        raise WorkspaceError(f"{where}.values: expected {doc['times']} time slices")
    if not values:
        raise WorkspaceError(f"{where}.times: must be at least 1")
    tables = []
    for t, table in enumerate(values):
        if not isinstance(table, list) or len(table) != n:
            raise WorkspaceError(f"{where}.values[{t}]: expected {n} vectors, one per outcome")
        rows = []
        for w, v in enumerate(table):
            if not isinstance(v, list) or len(v) != d:
                raise WorkspaceError(f"{where}.values[{t}][{w}]: expected a vector of dimension {d}")
            rows.append(tuple(_rat(a, f"{where}.values[{t}][{w}]") for a in v))
        tables.append(rows)
    return ProcessTable(tables)


def from_json(doc) -> Workspace:
    if not isinstance(doc, dict):
        raise WorkspaceError("workspace must be a JSON object")
    for key in ("dimension", "space", "process", "filtration"):
        if key not in doc:
            raise WorkspaceError(f"missing field \"{key}\"")
    extra = set(doc) - set(_KEYS)
    if extra:
        raise WorkspaceError(f"unknown fields {sorted(extra)}")
    d = doc["dimension"]
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
        raise WorkspaceError("dimension: expected a positive integer")

    space = doc["space"]
    if not isinstance(space, dict) or "weights" not in space or "outcomes" not in space:
        raise WorkspaceError("space: expected an object with \"outcomes\" and \"weights\"")
    labels, weights = space["outcomes"], space["weights"]
    if not isinstance(labels, list) or not isinstance(weights, list) or len(labels) != len(weights) or not weights:
        raise WorkspaceError("space: \"outcomes\" and \"weights\" must be nonempty arrays of equal length")
    ws = []
    for k, w in enumerate(weights):
        value = _rat(w, f"space.weights[{k}]")
        if value < 0:
            raise WorkspaceError(f"space.weights[{k}]: negative weight {w} for outcome {labels[k]!r}")
        ws.append(value)
    m = MeasureSpace(ws, [str(label) for label in labels])

    x = _process(doc["process"], "process", m.n, d)

    spec = doc["filtration"]
    if not isinstance(spec, dict) or spec.get("type") not in ("natural", "constant", "explicit"):
        raise WorkspaceError("filtration.type: expected \"natural\", \"constant\" or \"explicit\"")
    if spec["type"] == "constant" and "partition" not in spec:
        raise WorkspaceError("filtration: constant filtration needs \"partition\"")
    if spec["type"] == "explicit":
        parts = spec.get("partitions")
        if not isinstance(parts, list) or len(parts) != len(x):
            raise WorkspaceError(f"filtration.partitions: expected {len(x)} partitions, one per time")

    c = None
    if doc.get("transform") is not None:
        c = _process(doc["transform"], "transform", m.n, 1)
        if c.horizon != x.horizon:
            raise WorkspaceError(f"transform: horizon {c.horizon} differs from process horizon {x.horizon}")

    ws_ = Workspace(d, m, x, spec, c)
    f = ws_.filtration()
    bad = f.first_violation()
    if bad is not None:
        i, j = bad
        raise WorkspaceError(f"filtration is not monotone: F_{i} is not contained in F_{j} (pair ({i}, {j}))")
    return ws_


def loads(text: str) -> Workspace:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise WorkspaceError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return from_json(doc)


def dumps(ws: Workspace) -> str:
    doc = ws.to_json()
    lines = [f"  {json.dumps(k)}: {json.dumps(doc[k])}" for k in _KEYS if k in doc]
    return "{\n" + ",\n".join(lines) + "\n}\n"


def load(path) -> Workspace:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def dump(ws: Workspace, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(ws))
