"""Martingale, submartingale and supermartingale verification.

A relation name describes how ``X_i`` compares with what the future is
expected to be, ``E(X_j | F_i)``:

=========  =====================  ===============
relation   condition              class
=========  =====================  ===============
``"eq"``   ``X_i == E(X_j|F_i)``  martingale
``"le"``   ``X_i <= E(X_j|F_i)``  submartingale
``"ge"``   ``X_i >= E(X_j|F_i)``  supermartingale
=========  =====================  ===============

Each class can be checked four independent ways: pairwise over all
``i <= j``, on successive times only, through set integrals over every
``F_i`` event, and through the conditional expectation of increments.
Failures are reported in lexicographic ``(i, j, event)`` order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .condexp import cond_exp
from .errors import (
    HorizonMismatchError,
    MartkitError,
    NotAdaptedError,
    UniverseMismatchError,
    UnsupportedOrderError,
)
from .measure import MeasureSpace, _check_cap, measure_of, set_integral
from .numeric import Vec, vadd, vscale, vsub, zero
from .process import Filtration, ProcessTable, first_unadapted

__all__ = [
    "RELATIONS",
    "CHARACTERIZATIONS",
    "Counterexample",
    "KindVerdict",
    "ClassificationReport",
    "InvariantViolation",
    "violations",
    "check_pairwise",
    "check_succ",
    "check_set_integral",
    "check_difference",
    "is_martingale",
    "is_submartingale",
    "is_supermartingale",
    "classify",
    "cond_exp_process",
    "transform",
]

RELATIONS = ("eq", "le", "ge")
CHARACTERIZATIONS = ("pairwise", "successor", "set_integral", "difference")
KIND_OF = {"eq": "martingale", "le": "submartingale", "ge": "supermartingale"}

_HOLDS = {
    "eq": lambda a, b: a == b,
    "le": lambda a, b: a[0] <= b[0],
    "ge": lambda a, b: a[0] >= b[0],
}


class InvariantViolation(MartkitError):
    """Two routes that must agree gave different answers (a bug, never expected)."""


@dataclass(frozen=True)
class Counterexample:
    """Where ``lhs <relation> rhs`` fails: times ``i <= j`` and an event of ``F_i``."""

    check: str
    i: int
    j: int
    event: tuple[int, ...]
    lhs: Vec
    rhs: Vec

    def to_json(self, labels: Optional[Sequence[str]] = None) -> dict:
        out = {
            "check": self.check,
            "i": self.i,
            "j": self.j,
            "event": list(self.event),
            "lhs": [str(a) for a in self.lhs],
            "rhs": [str(a) for a in self.rhs],
        }
        if labels is not None:
            out["event_labels"] = [labels[w] for w in self.event]
        return out


def _prepare(m: MeasureSpace, f: Filtration, x: ProcessTable, relation: str) -> None:
    if relation not in _HOLDS:
        raise ValueError(f"relation must be one of {RELATIONS}, got {relation!r}")
    if x.n != m.n or f.n != m.n:
        raise UniverseMismatchError("space, filtration and process differ in size")
    if x.horizon != f.horizon:
        raise HorizonMismatchError(f"process horizon {x.horizon} vs filtration horizon {f.horizon}")
    if relation != "eq" and x.d != 1:
        raise UnsupportedOrderError(f"order relations need a scalar process, got dimension {x.d}")
    t = first_unadapted(x, f)
    if t is not None:
        raise NotAdaptedError(t)


def _atom_violations(
    m: MeasureSpace, f: Filtration, x: ProcessTable, relation: str, check: str, pairs
) -> Iterator[Counterexample]:
    holds = _HOLDS[relation]
    for i, j in pairs:
        expected = cond_exp(m, f[i], x[j]).table
        for atom in f[i].atoms:
            if measure_of(m, atom) == 0:
                continue
            w = atom[0]
            if not holds(x[i][w], expected[w]):
                yield Counterexample(check, i, j, atom, x[i][w], expected[w])


def _pairs(horizon: int, successor: bool):
    if successor:
        return ((i, i + 1) for i in range(horizon))
    return ((i, j) for i in range(horizon + 1) for j in range(i, horizon + 1))


def _set_integral_violations(
    m: MeasureSpace, f: Filtration, x: ProcessTable, relation: str, successor: bool, cap
) -> Iterator[Counterexample]:
    holds = _HOLDS[relation]
    check = "set_integral_successor" if successor else "set_integral"
    for part in f.parts:
        _check_cap(len(part), cap)
    for i, j in _pairs(x.horizon, successor):
        for event in f[i].events():
            a = tuple(sorted(event))
            lhs, rhs = set_integral(m, a, x[i]), set_integral(m, a, x[j])
            if not holds(lhs, rhs):
                yield Counterexample(check, i, j, a, lhs, rhs)


def _difference_violations(
    m: MeasureSpace, f: Filtration, x: ProcessTable, relation: str
) -> Iterator[Counterexample]:
    # X_i R E(X_{i+1}|F_i)  iff  0 R E(X_{i+1} - X_i | F_i)
    holds = _HOLDS[relation]
    origin = zero(x.d)
    for i in range(x.horizon):
        increment = tuple(vsub(b, a) for a, b in zip(x[i], x[i + 1]))
        expected = cond_exp(m, f[i], increment).table
        for atom in f[i].atoms:
            if measure_of(m, atom) == 0:
                continue
            if not holds(origin, expected[atom[0]]):
                yield Counterexample("difference", i, i + 1, atom, origin, expected[atom[0]])


def violations(
    m: MeasureSpace,
    f: Filtration,
    x: ProcessTable,
    relation: str = "eq",
    characterization: str = "pairwise",
    cap: Optional[int] = None,
) -> Iterator[Counterexample]:
    """Lazily yield every failure of one characterization, in lexicographic order."""
    _prepare(m, f, x, relation)
    if characterization == "pairwise":
        return _atom_violations(m, f, x, relation, "pairwise", _pairs(x.horizon, False))
    if characterization == "successor":
        return _atom_violations(m, f, x, relation, "successor", _pairs(x.horizon, True))
    if characterization == "set_integral":
        return _set_integral_violations(m, f, x, relation, False, cap)
    if characterization == "set_integral_successor":
        return _set_integral_violations(m, f, x, relation, True, cap)
    if characterization == "difference":
        return _difference_violations(m, f, x, relation)
    raise ValueError(f"unknown characterization {characterization!r}")


def _holds(*args, **kwargs) -> bool:
    return next(violations(*args, **kwargs), None) is None


def check_pairwise(m: MeasureSpace, f: Filtration, x: ProcessTable, relation: str = "eq") -> bool:
    """``X_i R E(X_j | F_i)`` a.e. for all ``i <= j``."""
    return _holds(m, f, x, relation, "pairwise")


def check_succ(m: MeasureSpace, f: Filtration, x: ProcessTable, relation: str = "eq") -> bool:
    """``X_n R E(X_{n+1} | F_n)`` a.e. for all ``n < T``."""
    return _holds(m, f, x, relation, "successor")


def check_set_integral(
    m: MeasureSpace,
    f: Filtration,
    x: ProcessTable,
    relation: str = "eq",
    successor: bool = False,
    cap: Optional[int] = None,
) -> bool:
    """``integral_A X_i R integral_A X_j`` for every ``A`` in ``F_i``."""
    name = "set_integral_successor" if successor else "set_integral"
    return _holds(m, f, x, relation, name, cap=cap)


def check_difference(m: MeasureSpace, f: Filtration, x: ProcessTable, relation: str = "eq") -> bool:
    """Sign of ``E(X_{i+1} - X_i | F_i)``: zero (eq), nonnegative (le), nonpositive (ge)."""
    return _holds(m, f, x, relation, "difference")


def is_martingale(m: MeasureSpace, f: Filtration, x: ProcessTable) -> bool:
    """Fair-game check.

    >>> from martkit.scenarios import coin_walk
    >>> m, f, x = coin_walk("1/2")
    >>> is_martingale(m, f, x)
    True
    """
    return check_pairwise(m, f, x, "eq")


def is_submartingale(m: MeasureSpace, f: Filtration, x: ProcessTable) -> bool:
    return check_pairwise(m, f, x, "le")


def is_supermartingale(m: MeasureSpace, f: Filtration, x: ProcessTable) -> bool:
    return check_pairwise(m, f, x, "ge")


@dataclass(frozen=True)
class KindVerdict:
    """Verdict of one class check.

    ``verdict`` is ``True``/``False``, ``"unsupported_order"`` for order
    checks on vector processes, or ``None`` when the check was skipped.
    """

    verdict: object
    characterizations: dict = field(default_factory=dict)
    counterexample: Optional[Counterexample] = None
    violations: tuple = ()

    def to_json(self, labels=None) -> dict:
        return {
            "verdict": self.verdict,
            "characterizations": dict(self.characterizations),
            "counterexample": None if self.counterexample is None else self.counterexample.to_json(labels),
            "violations": [v.to_json(labels) for v in self.violations],
        }


@dataclass(frozen=True)
class ClassificationReport:
    adapted: bool
    unadapted_time: Optional[int]
    dimension: int
    kind: str
    martingale: KindVerdict
    submartingale: KindVerdict
    supermartingale: KindVerdict
    labels: tuple = ()

    def to_json(self) -> dict:
        labels = self.labels or None
        return {
            "adapted": self.adapted,
            "unadapted_time": self.unadapted_time,
            "dimension": self.dimension,
            "kind": self.kind,
            "martingale": self.martingale.to_json(labels),
            "submartingale": self.submartingale.to_json(labels),
            "supermartingale": self.supermartingale.to_json(labels),
        }


def _verdict(m, f, x, relation, characterizations, cap) -> KindVerdict:
    if relation != "eq" and x.d != 1:
        return KindVerdict("unsupported_order")
    results = {}
    counterexample = None
    found: tuple = ()
    for k, name in enumerate(characterizations):
        failures = violations(m, f, x, relation, name, cap=cap)
        if k == 0 and name != "set_integral":
            # the first atom-level characterization supplies the full violation list
            found = tuple(failures)
            first = found[0] if found else None
        else:
            first = next(failures, None)
        results[name] = first is None
        if counterexample is None:
            counterexample = first
    if len(set(results.values())) > 1:
        raise InvariantViolation(f"{KIND_OF[relation]} characterizations disagree: {results}")
    return KindVerdict(all(results.values()), results, counterexample, found)


def classify(
    m: MeasureSpace,
    f: Filtration,
    x: ProcessTable,
    characterizations: Sequence[str] = CHARACTERIZATIONS,
    cap: Optional[int] = None,
) -> ClassificationReport:
    """Run every selected characterization for all three classes.

    Non-adaptedness is reported rather than raised; the class checks are
    then skipped.
    """
    unknown = set(characterizations) - set(CHARACTERIZATIONS)
    if unknown or not characterizations:
        raise ValueError(f"characterizations must be drawn from {CHARACTERIZATIONS}")
    if x.horizon != f.horizon:
        raise HorizonMismatchError(f"process horizon {x.horizon} vs filtration horizon {f.horizon}")
    t = first_unadapted(x, f)
    if t is not None:
        skipped = KindVerdict(None)
        return ClassificationReport(False, t, x.d, "none", skipped, skipped, skipped, m.labels)
    mart = _verdict(m, f, x, "eq", characterizations, cap)
    sub = _verdict(m, f, x, "le", characterizations, cap)
    sup = _verdict(m, f, x, "ge", characterizations, cap)
    if x.d == 1 and mart.verdict != (sub.verdict and sup.verdict):
        raise InvariantViolation("martingale verdict differs from submartingale-and-supermartingale")
    if mart.verdict:
        kind = "martingale"
    elif x.d != 1:
        kind = "unsupported_order"
    elif sub.verdict:
        kind = "submartingale"
    elif sup.verdict:
        kind = "supermartingale"
    else:
        kind = "none"
    return ClassificationReport(True, None, x.d, kind, mart, sub, sup, m.labels)


def cond_exp_process(m: MeasureSpace, f: Filtration, g) -> ProcessTable:
    """``X_t = E(g | F_t)``, a martingale by the tower property."""
    return ProcessTable([cond_exp(m, part, g).table for part in f.parts])


def transform(c: ProcessTable, x: ProcessTable) -> ProcessTable:
    """Martingale transform ``Y_n = sum_{i<n} C_{i+1} (X_{i+1} - X_i)``, ``Y_0 = 0``.

    ``c`` is a scalar process (the stake placed on round ``i+1`` is ``C_{i+1}``;
    ``C_0`` is never used).
    """
    if c.horizon != x.horizon:
        raise HorizonMismatchError(f"stake horizon {c.horizon} vs process horizon {x.horizon}")
    if c.n != x.n:
        raise UniverseMismatchError("stake and process differ in number of outcomes")
    if c.d != 1:
        raise UnsupportedOrderError("stakes must be a scalar process")
    current = [zero(x.d)] * x.n
    tables = [current]
    for t in range(1, len(x)):
        current = [
            vadd(y, vscale(c[t][w][0], vsub(x[t][w], x[t - 1][w]))) for w, y in enumerate(current)
        ]
        tables.append(current)
    return ProcessTable(tables)
