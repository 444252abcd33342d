"""Finite measure spaces, Bochner integrals and exhaustive event oracles.

The sigma-algebra of a :class:`MeasureSpace` is always the full power set.
A function table (``FnTable``) is a tuple holding one vector per outcome;
on a finite space every such table is a simple, integrable function, so
integrals are plain weighted sums.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Optional, Sequence, Tuple

from .errors import CapacityError, DimensionError, PreconditionError, UniverseMismatchError, UnsupportedOrderError
from .numeric import RatLike, Vec, as_rat, common_dimension, diameter, l1_norm, vec, vscale, vsum
from .sigma import Partition

FnTable = Tuple[Vec, ...]

DEFAULT_EVENT_CAP = 20

__all__ = [
    "FnTable",
    "MeasureSpace",
    "AveragingReport",
    "event_cap",
    "as_table",
    "const_table",
    "table_dim",
    "norm_table",
    "integral",
    "set_integral",
    "measure_of",
    "ae_eq",
    "ae_le",
    "ae_ge",
    "ae_lt",
    "ae_gt",
    "independent",
    "averaging_oracle",
    "density_report",
    "density_witness",
    "restrict",
    "tail_diameter_integrals",
]


def event_cap() -> int:
    """Enumeration cap for 2^n oracles; ``MARTKIT_EVENT_CAP`` overrides the default."""
    raw = os.environ.get("MARTKIT_EVENT_CAP")
    return int(raw) if raw else DEFAULT_EVENT_CAP


def _check_cap(k: int, cap: Optional[int]) -> None:
    limit = event_cap() if cap is None else cap
    if k > limit:
        raise CapacityError(f"enumerating 2^{k} events exceeds the cap of 2^{limit}")


@dataclass(frozen=True)
class MeasureSpace:
    """Outcomes ``0..n-1`` with nonnegative rational weights.

    >>> MeasureSpace.uniform(4).weights[0]
    Fraction(1, 4)
    """

    weights: tuple[Fraction, ...]
    labels: tuple[str, ...] = field(default=())

    def __init__(self, weights: Iterable[RatLike], labels: Optional[Iterable[str]] = None):
        ws = tuple(as_rat(w) for w in weights)
        if not ws:
            raise ValueError("a measure space needs at least one outcome")
        for k, w in enumerate(ws):
            if w < 0:
                raise PreconditionError(f"negative weight {w} at outcome {k}")
        labs = tuple(str(k) for k in range(len(ws))) if labels is None else tuple(labels)
        if len(labs) != len(ws):
            raise ValueError(f"{len(labs)} labels for {len(ws)} outcomes")
        object.__setattr__(self, "weights", ws)
        object.__setattr__(self, "labels", labs)

    @classmethod
    def uniform(cls, n: int, labels: Optional[Iterable[str]] = None) -> "MeasureSpace":
        return cls([Fraction(1, n)] * n, labels)

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def total(self) -> Fraction:
        return sum(self.weights, Fraction(0))

    def is_probability(self) -> bool:
        return self.total == 1

    def support(self) -> list[int]:
        return [w for w, p in enumerate(self.weights) if p > 0]

    def to_json(self) -> dict:
        return {"outcomes": list(self.labels), "weights": [str(w) for w in self.weights]}


def as_table(values: Iterable, n: Optional[int] = None) -> FnTable:
    """Coerce scalars or vectors to an FnTable with a single shared dimension."""
    table = tuple(vec(v) for v in values)
    if n is not None and len(table) != n:
        raise UniverseMismatchError(f"expected {n} values, got {len(table)}")
    common_dimension(table)
    return table


def const_table(n: int, value) -> FnTable:
    v = vec(value)
    return (v,) * n


def table_dim(f: FnTable) -> int:
    d = common_dimension(f)
    if d is None:
        raise DimensionError("empty table")
    return d


def norm_table(f: FnTable) -> FnTable:
    """Pointwise L1 norm as a scalar table."""
    return tuple((l1_norm(v),) for v in f)


def _check_table(m: MeasureSpace, f: FnTable) -> int:
    if len(f) != m.n:
        raise UniverseMismatchError(f"table has {len(f)} entries, space has {m.n} outcomes")
    return table_dim(f)


def measure_of(m: MeasureSpace, a: Iterable[int]) -> Fraction:
    return sum((m.weights[w] for w in a), Fraction(0))


def integral(m: MeasureSpace, f: FnTable) -> Vec:
    d = _check_table(m, f)
    return vsum((vscale(p, v) for p, v in zip(m.weights, f)), d)


def set_integral(m: MeasureSpace, a: Iterable[int], f: FnTable) -> Vec:
    d = _check_table(m, f)
    a = set(a)
    if any(not 0 <= w < m.n for w in a):
        raise PreconditionError("event is not a subset of the universe")
    return vsum((vscale(m.weights[w], f[w]) for w in sorted(a)), d)


def _pointwise(m: MeasureSpace, f: FnTable, g: FnTable, rel: Callable, ordered: bool) -> bool:
    df, dg = _check_table(m, f), _check_table(m, g)
    if df != dg:
        raise DimensionError(f"dimension mismatch: {df} vs {dg}")
    if ordered and df != 1:
        raise UnsupportedOrderError(f"order relations need dimension 1, got {df}")
    return all(rel(f[w], g[w]) for w in m.support())


def ae_eq(m: MeasureSpace, f: FnTable, g: FnTable) -> bool:
    """``f == g`` at every outcome of positive weight."""
    return _pointwise(m, f, g, lambda a, b: a == b, False)


def ae_le(m: MeasureSpace, f: FnTable, g: FnTable) -> bool:
    return _pointwise(m, f, g, lambda a, b: a[0] <= b[0], True)


def ae_ge(m: MeasureSpace, f: FnTable, g: FnTable) -> bool:
    return _pointwise(m, f, g, lambda a, b: a[0] >= b[0], True)


def ae_lt(m: MeasureSpace, f: FnTable, g: FnTable) -> bool:
    return _pointwise(m, f, g, lambda a, b: a[0] < b[0], True)


def ae_gt(m: MeasureSpace, f: FnTable, g: FnTable) -> bool:
    return _pointwise(m, f, g, lambda a, b: a[0] > b[0], True)


def independent(m: MeasureSpace, p: Partition, q: Partition) -> bool:
    """Product rule ``mu(A & B) == mu(A) * mu(B)`` over all atom pairs."""
    if not m.is_probability():
        raise PreconditionError(f"independence needs a probability space, total mass is {m.total}")
    if p.n != m.n or q.n != m.n:
        raise UniverseMismatchError("partitions and space differ in size")
    for a in p.atoms:
        mu_a = measure_of(m, a)
        for b in q.atoms:
            if measure_of(m, set(a) & set(b)) != mu_a * measure_of(m, b):
                return False
    return True


def _subsets(n: int, descending: bool = False) -> Iterator[tuple[int, ...]]:
    masks = range((1 << n) - 1, -1, -1) if descending else range(1 << n)
    for mask in masks:
        yield tuple(w for w in range(n) if mask >> w & 1)


@dataclass(frozen=True)
class AveragingReport:
    """Outcome of checking the averaging theorem on one instance.

    ``premise_holds``: every event of positive measure averages into S.
    ``conclusion_holds``: f lands in S at every outcome of positive weight.
    Singletons are events here, so the premise implies the conclusion for
    any membership predicate, closed or not.
    """

    premise_holds: bool
    conclusion_holds: bool
    premise_witness: Optional[tuple[int, ...]] = None
    witness_average: Optional[Vec] = None
    conclusion_witness: Optional[int] = None


def averaging_oracle(
    m: MeasureSpace, f: FnTable, member: Callable[[Vec], bool], cap: Optional[int] = None
) -> AveragingReport:
    """Enumerate all events of positive measure and test their averages.

    Events are scanned from the full space downward (descending bitmask),
    so the witness reported is the largest-mask failing event.
    """
    _check_table(m, f)
    _check_cap(m.n, cap)
    witness = average = None
    for a in _subsets(m.n, descending=True):
        mu = measure_of(m, a)
        if mu == 0:
            continue
        avg = vscale(1 / mu, set_integral(m, a, f))
        if not member(avg):
            witness, average = a, avg
            break
    bad_point = next((w for w in m.support() if not member(f[w])), None)
    return AveragingReport(
        premise_holds=witness is None,
        conclusion_holds=bad_point is None,
        premise_witness=witness,
        witness_average=average,
        conclusion_witness=bad_point,
    )


def density_witness(m: MeasureSpace, f: FnTable, g: FnTable, cap: Optional[int] = None) -> Optional[tuple[int, ...]]:
    """First event (ascending bitmask) on which the integrals of f and g differ."""
    _check_table(m, f)
    _check_table(m, g)
    _check_cap(m.n, cap)
    for a in _subsets(m.n):
        if set_integral(m, a, f) != set_integral(m, a, g):
            return a
    return None


def density_report(m: MeasureSpace, f: FnTable, g: FnTable, cap: Optional[int] = None) -> bool:
    """True iff f and g have equal integrals over every event."""
    return density_witness(m, f, g, cap) is None


def restrict(m: MeasureSpace, a: Iterable[int]) -> MeasureSpace:
    """Same outcomes, weights zeroed outside ``a``."""
    keep = set(a)
    if any(not 0 <= w < m.n for w in keep):
        raise PreconditionError("restriction set is not a subset of the universe")
    return MeasureSpace([p if w in keep else Fraction(0) for w, p in enumerate(m.weights)], m.labels)


def tail_diameter_integrals(m: MeasureSpace, seq: Sequence[FnTable]) -> list[Fraction]:
    """``[integral of w -> diam{seq[i](w) : i >= k} for k in range(len(seq))]``."""
    if not seq:
        raise PreconditionError("sequence must be nonempty")
    dims = {_check_table(m, f) for f in seq}
    if len(dims) > 1:
        raise DimensionError(f"mixed dimensions {sorted(dims)}")
    out = []
    for k in range(len(seq)):
        diam = [diameter(f[w] for f in seq[k:]) for w in range(m.n)]
        out.append(sum((p * x for p, x in zip(m.weights, diam)), Fraction(0)))
    return out
