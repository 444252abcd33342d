"""Discrete-time processes on ``{0..T}``, filtrations, and measurability classes.

Adaptedness, progressive measurability and predictability are each
computed from their own definition: the progressive check tests the joint
map ``(i, w) -> X_i(w)`` against a product partition, and the predictable
check tests it against the predictable sigma-algebra.  That adapted and
progressive coincide, and that predictable coincides with the shifted
adaptedness test, are therefore facts the test-suite verifies rather than
facts baked into the code.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence, Union

from .errors import DimensionError, HorizonMismatchError, UniverseMismatchError, UnsupportedOrderError
from .measure import FnTable, as_table, table_dim
from .numeric import RatLike, Vec, as_rat, l1_norm, vadd, vec, vneg, vscale, vsub, zero
from .sigma import (
    Partition,
    generate_from_function,
    is_measurable_fn,
    join,
    predictable_sigma,
    product_time_partition,
    refines,
)

__all__ = [
    "ProcessTable",
    "Filtration",
    "validate_filtration",
    "natural_filtration",
    "is_adapted",
    "is_progressive",
    "is_predictable",
    "is_predictable_shifted",
    "p_add",
    "p_sub",
    "p_neg",
    "p_scale",
    "p_scale_fn",
    "p_max",
    "p_norm",
    "p_compose",
    "p_partial_sum",
]


@dataclass(frozen=True)
class ProcessTable:
    """Values ``tables[t][w]`` for times ``0..T`` and outcomes ``0..n-1``."""

    tables: tuple[FnTable, ...]

    def __init__(self, tables: Iterable[Iterable]):
        ts = tuple(as_table(t) for t in tables)
        if not ts:
            raise HorizonMismatchError("a process needs at least one time")
        if len({len(t) for t in ts}) != 1:
            raise UniverseMismatchError("tables differ in number of outcomes")
        if len({table_dim(t) for t in ts}) != 1:
            raise DimensionError("tables differ in dimension")
        object.__setattr__(self, "tables", ts)

    @classmethod
    def constant(cls, horizon: int, table: Iterable) -> "ProcessTable":
        t = as_table(table)
        return cls([t] * (horizon + 1))

    @property
    def horizon(self) -> int:
        return len(self.tables) - 1

    @property
    def n(self) -> int:
        return len(self.tables[0])

    @property
    def d(self) -> int:
        return len(self.tables[0][0])

    def __getitem__(self, t: int) -> FnTable:
        return self.tables[t]

    def __len__(self) -> int:
        return len(self.tables)

    def joint(self, upto: Optional[int] = None) -> list[Vec]:
        """Flat table of ``(t, w) -> X_t(w)`` over ``{0..upto} x Omega``."""
        last = self.horizon if upto is None else upto
        return [v for t in range(last + 1) for v in self.tables[t]]

    def to_json(self) -> dict:
        return {
            "times": len(self.tables),
            "values": [[[str(a) for a in v] for v in table] for table in self.tables],
        }


@dataclass(frozen=True)
class Filtration:
    """Sigma-algebras ``F_0, ..., F_T`` on a common outcome set."""

    parts: tuple[Partition, ...]

    def __init__(self, parts: Iterable[Partition]):
        ps = tuple(parts)
        if not ps:
            raise HorizonMismatchError("a filtration needs at least one time")
        if len({p.n for p in ps}) != 1:
            raise UniverseMismatchError("partitions differ in universe size")
        object.__setattr__(self, "parts", ps)

    @classmethod
    def constant(cls, horizon: int, p: Partition) -> "Filtration":
        return cls([p] * (horizon + 1))

    @property
    def horizon(self) -> int:
        return len(self.parts) - 1

    @property
    def n(self) -> int:
        return self.parts[0].n

    def __getitem__(self, t: int) -> Partition:
        return self.parts[t]

    def __len__(self) -> int:
        return len(self.parts)

    def first_violation(self) -> Optional[tuple[int, int]]:
        """First pair ``i < j`` with ``F_i`` not contained in ``F_j``."""
        for j in range(1, len(self.parts)):
            for i in range(j):
                if not refines(self.parts[j], self.parts[i]):
                    return (i, j)
        return None

    def to_json(self) -> dict:
        return {"type": "explicit", "partitions": [p.to_json() for p in self.parts]}


def validate_filtration(f: Filtration) -> bool:
    return f.first_violation() is None


def natural_filtration(x: ProcessTable) -> Filtration:
    """``F_t`` generated by ``X_0, ..., X_t``."""
    parts = []
    current = Partition.trivial(x.n)
    for table in x.tables:
        current = join(current, generate_from_function(x.n, table))
        parts.append(current)
    return Filtration(parts)


def _check_pair(x: ProcessTable, f: Filtration) -> None:
    if x.horizon != f.horizon:
        raise HorizonMismatchError(f"process horizon {x.horizon} vs filtration horizon {f.horizon}")
    if x.n != f.n:
        raise UniverseMismatchError(f"process on {x.n} outcomes, filtration on {f.n}")


def first_unadapted(x: ProcessTable, f: Filtration) -> Optional[int]:
    """Earliest ``t`` with ``X_t`` not ``F_t``-measurable, or ``None``."""
    _check_pair(x, f)
    return next((t for t in range(len(x)) if not is_measurable_fn(f[t], x[t])), None)


def is_adapted(x: ProcessTable, f: Filtration) -> bool:
    return first_unadapted(x, f) is None


def is_progressive(x: ProcessTable, f: Filtration) -> bool:
    """For each t, ``(i, w) -> X_i(w)`` on ``{0..t} x Omega`` is measurable
    for the product of the discrete time algebra with ``F_t``."""
    _check_pair(x, f)
    return all(
        is_measurable_fn(product_time_partition(t, f[t]).partition, x.joint(t)) for t in range(len(x))
    )


def is_predictable(x: ProcessTable, f: Filtration) -> bool:
    """Joint map measurable for the predictable sigma-algebra of ``f``."""
    _check_pair(x, f)
    return is_measurable_fn(predictable_sigma(f).partition, x.joint())


def is_predictable_shifted(x: ProcessTable, f: Filtration) -> bool:
    """``X_0`` is ``F_0``-measurable and ``X_{t+1}`` is ``F_t``-measurable."""
    _check_pair(x, f)
    if not is_measurable_fn(f[0], x[0]):
        return False
    return all(is_measurable_fn(f[t], x[t + 1]) for t in range(x.horizon))


def _zip_check(x: ProcessTable, y: ProcessTable) -> None:
    if x.horizon != y.horizon:
        raise HorizonMismatchError(f"horizons differ: {x.horizon} vs {y.horizon}")
    if x.n != y.n:
        raise UniverseMismatchError(f"universes differ: {x.n} vs {y.n}")
    if x.d != y.d:
        raise DimensionError(f"dimensions differ: {x.d} vs {y.d}")


def _map2(x: ProcessTable, y: ProcessTable, op: Callable[[Vec, Vec], Vec]) -> ProcessTable:
    _zip_check(x, y)
    return ProcessTable([[op(a, b) for a, b in zip(tx, ty)] for tx, ty in zip(x.tables, y.tables)])


def _map1(x: ProcessTable, op: Callable[[int, Vec], Vec]) -> ProcessTable:
    return ProcessTable([[op(t, v) for v in table] for t, table in enumerate(x.tables)])


def p_add(x: ProcessTable, y: ProcessTable) -> ProcessTable:
    return _map2(x, y, vadd)


def p_sub(x: ProcessTable, y: ProcessTable) -> ProcessTable:
    return _map2(x, y, vsub)


def p_neg(x: ProcessTable) -> ProcessTable:
    return _map1(x, lambda t, v: vneg(v))


def p_scale(c: RatLike, x: ProcessTable) -> ProcessTable:
    c = as_rat(c)
    return _map1(x, lambda t, v: vscale(c, v))


def p_scale_fn(c: Union[Callable[[int], RatLike], Sequence[RatLike]], x: ProcessTable) -> ProcessTable:
    """Multiply ``X_t`` by the time-dependent scalar ``c(t)`` (or ``c[t]``)."""
    coeff = c if callable(c) else c.__getitem__
    return _map1(x, lambda t, v: vscale(coeff(t), v))


def p_max(x: ProcessTable, y: Union[ProcessTable, RatLike]) -> ProcessTable:
    """Pointwise maximum of scalar processes; ``y`` may be a constant."""
    if x.d != 1:
        raise UnsupportedOrderError("p_max needs a scalar process")
    if not isinstance(y, ProcessTable):
        y = ProcessTable.constant(x.horizon, [as_rat(y)] * x.n)
    if y.d != 1:
        raise UnsupportedOrderError("p_max needs a scalar process")
    return _map2(x, y, lambda a, b: a if a[0] >= b[0] else b)


def p_norm(x: ProcessTable) -> ProcessTable:
    return _map1(x, lambda t, v: (l1_norm(v),))


def p_compose(g: Callable[[int, Vec], Iterable], x: ProcessTable) -> ProcessTable:
    """Apply ``g(t, X_t(w))`` pointwise; ``g`` may change the dimension."""
    return _map1(x, lambda t, v: vec(g(t, v)))


def p_partial_sum(x: ProcessTable) -> ProcessTable:
    """``S_t = X_0 + ... + X_t``."""
    tables = []
    acc = [zero(x.d)] * x.n
    for table in x.tables:
        acc = [vadd(a, v) for a, v in zip(acc, table)]
        tables.append(acc)
    return ProcessTable(tables)
