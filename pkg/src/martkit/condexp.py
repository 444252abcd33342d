"""Conditional expectation on finite spaces.

Given a sub-sigma-algebra (a :class:`~martkit.sigma.Partition`), the
conditional expectation of a table is its measure-weighted average over
each atom.  Atoms of measure zero get the zero vector; any other choice
would agree almost everywhere, and :class:`CondExpResult` records where
the convention was used.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import DimensionError, PreconditionError, UniverseMismatchError
from .measure import FnTable, MeasureSpace, _check_cap, _check_table, independent, measure_of, set_integral
from .numeric import vscale, zero
from .sigma import Partition, generate_from_function, is_measurable_fn, join

__all__ = ["CondExpResult", "cond_exp", "has_cond_exp", "cond_exp_pull_out", "cond_exp_indep"]


@dataclass(frozen=True)
class CondExpResult:
    table: FnTable
    null_atoms: tuple[tuple[int, ...], ...] = ()

    def to_json(self) -> dict:
        return {
            "table": [[str(a) for a in v] for v in self.table],
            "null_atoms": [list(a) for a in self.null_atoms],
        }


def _check_alg(m: MeasureSpace, f_alg: Partition) -> None:
    if f_alg.n != m.n:
        raise UniverseMismatchError(f"partition on {f_alg.n} outcomes, space has {m.n}")


def cond_exp(m: MeasureSpace, f_alg: Partition, x: FnTable) -> CondExpResult:
    """Atom averages of ``x``.

    >>> from martkit import MeasureSpace, as_table
    >>> m = MeasureSpace.uniform(4)
    >>> r = cond_exp(m, Partition(4, [[0, 1], [2, 3]]), as_table([1, 3, 5, 7]))
    >>> [v[0] for v in r.table]
    [Fraction(2, 1), Fraction(2, 1), Fraction(6, 1), Fraction(6, 1)]
    """
    _check_alg(m, f_alg)
    d = _check_table(m, x)
    out: list = [None] * m.n
    null = []
    for atom in f_alg.atoms:
        mu = measure_of(m, atom)
        if mu == 0:
            value = zero(d)
            null.append(atom)
        else:
            value = vscale(1 / mu, set_integral(m, atom, x))
        for w in atom:
            out[w] = value
    return CondExpResult(tuple(out), tuple(null))


def has_cond_exp(
    m: MeasureSpace, f_alg: Partition, x: FnTable, g: FnTable, cap: Optional[int] = None
) -> bool:
    """Defining property: g is measurable and matches x's integral on every event."""
    _check_alg(m, f_alg)
    if _check_table(m, x) != _check_table(m, g):
        raise DimensionError("x and g differ in dimension")
    _check_cap(len(f_alg), cap)
    if not is_measurable_fn(f_alg, g):
        return False
    return all(set_integral(m, a, x) == set_integral(m, a, g) for a in f_alg.events())


def cond_exp_pull_out(m: MeasureSpace, f_alg: Partition, scalar_f: FnTable, g: FnTable) -> FnTable:
    """Conditional expectation of ``scalar_f * g`` for an ``f_alg``-measurable scalar factor.

    The result agrees almost everywhere with ``scalar_f * cond_exp(g)``.
    """
    _check_alg(m, f_alg)
    if _check_table(m, scalar_f) != 1:
        raise DimensionError("the factor pulled out must be scalar")
    _check_table(m, g)
    if not is_measurable_fn(f_alg, scalar_f):
        raise PreconditionError("the factor is not measurable with respect to the conditioning algebra")
    product = tuple(vscale(s[0], v) for s, v in zip(scalar_f, g))
    return cond_exp(m, f_alg, product).table


def cond_exp_indep(m: MeasureSpace, f_alg: Partition, g_alg: Partition, x: FnTable) -> FnTable:
    """Conditional expectation given ``f_alg`` joined with independent information ``g_alg``.

    Requires ``g_alg`` independent of the algebra generated by ``f_alg``
    and ``x`` together; the result then agrees a.e. with conditioning on
    ``f_alg`` alone.  Scalar tables only.
    """
    _check_alg(m, f_alg)
    _check_alg(m, g_alg)
    if _check_table(m, x) != 1:
        raise DimensionError("conditioning on independent information is supported for scalar tables only")
    known = join(f_alg, generate_from_function(m.n, x))
    if not independent(m, known, g_alg):
        raise PreconditionError("the added sigma-algebra is not independent of sigma(F, x)")
    return cond_exp(m, join(f_alg, g_alg), x).table

