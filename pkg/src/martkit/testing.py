"""Seeded random instance generators for property checks.

Every generator takes a :class:`random.Random`, so a suite is reproduced
exactly by its seed.  Tables are built as finite combinations of
indicator functions of atoms with rational coefficients, which on a
finite space covers every simple function.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from .condexp import cond_exp
from .measure import FnTable, MeasureSpace
from .process import Filtration, ProcessTable
from .sigma import Partition


def random_rat(rng: random.Random, lo: int = -5, hi: int = 5, max_den: int = 4) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(lo * den, hi * den), den)


def random_weights(rng: random.Random, n: int, max_den: int = 12, probability: bool = True) -> list[Fraction]:
    """Weights ``k/D`` with ``D <= max_den``; zeros occur naturally.

    With ``probability=True`` the weights sum to one.
    """
    if probability:
        den = rng.randint(1, max_den)
        cuts = sorted(rng.randint(0, den) for _ in range(n - 1))
        parts = [b - a for a, b in zip([0] + cuts, cuts + [den])]
        return [Fraction(k, den) for k in parts]
    return [Fraction(rng.randint(0, max_den), rng.randint(1, max_den)) for _ in range(n)]


def random_space(rng: random.Random, n: int, max_den: int = 12, probability: bool = True) -> MeasureSpace:
    return MeasureSpace(random_weights(rng, n, max_den, probability))


def random_partition(rng: random.Random, n: int, blocks: Optional[int] = None) -> Partition:
    k = rng.randint(1, n) if blocks is None else blocks
    labels = [rng.randrange(k) for _ in range(n)]
    groups: dict[int, list[int]] = {}
    for w, label in enumerate(labels):
        groups.setdefault(label, []).append(w)
    return Partition(n, groups.values())


def random_refinement(rng: random.Random, p: Partition, split: float = 0.5) -> Partition:
    """Split some atoms of ``p`` at random; the result refines ``p``."""
    atoms = []
    for atom in p.atoms:
        if len(atom) > 1 and rng.random() < split:
            k = rng.randint(2, len(atom))
            pieces: dict[int, list[int]] = {}
            for w in atom:
                pieces.setdefault(rng.randrange(k), []).append(w)
            atoms.extend(pieces.values())
        else:
            atoms.append(list(atom))
    return Partition(p.n, atoms)


def random_filtration(rng: random.Random, n: int, horizon: int) -> Filtration:
    """Increasing chain starting from a coarse random partition."""
    current = random_partition(rng, n, rng.randint(1, max(1, (n + 1) // 2)))
    parts = [current]
    for _ in range(horizon):
        current = random_refinement(rng, current, rng.choice([0.0, 0.3, 0.7]))
        parts.append(current)
    return Filtration(parts)


def random_table(rng: random.Random, n: int, d: int = 1, lo: int = -5, hi: int = 5) -> FnTable:
    # a small pool of values makes ties (and hence coarse level sets) common
    pool = [tuple(random_rat(rng, lo, hi) for _ in range(d)) for _ in range(rng.randint(1, n))]
    return tuple(rng.choice(pool) for _ in range(n))


def random_measurable_table(rng: random.Random, p: Partition, d: int = 1, lo: int = -5, hi: int = 5) -> FnTable:
    """Sum over atoms of a random coefficient times the atom's indicator."""
    out: list = [None] * p.n
    for atom in p.atoms:
        v = tuple(random_rat(rng, lo, hi) for _ in range(d))
        for w in atom:
            out[w] = v
    return tuple(out)


def random_adapted_process(rng: random.Random, f: Filtration, d: int = 1) -> ProcessTable:
    return ProcessTable([random_measurable_table(rng, part, d) for part in f.parts])


def random_predictable_process(rng: random.Random, f: Filtration, d: int = 1, lo: int = -5, hi: int = 5) -> ProcessTable:
    """``X_0`` is ``F_0``-measurable and ``X_{t+1}`` is ``F_t``-measurable."""
    tables = [random_measurable_table(rng, f[0], d, lo, hi)]
    tables += [random_measurable_table(rng, f[t], d, lo, hi) for t in range(f.horizon)]
    return ProcessTable(tables)


def random_martingale(rng: random.Random, m: MeasureSpace, f: Filtration, d: int = 1) -> ProcessTable:
    g = random_measurable_table(rng, f[f.horizon], d)
    return ProcessTable([cond_exp(m, part, g).table for part in f.parts])


def random_drift(rng: random.Random, f: Filtration, sign: int = 1) -> ProcessTable:
    """Predictable monotone scalar process starting at 0 (increasing for ``sign=1``)."""
    n = f.n
    current = [Fraction(0)] * n
    tables = [[(v,) for v in current]]
    for t in range(f.horizon):
        step = random_measurable_table(rng, f[t], 1, 0, 3)
        current = [c + sign * s[0] for c, s in zip(current, step)]
        tables.append([(v,) for v in current])
    return ProcessTable(tables)
