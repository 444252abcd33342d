"""Finite sigma-algebras stored as partitions into atoms.

On a finite outcome set ``{0, ..., n-1}`` every sigma-algebra consists of
all unions of the blocks of a unique partition, so a :class:`Partition`
is the whole sigma-algebra.  Atoms are kept sorted and ordered by their
least element, which makes ``==`` coincide with equality of algebras.

The refinement order here is the *inclusion order of the algebras*:
``refines(fine, coarse)`` means ``coarse`` is a sub-sigma-algebra of
``fine``.  ``join`` is the generated algebra of a union, i.e. the common
refinement.

Time-indexed product spaces ``{0..T} x Omega`` reuse the same machinery
through the flat encoding ``t * n + omega`` (see :class:`TimedPartition`).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator, Sequence

from .errors import PreconditionError, UniverseMismatchError

__all__ = [
    "Partition",
    "TimedPartition",
    "generate",
    "generate_from_function",
    "refines",
    "join",
    "is_measurable_set",
    "is_measurable_fn",
    "product_time_partition",
    "predictable_sigma",
]


def _canonical(atoms: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    blocks = [tuple(sorted(a)) for a in atoms]
    return tuple(sorted((b for b in blocks if b), key=lambda b: b[0]))


@dataclass(frozen=True)
class Partition:
    """A sigma-algebra on ``range(n)``, represented by its atoms.

    >>> Partition(4, [[3, 2], [1, 0]]).atoms
    ((0, 1), (2, 3))
    """

    n: int
    atoms: tuple[tuple[int, ...], ...]

    def __init__(self, n: int, atoms: Iterable[Iterable[int]]):
        if n < 1:
            raise ValueError("universe size must be positive")
        canon = _canonical(atoms)
        seen: set[int] = set()
        for atom in canon:
            for w in atom:
                if not 0 <= w < n:
                    raise ValueError(f"outcome {w} outside universe of size {n}")
                if w in seen:
                    raise ValueError(f"outcome {w} appears in more than one atom")
                seen.add(w)
        if len(seen) != n:
            missing = sorted(set(range(n)) - seen)
            raise ValueError(f"atoms do not cover outcomes {missing}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "atoms", canon)

    @classmethod
    def trivial(cls, n: int) -> "Partition":
        return cls(n, [range(n)])

    @classmethod
    def discrete(cls, n: int) -> "Partition":
        return cls(n, [[w] for w in range(n)])

    def __len__(self) -> int:
        return len(self.atoms)

    def __repr__(self) -> str:
        return f"Partition({self.n}, {[list(a) for a in self.atoms]})"

    def atom_index(self) -> list[int]:
        """``atom_index()[w]`` is the position of the atom containing ``w``."""
        index = [0] * self.n
        for k, atom in enumerate(self.atoms):
            for w in atom:
                index[w] = k
        return index

    def atom_of(self, w: int) -> tuple[int, ...]:
        for atom in self.atoms:
            if w in atom:
                return atom
        raise IndexError(w)

    def events(self) -> Iterator[frozenset[int]]:
        """Every measurable set, in order of the atom bitmask 0 .. 2^k - 1."""
        k = len(self.atoms)
        for mask in range(1 << k):
            yield frozenset(w for i in range(k) if mask >> i & 1 for w in self.atoms[i])

    def to_json(self) -> list[list[int]]:
        return [list(a) for a in self.atoms]


@dataclass(frozen=True)
class TimedPartition:
    """A partition of ``{0..horizon} x range(base_n)`` in flat encoding."""

    horizon: int
    base_n: int
    partition: Partition

    def __post_init__(self):
        if self.partition.n != (self.horizon + 1) * self.base_n:
            raise UniverseMismatchError("flat universe does not match (horizon + 1) * base_n")

    @property
    def atoms(self) -> tuple[tuple[int, ...], ...]:
        return self.partition.atoms

    def encode(self, t: int, w: int) -> int:
        return t * self.base_n + w

    def decode(self, index: int) -> tuple[int, int]:
        return divmod(index, self.base_n)

    def pair_atoms(self) -> list[list[tuple[int, int]]]:
        return [[self.decode(i) for i in atom] for atom in self.atoms]

    def time_slice(self, t: int) -> Partition:
        """Trace of the partition on ``{t} x Omega``, as a partition of Omega."""
        lo = t * self.base_n
        hi = lo + self.base_n
        return Partition(self.base_n, [[i - lo for i in atom if lo <= i < hi] for atom in self.atoms])


def _check_universe(p: Partition, q: Partition) -> None:
    if p.n != q.n:
        raise UniverseMismatchError(f"universe sizes differ: {p.n} vs {q.n}")


def generate(n: int, generators: Iterable[Iterable[int]]) -> Partition:
    """Coarsest partition in which every generator is a union of atoms.

    Two outcomes share an atom iff they lie in exactly the same generators.

    >>> generate(4, [{0, 1}, {1, 2}])
    Partition(4, [[0], [1], [2], [3]])
    """
    gens = [frozenset(g) for g in generators]
    for g in gens:
        bad = [w for w in g if not 0 <= w < n]
        if bad:
            raise PreconditionError(f"generator index {bad[0]} out of range for n={n}")
    blocks: dict[tuple[bool, ...], list[int]] = {}
    for w in range(n):
        blocks.setdefault(tuple(w in g for g in gens), []).append(w)
    return Partition(n, blocks.values())


def generate_from_function(n: int, values: Sequence[Hashable]) -> Partition:
    """Preimage sigma-algebra of a function: its level sets."""
    if len(values) != n:
        raise UniverseMismatchError(f"expected {n} values, got {len(values)}")
    blocks: dict[Hashable, list[int]] = {}
    for w, v in enumerate(values):
        blocks.setdefault(v, []).append(w)
    return Partition(n, blocks.values())


def refines(fine: Partition, coarse: Partition) -> bool:
    """True iff every atom of ``fine`` sits inside one atom of ``coarse``."""
    _check_universe(fine, coarse)
    index = coarse.atom_index()
    return all(len({index[w] for w in atom}) == 1 for atom in fine.atoms)


def join(p: Partition, q: Partition) -> Partition:
    """Sigma-algebra generated by both: nonempty intersections of atoms."""
    _check_universe(p, q)
    ip, iq = p.atom_index(), q.atom_index()
    blocks: dict[tuple[int, int], list[int]] = {}
    for w in range(p.n):
        blocks.setdefault((ip[w], iq[w]), []).append(w)
    return Partition(p.n, blocks.values())


def is_measurable_set(p: Partition, a: Iterable[int]) -> bool:
    a = set(a)
    if any(not 0 <= w < p.n for w in a):
        raise PreconditionError("set is not a subset of the universe")
    return all(set(atom) <= a or a.isdisjoint(atom) for atom in p.atoms)


def is_measurable_fn(p: Partition, values: Sequence[Hashable]) -> bool:
    """True iff ``values`` is constant on every atom of ``p``."""
    if len(values) != p.n:
        raise UniverseMismatchError(f"expected {p.n} values, got {len(values)}")
    return all(all(values[w] == values[atom[0]] for w in atom) for atom in p.atoms)


def product_time_partition(t: int, f_t: Partition) -> TimedPartition:
    """Atoms ``{j} x A`` for ``j`` in ``0..t`` and ``A`` an atom of ``f_t``."""
    if t < 0:
        raise PreconditionError("time index must be nonnegative")
    n = f_t.n
    atoms = [[j * n + w for w in atom] for j in range(t + 1) for atom in f_t.atoms]
    return TimedPartition(t, n, Partition((t + 1) * n, atoms))


def predictable_sigma(filtration) -> TimedPartition:
    """Predictable sigma-algebra of a discrete filtration ``F_0, ..., F_T``.

    The slice at time 0 is ``F_0`` and the slice at time ``s + 1`` is
    ``F_s``: the sets ``{s+1..t} x A`` with ``A`` in ``F_s`` contribute
    ``F_s`` to every later slice, and nestedness makes ``F_{t-1}`` the
    finest contribution at time ``t``.
    """
    parts: Sequence[Partition] = getattr(filtration, "parts", filtration)
    if not parts:
        raise PreconditionError("filtration has no time slices")
    n = parts[0].n
    horizon = len(parts) - 1
    slices = [parts[0]] + list(parts[:-1])
    atoms = [[t * n + w for w in atom] for t, f in enumerate(slices) for atom in f.atoms]
    return TimedPartition(horizon, n, Partition((horizon + 1) * n, atoms))
