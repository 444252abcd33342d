"""Exact scalars and fixed-dimension rational vectors.

Scalars are :class:`fractions.Fraction` values (arbitrary-precision
numerator and denominator, always in lowest terms).  A vector is a plain
tuple of fractions; the value space is Q^d normed by the L1 norm, which
stays rational on rational inputs.

>>> rat(2, 4)
Fraction(1, 2)
>>> l1_norm(vec([1, -2]))
Fraction(3, 1)
>>> diameter([vec([1, 2]), vec([4, 6])])
Fraction(7, 1)
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from numbers import Rational
from typing import Iterable, Sequence, Tuple, Union

from .errors import DimensionError

Rat = Fraction
Vec = Tuple[Fraction, ...]
RatLike = Union[Fraction, int, str]

__all__ = [
    "Rat",
    "Vec",
    "rat",
    "as_rat",
    "format_rat",
    "vec",
    "zero",
    "vadd",
    "vsub",
    "vneg",
    "vscale",
    "vsum",
    "l1_norm",
    "distance",
    "diameter",
    "common_dimension",
]


def rat(num: int, den: int = 1) -> Fraction:
    """Canonical rational ``num/den``; raises ``ZeroDivisionError`` for ``den == 0``."""
    if not isinstance(num, int) or not isinstance(den, int):
        raise TypeError("rat() takes integer numerator and denominator")
    return Fraction(num, den)


def as_rat(x: RatLike) -> Fraction:
    """Coerce an int, Fraction or ``"num/den"`` string to a Fraction.

    Floats are rejected: they would silently smuggle rounding into an
    otherwise exact computation.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        text = x.strip()
        if "/" in text:
            num, _, den = text.partition("/")
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def format_rat(x: Fraction) -> str:
    """Serialize as ``"num/den"``, or ``"n"`` when the denominator is 1."""
    return str(x)


def vec(components: Union[RatLike, Iterable[RatLike]]) -> Vec:
    """Build a vector; a bare scalar becomes a one-dimensional vector."""
    if isinstance(components, (int, str, Fraction)) and not isinstance(components, bool):
        return (as_rat(components),)
    out = tuple(as_rat(c) for c in components)
    if not out:
        raise DimensionError("vectors must have dimension >= 1")
    return out


def zero(d: int) -> Vec:
    return (Fraction(0),) * d


def _same_dim(u: Vec, v: Vec) -> None:
    if len(u) != len(v):
        raise DimensionError(f"dimension mismatch: {len(u)} vs {len(v)}")


def vadd(u: Vec, v: Vec) -> Vec:
    _same_dim(u, v)
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vec, v: Vec) -> Vec:
    _same_dim(u, v)
    return tuple(a - b for a, b in zip(u, v))


def vneg(u: Vec) -> Vec:
    return tuple(-a for a in u)


def vscale(c: RatLike, u: Vec) -> Vec:
    c = as_rat(c)
    return tuple(c * a for a in u)


def vsum(vectors: Iterable[Vec], d: int) -> Vec:
    """Sum of an iterable of d-dimensional vectors (zero vector when empty)."""
    acc = [Fraction(0)] * d
    for v in vectors:
        if len(v) != d:
            raise DimensionError(f"dimension mismatch: {len(v)} vs {d}")
        for k, a in enumerate(v):
            acc[k] += a
    return tuple(acc)


def l1_norm(v: Vec) -> Fraction:
    return sum((abs(a) for a in v), Fraction(0))


def distance(u: Vec, v: Vec) -> Fraction:
    return l1_norm(vsub(u, v))


def common_dimension(vectors: Iterable[Vec]) -> int | None:
    """Shared dimension of ``vectors``; ``None`` for an empty collection."""
    d = None
    for v in vectors:
        if d is None:
            d = len(v)
        elif len(v) != d:
            raise DimensionError(f"mixed dimensions {d} and {len(v)}")
    return d


def diameter(points: Iterable[Vec]) -> Fraction:
    """Largest pairwise L1 distance; 0 for empty and singleton sets."""
    pts: Sequence[Vec] = list(dict.fromkeys(points))
    common_dimension(pts)
    return max((distance(u, v) for u, v in combinations(pts, 2)), default=Fraction(0))
