"""Parameters, the membership predicate, and the ones-removal bijection.

A word is a plain tuple of positive ints.  Positions are 1-based everywhere
a caller can see them.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Iterable, Tuple

Word = Tuple[int, ...]


class DomainError(ValueError):
    """An operation was applied outside the set it is defined on."""


def _nonneg(name: str, value) -> int:
    if isinstance(value, bool):
        raise TypeError(f"{name} must be an int, not bool")
    value = operator.index(value)
    if value < 0:
        raise ValueError(f"{name} must be non-negative, got {value}")
    return value


@dataclass(frozen=True)
class Params:
    """Problem instance: length ``n``, first threshold ``a``, increment ``b``."""

    n: int
    a: int
    b: int

    def __post_init__(self):
        for name in ("n", "a", "b"):
            object.__setattr__(self, name, _nonneg(name, getattr(self, name)))

    def threshold(self, i: int) -> int:
        """Upper bound on the i-th smallest entry (1-based)."""
        return self.a + self.b * (i - 1)

    def reduced(self, r: int) -> "Params":
        """Parameters of the reduced word after removing ``r`` ones.

        Only meaningful for ``a + b*r >= 1``; raises otherwise.
        """
        if not 0 <= r <= self.n:
            raise ValueError(f"r={r} outside 0..{self.n}")
        c = self.a + self.b * r - 1
        if c < 0:
            raise DomainError(f"no reduced instance for a={self.a}, b={self.b}, r={r}")
        return Params(self.n - r, c, self.b)

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.n, self.a, self.b)


def make_word(entries: Iterable[int]) -> Word:
    """Validate and freeze a word; every entry must be a positive int."""
    word = []
    for e in entries:
        if isinstance(e, bool):
            raise TypeError("word entries must be ints, not bool")
        e = operator.index(e)
        if e < 1:
            raise ValueError(f"word entries must be positive, got {e}")
        word.append(e)
    return tuple(word)


def thresholds(p: Params) -> Word:
    return tuple(p.threshold(i) for i in range(1, p.n + 1))


def sorted_profile(x: Iterable[int]) -> Word:
    """Non-decreasing rearrangement of ``x``."""
    return tuple(sorted(make_word(x)))


def _check_length(x: Word, p: Params) -> None:
    if len(x) != p.n:
        raise ValueError(f"word has length {len(x)}, expected n={p.n}")


def is_parking(x: Iterable[int], p: Params) -> bool:
    """True iff the i-th smallest entry of ``x`` is at most ``a + b*(i-1)``."""
    x = make_word(x)
    _check_length(x, p)
    a, b = p.a, p.b
    return all(v <= a + b * i for i, v in enumerate(sorted(x)))


@dataclass(frozen=True)
class BijectionParts:
    """Image of a parking function: where its ones sit, and what is left.

    ``ones_positions`` is strictly increasing and 1-based; ``reduced`` is the
    word of non-one entries, in their original order, each lowered by one.
    """

    ones_positions: Tuple[int, ...]
    reduced: Word

    def __post_init__(self):
        pos = tuple(_nonneg("position", q) for q in self.ones_positions)
        if any(q < 1 for q in pos):
            raise DomainError("positions are 1-based")
        if any(u >= v for u, v in zip(pos, pos[1:])):
            raise DomainError(f"positions must be strictly increasing: {pos}")
        object.__setattr__(self, "ones_positions", pos)
        object.__setattr__(self, "reduced", make_word(self.reduced))

    @property
    def r(self) -> int:
        return len(self.ones_positions)


def bijection_encode(x: Iterable[int], p: Params) -> BijectionParts:
    """Split a parking function into (positions of its ones, reduced word)."""
    x = make_word(x)
    if not is_parking(x, p):
        raise DomainError(f"{x} is not an {(p.a, p.b)}-parking function of length {p.n}")
    ones = tuple(i for i, v in enumerate(x, start=1) if v == 1)
    rest = tuple(v - 1 for v in x if v != 1)
    return BijectionParts(ones, rest)


def bijection_decode(parts: BijectionParts, p: Params) -> Word:
    """Inverse of :func:`bijection_encode`.

    Raises :class:`DomainError` unless ``parts`` lies in
    B(n, r) x P(n-r, a+b*r-1, b).
    """
    pos = parts.ones_positions
    r = len(pos)
    if p.n == 0 and r == 0 and not parts.reduced:
        return ()
    if p.a == 0:
        # P(n, 0, b) is empty for n >= 1; the decomposition needs a >= 1.
        raise DomainError(f"no parking functions at a=0, n={p.n}")
    if r > p.n or (pos and pos[-1] > p.n):
        raise DomainError(f"positions {pos} not a subset of 1..{p.n}")
    if len(parts.reduced) != p.n - r:
        raise DomainError(
            f"reduced word has length {len(parts.reduced)}, expected {p.n - r}"
        )
    small = p.reduced(r)
    if not is_parking(parts.reduced, small):
        raise DomainError(
            f"{parts.reduced} is not a parking function for {small.as_tuple()}"
        )
    ones = set(pos)
    rest = iter(parts.reduced)
    return tuple(1 if i in ones else next(rest) + 1 for i in range(1, p.n + 1))
