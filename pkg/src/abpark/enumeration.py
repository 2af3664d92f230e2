"""Brute-force oracles for P(n, a, b) and a rejection sampler.

Two independent routes to the same set:

* the *box* route filters every word in {1..M}^n through the predicate,
  where M = a + b(n-1) is the largest threshold;
* the *profile* route lists the sorted profiles directly and expands each
  one into its distinct rearrangements.

Both yield in lexicographic order.  Neither is meant for anything past a
few hundred thousand words.
"""

from __future__ import annotations

import itertools
import math
import random
from collections import Counter
from typing import Iterable, Iterator, List, Optional

from abpark.core import DomainError, Params, Word, is_parking, make_word


class SamplingBudgetExceeded(RuntimeError):
    """Rejection sampling hit its retry budget without an acceptance."""


def box_bound(p: Params) -> int:
    """Largest entry any member of P(n, a, b) can have (0 when n == 0)."""
    if p.n == 0:
        return 0
    return p.a + p.b * (p.n - 1)


def _fits(word, a: int, b: int) -> bool:
    return all(v <= a + b * i for i, v in enumerate(sorted(word)))


def enumerate_parking(p: Params) -> Iterator[Word]:
    """Yield every member of P(n, a, b) once, in lexicographic order."""
    a, b = p.a, p.b
    for word in itertools.product(range(1, box_bound(p) + 1), repeat=p.n):
        if _fits(word, a, b):
            yield word


def enumerate_profiles(p: Params) -> Iterator[Word]:
    """Yield the non-decreasing words t with 1 <= t_i <= a + b(i-1), lex order."""
    n, a, b = p.n, p.a, p.b
    prefix: List[int] = []

    def extend(lo: int) -> Iterator[Word]:
        i = len(prefix)
        if i == n:
            yield tuple(prefix)
            return
        for v in range(lo, a + b * i + 1):
            prefix.append(v)
            yield from extend(v)
            prefix.pop()

    return extend(1)


def multiset_permutations(profile: Iterable[int]) -> Iterator[Word]:
    """Distinct rearrangements of a non-decreasing word, in lex order.

    Classic next-permutation: find the rightmost ascent, swap its left end
    with the smallest larger entry to its right, reverse the suffix.
    """
    seq = list(make_word(profile))
    if any(u > v for u, v in zip(seq, seq[1:])):
        raise ValueError(f"profile must be non-decreasing: {tuple(seq)}")
    n = len(seq)
    while True:
        yield tuple(seq)
        i = n - 2
        while i >= 0 and seq[i] >= seq[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while seq[j] <= seq[i]:
            j -= 1
        seq[i], seq[j] = seq[j], seq[i]
        seq[i + 1:] = reversed(seq[i + 1:])


def multinomial(multiplicities: Iterable[int]) -> int:
    """(k_1 + ... + k_m)! / (k_1! ... k_m!)."""
    total = 0
    out = 1
    for k in multiplicities:
        total += k
        out *= math.comb(total, k)
    return out


def count_brute(p: Params, method: str = "box") -> int:
    """|P(n, a, b)| by exhaustion.

    ``method="box"`` counts predicate survivors in {1..M}^n;
    ``method="profiles"`` sums multinomials over the sorted profiles.
    """
    if method == "box":
        return sum(1 for _ in enumerate_parking(p))
    if method == "profiles":
        return sum(multinomial(Counter(t).values()) for t in enumerate_profiles(p))
    raise ValueError(f"unknown method {method!r}; expected 'box' or 'profiles'")


def sample_uniform(p: Params, seed: int, max_tries: Optional[int] = 1_000_000) -> Word:
    """Uniform random member of P(n, a, b) by rejection from the box.

    Uses ``random.Random(seed)`` (Mersenne Twister) and draws each entry with
    ``randint(1, M)``, left to right; this draw order is part of the output
    contract.  ``max_tries=None`` retries forever.
    """
    if p.n == 0:
        return ()
    if p.a == 0:
        raise DomainError(f"P({p.n}, 0, {p.b}) is empty")
    rng = random.Random(seed)
    m = box_bound(p)
    tries = 0
    while max_tries is None or tries < max_tries:
        tries += 1
        word = tuple(rng.randint(1, m) for _ in range(p.n))
        if is_parking(word, p):
            return word
    raise SamplingBudgetExceeded(f"no acceptance in {max_tries} draws for {p.as_tuple()}")
