"""Exact counts of (a,b)-parking functions and checks of the closed form.

All arithmetic is on Python ints, so nothing here can overflow or round.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from abpark.core import DomainError, Params

Key = Tuple[int, int]


def binomial(n: int, r: int) -> int:
    """C(n, r), zero outside 0 <= r <= n."""
    if r < 0 or r > n:
        return 0
    return math.comb(n, r)


def count_formula(p: Params) -> int:
    """a * (a + b*n)**(n - 1), with the value 1 at n = 0."""
    if p.n == 0:
        return 1
    if p.a == 0:
        return 0
    return p.a * (p.a + p.b * p.n) ** (p.n - 1)


class MemoTable:
    """Values p(m, c, b) for one fixed increment ``b``, filled on demand.

    The recurrence

        p(m, c) = sum_{r=0}^{m} C(m, r) * p(m - r, c + b*r - 1)

    with p(0, c) = 1 and p(m, 0) = 0 (m >= 1) refers to (m, c - 1) at r = 0
    and to strictly shorter lengths otherwise, so every dependency is
    lexicographically smaller.  :meth:`get` walks dependencies with an
    explicit stack (no recursion limit) and raises if it ever revisits a key
    that is still being computed.
    """

    def __init__(self, b: int):
        self.b = Params(0, 0, b).b
        self._values: Dict[Key, int] = {}
        self._lock = threading.RLock()

    def __len__(self) -> int:
        return len(self._values)

    def __contains__(self, key: Key) -> bool:
        return key in self._values

    def items(self) -> List[Tuple[Key, int]]:
        with self._lock:
            return list(self._values.items())

    def dependencies(self, m: int, c: int) -> List[Key]:
        """Keys that the entry (m, c) is summed from; empty for base cases."""
        if m == 0 or c == 0:
            return []
        return [(m - r, c + self.b * r - 1) for r in range(m + 1)]

    def _combine(self, m: int, c: int) -> int:
        if m == 0:
            return 1
        if c == 0:
            return 0
        vals = self._values
        return sum(
            math.comb(m, r) * vals[m - r, c + self.b * r - 1] for r in range(m + 1)
        )

    def get(self, m: int, c: int) -> int:
        key = (m, c)
        with self._lock:
            if key in self._values:
                return self._values[key]
            stack: List[Tuple[Key, Iterator[Key]]] = [(key, iter(self.dependencies(*key)))]
            active = {key}
            while stack:
                top, pending = stack[-1]
                for dep in pending:
                    if dep in self._values:
                        continue
                    if dep in active:
                        raise RuntimeError(f"memo cycle through {dep} while computing {key}")
                    active.add(dep)
                    stack.append((dep, iter(self.dependencies(*dep))))
                    break
                else:
                    self._values[top] = self._combine(*top)
                    active.discard(top)
                    stack.pop()
            return self._values[key]

    def recompute(self, m: int, c: int) -> int:
        """Evaluate (m, c) in a fresh table; for checking stored entries."""
        return MemoTable(self.b).get(m, c)


_shared: Dict[int, MemoTable] = {}
_shared_lock = threading.Lock()


def _table_for(b: int) -> MemoTable:
    with _shared_lock:
        table = _shared.get(b)
        if table is None:
            table = _shared[b] = MemoTable(b)
        return table


def clear_memo() -> None:
    """Drop the shared per-``b`` tables used by :func:`count_recurrence`."""
    with _shared_lock:
        _shared.clear()


def count_recurrence(p: Params, table: Optional[MemoTable] = None) -> int:
    """p(n, a, b) from the ones-removal recurrence.

    Without ``table`` a process-wide table for ``p.b`` is reused across calls.
    """
    if table is None:
        table = _table_for(p.b)
    elif table.b != p.b:
        raise ValueError(f"table is for b={table.b}, params have b={p.b}")
    return table.get(p.n, p.a)


def _powers(base: int, k: int) -> List[int]:
    """[base**0, ..., base**k]."""
    out = [1]
    for _ in range(k):
        out.append(out[-1] * base)
    return out


@dataclass(frozen=True)
class IdentityReport:
    params: Tuple[int, int, int]
    lhs: int
    terms: Tuple[int, ...]
    rhs: int
    verdict: bool


def verify_identity(p: Params) -> IdentityReport:
    """Compare a(a+bn)^(n-1) with sum_r C(n,r) (a+br-1)(a+bn-1)^(n-r-1).

    The r = n summand is taken as 1 (a length-zero count).  The others are
    evaluated literally, so at a = 0 the r = 0 summand is negative.
    """
    n, a, b = p.n, p.a, p.b
    if n == 0:
        raise DomainError("the identity needs n >= 1")
    pw = _powers(a + b * n - 1, n - 1)
    terms = tuple(
        binomial(n, r) * ((a + b * r - 1) * pw[n - r - 1] if r < n else 1)
        for r in range(n + 1)
    )
    lhs = a * (a + b * n) ** (n - 1)
    rhs = sum(terms)
    return IdentityReport(p.as_tuple(), lhs, terms, rhs, lhs == rhs)


@dataclass(frozen=True)
class StepCheck:
    name: str
    lhs: object
    rhs: object

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class FootnoteReport:
    params: Tuple[int, int, int]
    top: int
    steps: Tuple[StepCheck, ...] = field(default_factory=tuple)

    @property
    def verdict(self) -> bool:
        return all(s.ok for s in self.steps)


def verify_footnote_steps(p: Params) -> FootnoteReport:
    """Check each move of the binomial-theorem derivation, with M = a+bn-1.

    1. a + b*r - 1 == M - b*(n - r) for every r in 0..n
    2. (n - r) C(n, r) == n C(n-1, r) for every r in 0..n-1
    3. sum_{r=0}^{n} C(n, r) M^(n-r) == (M + 1)^n
    4. sum_{r=0}^{n-1} C(n-1, r) M^(n-1-r) == (M + 1)^(n-1)
    5. (M + 1)^n - b n (M + 1)^(n-1) == a (a + b n)^(n-1)

    Steps 1 and 2 compare tuples indexed by r.
    """
    n, a, b = p.n, p.a, p.b
    if n == 0:
        raise DomainError("the derivation needs n >= 1")
    m = a + b * n - 1
    pw = _powers(m, n)
    rows = [binomial(n, r) for r in range(n + 1)]
    prev = [binomial(n - 1, r) for r in range(n)]
    split = StepCheck(
        "split",
        tuple(a + b * r - 1 for r in range(n + 1)),
        tuple(m - b * (n - r) for r in range(n + 1)),
    )
    absorb = StepCheck(
        "absorption",
        tuple((n - r) * rows[r] for r in range(n)),
        tuple(n * prev[r] for r in range(n)),
    )
    first = StepCheck(
        "binomial-theorem-n",
        sum(rows[r] * pw[n - r] for r in range(n + 1)),
        (m + 1) ** n,
    )
    second = StepCheck(
        "binomial-theorem-n-1",
        sum(prev[r] * pw[n - 1 - r] for r in range(n)),
        (m + 1) ** (n - 1),
    )
    assemble = StepCheck(
        "assembly",
        (m + 1) ** n - b * n * (m + 1) ** (n - 1),
        a * (a + b * n) ** (n - 1),
    )
    return FootnoteReport(p.as_tuple(), m, (split, absorb, first, second, assemble))
