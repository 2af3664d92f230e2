"""Stripping the ones: x -> (positions of ones, remaining entries minus one)."""
from collections import Counter

from abpark import Params, bijection_decode, bijection_encode, binomial, count_formula, enumerate_parking

p = Params(4, 1, 1)
parts = bijection_encode((1, 3, 1, 2), p)
print(parts, "reduced instance:", p.reduced(parts.r))
print(bijection_decode(parts, p))

# %% Class sizes by number of ones match the summands of the recurrence
by_ones = Counter(bijection_encode(x, p).r for x in enumerate_parking(p))
for r in range(p.n + 1):
    small = p.reduced(r)
    print(r, by_ones[r], binomial(p.n, r) * count_formula(small))
