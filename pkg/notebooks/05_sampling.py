"""Uniform sampling by rejection, and an empirical frequency check."""
from collections import Counter

from abpark import Params, sample_uniform

p = Params(2, 1, 2)
freq = Counter(sample_uniform(p, seed) for seed in range(10_000))
for word, k in sorted(freq.items()):
    print(word, k)

print(sample_uniform(Params(6, 2, 3), seed=2024))
