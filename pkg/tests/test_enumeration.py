import itertools
import math
from collections import Counter

import pytest

from abpark import (
    DomainError,
    Params,
    SamplingBudgetExceeded,
    box_bound,
    count_brute,
    enumerate_parking,
    enumerate_profiles,
    is_parking,
    multinomial,
    multiset_permutations,
    sample_uniform,
)

from _oracle import oracle_members

GRID = [(n, a, b) for n in range(5) for a in range(4) for b in range(4) if a + b * max(n - 1, 0) <= 9]


@pytest.mark.parametrize(
    "params, expected",
    [
        ((1, 2, 7), [(1,), (2,)]),
        ((2, 1, 2), [(1, 1), (1, 2), (1, 3), (2, 1), (3, 1)]),
        ((0, 0, 0), [()]),
        ((3, 0, 4), []),
    ],
)
def test_enumerate_examples(params, expected):
    assert list(enumerate_parking(Params(*params))) == expected


@pytest.mark.parametrize("n, a, b", GRID)
def test_enumerate_matches_oracle(n, a, b):
    # oracle searches a larger box, so this also checks the entry bound
    assert list(enumerate_parking(Params(n, a, b))) == oracle_members(n, a, b)


@pytest.mark.parametrize("n, a, b", GRID)
def test_enumerate_is_strict_lex_and_complete(n, a, b):
    p = Params(n, a, b)
    words = list(enumerate_parking(p))
    assert all(u < v for u, v in zip(words, words[1:]))
    got = set(words)
    m = box_bound(p)
    for x in itertools.product(range(1, m + 1), repeat=n):
        assert (x in got) == is_parking(x, p)


@pytest.mark.parametrize(
    "params, expected",
    [
        ((2, 1, 2), [(1, 1), (1, 2), (1, 3)]),
        ((1, 3, 0), [(1,), (2,), (3,)]),
        ((2, 0, 5), []),
        ((0, 0, 0), [()]),
    ],
)
def test_enumerate_profiles_examples(params, expected):
    assert list(enumerate_profiles(Params(*params))) == expected


@pytest.mark.parametrize("n, a, b", GRID)
def test_profile_expansion_equals_box(n, a, b):
    p = Params(n, a, b)
    profiles = list(enumerate_profiles(p))
    assert profiles == sorted(set(tuple(sorted(x)) for x in enumerate_parking(p)))
    expanded = [w for t in profiles for w in multiset_permutations(t)]
    assert sorted(expanded) == list(enumerate_parking(p))


@pytest.mark.parametrize(
    "profile, expected",
    [
        ((1, 1, 2), [(1, 1, 2), (1, 2, 1), (2, 1, 1)]),
        ((1, 2, 3), sorted(itertools.permutations((1, 2, 3)))),
        ((2, 2), [(2, 2)]),
        ((), [()]),
    ],
)
def test_multiset_permutations_examples(profile, expected):
    assert list(multiset_permutations(profile)) == expected


@pytest.mark.parametrize("profile", [(1, 1, 2, 2, 3), (1, 1, 1, 1), (1, 2, 2, 4, 4, 4), (5,)])
def test_multiset_permutations_count_and_order(profile):
    out = list(multiset_permutations(profile))
    assert out == sorted(set(itertools.permutations(profile)))
    assert len(out) == multinomial(Counter(profile).values())


def test_multiset_permutations_needs_sorted_input():
    with pytest.raises(ValueError):
        list(multiset_permutations((2, 1)))


def test_multinomial():
    assert multinomial([2, 1]) == 3
    assert multinomial([1, 1, 1]) == 6
    assert multinomial([]) == 1
    assert multinomial([2, 3, 4]) == math.factorial(9) // (2 * 6 * 24)


@pytest.mark.parametrize(
    "params, expected",
    [((3, 1, 1), 16), ((2, 2, 3), 16), ((4, 3, 0), 81), ((0, 4, 4), 1), ((3, 0, 2), 0)],
)
@pytest.mark.parametrize("method", ["box", "profiles"])
def test_count_brute_examples(params, expected, method):
    assert count_brute(Params(*params), method) == expected


def test_count_brute_derived_values_match_oracle():
    assert len(oracle_members(2, 2, 3)) == 16
    assert len(oracle_members(4, 3, 0)) == 81


@pytest.mark.parametrize("n, a, b", GRID)
def test_count_methods_agree(n, a, b):
    p = Params(n, a, b)
    box = count_brute(p, "box")
    assert box == count_brute(p, "profiles") == sum(1 for _ in enumerate_parking(p))


def test_count_brute_unknown_method():
    with pytest.raises(ValueError):
        count_brute(Params(1, 1, 1), "magic")


def test_box_bound():
    assert box_bound(Params(4, 2, 3)) == 11
    assert box_bound(Params(0, 2, 3)) == 0


# -- sampler -------------------------------------------------------------------

def test_sample_trivial_cases():
    assert sample_uniform(Params(0, 0, 0), seed=3) == ()
    assert sample_uniform(Params(0, 5, 9), seed=11) == ()
    for seed in range(20):
        assert sample_uniform(Params(1, 1, 9), seed) == (1,)


def test_sample_deterministic():
    p = Params(5, 2, 3)
    assert sample_uniform(p, 42) == sample_uniform(p, 42)


def test_sample_empty_set():
    with pytest.raises(DomainError):
        sample_uniform(Params(2, 0, 3), seed=0)


def test_sample_budget():
    # (8, 1, 1) accepts 9^7 / 8^8 of the box, about 28%
    with pytest.raises(SamplingBudgetExceeded):
        for seed in range(50):
            sample_uniform(Params(8, 1, 1), seed, max_tries=1)


def test_sample_uniform_frequencies():
    p = Params(2, 1, 2)
    members = list(enumerate_parking(p))
    freq = Counter(sample_uniform(p, seed) for seed in range(10_000))
    assert set(freq) == set(members)
    for word in members:
        assert 1800 <= freq[word] <= 2200, (word, freq[word])
