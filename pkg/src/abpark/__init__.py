"""Exact enumeration, counting and bijections for (a,b)-parking functions."""

from abpark.core import (
    BijectionParts,
    DomainError,
    Params,
    bijection_decode,
    bijection_encode,
    is_parking,
    make_word,
    sorted_profile,
    thresholds,
)
from abpark.counting import (
    FootnoteReport,
    IdentityReport,
    MemoTable,
    StepCheck,
    binomial,
    count_formula,
    count_recurrence,
    verify_footnote_steps,
    verify_identity,
)
from abpark.enumeration import (
    SamplingBudgetExceeded,
    box_bound,
    count_brute,
    enumerate_parking,
    enumerate_profiles,
    multinomial,
    multiset_permutations,
    sample_uniform,
)

__all__ = [
    "BijectionParts",
    "DomainError",
    "FootnoteReport",
    "IdentityReport",
    "MemoTable",
    "Params",
    "SamplingBudgetExceeded",
    "StepCheck",
    "bijection_decode",
    "bijection_encode",
    "binomial",
    "box_bound",
    "count_brute",
    "count_formula",
    "count_recurrence",
    "enumerate_parking",
    "enumerate_profiles",
    "is_parking",
    "make_word",
    "multinomial",
    "multiset_permutations",
    "sample_uniform",
    "sorted_profile",
    "thresholds",
    "verify_footnote_steps",
    "verify_identity",
]
