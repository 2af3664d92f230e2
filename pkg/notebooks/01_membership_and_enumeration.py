"""Membership, enumeration and the two brute-force counts.

Run: python notebooks/01_membership_and_enumeration.py
"""
from abpark import Params, count_brute, enumerate_parking, enumerate_profiles, is_parking, sorted_profile

# %% Classic parking functions are the (1,1) case
p = Params(3, 1, 1)
print(is_parking((3, 1, 2), p), is_parking((2, 2, 2), p))
print(sorted_profile((3, 1, 2)))

# %% The full set for n=2, a=1, b=2: thresholds are (1, 3)
for word in enumerate_parking(Params(2, 1, 2)):
    print(word)

# %% Sorted profiles are far fewer than words
q = Params(5, 2, 1)
print(len(list(enumerate_profiles(q))), "profiles,", count_brute(q, "profiles"), "words")
print("box count agrees:", count_brute(q, "box") == count_brute(q, "profiles"))
