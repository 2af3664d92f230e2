"""The recurrence against the closed form, at sizes brute force cannot reach."""
from abpark import Params, count_formula, count_recurrence

# %% Small table
for n in range(1, 7):
    row = [count_formula(Params(n, a, 2)) for a in range(1, 5)]
    print(n, row)

# %% Exact big integers: 61^59 has over a hundred digits
big = count_recurrence(Params(60, 1, 1))
print(len(str(big)), big == 61 ** 59)

# %% Degenerate cases
print(count_formula(Params(4, 3, 0)), "== 3^4")
print(count_formula(Params(4, 0, 3)), "(a = 0 is empty)")
print(count_formula(Params(0, 0, 0)), "(the empty word)")
