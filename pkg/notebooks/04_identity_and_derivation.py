"""Checking the closed form satisfies the recurrence, step by step."""
from abpark import Params, verify_footnote_steps, verify_identity

rep = verify_identity(Params(2, 2, 3))
print(rep.lhs, rep.terms, rep.rhs, rep.verdict)

for step in verify_footnote_steps(Params(2, 2, 3)).steps:
    print(f"{step.name:22} {step.lhs!s:>10} {step.rhs!s:>10} {step.ok}")

# %% A wider sweep
ok = all(verify_identity(Params(n, a, b)).verdict for n in range(1, 40) for a in range(8) for b in range(8))
print("identity holds on the sweep:", ok)
