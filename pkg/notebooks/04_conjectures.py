# %% [markdown]
# # Conjectured formulas for remainder sums
#
# `S_n` is the mean of `k*k % n` over a full period. For `n` built from two
# primes there are conjectured closed forms in terms of class numbers. The
# sweeps below look for counterexamples; the left side is always the direct
# evaluation.

# %%
from qfloor import s_of_n
from qfloor.identities import check, sweep

print(s_of_n(21), s_of_n(5 * 3), s_of_n(5**2 * 7))

# %%
for id in ("conj-7.1", "conj-7.2", "conj-7.3a", "conj-7.3b", "conj-7.4"):
    s = sweep(id, 20_000)
    print(f"{id:<10} cases={s.cases_checked:<6} counterexamples={s.counterexample_count}")

# %% [markdown]
# The two-prime formula for `p = 1`, `q = 3 (mod 4)` only holds with the
# `h*(-pq)` term added inside the bracket. The variant that subtracts it is
# kept in the registry as `conj-7.1-printed`; it fails on every case, which
# makes the sign easy to confirm independently.

# %%
s = sweep("conj-7.1-printed", 2_000, cap=3)
print(s.counterexample_count, "of", s.cases_checked)
for r in s.counterexamples:
    print(r.params, r.lhs, r.rhs)
print(check("conj-7.1", [5, 3, 1, 1]))
