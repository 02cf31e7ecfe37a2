# %% [markdown]
# # Floor-of-square-root sums
#
# `F(n)` adds up `floor(sqrt(j*n))` for `j` up to `n // 4`; geometrically it
# counts lattice points under a parabola. Subtracting the smooth part
# `(n^2 - 1)/12` leaves `f(n)`, a small exact rational that turns out to carry
# arithmetic information about `n`.

# %%
import numpy as np

from qfloor import F_closed, F_direct, f_of_n, rem_sq_sum, squarefree_decomp

for n in (13, 28, 163):
    print(n, F_direct(n), f_of_n(n))

# %% [markdown]
# The same value comes out of a closed form that only needs the sum of
# quadratic remainders `k*k % n` for `k <= 2*(n//4)` and the square part of `n`.

# %%
n = 1001
print(squarefree_decomp(n), rem_sq_sum(n, 2 * (n // 4)))
assert F_closed(n) == F_direct(n)

mismatches = [n for n in range(1, 3001) if F_closed(n) != F_direct(n)]
print("mismatches below 3000:", mismatches)

# %% [markdown]
# `f(n)` is zero at every prime `p = 1 (mod 4)` and negative at primes
# `p = 3 (mod 4)`. A quick look at the sign pattern on small primes:

# %%
from qfloor.arith import primes_up_to

primes = [int(p) for p in primes_up_to(120) if p > 2]
for p in primes:
    print(f"{p:>4} {p % 4} {str(f_of_n(p)):>6}")

# %%
# the direct sum is vectorized; a few million roots per call is cheap
values = np.array([float(f_of_n(n)) for n in range(1, 2001)])
print("min", values.min(), "max", values.max())
