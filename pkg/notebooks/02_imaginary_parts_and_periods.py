# %% [markdown]
# # Imaginary parts, group-ring operators and periods

# %%
from __future__ import annotations

from eis4.exact_math import mat_rank
from eis4.period_polys import (
    build_Mk, check_det_ord2, delta_tilde_kernel_dim, expected_rank_Mk, im_delta_dim,
    im_space_rank_bruteforce, r_period,
)

# %% [markdown]
# The rank of the coefficient matrix ``M_k`` equals the dimension of the image of
# the group-ring operator, and both follow a simple closed form.

# %%
print(" k  rank(M_k)  dim Im  formula  brute force")
for k in range(3, 13):
    print(f"{k:2d}  {mat_rank(build_Mk(k)):9d}  {im_delta_dim(k):6d}  {expected_rank_Mk(k):7d}"
          f"  {im_space_rank_bruteforce(k, 40):11d}")

# %% [markdown]
# The period matrix is non-singular and its 2-adic valuation is predicted exactly.

# %%
for w in range(6, 19, 2):
    r = check_det_ord2(w)
    print(w, r.det, r.ord2_det, r.ord2_formula, r.status)

# %%
print("kernel dims:", {k: delta_tilde_kernel_dim(k) for k in range(6, 23, 2)})
print("r_3(R_{10,2}) =", r_period(10, 2, 3), "= r_2(R_{10,3}) =", r_period(10, 3, 2))
