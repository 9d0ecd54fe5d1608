# %% [markdown]
# # Exact q-expansions
#
# Single and double series are built as truncated q-series whose coefficients
# are exact combinations of a rational constant and normalized L-values.
# The double series have double T-values as constant terms, which stay symbolic.

# %%
from __future__ import annotations

from eis4.exact_math import I, Zodd
from eis4.eisenstein import eis_G, eis_H, eis_H2
from eis4.verifier import verify_shuffle, verify_theta

# %%
h1 = eis_H(1, 10).scale(4 * I)
print("4i H~_1 constant:", h1.constant.value)
print("4i H~_1 coefficients:", [str(c) for c in h1.coeffs])
print(verify_theta(100).to_json()["status"])

# %%
g4 = eis_G(4, 6)
print("G~_4 constant:", g4.constant.value)
for n in range(1, 7):
    print(n, g4[n])

# %% [markdown]
# A double series: its coefficients mix rationals with odd zeta values, and the
# free constant ``Z1`` never appears.

# %%
h23 = eis_H2(2, 3, 5)
print("constant:", h23.constant.to_json())
for n in range(1, 6):
    print(n, h23[n], "| Z1 coordinate:", h23[n].coeff(Zodd(1)))

# %% [markdown]
# Products of single series are linear combinations of double series.

# %%
for k1, k2 in [(1, 1), (2, 3), (3, 4)]:
    print((k1, k2), verify_shuffle(k1, k2, 30).status)
