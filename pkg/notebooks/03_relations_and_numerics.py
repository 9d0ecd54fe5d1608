# %% [markdown]
# # Relations among double T-values
#
# Modular forms give exact linear relations among the constants ``T~(p, k-p)``.
# They are rebuilt here both from a closed form and from the symbolic constant
# terms of the series, then tested numerically.

# %%
from __future__ import annotations

from eis4.relations import (
    ERRATA, atilde_from_constant_terms, atilde_vector, conj_span_dims, conj_vector,
    express_in_modular,
)
from eis4.ttilde_numeric import ttilde_double, verify_relation_numeric

# %%
for k, j in [(6, 1), (8, 1), (10, 1), (10, 2)]:
    v = atilde_vector(k, j)
    print((k, j), [str(x) for x in v], v == atilde_from_constant_terms(k, j))

# %%
for e in ERRATA:
    print(f"{e.where} entry {e.index}: printed {e.printed}, computed {e.corrected}")

# %% [markdown]
# Period-polynomial vectors land in the span of the relation vectors.

# %%
for key in [(4, 6, 1), (2, 8, 1), (4, 10, 3)]:
    print(key, [str(x) for x in conj_vector(*key)], express_in_modular(*key).to_json()["coefficients"])
print({k: conj_span_dims(k) for k in range(6, 21, 2)})

# %% [markdown]
# Numerically, with both doubling conventions.

# %%
print("T~(2,3) =", ttilde_double(2, 3).value)
for k in (6, 8, 10, 12):
    for j in range(1, (k - 2) // 4 + 1):
        a = verify_relation_numeric(k, j)
        b = verify_relation_numeric(k, j, paper_literal=True, rel_tol=1e-6)
        print(f"k={k} j={j}  residual {a.residual:.1e} (rel {a.relative_residual:.1e})"
              f"  | end-doubled variant rel {b.relative_residual:.1e} -> {b.status}")
