# ---
# jupyter:
#   jupytext:
#     formats: ipynb,py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
#       format_version: '1.3'
#   kernelspec:
#     display_name: Python 3
#     language: python
#     name: python3
# ---

# %% [markdown]
# # Invariant planes, shuffle operators and charts
#
# Let `T` be a nilpotent operator on `k^N`.  An `n`-plane `U` is `T`-invariant
# exactly when its Pluecker vector is killed by the shuffle operators, which are
# the coefficients of `z^d` in the `n`-th wedge power of `I + zT`.

# %%
from nilred.exterior import shuffle_linear_forms, shuffle_operator, wedge_identity_holds
from nilred.fieldpoly import QQ
from nilred.groebner import groebner_basis, ideal_equal
from nilred.orbits import jordan_matrix, partitions
from nilred.schemes import (
    Chart,
    charts,
    invariance_only_chart_ideal,
    invariant_chart_ideal,
    shuffle_chart_ideal,
)

# %% [markdown]
# ## Shuffle operators on a small example
#
# With `T` of Jordan type `(2,2)` on `k^4`, expanding `(e2 + z e1) ^ (e4 + z e3)`
# by hand gives `sh_1(e_24) = e_14 + e_23` and `sh_2(e_24) = e_13`.

# %%
T = jordan_matrix((2, 2))
print("sh_1(e_24) =", shuffle_operator(T, 2, 1, QQ).image((2, 4)))
print("sh_2(e_24) =", shuffle_operator(T, 2, 2, QQ).image((2, 4)))
print("forms:", [str(f) for f in shuffle_linear_forms(T, 2, QQ)])

# %% [markdown]
# The wedge identity holds exactly for every Jordan type up to `N = 5` here
# (the acceptance suite goes to `N = 6`).

# %%
print(all(wedge_identity_holds(jordan_matrix(s), n, QQ)
          for N in range(1, 6) for s in partitions(N) for n in range(1, N + 1)))

# %% [markdown]
# ## Why the characteristic polynomial matters
#
# On the line chart of `Gr(1, k^2)` with `T = J_2`, invariance alone gives the
# fat point `(x^2)`.  Adding `char_poly(T|_U) = lam` removes the nilpotent.

# %%
chart = Chart(2, 1, (1,))
print("invariance only:", [str(g) for g in groebner_basis(invariance_only_chart_ideal((2,), chart, QQ)).basis])
print("with char poly: ", [str(g) for g in groebner_basis(invariant_chart_ideal((2,), chart, QQ)).basis])
print("shuffle ideal:  ", [str(g) for g in groebner_basis(shuffle_chart_ideal((2,), chart, QQ)).basis])

# %% [markdown]
# ## Chart-by-chart equality
#
# The two descriptions agree on every affine chart of `Gr(2, k^4)`.

# %%
for ch in charts(4, 2):
    print(ch.S, ideal_equal(invariant_chart_ideal((3, 1), ch, QQ), shuffle_chart_ideal((3, 1), ch, QQ)))
