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
# # Is the scheme of nilpotent matrices reduced?
#
# Fix sizes `n` and `e`.  The scheme `N_{n,e}` is cut out of the space of
# `n x n` matrices by two families of equations: all entries of `A^e`, and the
# non-leading coefficients of `det(lam - A)`.  Its points are the nilpotent
# matrices whose Jordan blocks have size at most `e`, which form the closure of a
# single conjugation orbit, that of the partition `(e, ..., e, f)`.
#
# Reducedness means the equations generate the whole prime ideal of that orbit
# closure.  We test it by computing both ideals and comparing reduced Groebner bases.

# %%
from nilred.fieldpoly import GF, QQ
from nilred.groebner import groebner_basis, ideal_equal, orbit_closure_ideal
from nilred.orbits import max_partition
from nilred.schemes import NilpotentSchemeSpec, nilpotent_scheme_ideal

# %% [markdown]
# ## The smallest interesting case
#
# For `n = e = 2` the six generators collapse to trace and determinant.

# %%
I = nilpotent_scheme_ideal(NilpotentSchemeSpec(2, 2), QQ)
for g in I.generators:
    print(g)
print("reduced basis:", [str(g) for g in groebner_basis(I).basis])

# %% [markdown]
# ## The orbit closure, by elimination
#
# Parameterise the orbit as `X = g J g^-1`, which is `X g = g J` with `g` invertible,
# and eliminate `g` and the inverse of its determinant.  The result is prime
# because the parameter space is irreducible.

# %%
tau = max_partition(3, 2)
closure = orbit_closure_ideal(tau, QQ)
print("tau =", tau)
print("basis of the closure ideal:")
for g in groebner_basis(closure).basis:
    print("   ", g)

# %% [markdown]
# ## Comparing the two ideals
#
# Rename the closure variables `x_i_j -> a_i_j` and compare.  Equality in every
# characteristic tested is the desk-scale evidence for reducedness.

# %%
for n, e in [(2, 2), (3, 2), (3, 3)]:
    for field in (QQ, GF(2), GF(3)):
        mine = nilpotent_scheme_ideal(NilpotentSchemeSpec(n, e), field)
        other = orbit_closure_ideal(max_partition(n, e), field)
        other = other.rename({f"x_{i}_{j}": f"a_{i}_{j}" for i in range(1, n + 1) for j in range(1, n + 1)})
        print(f"n={n} e={e} over {field}: equal = {ideal_equal(mine, other.to_ring(mine.ring))}")
