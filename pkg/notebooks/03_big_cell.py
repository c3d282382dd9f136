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
# # Matrix polynomials on the big cell
#
# Elements of the big cell are matrix polynomials `A(t^-1) = 1 + A_1 t^-1 + ...`.
# Two subfamilies matter: `Z_p` (degree at most `p`, determinant 1) and `X`
# (geometric series `1 + C t^-1 + ... + C^(n-1) t^-(n-1)` of a nilpotent `C`).

# %%
from nilred.fieldpoly import GF, QQ
from nilred.laurent import (
    LatticeOperatorSpec,
    ch_inverse,
    companion_model,
    lattice_nilpotent,
    omega,
    parse_matrix_polynomial,
    x_membership,
    x_points,
    z1_points,
    z_membership,
)
from nilred.orbits import jordan_matrix, jordan_type

# %% [markdown]
# ## Inverting `1 - C t^-1`
#
# A nilpotent `C` makes the geometric series finite.

# %%
C = jordan_matrix((2, 1))
A = ch_inverse(C, QQ)
print(A)
print("in X:", x_membership(A), " in Z_2:", z_membership(A, 2))

# %% [markdown]
# ## The involution omega
#
# `omega(A) = J A((-1)^n t^-1)^{-T} J^-1` with `J` antidiagonal.  It sends `X` to
# `Z_1`; over a finite field we can check it is a bijection by listing both sides.

# %%
F = GF(2)
xs, zs = x_points(3, F), z1_points(3, F)
images = {omega(a) for a in xs}
print(f"|X| = {len(xs)}, |Z_1| = {len(zs)}, bijection: {images == set(zs)}")

# %%
B = parse_matrix_polynomial("1 + [[1,2],[0,3]]*t^-1 + [[0,1],[1,0]]*t^-2", GF(7))
print("omega(omega(B)) == B through t^-6:", omega(omega(B, 6), 6).truncate(6) == B)

# %% [markdown]
# ## Companion matrices
#
# The block companion matrix of `A` in `Z_p` has characteristic polynomial
# `lam^(pn) det A(lam^-1)`, which is `lam^(pn)` since `det A = 1`.

# %%
M, chi = companion_model(parse_matrix_polynomial("1 + [[0,1],[0,0]]*t^-1", QQ), 1)
print([[str(x) for x in row] for row in M], chi)

# %% [markdown]
# ## Lattice operators
#
# Multiplication by `t` on `t^-b L_0 / t^a L_0` is nilpotent of type `((a+b)^n)`.

# %%
T = lattice_nilpotent(LatticeOperatorSpec(n=2, a=1, b=2))
print(T.partition, jordan_type(T.rows(), QQ))
