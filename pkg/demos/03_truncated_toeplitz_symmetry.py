# %% [markdown]
# # Asymmetric truncated Toeplitz operators and their symmetries
#
# `A^{theta,alpha}_phi f = P_alpha(phi f)` maps `K_theta` to `K_alpha`.  In the
# monomial case its matrix is the Toeplitz pattern `a_{i-j}`.

# %%
import numpy as np

from modelspace import BlaschkeProduct, LaurentSymbol, RunConfig, split_space, verify_corollary_5_3, verify_identity

Z = BlaschkeProduct.zpow
rng = np.random.default_rng(1)
a = {n: round(float(v), 2) for n, v in zip(range(-4, 3), rng.uniform(-1, 1, 7))}
phi = LaurentSymbol(-4, [a[n] for n in range(-4, 3)])
s = split_space(Z(5), Z(3))
print(s.A("theta", "alpha", phi).matrix.real)

# %% [markdown]
# A truncated Toeplitz operator is `C_theta`-symmetric.  For an *asymmetric*
# one, `A C = C A^*` has no meaning, but after completing `A` with a second
# block the combination becomes `#`-selfadjoint:
# `(A^{theta,alpha}_phi <> alpha A^{theta,theta/alpha}_{phi conj(alpha)}) C_theta`.

# %%
for ident in ("tto-csym", "sym1", "sym2", "sym3", "sym1a"):
    r = verify_identity(ident, Z(5), Z(3), phi)
    print(f"{ident:<9} residual {r.residual:.1e}")

# %% [markdown]
# The naive analogue fails: on `K_{z^2}` with `phi = z - conj(z)` the operator
# is `[[0, -1], [1, 0]]`, `C_{z,z} = J`, and `||AC - CA^*|| = 2`.

# %%
r = verify_identity("naive-csym")
print("A =", r.extras["A"], " residual", r.residual, "(a mismatch is expected:", not r.expect_equal, ")")

# %% [markdown]
# For symbols in `conj((theta/alpha) K_alpha)` the relation
# `A C_theta = C_theta A^* P_alpha` does hold, and for symbols in `K_alpha`
# it holds with `C_{alpha,theta/alpha}`; `phi = conj(z)` lies in neither class.

# %%
cfg = RunConfig(trials=20)
for direction in ("class1", "class2", "generic"):
    r = verify_corollary_5_3(direction, Z(5), Z(3), cfg)
    print(f"{direction:<8} residual {r.residual:.2e}")

theta = BlaschkeProduct((0.2, -0.6j, 0.5 + 0.1j))
alpha = BlaschkeProduct((-0.6j,))
print("Blaschke class2:", verify_corollary_5_3("class2", theta, alpha, cfg).residual)
